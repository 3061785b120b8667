#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobalg/field.hpp"

namespace cobalg {

/// Univariate polynomial over an exact field; coefficients lowest degree
/// first, no trailing zeros. deg 0 = -1.
class Polynomial {
public:
    explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
    Polynomial(FieldPtr field, std::vector<Scalar> coeffs);

    static Polynomial zero(const FieldPtr& f) { return Polynomial(f); }
    static Polynomial one(const FieldPtr& f);
    static Polynomial constant(const Scalar& c);
    static Polynomial variable(const FieldPtr& f);  // t
    static Polynomial monomial(const Scalar& c, int degree);

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
    Scalar coeff(int i) const;
    const Scalar& leading() const { return coeffs_.back(); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Scalar& c) const;
    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    // Quotient/remainder; rhs must have invertible leading coefficient.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& rhs) const;
    Polynomial operator/(const Polynomial& rhs) const;  // exact or truncating division
    Polynomial operator%(const Polynomial& rhs) const;

    Polynomial monic() const;
    Polynomial derivative() const;
    Scalar eval(const Scalar& x) const;
    Polynomial compose(const Polynomial& inner) const;
    Polynomial shift_degree(int k) const;  // * t^k
    Polynomial pow_mod(const mpz_class& e, const Polynomial& mod) const;

    std::string str(const std::string& var = "t") const;

    // Deterministic total order (degree, then coefficients from the top).
    static int compare(const Polynomial& a, const Polynomial& b);

private:
    FieldPtr field_;
    std::vector<Scalar> coeffs_;
    void trim();
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic
// g = gcd(a,b) monic together with s,t: s*a + t*b = g.
struct ExtendedGcd {
    Polynomial g, s, t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);
Scalar resultant(const Polynomial& a, const Polynomial& b);

/// alpha(t) = p(t)/q(t), gcd(p,q)=1, q(0)=1; zero stored as 0/1.
class RationalSeries {
public:
    RationalSeries(Polynomial numerator, Polynomial denominator);
    static RationalSeries constant(const Scalar& c);
    static RationalSeries zero(const FieldPtr& f);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    const FieldPtr& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool operator==(const RationalSeries& rhs) const;

    std::string str() const;

private:
    Polynomial num_, den_;
};

// Coefficient alpha_i of the power-series expansion.
Scalar series_coeff(const RationalSeries& alpha, int i);

// The monic polynomial t^k q(1/t), k = max(deg p + 1, deg q); u_0 = 1.
Polynomial u_alpha(const RationalSeries& alpha);

// alpha = polynomial_part + sum of p_i/q_i with q_i a power of one monic
// irreducible normalized to q_i(0) = 1 and deg p_i < deg q_i.
struct PartialFractions {
    Polynomial polynomial_part;
    std::vector<std::pair<Polynomial, Polynomial>> fractions;
};
PartialFractions partial_fractions(const RationalSeries& alpha);

// Product of the distinct irreducible factors of u, monic. Works over any
// supported field (perfect bases).
Polynomial squarefree_part(const Polynomial& u);

struct FactorPower {
    Polynomial factor;  // monic irreducible
    int multiplicity;
};

// Complete factorization over Q or F_p; factors monic irreducible, sorted
// deterministically; leading unit returned separately via input.leading().
// Throws UnsupportedField for extension coefficients (see factorize_full).
std::vector<FactorPower> factorize(const Polynomial& u);

// Internal workhorse: additionally supports F_{p^d} (generic Cantor-
// Zassenhaus) and number fields over Q (Trager's squarefree-norm method).
std::vector<FactorPower> factorize_full(const Polynomial& u);

// Distinct roots of u lying in its own coefficient field.
std::vector<Scalar> roots_in_field(const Polynomial& u);

}  // namespace cobalg
