#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cobalg/errors.hpp"

namespace cobalg {

class Field;
class Scalar;
using FieldPtr = std::shared_ptr<const Field>;

/// An exact coefficient field: Q, F_p, or a simple extension base[a]/(m(a))
/// with base Q or F_p (the latter represents F_{p^d}).
class Field : public std::enable_shared_from_this<Field> {
public:
    enum class Kind { Rationals, Prime, Extension };

    static FieldPtr rationals();
    static FieldPtr prime(long p);
    // modulus: monic, coefficients over `base`, lowest degree first, degree >= 1.
    static FieldPtr extension(FieldPtr base, std::vector<Scalar> monic_modulus);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    bool is_prime() const { return kind_ == Kind::Prime; }
    bool is_extension() const { return kind_ == Kind::Extension; }
    long characteristic() const;
    long prime() const { return p_; }  // Prime or Extension over Prime
    const FieldPtr& base() const { return base_; }
    const std::vector<Scalar>& modulus() const { return modulus_; }
    int degree() const;  // extension degree over base (1 for Q, F_p)
    // Number of elements for finite fields (p^degree); throws for char 0.
    mpz_class cardinality() const;
    std::string name() const;  // "Q", "F5", "Q[a]/(a^2 + 1)"

    bool same(const Field& other) const;

private:
    Field() = default;
    Kind kind_ = Kind::Rationals;
    long p_ = 0;
    FieldPtr base_;
    std::vector<Scalar> modulus_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where);

/// An immutable element of a Field. Rationals are reduced mpq, prime-field
/// values are residues in [0,p), extension elements are coefficient vectors
/// over the base (no trailing zeros, degree < deg modulus).
class Scalar {
public:
    Scalar(FieldPtr field, mpq_class rational);
    Scalar(FieldPtr field, long integer);
    Scalar(FieldPtr field, std::vector<Scalar> ext_coeffs);  // extension fields

    static Scalar zero(const FieldPtr& field);
    static Scalar one(const FieldPtr& field);
    static Scalar from_integer(const FieldPtr& field, const mpz_class& n);

    const FieldPtr& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;  // throws DomainError on /0
    Scalar inverse() const;
    Scalar pow(const mpz_class& e) const;  // e >= 0, or e < 0 via inverse

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    // Deterministic total order within one field (rationals by value, residues
    // by value, extension elements lexicographic on padded coefficients).
    static int compare(const Scalar& a, const Scalar& b);

    const mpq_class& rational() const;
    long residue() const;
    const std::vector<Scalar>& ext_coeffs() const;

    // Exact textual form, round-trips through parse_scalar ("3/2", "4",
    // "a^2 + 1/2*a - 3").
    std::string str() const;

    // Enumeration of finite-field elements: index in [0, p^d), base-p digits.
    static Scalar by_index(const FieldPtr& field, const mpz_class& index);

private:
    Scalar() = default;
    FieldPtr field_;
    std::variant<mpq_class, long, std::vector<Scalar>> rep_;
    void reduce();
    friend class Field;
};

bool scalar_less(const Scalar& a, const Scalar& b);

}  // namespace cobalg
