#include "cobalg/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cobalg {

Polynomial::Polynomial(FieldPtr field, std::vector<Scalar> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same_field(c.field(), field_, "Polynomial");
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::one(const FieldPtr& f) { return constant(Scalar::one(f)); }

Polynomial Polynomial::constant(const Scalar& c) {
    Polynomial p(c.field());
    if (!c.is_zero()) p.coeffs_ = {c};
    return p;
}

Polynomial Polynomial::variable(const FieldPtr& f) {
    Polynomial p(f);
    p.coeffs_ = {Scalar::zero(f), Scalar::one(f)};
    return p;
}

Polynomial Polynomial::monomial(const Scalar& c, int degree) {
    Polynomial p(c.field());
    if (!c.is_zero()) {
        p.coeffs_.assign(degree + 1, Scalar::zero(c.field()));
        p.coeffs_.back() = c;
    }
    return p;
}

Scalar Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar::zero(field_);
    return coeffs_[i];
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_field(field_, rhs.field_, "Polynomial::+");
    Polynomial r(field_);
    r.coeffs_.assign(std::max(coeffs_.size(), rhs.coeffs_.size()), Scalar::zero(field_));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] + coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] + rhs.coeffs_[i];
    r.trim();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_field(field_, rhs.field_, "Polynomial::*");
    if (is_zero() || rhs.is_zero()) return Polynomial(field_);
    Polynomial r(field_);
    r.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, Scalar::zero(field_));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * rhs.coeffs_[j];
    }
    r.trim();
    return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    Polynomial r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    r.trim();
    return r;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (!same_field(field_, rhs.field_) || coeffs_.size() != rhs.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != rhs.coeffs_[i]) return false;
    return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& rhs) const {
    require_same_field(field_, rhs.field_, "Polynomial::divmod");
    if (rhs.is_zero()) throw DomainError("DivisionByZero", "polynomial division by zero");
    Polynomial q(field_), r = *this;
    Scalar inv_lead = rhs.leading().inverse();
    if (r.degree() >= rhs.degree())
        q.coeffs_.assign(r.degree() - rhs.degree() + 1, Scalar::zero(field_));
    while (!r.is_zero() && r.degree() >= rhs.degree()) {
        Scalar c = r.leading() * inv_lead;
        int shift = r.degree() - rhs.degree();
        q.coeffs_[shift] = c;
        for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
            r.coeffs_[shift + i] = r.coeffs_[shift + i] - c * rhs.coeffs_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Polynomial Polynomial::operator/(const Polynomial& rhs) const { return divmod(rhs).first; }
Polynomial Polynomial::operator%(const Polynomial& rhs) const { return divmod(rhs).second; }

Polynomial Polynomial::monic() const {
    if (is_zero() || is_monic()) return *this;
    return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
    Polynomial r(field_);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(coeffs_[i] * Scalar(field_, static_cast<long>(i)));
    r.trim();
    return r;
}

Scalar Polynomial::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(field_);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial acc(field_);
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * inner + Polynomial::constant(coeffs_[i]);
    return acc;
}

Polynomial Polynomial::shift_degree(int k) const {
    if (is_zero()) return *this;
    Polynomial r(field_);
    r.coeffs_.assign(coeffs_.size() + k, Scalar::zero(field_));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

Polynomial Polynomial::pow_mod(const mpz_class& e, const Polynomial& mod) const {
    Polynomial acc = Polynomial::one(field_) % mod;
    Polynomial base = *this % mod;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = (acc * base) % mod;
        base = (base * base) % mod;
        k >>= 1;
    }
    return acc;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        std::string c = coeffs_[i].str();
        bool needs_parens = c.find_first_of("+-") != std::string::npos && c.rfind('-', 0) != 0;
        bool neg = !needs_parens && c[0] == '-';
        if (neg) c = c.substr(1);
        // re-check for inner sign after stripping leading '-'
        if (!needs_parens && c.find_first_of("+-") != std::string::npos) needs_parens = true;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit_coeff = (c == "1") && !needs_parens;
        if (i == 0) {
            if (needs_parens)
                os << '(' << c << ')';
            else
                os << c;
        } else {
            if (!unit_coeff) {
                if (needs_parens)
                    os << '(' << c << ')';
                else
                    os << c;
                os << "*";
            }
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = Scalar::compare(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    const FieldPtr& f = a.field();
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::one(f), s1 = Polynomial::zero(f);
    Polynomial t0 = Polynomial::zero(f), t1 = Polynomial::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1;
        r1 = r;
        Polynomial s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        Polynomial t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Scalar resultant(const Polynomial& a, const Polynomial& b) {
    const FieldPtr& f = a.field();
    if (a.is_zero() || b.is_zero()) return Scalar::zero(f);
    Polynomial x = a, y = b;
    Scalar acc = Scalar::one(f);
    if (x.degree() < y.degree()) {
        if ((x.degree() & 1) && (y.degree() & 1)) acc = -acc;
        std::swap(x, y);
    }
    while (true) {
        if (y.degree() == 0) return acc * y.leading().pow(x.degree());
        Polynomial r = x % y;
        if (r.is_zero()) return Scalar::zero(f);
        acc = acc * y.leading().pow(x.degree() - r.degree());
        if ((x.degree() & 1) && (y.degree() & 1)) acc = -acc;
        x = y;
        y = r;
    }
}

// -------------------------------------------------------- RationalSeries ---

RationalSeries::RationalSeries(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    require_same_field(num_.field(), den_.field(), "RationalSeries");
    if (den_.is_zero()) throw DomainError("DivisionByZero", "series denominator is zero");
    if (num_.is_zero()) {
        den_ = Polynomial::one(num_.field());
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    Scalar c0 = den_.coeff(0);
    if (c0.is_zero())
        throw DomainError("NotASeries", "denominator vanishes at 0 after reduction");
    Scalar inv = c0.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
}

RationalSeries RationalSeries::constant(const Scalar& c) {
    return RationalSeries(Polynomial::constant(c), Polynomial::one(c.field()));
}

RationalSeries RationalSeries::zero(const FieldPtr& f) {
    return RationalSeries(Polynomial::zero(f), Polynomial::one(f));
}

bool RationalSeries::operator==(const RationalSeries& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
}

std::string RationalSeries::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    return "(" + n + ")/(" + d + ")";
}

Scalar series_coeff(const RationalSeries& alpha, int i) {
    // alpha * q = p gives alpha_i = p_i - sum_{j>=1} q_j alpha_{i-j}.
    const FieldPtr& f = alpha.field();
    const Polynomial& p = alpha.numerator();
    const Polynomial& q = alpha.denominator();
    std::vector<Scalar> a;
    a.reserve(i + 1);
    for (int k = 0; k <= i; ++k) {
        Scalar v = p.coeff(k);
        for (int j = 1; j <= std::min(k, q.degree()); ++j) v = v - q.coeff(j) * a[k - j];
        a.push_back(v);
    }
    return i < 0 ? Scalar::zero(f) : a[i];
}

Polynomial u_alpha(const RationalSeries& alpha) {
    const FieldPtr& f = alpha.field();
    const Polynomial& p = alpha.numerator();
    const Polynomial& q = alpha.denominator();
    int k = std::max(p.degree() + 1, q.degree());
    if (k <= 0) return Polynomial::one(f);  // alpha = 0, u_0 = 1
    std::vector<Scalar> coeffs(k + 1, Scalar::zero(f));
    for (int j = 0; j <= q.degree(); ++j) coeffs[k - j] = q.coeff(j);
    return Polynomial(f, std::move(coeffs));
}

PartialFractions partial_fractions(const RationalSeries& alpha) {
    const FieldPtr& f = alpha.field();
    const Polynomial& p = alpha.numerator();
    const Polynomial& q = alpha.denominator();
    auto [poly_part, r] = p.divmod(q);
    PartialFractions out{poly_part, {}};
    if (r.is_zero()) return out;

    auto factors = factorize_full(q);
    std::vector<Polynomial> denoms;  // q_i = g_i^{e_i} scaled so q_i(0) = 1
    for (const auto& fp : factors) {
        Polynomial gi = Polynomial::one(f);
        for (int e = 0; e < fp.multiplicity; ++e) gi = gi * fp.factor;
        denoms.push_back(gi * gi.coeff(0).inverse());
    }
    for (size_t i = 0; i < denoms.size(); ++i) {
        Polynomial rest = Polynomial::one(f);
        for (size_t j = 0; j < denoms.size(); ++j)
            if (j != i) rest = rest * denoms[j];
        // p_i = r * rest^{-1} mod q_i
        auto eg = extended_gcd(rest % denoms[i], denoms[i]);
        // eg.g must be 1 (coprime by construction)
        Polynomial inv = eg.s % denoms[i];
        Polynomial pi = (r * inv) % denoms[i];
        out.fractions.emplace_back(pi, denoms[i]);
    }
    return out;
}

namespace {

// p-th root of a polynomial of the form v(t^p) over a finite field.
Polynomial pth_root(const Polynomial& u) {
    const FieldPtr& f = u.field();
    long p = f->characteristic();
    mpz_class frob_inv_exp = f->cardinality() / p;  // a -> a^(q/p)
    std::vector<Scalar> coeffs;
    for (int i = 0; i * p <= u.degree(); ++i)
        coeffs.push_back(u.coeff(i * static_cast<int>(p)).pow(frob_inv_exp));
    return Polynomial(f, std::move(coeffs));
}

}  // namespace

Polynomial squarefree_part(const Polynomial& u_in) {
    if (u_in.is_zero()) throw DomainError("ZeroPolynomial", "squarefree part of zero");
    const FieldPtr& f = u_in.field();
    Polynomial u = u_in.monic();
    if (u.degree() <= 0) return Polynomial::one(f);
    Polynomial d = u.derivative();
    if (f->characteristic() == 0) {
        return (u / gcd(u, d)).monic();
    }
    if (d.is_zero()) return squarefree_part(pth_root(u));
    Polynomial g = gcd(u, d);
    if (g.degree() == 0) return u;
    Polynomial w = u / g;  // distinct factors with multiplicity not divisible by p
    Polynomial rest = g;
    while (true) {
        Polynomial c = gcd(rest, w);
        if (c.degree() == 0) break;
        rest = rest / c;
    }
    // rest = product of f_i^{e_i} with p | e_i, a p-th power
    if (rest.degree() == 0) return w.monic();
    return (w * squarefree_part(pth_root(rest))).monic();
}

std::vector<Scalar> roots_in_field(const Polynomial& u) {
    std::vector<Scalar> roots;
    for (const auto& fp : factorize_full(u))
        if (fp.factor.degree() == 1) roots.push_back(-fp.factor.coeff(0));
    std::sort(roots.begin(), roots.end(), scalar_less);
    return roots;
}

}  // namespace cobalg
