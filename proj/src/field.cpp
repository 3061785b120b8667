#include "cobalg/field.hpp"

#include <algorithm>
#include <sstream>

namespace cobalg {

namespace {

bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long mod_inverse(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = a % p;
    if (new_r < 0) new_r += p;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp_t = t - q * new_t;
        t = new_t;
        new_t = tmp_t;
        long tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw DomainError("DivisionByZero", "residue not invertible");
    return t < 0 ? t + p : t;
}

// --- helpers on raw coefficient vectors over the base field (used for
// extension-field arithmetic before Polynomial exists) ---

using Vec = std::vector<Scalar>;

void trim(Vec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

Vec vec_mul(const Vec& a, const Vec& b, const FieldPtr& base) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, Scalar::zero(base));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    trim(r);
    return r;
}

Vec vec_add(const Vec& a, const Vec& b, const FieldPtr& base) {
    Vec r(std::max(a.size(), b.size()), Scalar::zero(base));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    trim(r);
    return r;
}

Vec vec_scale(const Vec& a, const Scalar& c) {
    Vec r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(x * c);
    trim(r);
    return r;
}

// Remainder of a by the monic modulus m.
Vec vec_mod(Vec a, const Vec& m, const FieldPtr& base) {
    trim(a);
    while (a.size() >= m.size()) {
        Scalar lead = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = a[shift + i] - lead * m[i];
        trim(a);
    }
    return a;
}

// Extended Euclid over base[x]: returns (g, s) with s*a = g mod m, g monic.
// Used only to invert a modulo the irreducible m.
Vec vec_inverse_mod(const Vec& a, const Vec& m, const FieldPtr& base) {
    Vec r0 = m, r1 = a, s0 = {}, s1 = {Scalar::one(base)};
    trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        Vec q;
        Vec rem = r0;
        trim(rem);
        Scalar inv_lead = r1.back().inverse();
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, Scalar::zero(base));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Scalar c = rem.back() * inv_lead;
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = rem[shift + i] - c * r1[i];
            trim(rem);
        }
        Vec s2 = vec_add(s0, vec_scale(vec_mul(q, s1, base), -Scalar::one(base)), base);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.size() != 1)
        throw DomainError("DivisionByZero", "element not invertible modulo field modulus");
    return vec_mod(vec_scale(s0, r0[0].inverse()), m, base);
}

std::string vec_str(const Vec& coeffs);

}  // namespace

// ----------------------------------------------------------------- Field ---

FieldPtr Field::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = Kind::Rationals;
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr Field::prime(long p) {
    if (!is_prime_long(p)) throw DomainError("NotPrime", "F_p needs a prime p");
    if (p > (1L << 20)) throw ResourceError("PrimeTooLarge", "prime field characteristic guard");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Prime;
    f->p_ = p;
    return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<Scalar> monic_modulus) {
    if (!base || base->is_extension())
        throw DomainError("UnsupportedField", "extension base must be Q or F_p");
    if (monic_modulus.size() < 2 || !monic_modulus.back().is_one())
        throw DomainError("BadModulus", "extension modulus must be monic of degree >= 1");
    for (const auto& c : monic_modulus) require_same_field(c.field(), base, "Field::extension");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Extension;
    f->base_ = base;
    f->p_ = base->prime();
    f->modulus_ = std::move(monic_modulus);
    return f;
}

long Field::characteristic() const {
    switch (kind_) {
        case Kind::Rationals: return 0;
        case Kind::Prime: return p_;
        case Kind::Extension: return base_->characteristic();
    }
    return 0;
}

int Field::degree() const {
    return kind_ == Kind::Extension ? static_cast<int>(modulus_.size()) - 1 : 1;
}

mpz_class Field::cardinality() const {
    if (characteristic() == 0) throw DomainError("InfiniteField", "cardinality of char-0 field");
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(characteristic()),
                  static_cast<unsigned long>(degree()));
    return q;
}

std::string Field::name() const {
    switch (kind_) {
        case Kind::Rationals: return "Q";
        case Kind::Prime: return "F" + std::to_string(p_);
        case Kind::Extension: {
            std::ostringstream os;
            os << base_->name() << "[a]/(" << vec_str(modulus_) << ")";
            return os.str();
        }
    }
    return "?";
}

bool Field::same(const Field& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Rationals: return true;
        case Kind::Prime: return p_ == other.p_;
        case Kind::Extension: {
            if (!base_->same(*other.base_)) return false;
            if (modulus_.size() != other.modulus_.size()) return false;
            for (size_t i = 0; i < modulus_.size(); ++i)
                if (modulus_[i] != other.modulus_[i]) return false;
            return true;
        }
    }
    return false;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same(*b);
}

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where) {
    if (!same_field(a, b))
        throw DomainError("FieldMismatch", std::string(where) + ": operands over different fields");
}

// ---------------------------------------------------------------- Scalar ---

Scalar::Scalar(FieldPtr field, mpq_class rational) : field_(std::move(field)) {
    rational.canonicalize();
    if (field_->is_rationals()) {
        rep_ = std::move(rational);
    } else if (field_->is_prime()) {
        // embed integer quotient n/d into F_p
        long p = field_->prime();
        mpz_class num = rational.get_num() % p, den = rational.get_den() % p;
        long n = num.get_si(), d = den.get_si();
        if (n < 0) n += p;
        if (d < 0) d += p;
        if (d == 0) throw DomainError("DivisionByZero", "denominator divisible by p");
        rep_ = (n * mod_inverse(d, p)) % p;
    } else {
        Scalar c(field_->base(), std::move(rational));
        rep_ = c.is_zero() ? Vec{} : Vec{std::move(c)};
    }
}

Scalar::Scalar(FieldPtr field, long integer) : Scalar(std::move(field), mpq_class(integer)) {}

Scalar::Scalar(FieldPtr field, std::vector<Scalar> ext_coeffs) : field_(std::move(field)) {
    if (!field_->is_extension())
        throw DomainError("FieldMismatch", "coefficient-vector scalar needs an extension field");
    for (const auto& c : ext_coeffs)
        require_same_field(c.field(), field_->base(), "Scalar(ext)");
    Vec v = vec_mod(std::move(ext_coeffs), field_->modulus(), field_->base());
    rep_ = std::move(v);
}

Scalar Scalar::zero(const FieldPtr& field) { return Scalar(field, mpq_class(0)); }
Scalar Scalar::one(const FieldPtr& field) { return Scalar(field, mpq_class(1)); }

Scalar Scalar::from_integer(const FieldPtr& field, const mpz_class& n) {
    return Scalar(field, mpq_class(n));
}

bool Scalar::is_zero() const {
    switch (field_->kind()) {
        case Field::Kind::Rationals: return std::get<mpq_class>(rep_) == 0;
        case Field::Kind::Prime: return std::get<long>(rep_) == 0;
        case Field::Kind::Extension: return std::get<Vec>(rep_).empty();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_->kind()) {
        case Field::Kind::Rationals: return std::get<mpq_class>(rep_) == 1;
        case Field::Kind::Prime: return std::get<long>(rep_) == 1;
        case Field::Kind::Extension: {
            const Vec& v = std::get<Vec>(rep_);
            return v.size() == 1 && v[0].is_one();
        }
    }
    return false;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    switch (field_->kind()) {
        case Field::Kind::Rationals: r.rep_ = mpq_class(-std::get<mpq_class>(rep_)); break;
        case Field::Kind::Prime: {
            long v = std::get<long>(rep_);
            r.rep_ = v == 0 ? 0L : field_->prime() - v;
            break;
        }
        case Field::Kind::Extension: {
            Vec v = std::get<Vec>(rep_);
            for (auto& c : v) c = -c;
            r.rep_ = std::move(v);
            break;
        }
    }
    return r;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(field_, rhs.field_, "Scalar::+");
    Scalar r = *this;
    switch (field_->kind()) {
        case Field::Kind::Rationals:
            r.rep_ = mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(rhs.rep_));
            break;
        case Field::Kind::Prime:
            r.rep_ = (std::get<long>(rep_) + std::get<long>(rhs.rep_)) % field_->prime();
            break;
        case Field::Kind::Extension:
            r.rep_ = vec_add(std::get<Vec>(rep_), std::get<Vec>(rhs.rep_), field_->base());
            break;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(field_, rhs.field_, "Scalar::*");
    Scalar r = *this;
    switch (field_->kind()) {
        case Field::Kind::Rationals:
            r.rep_ = mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(rhs.rep_));
            break;
        case Field::Kind::Prime:
            r.rep_ = (std::get<long>(rep_) * std::get<long>(rhs.rep_)) % field_->prime();
            break;
        case Field::Kind::Extension:
            r.rep_ = vec_mod(vec_mul(std::get<Vec>(rep_), std::get<Vec>(rhs.rep_), field_->base()),
                             field_->modulus(), field_->base());
            break;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("DivisionByZero", "inverse of zero");
    Scalar r = *this;
    switch (field_->kind()) {
        case Field::Kind::Rationals:
            r.rep_ = mpq_class(1 / std::get<mpq_class>(rep_));
            break;
        case Field::Kind::Prime:
            r.rep_ = mod_inverse(std::get<long>(rep_), field_->prime());
            break;
        case Field::Kind::Extension:
            r.rep_ = vec_inverse_mod(std::get<Vec>(rep_), field_->modulus(), field_->base());
            break;
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

Scalar Scalar::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = Scalar::one(field_);
    Scalar base = *this;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (!same_field(field_, rhs.field_)) return false;
    return compare(*this, rhs) == 0;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    switch (a.field_->kind()) {
        case Field::Kind::Rationals: {
            int c = cmp(std::get<mpq_class>(a.rep_), std::get<mpq_class>(b.rep_));
            return c < 0 ? -1 : (c > 0 ? 1 : 0);
        }
        case Field::Kind::Prime: {
            long x = std::get<long>(a.rep_), y = std::get<long>(b.rep_);
            return x < y ? -1 : (x > y ? 1 : 0);
        }
        case Field::Kind::Extension: {
            const Vec& x = std::get<Vec>(a.rep_);
            const Vec& y = std::get<Vec>(b.rep_);
            size_t n = std::max(x.size(), y.size());
            for (size_t i = 0; i < n; ++i) {
                Scalar xi = i < x.size() ? x[i] : Scalar::zero(a.field_->base());
                Scalar yi = i < y.size() ? y[i] : Scalar::zero(a.field_->base());
                int c = compare(xi, yi);
                if (c != 0) return c;
            }
            return 0;
        }
    }
    return 0;
}

bool scalar_less(const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; }

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(rep_); }
long Scalar::residue() const { return std::get<long>(rep_); }
const std::vector<Scalar>& Scalar::ext_coeffs() const { return std::get<Vec>(rep_); }

namespace {

// "a^2 + 1/2*a - 3" style printing for extension elements.
std::string vec_str(const Vec& coeffs) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i].is_zero()) continue;
        std::string c = coeffs[i].str();
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit_coeff = (c == "1");
        if (i == 0) {
            os << c;
        } else {
            if (!unit_coeff) os << c << "*";
            os << "a";
            if (i > 1) os << "^" << i;
        }
    }
    return first ? "0" : os.str();
}

}  // namespace

std::string Scalar::str() const {
    switch (field_->kind()) {
        case Field::Kind::Rationals: return std::get<mpq_class>(rep_).get_str();
        case Field::Kind::Prime: return std::to_string(std::get<long>(rep_));
        case Field::Kind::Extension: return vec_str(std::get<Vec>(rep_));
    }
    return "?";
}

Scalar Scalar::by_index(const FieldPtr& field, const mpz_class& index) {
    if (field->characteristic() == 0)
        throw DomainError("InfiniteField", "element enumeration needs a finite field");
    if (field->is_prime()) {
        mpz_class r = index % field->prime();
        return Scalar(field, mpq_class(r));
    }
    // base-p digits give the coefficient vector
    long p = field->prime();
    mpz_class rest = index;
    Vec coeffs;
    for (int i = 0; i < field->degree(); ++i) {
        mpz_class digit = rest % p;
        rest /= p;
        coeffs.push_back(Scalar(field->base(), mpq_class(digit)));
    }
    return Scalar(field, std::move(coeffs));
}

void Scalar::reduce() {}

}  // namespace cobalg
