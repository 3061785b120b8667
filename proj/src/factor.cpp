#include <algorithm>
#include <map>
#include <random>

#include "cobalg/poly.hpp"

// Polynomial factorization: Cantor-Zassenhaus over finite fields (fixed-seed
// randomness, so results are reproducible), Zassenhaus with quadratic Hensel
// lifting over Q, and Trager's squarefree-norm method over number fields.

namespace cobalg {

namespace {

constexpr int kRationalDegreeGuard = 12;   // public factorize() over Q
constexpr int kInternalDegreeGuard = 64;   // internal norms (Trager)

using FactorList = std::vector<FactorPower>;

void sort_factors(FactorList& fs) {
    std::sort(fs.begin(), fs.end(), [](const FactorPower& a, const FactorPower& b) {
        int c = Polynomial::compare(a.factor, b.factor);
        return c != 0 ? c < 0 : a.multiplicity < b.multiplicity;
    });
}

// ---------------------------------------------------------- finite fields ---

Polynomial random_poly(const FieldPtr& f, int max_deg, std::mt19937_64& rng) {
    mpz_class q = f->cardinality();
    std::vector<Scalar> coeffs;
    for (int i = 0; i <= max_deg; ++i) {
        unsigned long r = static_cast<unsigned long>(rng());
        coeffs.push_back(Scalar::by_index(f, mpz_class(r) % q));
    }
    return Polynomial(f, std::move(coeffs));
}

// Equal-degree splitting: u squarefree, all irreducible factors of degree d.
void edf(const Polynomial& u, int d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
    const FieldPtr& f = u.field();
    if (u.degree() == d) {
        out.push_back(u.monic());
        return;
    }
    mpz_class q = f->cardinality();
    Polynomial g = Polynomial::one(f);
    while (g.degree() <= 0 || g.degree() >= u.degree()) {
        Polynomial a = random_poly(f, u.degree() - 1, rng);
        if (a.degree() < 1) continue;
        if (f->characteristic() == 2) {
            // trace map sum a^(2^i) for i < d * [F:F_2]
            int steps = d * f->degree();
            Polynomial b = a % u, s = b;
            for (int i = 1; i < steps; ++i) {
                b = (b * b) % u;
                s = s + b;
            }
            g = gcd(s, u);
        } else {
            mpz_class e;
            mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), d);
            e = (e - 1) / 2;
            Polynomial b = a.pow_mod(e, u);
            g = gcd(b - Polynomial::one(f), u);
        }
    }
    edf(g, d, rng, out);
    edf((u / g).monic(), d, rng, out);
}

// Distinct-degree decomposition of a squarefree monic u, then equal-degree.
std::vector<Polynomial> factor_squarefree_finite(const Polynomial& u_in) {
    const FieldPtr& f = u_in.field();
    std::mt19937_64 rng(0x5eed);
    std::vector<Polynomial> out;
    Polynomial u = u_in.monic();
    mpz_class q = f->cardinality();
    Polynomial h = Polynomial::variable(f) % u;
    int d = 0;
    while (u.degree() > 0) {
        ++d;
        if (2 * d > u.degree()) {
            out.push_back(u);
            break;
        }
        h = h.pow_mod(q, u);
        Polynomial g = gcd(h - Polynomial::variable(f), u);
        if (g.degree() > 0) {
            edf(g, d, rng, out);
            u = (u / g).monic();
            h = h % u;
        }
    }
    return out;
}

// Squarefree decomposition over a finite field (perfect, so p-th roots exist).
void squarefree_decompose_finite(const Polynomial& u, int outer_mult, FactorList& parts) {
    const FieldPtr& f = u.field();
    long p = f->characteristic();
    Polynomial c = gcd(u, u.derivative());
    Polynomial w = u / c;
    int i = 1;
    while (w.degree() > 0) {
        Polynomial y = gcd(w, c);
        Polynomial z = w / y;
        if (z.degree() > 0) parts.push_back({z.monic(), i * outer_mult});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        // c = v(t^p)
        Polynomial v(f);
        {
            std::vector<Scalar> coeffs;
            mpz_class frob_inv = f->cardinality() / p;
            for (int k = 0; k * p <= c.degree(); ++k)
                coeffs.push_back(c.coeff(k * static_cast<int>(p)).pow(frob_inv));
            v = Polynomial(f, std::move(coeffs));
        }
        squarefree_decompose_finite(v, outer_mult * static_cast<int>(p), parts);
    }
}

FactorList factor_finite(const Polynomial& u) {
    FactorList parts;
    squarefree_decompose_finite(u.monic(), 1, parts);
    FactorList out;
    for (const auto& part : parts)
        for (const auto& irr : factor_squarefree_finite(part.factor))
            out.push_back({irr, part.multiplicity});
    sort_factors(out);
    return out;
}

// ------------------------------------------------------------- rationals ---

using IntPoly = std::vector<mpz_class>;  // lowest degree first, trimmed

void itrim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly imul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    itrim(r);
    return r;
}

IntPoly iadd(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    itrim(r);
    return r;
}

IntPoly isub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    itrim(r);
    return r;
}

// Balanced representative in (-q/2, q/2].
void ibalance(IntPoly& a, const mpz_class& q) {
    mpz_class half = q / 2;
    for (auto& c : a) {
        c %= q;
        if (c < 0) c += q;
        if (c > half) c -= q;
    }
    itrim(a);
}

// divmod by a monic divisor.
std::pair<IntPoly, IntPoly> idivmod_monic(IntPoly a, const IntPoly& b) {
    IntPoly q;
    itrim(a);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpz_class(0));
    while (a.size() >= b.size()) {
        mpz_class c = a.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        itrim(a);
    }
    itrim(q);
    return {q, a};
}

mpz_class icontent(const IntPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly iprimitive(IntPoly a) {
    itrim(a);
    if (a.empty()) return a;
    mpz_class g = icontent(a);
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

// Exact division test in Z[x]; returns quotient when b | a.
std::optional<IntPoly> idivide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) return std::nullopt;
    IntPoly r = a, q;
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, mpz_class(0));
    while (r.size() >= b.size()) {
        mpz_class c;
        mpz_class rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
        if (rem != 0) return std::nullopt;
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        itrim(r);
    }
    if (!r.empty()) return std::nullopt;
    itrim(q);
    return q;
}

IntPoly to_int_poly(const Polynomial& h, const FieldPtr& fp_field) {
    IntPoly a;
    for (int i = 0; i <= h.degree(); ++i) a.push_back(mpz_class(h.coeff(i).residue()));
    itrim(a);
    (void)fp_field;
    return a;
}

Polynomial to_fp_poly(const IntPoly& a, const FieldPtr& fp) {
    std::vector<Scalar> coeffs;
    for (const auto& c : a) coeffs.push_back(Scalar::from_integer(fp, c));
    return Polynomial(fp, std::move(coeffs));
}

// One quadratic Hensel step (von zur Gathen-Gerhard 15.10): given
// f = g*h mod q with s*g + t*h = 1 mod q, g,h monic, produce the same data
// mod q^2.
struct HenselPair {
    IntPoly g, h, s, t;
};

HenselPair hensel_step(const IntPoly& f, HenselPair in, const mpz_class& q) {
    mpz_class q2 = q * q;
    auto mod2 = [&](IntPoly v) {
        ibalance(v, q2);
        return v;
    };
    IntPoly e = mod2(isub(f, imul(in.g, in.h)));
    auto [qq, r] = idivmod_monic(mod2(imul(in.s, e)), in.h);
    IntPoly g2 = mod2(iadd(in.g, iadd(mod2(imul(in.t, e)), mod2(imul(qq, in.g)))));
    IntPoly h2 = mod2(iadd(in.h, r));
    IntPoly b = mod2(isub(iadd(imul(in.s, g2), imul(in.t, h2)), IntPoly{mpz_class(1)}));
    auto [cc, d] = idivmod_monic(mod2(imul(in.s, b)), h2);
    IntPoly s2 = mod2(isub(in.s, d));
    IntPoly t2 = mod2(isub(in.t, iadd(mod2(imul(in.t, b)), mod2(imul(cc, g2)))));
    return {g2, h2, s2, t2};
}

// Lift the factorization f = prod(g_i) mod p (f monic, g_i monic distinct)
// to mod p^(2^m) >= bound.
std::vector<IntPoly> hensel_lift_all(const IntPoly& f, std::vector<Polynomial> modular,
                                     long p, const mpz_class& bound, mpz_class& modulus_out) {
    FieldPtr fp = modular.front().field();
    mpz_class target = 2 * bound + 1;
    std::vector<IntPoly> lifted;
    IntPoly rest = f;
    for (size_t idx = 0; idx + 1 < modular.size(); ++idx) {
        // split rest = g * h mod p with g = modular[idx], h = product of the others
        Polynomial gbar = modular[idx];
        Polynomial hbar = Polynomial::one(fp);
        for (size_t j = idx + 1; j < modular.size(); ++j) hbar = hbar * modular[j];
        // distinct irreducibles are coprime: s*g + t*h = 1 mod p
        auto eg = extended_gcd(gbar, hbar);
        HenselPair pair{to_int_poly(gbar, fp), to_int_poly(hbar, fp), to_int_poly(eg.s, fp),
                        to_int_poly(eg.t, fp)};
        mpz_class q(p);
        while (q < target) {
            pair = hensel_step(rest, pair, q);
            q = q * q;
        }
        modulus_out = q;
        lifted.push_back(pair.g);
        rest = pair.h;
    }
    // rest corresponds to the last modular factor
    mpz_class q(p);
    if (modular.size() == 1) {
        while (q < target) q = q * q;
        modulus_out = q;
        IntPoly r = f;
        ibalance(r, modulus_out);
        lifted.push_back(r);
    } else {
        lifted.push_back(rest);
    }
    return lifted;
}

mpz_class norm2_bound(const IntPoly& h) {
    // 2^(n+1) * ||h||_2 * |lc|, a safe Landau-Mignotte style bound
    mpz_class s = 0;
    for (const auto& c : h) s += c * c;
    mpz_class root = sqrt(s) + 1;
    mpz_class b = root * abs(h.back());
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(h.size() + 1));
    return b * two_n;
}

// Factor a primitive squarefree integer polynomial with positive leading
// coefficient; returns integer factors (primitive, positive lc).
std::vector<IntPoly> factor_squarefree_integer(const IntPoly& h_in) {
    std::vector<IntPoly> result;
    if (h_in.size() <= 2) {
        result.push_back(h_in);
        return result;
    }
    int n = static_cast<int>(h_in.size()) - 1;
    // taming substitution: H(x) = L^(n-1) h(x/L) is monic, H_i = h_i L^(n-1-i)
    mpz_class L = h_in.back();
    IntPoly H(h_in.size());
    H[n] = 1;
    mpz_class pw = 1;
    for (int i = n - 1; i >= 0; --i) {
        H[i] = h_in[i] * pw;
        pw *= L;
    }

    // choose a prime keeping H squarefree
    long p = 0;
    FieldPtr fp;
    Polynomial hbar{Field::rationals()};
    for (long candidate = 3;; candidate += 2) {
        bool prime = true;
        for (long d = 3; d * d <= candidate; d += 2)
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        if (mpz_divisible_ui_p(H.back().get_mpz_t(), candidate)) continue;
        FieldPtr F = Field::prime(candidate);
        Polynomial hb = to_fp_poly(H, F);
        if (gcd(hb, hb.derivative()).degree() == 0) {
            p = candidate;
            fp = F;
            hbar = hb.monic();
            break;
        }
        if (candidate > 10000)
            throw ResourceError("NoGoodPrime", "no usable prime for Hensel lifting");
    }

    FactorList modular_f = factor_finite(hbar);
    std::vector<Polynomial> modular;
    for (auto& m : modular_f) modular.push_back(m.factor);
    if (modular.size() == 1) {
        result.push_back(h_in);
        return result;
    }

    mpz_class bound = norm2_bound(H);
    mpz_class q;
    std::vector<IntPoly> lifted = hensel_lift_all(H, modular, p, bound, q);
    {
        IntPoly check{mpz_class(1)};
        for (const auto& g : lifted) check = imul(check, g);
        check = isub(check, H);
        ibalance(check, q);
        if (!check.empty())
            throw std::logic_error("Hensel lifting lost the factorization");
    }

    // subset recombination against H (monic, so candidate products stay monic)
    std::vector<IntPoly> found_tamed;
    IntPoly remaining = H;
    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
    size_t cardinality = 1;
    while (alive.size() > 0 && cardinality <= alive.size() / 2) {
        // iterate subsets of `alive` of size `cardinality`
        std::vector<size_t> idx(cardinality);
        for (size_t i = 0; i < cardinality; ++i) idx[i] = i;
        bool found = false;
        while (true) {
            IntPoly cand{mpz_class(1)};
            for (size_t i : idx) cand = imul(cand, lifted[alive[i]]);
            ibalance(cand, q);
            auto quo = idivide_exact(remaining, cand);
            if (quo) {
                found_tamed.push_back(cand);
                remaining = *quo;
                std::vector<int> next_alive;
                for (size_t i = 0, j = 0; i < alive.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    next_alive.push_back(alive[i]);
                }
                alive = next_alive;
                found = true;
                break;
            }
            // next subset
            size_t k = cardinality;
            while (k > 0 && idx[k - 1] == alive.size() - cardinality + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (size_t i = k; i < cardinality; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++cardinality;
    }
    if (remaining.size() > 1) found_tamed.push_back(remaining);

    // undo the taming substitution: g(x) = ppart(G(Lx))
    for (const auto& G : found_tamed) {
        IntPoly g(G.size());
        mpz_class s = 1;
        for (size_t i = 0; i < G.size(); ++i) {
            g[i] = G[i] * s;
            s *= L;
        }
        result.push_back(iprimitive(g));
    }
    return result;
}

FactorList factor_rational(const Polynomial& u) {
    const FieldPtr& Q = u.field();
    // clear denominators, primitive part
    mpz_class den_lcm = 1;
    for (int i = 0; i <= u.degree(); ++i)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                u.coeff(i).rational().get_den().get_mpz_t());
    IntPoly f;
    for (int i = 0; i <= u.degree(); ++i) {
        mpq_class c = u.coeff(i).rational() * den_lcm;
        f.push_back(c.get_num());
    }
    f = iprimitive(f);

    // Yun's squarefree decomposition (char 0) on the rational polynomial
    FactorList out;
    Polynomial fQ(Q);
    {
        std::vector<Scalar> cs;
        for (const auto& c : f) cs.push_back(Scalar(Q, mpq_class(c)));
        fQ = Polynomial(Q, std::move(cs)).monic();
    }
    std::vector<std::pair<Polynomial, int>> squarefree_parts;
    {
        Polynomial d = fQ.derivative();
        Polynomial uu = gcd(fQ, d);
        Polynomial v = fQ / uu, w = d / uu;
        int i = 1;
        while (v.degree() > 0) {
            Polynomial h = gcd(v, w - v.derivative());
            if (h.degree() > 0) squarefree_parts.emplace_back(h.monic(), i);
            w = (w - v.derivative()) / h;
            v = v / h;
            ++i;
        }
    }
    for (const auto& [part, mult] : squarefree_parts) {
        // integer model of the squarefree part
        mpz_class dl = 1;
        for (int i = 0; i <= part.degree(); ++i)
            mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), part.coeff(i).rational().get_den().get_mpz_t());
        IntPoly hp;
        for (int i = 0; i <= part.degree(); ++i)
            hp.push_back(mpq_class(part.coeff(i).rational() * dl).get_num());
        hp = iprimitive(hp);
        for (const auto& g : factor_squarefree_integer(hp)) {
            std::vector<Scalar> cs;
            for (const auto& c : g) cs.push_back(Scalar(Q, mpq_class(c)));
            out.push_back({Polynomial(Q, std::move(cs)).monic(), mult});
        }
    }
    sort_factors(out);
    return out;
}

// ---------------------------------------------------------- number field ---

// Norm from K[y] down to Q[y] by resultant over the generator variable,
// computed with evaluation/interpolation.
Polynomial trager_norm(const Polynomial& f_shifted, const FieldPtr& K) {
    const FieldPtr& Q = K->base();
    const std::vector<Scalar>& modulus = K->modulus();
    Polynomial m(Q, modulus);
    int deg_n = m.degree() * f_shifted.degree();
    std::vector<Scalar> xs, ys;
    for (int k = 0; k <= deg_n; ++k) {
        Scalar y0(Q, static_cast<long>(k));
        // F(x) = f_shifted evaluated at y = y0, generator replaced by x
        Polynomial F(Q);
        for (int i = f_shifted.degree(); i >= 0; --i) {
            F = F * Polynomial::monomial(y0, 0);
            F = F + Polynomial(Q, f_shifted.coeffs()[i].ext_coeffs());
        }
        xs.push_back(y0);
        ys.push_back(resultant(m, F));
    }
    // Lagrange interpolation over Q
    Polynomial N(Q);
    for (int i = 0; i <= deg_n; ++i) {
        Polynomial li = Polynomial::one(Q);
        Scalar denom = Scalar::one(Q);
        for (int j = 0; j <= deg_n; ++j) {
            if (j == i) continue;
            li = li * (Polynomial::variable(Q) - Polynomial::monomial(xs[j], 0));
            denom = denom * (xs[i] - xs[j]);
        }
        N = N + li * (ys[i] / denom);
    }
    return N;
}

FactorList factor_number_field(const Polynomial& u) {
    const FieldPtr& K = u.field();
    const FieldPtr& Q = K->base();
    Polynomial f = u.monic();
    FactorList out;

    // peel off multiplicities via squarefree decomposition (char 0: Yun)
    std::vector<std::pair<Polynomial, int>> parts;
    {
        Polynomial d = f.derivative();
        Polynomial g = gcd(f, d);
        Polynomial v = f / g, w = d / g;
        int i = 1;
        while (v.degree() > 0) {
            Polynomial h = gcd(v, w - v.derivative());
            if (h.degree() > 0) parts.emplace_back(h.monic(), i);
            w = (w - v.derivative()) / h;
            v = v / h;
            ++i;
        }
    }

    Scalar gen(K, std::vector<Scalar>{Scalar::zero(Q), Scalar::one(Q)});
    for (const auto& [sf, mult] : parts) {
        if (sf.degree() == 1) {
            out.push_back({sf, mult});
            continue;
        }
        // find a shift making the norm squarefree
        for (long s = 0;; s = (s > 0 ? -s : -s + 1)) {
            Polynomial shift =
                Polynomial::variable(K) - Polynomial::monomial(gen * Scalar(K, s), 0);
            Polynomial fs = sf.compose(shift);
            Polynomial N = trager_norm(fs, K);
            if (gcd(N, N.derivative()).degree() != 0) continue;
            if (N.degree() > kInternalDegreeGuard)
                throw ResourceError("DegreeTooLarge", "Trager norm degree beyond internal guard");
            FactorList nf = factor_rational(N.monic());
            Polynomial back =
                Polynomial::variable(K) + Polynomial::monomial(gen * Scalar(K, s), 0);
            for (const auto& Ni : nf) {
                // map N_i into K[y] and undo the shift
                std::vector<Scalar> cs;
                for (int i = 0; i <= Ni.factor.degree(); ++i)
                    cs.push_back(Scalar(K, Ni.factor.coeff(i).rational()));
                Polynomial NiK = Polynomial(K, std::move(cs)).compose(back);
                Polynomial gi = gcd(sf, NiK);
                if (gi.degree() > 0) out.push_back({gi.monic(), mult});
            }
            break;
        }
    }
    sort_factors(out);
    return out;
}

}  // namespace

std::vector<FactorPower> factorize_full(const Polynomial& u) {
    if (u.is_zero()) throw DomainError("ZeroPolynomial", "factorization of zero");
    const FieldPtr& f = u.field();
    if (u.degree() == 0) return {};
    if (u.degree() > 512) throw ResourceError("DegreeTooLarge", "factorization degree guard");
    if (f->is_rationals()) return factor_rational(u);
    if (f->characteristic() > 0) return factor_finite(u);
    return factor_number_field(u);
}

std::vector<FactorPower> factorize(const Polynomial& u) {
    const FieldPtr& f = u.field();
    if (f->is_extension() && f->characteristic() == 0)
        throw DomainError("UnsupportedField", "factorization over number fields is not exposed");
    if (f->is_rationals() && u.degree() > kRationalDegreeGuard)
        throw ResourceError("DegreeTooLarge",
                            "rational factorization limited to degree <= " +
                                std::to_string(kRationalDegreeGuard));
    return factorize_full(u);
}

}  // namespace cobalg
