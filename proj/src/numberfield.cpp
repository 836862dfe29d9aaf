#include "sl2k/numberfield.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "sl2k/fp.hpp"

namespace sl2k {

namespace {

constexpr std::uint32_t kSievePrimes[] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
    59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199};

FpPoly reduce_mod_p(const QPoly& f, std::uint32_t p) {
    std::vector<std::uint32_t> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) {
        mpz_class num = q.get_num();
        mpz_class den = q.get_den();
        std::uint32_t dp = static_cast<std::uint32_t>(mpz_fdiv_ui(den.get_mpz_t(), p));
        if (dp == 0) throw DomainMismatch("denominator divisible by reduction prime");
        std::uint32_t np = static_cast<std::uint32_t>(mpz_fdiv_ui(num.get_mpz_t(), p));
        c.push_back(mulm(np, invm(dp, p), p));
    }
    return FpPoly(p, std::move(c));
}

// Multiset of irreducible factor degrees of a squarefree g over F_p.
std::vector<long> factor_degrees(FpPoly g) {
    std::vector<long> degrees;
    std::uint32_t p = g.modulus();
    FpPoly x = FpPoly::monomial(p, 1, 1);
    FpPoly h = x % g;
    long d = 0;
    while (2 * (d + 1) <= g.degree()) {
        ++d;
        h = h.powmod(p, g);
        FpPoly gc = FpPoly::gcd(h - x, g);
        if (gc.degree() > 0) {
            for (long i = 0; i < gc.degree() / d; ++i) degrees.push_back(d);
            g = g / gc;
            h = h % g;
        }
    }
    if (g.degree() > 0) degrees.push_back(g.degree());
    return degrees;
}

std::uint64_t subset_sum_mask(const std::vector<long>& degrees) {
    std::uint64_t dp = 1;
    for (long d : degrees) dp |= dp << d;
    return dp;
}

bool has_rational_root(const QPoly& f) {
    // monic integer polynomial: rational roots are integer divisors of f(0)
    mpq_class c0 = f.coeff(0);
    if (c0 == 0) return true;
    mpz_class a0 = abs(c0.get_num());
    if (a0 > 1000000000000L) return false;  // scan skipped; the sieve still rejects
    std::vector<mpz_class> divisors;
    for (mpz_class d = 1; d * d <= a0; ++d) {
        if (a0 % d == 0) {
            divisors.push_back(d);
            divisors.push_back(a0 / d);
        }
    }
    for (const auto& d : divisors) {
        if (f.eval(mpq_class(d)) == 0 || f.eval(mpq_class(-d)) == 0) return true;
    }
    return false;
}

}  // namespace

void certify_irreducible(const QPoly& f) {
    if (f.degree() < 1) throw NotIrreducible("constant polynomial");
    if (!f.is_monic()) throw NotIrreducible("minimal polynomial must be monic");
    if (!f.has_integer_coeffs()) throw NotIrreducible("minimal polynomial must have integer coefficients");
    if (f.degree() > NumberField::MAX_DEGREE) {
        throw NotIrreducible("degree cap " + std::to_string(NumberField::MAX_DEGREE) + " exceeded");
    }
    if (f.degree() == 1) return;
    if (has_rational_root(f)) throw NotIrreducible("polynomial has a rational root: " + f.str());
    if (f.degree() <= 3) return;  // no rational root and degree <= 3

    long n = f.degree();
    std::uint64_t proper = ((1ULL << n) - 2) & ~1ULL;  // degrees 1..n-1
    std::uint64_t possible = proper;
    for (std::uint32_t p : kSievePrimes) {
        FpPoly fbar = reduce_mod_p(f, p);
        if (fbar.degree() != n) continue;
        if (FpPoly::gcd(fbar, fbar.derivative()).degree() != 0) continue;  // not squarefree mod p
        possible &= subset_sum_mask(factor_degrees(fbar.monic()));
        possible &= proper;
        if (possible == 0) return;
    }
    throw NotIrreducible("irreducibility of " + f.str() + " not certified by the modular sieve");
}

std::shared_ptr<const NumberField> NumberField::create(const QPoly& f) {
    certify_irreducible(f);
    return std::shared_ptr<const NumberField>(new NumberField(f));
}

std::shared_ptr<const NumberField> NumberField::rationals() {
    static const std::shared_ptr<const NumberField> q(new NumberField(QPoly::monomial(1, 1)));
    return q;
}

std::shared_ptr<const NumberField> NumberField::cyclotomic(long m) {
    static std::map<long, std::shared_ptr<const NumberField>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    QPoly f = cyclotomic_poly(m);
    if (f.degree() > MAX_DEGREE) throw NotIrreducible("cyclotomic field degree exceeds the cap");
    auto field = f.degree() == 1 ? rationals() : std::shared_ptr<const NumberField>(new NumberField(f));
    cache[m] = field;
    return field;
}

std::shared_ptr<const NumberField> NumberField::cyclotomic_trace_field(long m) {
    static std::map<long, std::shared_ptr<const NumberField>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    QPoly f = cyclotomic_trace_poly(m);
    auto field = f.degree() == 1 ? rationals() : std::shared_ptr<const NumberField>(new NumberField(f));
    cache[m] = field;
    return field;
}

long euler_phi(long m) {
    long r = 1;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            long pk = 1;
            while (m % p == 0) {
                m /= p;
                pk *= p;
            }
            r *= pk - pk / p;
        }
    }
    if (m > 1) r *= m - 1;
    return r;
}

QPoly cyclotomic_poly(long m) {
    static std::map<long, QPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // x^m - 1 divided by the lower cyclotomic polynomials
    std::vector<mpq_class> xm(m + 1, mpq_class(0));
    xm[0] = -1;
    xm[static_cast<std::size_t>(m)] = 1;
    QPoly f{std::vector<mpq_class>(xm)};
    for (long d = 1; d < m; ++d) {
        if (m % d == 0) f = f / cyclotomic_poly(d);
    }
    cache[m] = f;
    return f;
}

QPoly cyclotomic_trace_poly(long m) {
    if (m == 1) return QPoly({mpq_class(-2), mpq_class(1)});
    if (m == 2) return QPoly({mpq_class(2), mpq_class(1)});
    QPoly phi = cyclotomic_poly(m);
    long n = phi.degree() / 2;
    // phi(y)/y^n = c_n + sum_{i=1}^{n} c_{n+i} (y^i + y^{-i}) with y^i + y^{-i}
    // given by the Dickson recursion D_{i+1} = x*D_i - D_{i-1}
    QPoly psi = QPoly::constant(phi.coeff(static_cast<std::size_t>(n)));
    QPoly d_prev = QPoly::constant(2);
    QPoly d_cur = QPoly::monomial(1, 1);
    QPoly x = QPoly::monomial(1, 1);
    for (long i = 1; i <= n; ++i) {
        psi = psi + d_cur.scaled(phi.coeff(static_cast<std::size_t>(n + i)));
        QPoly d_next = x * d_cur - d_prev;
        d_prev = d_cur;
        d_cur = d_next;
    }
    return psi;
}

NFElem::NFElem() : K_(NumberField::rationals()), c_(1, mpq_class(0)) {}

NFElem::NFElem(FieldPtr field, std::vector<mpq_class> coords) : K_(std::move(field)), c_(std::move(coords)) {
    c_.resize(static_cast<std::size_t>(K_->degree()), mpq_class(0));
}

NFElem NFElem::from_rational(const FieldPtr& field, const mpq_class& q) {
    std::vector<mpq_class> c(static_cast<std::size_t>(field->degree()), mpq_class(0));
    c[0] = q;
    return NFElem(field, std::move(c));
}

NFElem NFElem::generator(const FieldPtr& field) {
    if (field->degree() == 1) {
        // x reduces to the rational root of the degree-one minimal polynomial
        return from_rational(field, -field->minpoly().coeff(0));
    }
    std::vector<mpq_class> c(static_cast<std::size_t>(field->degree()), mpq_class(0));
    c[1] = 1;
    return NFElem(field, std::move(c));
}

bool NFElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return q == 0; });
}

bool NFElem::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] != 0) return false;
    }
    return true;
}

mpq_class NFElem::rational_value() const {
    if (!is_rational()) throw DomainMismatch("element is not rational");
    return c_[0];
}

NFElem NFElem::with_coords(std::vector<mpq_class> c) const { return NFElem(K_, std::move(c)); }

void NFElem::match(const NFElem& o) const {
    if (K_ != o.K_ && !K_->same(*o.K_)) throw DomainMismatch("elements of different number fields");
}

NFElem NFElem::operator+(const NFElem& o) const {
    match(o);
    std::vector<mpq_class> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] + o.c_[i];
    return with_coords(std::move(c));
}

NFElem NFElem::operator-(const NFElem& o) const {
    match(o);
    std::vector<mpq_class> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] - o.c_[i];
    return with_coords(std::move(c));
}

NFElem NFElem::operator-() const {
    std::vector<mpq_class> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
    return with_coords(std::move(c));
}

NFElem NFElem::operator*(const NFElem& o) const {
    match(o);
    QPoly r = K_->reduce(poly() * o.poly());
    std::vector<mpq_class> c(c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < c.size() && static_cast<long>(i) <= r.degree(); ++i) c[i] = r.coeff(i);
    return with_coords(std::move(c));
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw ZeroDivision("inverse of 0 in a number field");
    // extended Euclid in Q[x] against the minimal polynomial
    QPoly r0 = K_->minpoly(), r1 = poly();
    QPoly s0, s1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        QPoly q, r2;
        r0.divrem(r1, q, r2);
        QPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    // r0 is a nonzero constant since the minimal polynomial is irreducible
    QPoly inv = K_->reduce(s0.scaled(1 / r0.coeff(0)));
    std::vector<mpq_class> c(c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < c.size() && static_cast<long>(i) <= inv.degree(); ++i) c[i] = inv.coeff(i);
    return with_coords(std::move(c));
}

NFElem NFElem::operator/(const NFElem& o) const { return *this * o.inverse(); }

NFElem NFElem::pow(long e) const {
    NFElem base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    NFElem r = from_rational(K_, 1);
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool NFElem::operator==(const NFElem& o) const {
    return (K_ == o.K_ || K_->same(*o.K_)) && c_ == o.c_;
}

std::string NFElem::str(const std::string& var) const {
    QPoly p = poly();
    return p.is_zero() ? "0" : p.str(var);
}

QPoly minimal_polynomial(const NFElem& e) {
    long d = e.field()->degree();
    std::vector<std::vector<mpq_class>> powers;
    NFElem p = NFElem::from_rational(e.field(), 1);
    powers.push_back(p.coords());
    for (long k = 1; k <= d; ++k) {
        p = p * e;
        // find c with sum c_i e^i = e^k by Gaussian elimination
        std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(d));
        for (long row = 0; row < d; ++row) {
            m[static_cast<std::size_t>(row)].resize(static_cast<std::size_t>(k) + 1);
            for (long col = 0; col < k; ++col) {
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                    powers[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
            }
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] = p.coords()[static_cast<std::size_t>(row)];
        }
        // forward elimination
        long rank = 0;
        std::vector<long> pivot_col(static_cast<std::size_t>(k), -1);
        for (long col = 0; col < k && rank < d; ++col) {
            long piv = -1;
            for (long row = rank; row < d; ++row) {
                if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                    piv = row;
                    break;
                }
            }
            if (piv < 0) continue;
            std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(piv)]);
            mpq_class inv = 1 / m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
            for (long j = col; j <= k; ++j) m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] *= inv;
            for (long row = 0; row < d; ++row) {
                if (row == rank) continue;
                mpq_class f = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
                if (f == 0) continue;
                for (long j = col; j <= k; ++j) {
                    m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                        f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
                }
            }
            pivot_col[static_cast<std::size_t>(col)] = rank;
            ++rank;
        }
        bool consistent = true;
        for (long row = rank; row < d; ++row) {
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] != 0) {
                consistent = false;
                break;
            }
        }
        if (!consistent) {
            powers.push_back(p.coords());
            continue;
        }
        std::vector<mpq_class> c(static_cast<std::size_t>(k) + 1);
        for (long col = 0; col < k; ++col) {
            long row = pivot_col[static_cast<std::size_t>(col)];
            c[static_cast<std::size_t>(col)] =
                row >= 0 ? -m[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] : mpq_class(0);
        }
        c[static_cast<std::size_t>(k)] = 1;
        return QPoly(std::move(c));
    }
    throw Error("minimal polynomial search failed");  // unreachable: degree d always admits a relation
}

bool is_algebraic_integer(const NFElem& e) { return minimal_polynomial(e).has_integer_coeffs(); }

NFElem cyclotomic_trace(long m, long k) {
    if (m < 1) throw DegenerateInput("cyclotomic trace needs m >= 1");
    k %= m;
    if (k < 0) k += m;
    long g = k == 0 ? m : std::gcd(m, k);
    long mp = m / g;
    QPoly psi = cyclotomic_trace_poly(mp);
    if (psi.degree() == 1) {
        return NFElem::from_rational(NumberField::rationals(), -psi.coeff(0));
    }
    return NFElem::generator(NumberField::cyclotomic_trace_field(mp));
}

namespace {

// Euler criterion in the residue field F_p[x]/(fbar) with q = p^deg elements.
// Returns +1 for nonzero squares, -1 for nonsquares, 0 for a zero reduction.
int euler_symbol(const FpPoly& ebar, const FpPoly& fbar) {
    std::uint32_t p = fbar.modulus();
    long d = fbar.degree();
    if (ebar.is_zero()) return 0;
    if (63.0 * 0.69314718 < static_cast<double>(d) * std::log(static_cast<double>(p))) return 0;  // q overflow, skip
    std::uint64_t q = 1;
    for (long i = 0; i < d; ++i) q *= p;
    FpPoly r = ebar.powmod((q - 1) / 2, fbar);
    if (r.degree() == 0 && r.coeff(0) == 1) return 1;
    if (r.degree() == 0 && r.coeff(0) == p - 1) return -1;
    return 0;
}

}  // namespace

bool is_square_in_field(const NFElem& e, NFElem* sqrt_out) {
    const FieldPtr& K = e.field();
    if (e.is_zero()) {
        if (sqrt_out) *sqrt_out = NFElem::from_rational(K, 0);
        return true;
    }
    long d = K->degree();
    if (d == 1) {
        auto r = rational_sqrt(e.coords()[0]);
        if (!r) return false;
        if (sqrt_out) *sqrt_out = NFElem::from_rational(K, *r);
        return true;
    }
    if (d == 2) {
        // write the field as Q(sqrt(D)) with sqrt(D) = 2x + p1
        mpq_class p1 = K->minpoly().coeff(1);
        mpq_class p0 = K->minpoly().coeff(0);
        mpq_class D = p1 * p1 - 4 * p0;
        mpq_class u = e.coords()[0], v = e.coords()[1];
        mpq_class alpha = u - v * p1 / 2;
        mpq_class beta = v / 2;
        NFElem sqrtD = NFElem(K, {p1, mpq_class(2)});
        auto finish = [&](const NFElem& y) {
            if (y * y != e) return false;
            if (sqrt_out) *sqrt_out = y;
            return true;
        };
        if (beta == 0) {
            if (auto s = rational_sqrt(alpha)) return finish(NFElem::from_rational(K, *s));
            if (D != 0) {
                if (auto r = rational_sqrt(alpha / D)) return finish(sqrtD * NFElem::from_rational(K, *r));
            }
            return false;
        }
        mpq_class N = alpha * alpha - beta * beta * D;
        auto w = rational_sqrt(N);
        if (!w) return false;
        for (int sgn_choice : {1, -1}) {
            mpq_class s2 = (alpha + sgn_choice * *w) / 2;
            auto s = rational_sqrt(s2);
            if (!s || *s == 0) continue;
            mpq_class r = beta / (2 * *s);
            NFElem y = NFElem::from_rational(K, *s) + sqrtD * NFElem::from_rational(K, r);
            if (finish(y)) return true;
        }
        return false;
    }

    // degree >= 3: certificates only
    QPoly f = K->minpoly();
    auto roots = isolate_real_roots(f);
    for (auto& root : roots) {
        if (certified_sign_at_root(e.poly(), f, root) < 0) return false;
    }
    // clear denominators: e is a square iff e*den^2 is
    mpz_class den(1);
    for (const auto& q : e.coords()) {
        mpz_class d2 = q.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d2.get_mpz_t());
    }
    NFElem ez = e * NFElem::from_rational(K, mpq_class(den * den));
    for (std::uint32_t p : kSievePrimes) {
        if (p == 2) continue;
        FpPoly fbar = reduce_mod_p(f, p);
        if (fbar.degree() != f.degree()) continue;
        if (FpPoly::gcd(fbar, fbar.derivative()).degree() != 0) continue;
        FpPoly ebar = reduce_mod_p(ez.poly(), p);
        // linear residue: any root of fbar in F_p
        bool decided_skip = false;
        for (std::uint32_t r = 0; r < p; ++r) {
            if (fbar.eval(r) != 0) continue;
            std::uint32_t val = ebar.eval(r);
            if (val == 0) {
                decided_skip = true;
                break;
            }
            if (powm(val, (p - 1) / 2, p) == p - 1) return false;
            decided_skip = true;
            break;
        }
        if (decided_skip) continue;
        if (factor_degrees(fbar.monic()).size() == 1) {
            int sym = euler_symbol(ebar % fbar, fbar);
            if (sym == -1) return false;
        }
    }
    throw SearchBudgetExceeded("square test in degree >= 3 found no certificate");
}

}  // namespace sl2k
