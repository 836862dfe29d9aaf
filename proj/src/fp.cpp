#include "sl2k/fp.hpp"

#include <algorithm>
#include <sstream>

namespace sl2k {

std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t powm(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    std::uint32_t base = a % p;
    while (e) {
        if (e & 1) r = mulm(r, base, p);
        base = mulm(base, base, p);
        e >>= 1;
    }
    return r;
}

std::uint32_t invm(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw ZeroDivision("inverse of 0 in F_p");
    // extended Euclid on (a, p)
    long long r0 = a % p, r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    long long s = s0 % static_cast<long long>(p);
    if (s < 0) s += p;
    return static_cast<std::uint32_t>(s);
}

std::uint32_t reduce_int(long long a, std::uint32_t p) {
    long long r = a % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

bool is_prime_u31(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::uint32_t Fp::check_prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u31(p)) {
        throw NotPrime("modulus " + std::to_string(p) + " is not an admissible prime");
    }
    return p;
}

Fp::Fp(std::uint32_t p, long long v) : p_(check_prime(p)), v_(reduce_int(v, p_)) {}

void Fp::match(const Fp& o) const {
    if (p_ != o.p_) throw DomainMismatch("F_p elements with different p");
}

Fp Fp::operator+(const Fp& o) const { match(o); Fp r; r.p_ = p_; r.v_ = addm(v_, o.v_, p_); return r; }
Fp Fp::operator-(const Fp& o) const { match(o); Fp r; r.p_ = p_; r.v_ = subm(v_, o.v_, p_); return r; }
Fp Fp::operator*(const Fp& o) const { match(o); Fp r; r.p_ = p_; r.v_ = mulm(v_, o.v_, p_); return r; }
Fp Fp::operator-() const { Fp r; r.p_ = p_; r.v_ = v_ == 0 ? 0 : p_ - v_; return r; }
Fp Fp::inverse() const { Fp r; r.p_ = p_; r.v_ = invm(v_, p_); return r; }
Fp Fp::pow(std::uint64_t e) const { Fp r; r.p_ = p_; r.v_ = powm(v_, e, p_); return r; }

std::string Fp::str() const { return std::to_string(v_); }

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs)
    : p_(Fp::check_prime(p)), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    trim();
}

FpPoly FpPoly::constant(std::uint32_t p, long long c) {
    FpPoly r(p);
    std::uint32_t v = reduce_int(c, r.p_);
    if (v != 0) r.c_.push_back(v);
    return r;
}

FpPoly FpPoly::monomial(std::uint32_t p, long long c, std::size_t deg) {
    FpPoly r(p);
    std::uint32_t v = reduce_int(c, r.p_);
    if (v != 0) {
        r.c_.assign(deg + 1, 0);
        r.c_[deg] = v;
    }
    return r;
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FpPoly::match(const FpPoly& o) const {
    if (p_ != o.p_) throw DomainMismatch("polynomials over different F_p");
}

std::uint32_t FpPoly::leading() const {
    if (c_.empty()) throw ZeroDivision("leading coefficient of 0");
    return c_.back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    match(o);
    FpPoly r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = addm(coeff(i), o.coeff(i), p_);
    r.trim();
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    match(o);
    FpPoly r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = subm(coeff(i), o.coeff(i), p_);
    r.trim();
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    match(o);
    FpPoly r(p_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            r.c_[i + j] = addm(r.c_[i + j], mulm(c_[i], o.c_[j], p_), p_);
        }
    }
    r.trim();
    return r;
}

FpPoly FpPoly::operator-() const {
    FpPoly r(p_);
    r.c_ = c_;
    for (auto& c : r.c_) c = c == 0 ? 0 : p_ - c;
    return r;
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
    FpPoly r(p_);
    c %= p_;
    if (c == 0 || c_.empty()) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x = mulm(x, c, p_);
    return r;
}

FpPoly FpPoly::shifted(std::size_t k) const {
    FpPoly r(p_);
    if (c_.empty()) return r;
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<long>(k));
    return r;
}

void FpPoly::divrem(const FpPoly& den, FpPoly& quot, FpPoly& rem) const {
    match(den);
    if (den.c_.empty()) throw ZeroDivision("polynomial division by 0");
    quot = FpPoly(p_);
    rem = *this;
    std::uint32_t lead_inv = invm(den.leading(), p_);
    if (rem.degree() >= den.degree()) quot.c_.assign(rem.c_.size() - den.c_.size() + 1, 0);
    while (rem.degree() >= den.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - den.degree());
        std::uint32_t f = mulm(rem.leading(), lead_inv, p_);
        quot.c_[shift] = addm(quot.c_[shift], f, p_);
        for (std::size_t i = 0; i < den.c_.size(); ++i) {
            rem.c_[i + shift] = subm(rem.c_[i + shift], mulm(f, den.c_[i], p_), p_);
        }
        rem.trim();
    }
    quot.trim();
}

FpPoly FpPoly::operator%(const FpPoly& den) const {
    FpPoly q(p_), r(p_);
    divrem(den, q, r);
    return r;
}

FpPoly FpPoly::operator/(const FpPoly& den) const {
    FpPoly q(p_), r(p_);
    divrem(den, q, r);
    return q;
}

FpPoly FpPoly::monic() const {
    if (c_.empty()) return *this;
    return scaled(invm(leading(), p_));
}

FpPoly FpPoly::gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        FpPoly r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    return r0.monic();
}

std::uint32_t FpPoly::eval(std::uint32_t x) const {
    std::uint32_t r = 0;
    x %= p_;
    for (std::size_t i = c_.size(); i-- > 0;) r = addm(mulm(r, x, p_), c_[i], p_);
    return r;
}

FpPoly FpPoly::derivative() const {
    FpPoly r(p_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        r.c_[i - 1] = mulm(c_[i], static_cast<std::uint32_t>(i % p_), p_);
    }
    r.trim();
    return r;
}

FpPoly FpPoly::taylor_shift(std::uint32_t c) const {
    // Horner: P(t + c) built from the top coefficient down.
    FpPoly r(p_);
    FpPoly t_plus_c(p_, {c % p_, 1});
    for (std::size_t i = c_.size(); i-- > 0;) {
        r = r * t_plus_c + FpPoly::constant(p_, c_[i]);
    }
    return r;
}

FpPoly FpPoly::reversed() const {
    FpPoly r(p_);
    r.c_.assign(c_.rbegin(), c_.rend());
    r.trim();
    return r;
}

FpPoly FpPoly::truncated(std::size_t k) const {
    FpPoly r(p_);
    r.c_.assign(c_.begin(), c_.begin() + static_cast<long>(std::min(k, c_.size())));
    r.trim();
    return r;
}

FpPoly FpPoly::series_inverse(std::size_t k) const {
    if (c_.empty() || c_[0] == 0) throw ZeroDivision("series inverse needs a unit constant term");
    FpPoly r(p_);
    if (k == 0) return r;
    r.c_.assign(k, 0);
    std::uint32_t c0inv = invm(c_[0], p_);
    r.c_[0] = c0inv;
    for (std::size_t i = 1; i < k; ++i) {
        // coefficient i of (this * r) must vanish
        std::uint32_t acc = 0;
        for (std::size_t j = 1; j <= std::min(i, c_.size() - 1); ++j) {
            acc = addm(acc, mulm(c_[j], r.c_[i - j], p_), p_);
        }
        r.c_[i] = mulm(subm(0, acc, p_), c0inv, p_);
    }
    r.trim();
    return r;
}

std::size_t FpPoly::low_order() const {
    if (c_.empty()) throw ZeroDivision("low order of 0");
    std::size_t i = 0;
    while (c_[i] == 0) ++i;
    return i;
}

FpPoly FpPoly::powmod(std::uint64_t e, const FpPoly& mod) const {
    FpPoly base = *this % mod;
    FpPoly r = FpPoly::constant(p_, 1) % mod;
    while (e) {
        if (e & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

int FpPoly::compare(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    }
    return 0;
}

std::string FpPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0) {
            out << c_[i];
        } else {
            if (c_[i] != 1) out << c_[i] << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace sl2k
