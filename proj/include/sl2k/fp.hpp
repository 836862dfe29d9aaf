#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2k/errors.hpp"

namespace sl2k {

// Modular helpers on residues 0 <= v < p, p < 2^31.
std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t powm(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t invm(std::uint32_t a, std::uint32_t p);  // throws ZeroDivision on a == 0
std::uint32_t reduce_int(long long a, std::uint32_t p);

bool is_prime_u31(std::uint32_t n);

// Element of the prime field F_p.  The modulus is checked once per
// construction path; arithmetic requires matching moduli.
class Fp {
public:
    Fp() : p_(2), v_(0) {}
    Fp(std::uint32_t p, long long v);

    static std::uint32_t check_prime(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }
    std::uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator-() const;
    Fp inverse() const;
    Fp pow(std::uint64_t e) const;

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::uint32_t p_;
    std::uint32_t v_;
    void match(const Fp& o) const;
};

// Dense polynomial over F_p, coefficients stored ascending, trimmed so the
// last coefficient is nonzero.  The zero polynomial has an empty vector and
// degree() == -1.
class FpPoly {
public:
    FpPoly() : p_(2) {}
    explicit FpPoly(std::uint32_t p) : p_(Fp::check_prime(p)) {}
    FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);
    static FpPoly constant(std::uint32_t p, long long c);
    static FpPoly monomial(std::uint32_t p, long long c, std::size_t deg);

    std::uint32_t modulus() const { return p_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t leading() const;
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly operator-() const;
    FpPoly scaled(std::uint32_t c) const;
    FpPoly shifted(std::size_t k) const;  // multiply by t^k

    // Euclidean division; the divisor must be nonzero.
    void divrem(const FpPoly& den, FpPoly& quot, FpPoly& rem) const;
    FpPoly operator%(const FpPoly& den) const;
    FpPoly operator/(const FpPoly& den) const;

    FpPoly monic() const;
    static FpPoly gcd(const FpPoly& a, const FpPoly& b);  // monic gcd, gcd(0,0) = 0

    std::uint32_t eval(std::uint32_t x) const;
    FpPoly derivative() const;
    FpPoly taylor_shift(std::uint32_t c) const;        // P(t) -> P(t + c)
    FpPoly reversed() const;                           // t^deg * P(1/t)
    FpPoly truncated(std::size_t k) const;             // P mod t^k
    FpPoly series_inverse(std::size_t k) const;        // inverse mod t^k, unit constant term required
    std::size_t low_order() const;                     // multiplicity of t | P, P nonzero
    FpPoly powmod(std::uint64_t e, const FpPoly& mod) const;

    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const FpPoly& o) const { return !(*this == o); }

    // Deterministic total order: degree first, then coefficients from the top.
    static int compare(const FpPoly& a, const FpPoly& b);

    std::string str(const std::string& var = "t") const;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> c_;
    void trim();
    void match(const FpPoly& o) const;
};

}  // namespace sl2k
