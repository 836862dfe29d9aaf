#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2k/errors.hpp"
#include "sl2k/fp.hpp"

namespace sl2k {

// Default absolute precision used when an exact element must be truncated
// (series inversion) and no explicit precision is supplied.
inline constexpr long long DEFAULT_LAURENT_PREC = 64;

// Truncated Laurent series over F_p((t)) with pessimistic precision
// tracking.  An element is one of:
//   known        coefficients stored from the exact valuation up; everything
//                below prec() is known, everything from prec() on is not
//   exact zero   the zero element, known to all orders
//   indeterminate zero
//                all coefficients below prec() vanish but the tail is
//                unknown; valuation queries raise PrecisionExhausted
// prec() == PREC_INF marks exact elements (finitely many coefficients,
// known to all orders).
class LaurentSeries {
public:
    static constexpr long long PREC_INF = (1LL << 62);
    static constexpr long long VAL_INF = (1LL << 62);

    enum class Kind { ExactZero, IndeterminateZero, Known };

    explicit LaurentSeries(std::uint32_t p = 2) : p_(Fp::check_prime(p)), val_(0), prec_(PREC_INF) {}

    // Exact element c * t^shift for the polynomial c (known to all orders).
    static LaurentSeries from_poly_exact(const FpPoly& c, long long shift = 0);
    static LaurentSeries from_int(std::uint32_t p, long long c);
    // Element with coefficient window starting at t^val, known below prec.
    static LaurentSeries from_window(std::uint32_t p, long long val,
                                     const std::vector<std::uint32_t>& coeffs, long long prec);
    static LaurentSeries zero_at_precision(std::uint32_t p, long long prec);

    std::uint32_t modulus() const { return p_; }
    Kind kind() const;
    bool is_exact_zero() const { return kind() == Kind::ExactZero; }
    long long prec() const { return prec_; }

    // Exact valuation.  VAL_INF for the exact zero; PrecisionExhausted for an
    // indeterminate zero.
    long long valuation() const;

    // Coefficient of t^k; raises PrecisionExhausted for k >= prec().
    std::uint32_t coeff_at(long long k) const;

    // Coefficients of t^lo .. t^(hi-1) repackaged as a polynomial in t.
    FpPoly window_poly(long long lo, long long hi) const;

    // exclusive upper end of the stored coefficient window (valuation for an
    // element without stored coefficients)
    long long stored_window_end() const { return stored_end(); }

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator-() const;
    LaurentSeries shifted(long long k) const;  // multiply by t^k
    LaurentSeries scaled(std::uint32_t c) const;
    LaurentSeries truncated(long long prec) const;

    bool operator==(const LaurentSeries& o) const;
    bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::uint32_t p_;
    long long val_;                   // valuation when kind() == Known
    long long prec_;                  // coefficients known strictly below prec_
    std::vector<std::uint32_t> c_;    // c_[i] is the coefficient of t^(val_+i)

    long long stored_end() const { return val_ + static_cast<long long>(c_.size()); }
    void normalize();
    void match(const LaurentSeries& o) const;

    friend LaurentSeries ls_invert(const LaurentSeries& x, long long prec_hint);
};

long long valuation(const LaurentSeries& x);

// Multiplicative inverse.  The relative precision of the result matches the
// input; for exact nonzero input the series is truncated at prec_hint
// (DEFAULT_LAURENT_PREC when omitted) unless the input is a monomial, which
// inverts exactly.
LaurentSeries ls_invert(const LaurentSeries& x, long long prec_hint = -1);

}  // namespace sl2k
