#pragma once

#include <cstdint>
#include <string>

#include "sl2k/errors.hpp"
#include "sl2k/fp.hpp"
#include "sl2k/laurent.hpp"

namespace sl2k {

// A place of the projective line over F_p: either a finite point y = c or
// the point at infinity.
struct Place {
    bool at_infinity = false;
    std::uint32_t c = 0;

    static Place infinity() { return Place{true, 0}; }
    static Place finite(std::uint32_t c) { return Place{false, c}; }
    std::string str() const { return at_infinity ? "inf" : std::to_string(c); }
    bool operator==(const Place& o) const {
        return at_infinity == o.at_infinity && (at_infinity || c == o.c);
    }
};

// Rational function num/den over F_p in one variable, kept in lowest terms
// with monic denominator; this makes the representation unique.
class RationalFunction {
public:
    explicit RationalFunction(std::uint32_t p = 2)
        : num_(FpPoly(p)), den_(FpPoly::constant(p, 1)) {}
    RationalFunction(FpPoly num, FpPoly den);

    static RationalFunction from_int(std::uint32_t p, long long c);
    static RationalFunction variable(std::uint32_t p);

    std::uint32_t modulus() const { return num_.modulus(); }
    const FpPoly& num() const { return num_; }
    const FpPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction inverse() const;

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // Order of vanishing at the place; poles give negative values.
    // Raises ZeroDivision for the zero function.
    long long order_at(const Place& place) const;

    std::string str(const std::string& var = "y") const;

private:
    FpPoly num_;
    FpPoly den_;
    void reduce();
};

// Laurent expansion of r in the local coordinate of the place (y = c + t at
// a finite place, y = 1/t at infinity), known below t^prec.  This is a ring
// homomorphism into F_p((t)) at every fixed precision.
LaurentSeries expand_at_place(const RationalFunction& r, const Place& place,
                              long long prec = DEFAULT_LAURENT_PREC);

}  // namespace sl2k
