#include "sl2k/ratfunc.hpp"

namespace sl2k {

namespace {

// P / t^k for a polynomial divisible by t^k.
FpPoly drop_low(const FpPoly& a, std::size_t k) {
    std::vector<std::uint32_t> c(a.coeffs().begin() + static_cast<long>(k), a.coeffs().end());
    return FpPoly(a.modulus(), std::move(c));
}

}  // namespace

RationalFunction::RationalFunction(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.modulus() != den_.modulus()) throw DomainMismatch("rational function parts over different F_p");
    if (den_.is_zero()) throw ZeroDivision("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = FpPoly::constant(num_.modulus(), 1);
        return;
    }
    FpPoly g = FpPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    std::uint32_t lead_inv = invm(den_.leading(), den_.modulus());
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

RationalFunction RationalFunction::from_int(std::uint32_t p, long long c) {
    return RationalFunction(FpPoly::constant(p, c), FpPoly::constant(p, 1));
}

RationalFunction RationalFunction::variable(std::uint32_t p) {
    return RationalFunction(FpPoly::monomial(p, 1, 1), FpPoly::constant(p, 1));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw ZeroDivision("division by the zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw ZeroDivision("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

long long RationalFunction::order_at(const Place& place) const {
    if (is_zero()) throw ZeroDivision("order of the zero function");
    if (place.at_infinity) return den_.degree() - num_.degree();
    FpPoly ns = num_.taylor_shift(place.c);
    FpPoly ds = den_.taylor_shift(place.c);
    return static_cast<long long>(ns.low_order()) - static_cast<long long>(ds.low_order());
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_.degree() == 0) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

LaurentSeries expand_at_place(const RationalFunction& r, const Place& place, long long prec) {
    std::uint32_t p = r.modulus();
    if (r.is_zero()) return LaurentSeries(p);
    FpPoly a(p), b(p);
    long long val;
    if (place.at_infinity) {
        a = r.num().reversed();
        b = r.den().reversed();
        val = r.den().degree() - r.num().degree();
    } else {
        FpPoly ns = r.num().taylor_shift(place.c);
        FpPoly ds = r.den().taylor_shift(place.c);
        std::size_t k1 = ns.low_order(), k2 = ds.low_order();
        a = drop_low(ns, k1);
        b = drop_low(ds, k2);
        val = static_cast<long long>(k1) - static_cast<long long>(k2);
    }
    long long window = prec - val;
    if (window <= 0) return LaurentSeries::zero_at_precision(p, prec);
    // a, b are exact units at t = 0, so the quotient window is exact
    FpPoly q = (a.truncated(static_cast<std::size_t>(window)) *
                b.series_inverse(static_cast<std::size_t>(window)))
                   .truncated(static_cast<std::size_t>(window));
    return LaurentSeries::from_window(p, val, q.coeffs(), prec);
}

}  // namespace sl2k
