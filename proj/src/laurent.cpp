#include "sl2k/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace sl2k {

namespace {

long long sat_add(long long a, long long b) {
    if (a >= LaurentSeries::PREC_INF || b >= LaurentSeries::PREC_INF) return LaurentSeries::PREC_INF;
    long long s = a + b;
    return s >= LaurentSeries::PREC_INF ? LaurentSeries::PREC_INF : s;
}

}  // namespace

LaurentSeries LaurentSeries::from_poly_exact(const FpPoly& c, long long shift) {
    LaurentSeries r(c.modulus());
    r.val_ = shift;
    r.c_ = c.coeffs();
    r.prec_ = PREC_INF;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::from_int(std::uint32_t p, long long c) {
    return from_poly_exact(FpPoly::constant(p, c), 0);
}

LaurentSeries LaurentSeries::from_window(std::uint32_t p, long long val,
                                         const std::vector<std::uint32_t>& coeffs, long long prec) {
    LaurentSeries r(p);
    r.val_ = val;
    r.c_ = coeffs;
    for (auto& x : r.c_) x %= p;
    r.prec_ = prec;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::zero_at_precision(std::uint32_t p, long long prec) {
    LaurentSeries r(p);
    r.prec_ = prec;
    return r;
}

LaurentSeries::Kind LaurentSeries::kind() const {
    if (!c_.empty()) return Kind::Known;
    return prec_ >= PREC_INF ? Kind::ExactZero : Kind::IndeterminateZero;
}

void LaurentSeries::normalize() {
    // drop stored coefficients at or above the precision bound
    if (prec_ < PREC_INF && stored_end() > prec_) {
        long long keep = prec_ - val_;
        c_.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
    }
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        val_ += static_cast<long long>(lead);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) val_ = 0;
}

void LaurentSeries::match(const LaurentSeries& o) const {
    if (p_ != o.p_) throw DomainMismatch("Laurent series over different F_p");
}

long long LaurentSeries::valuation() const {
    switch (kind()) {
        case Kind::Known: return val_;
        case Kind::ExactZero: return VAL_INF;
        default:
            throw PrecisionExhausted("valuation of an element that is 0 mod t^" +
                                     std::to_string(prec_) + " with unknown tail");
    }
}

std::uint32_t LaurentSeries::coeff_at(long long k) const {
    if (k >= prec_) {
        throw PrecisionExhausted("coefficient of t^" + std::to_string(k) +
                                 " requested beyond precision " + std::to_string(prec_));
    }
    if (c_.empty() || k < val_ || k >= stored_end()) return 0;
    return c_[static_cast<std::size_t>(k - val_)];
}

FpPoly LaurentSeries::window_poly(long long lo, long long hi) const {
    std::vector<std::uint32_t> w;
    w.reserve(hi > lo ? static_cast<std::size_t>(hi - lo) : 0);
    for (long long k = lo; k < hi; ++k) w.push_back(coeff_at(k));
    return FpPoly(p_, std::move(w));
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    match(o);
    if (kind() == Kind::ExactZero) return o.truncated(prec_);
    if (o.kind() == Kind::ExactZero) return truncated(o.prec_);
    LaurentSeries r(p_);
    r.prec_ = std::min(prec_, o.prec_);
    long long lo = std::min(c_.empty() ? r.prec_ : val_, o.c_.empty() ? r.prec_ : o.val_);
    long long hi = std::min(r.prec_, std::max(stored_end(), o.stored_end()));
    if (hi > lo) {
        r.val_ = lo;
        r.c_.assign(static_cast<std::size_t>(hi - lo), 0);
        for (long long k = lo; k < hi; ++k) {
            std::uint32_t a = (k < val_ || k >= stored_end() || c_.empty()) ? 0 : c_[static_cast<std::size_t>(k - val_)];
            std::uint32_t b = (k < o.val_ || k >= o.stored_end() || o.c_.empty()) ? 0 : o.c_[static_cast<std::size_t>(k - o.val_)];
            r.c_[static_cast<std::size_t>(k - lo)] = addm(a, b, p_);
        }
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = x == 0 ? 0 : p_ - x;
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    return *this + (-o);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    match(o);
    // exact zero annihilates; an indeterminate zero only pushes the bound
    if (kind() == Kind::ExactZero || o.kind() == Kind::ExactZero) return LaurentSeries(p_);
    if (c_.empty() || o.c_.empty()) {
        long long lhs_lo = c_.empty() ? prec_ : val_;
        long long rhs_lo = o.c_.empty() ? o.prec_ : o.val_;
        return zero_at_precision(p_, sat_add(lhs_lo, rhs_lo));
    }
    LaurentSeries r(p_);
    r.val_ = val_ + o.val_;
    r.prec_ = std::min(sat_add(prec_, o.val_), sat_add(o.prec_, val_));
    std::size_t len = c_.size() + o.c_.size() - 1;
    if (r.prec_ < PREC_INF) {
        long long cap = r.prec_ - r.val_;
        if (cap <= 0) return zero_at_precision(p_, r.prec_);
        len = std::min<std::size_t>(len, static_cast<std::size_t>(cap));
    }
    r.c_.assign(len, 0);
    for (std::size_t i = 0; i < c_.size() && i < len; ++i) {
        if (c_[i] == 0) continue;
        std::size_t jmax = std::min(o.c_.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            r.c_[i + j] = addm(r.c_[i + j], mulm(c_[i], o.c_[j], p_), p_);
        }
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::shifted(long long k) const {
    LaurentSeries r = *this;
    r.val_ += k;
    r.prec_ = sat_add(r.prec_, k);
    if (r.c_.empty()) r.val_ = 0;
    return r;
}

LaurentSeries LaurentSeries::scaled(std::uint32_t c) const {
    c %= p_;
    if (c == 0) return LaurentSeries(p_);
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = mulm(x, c, p_);
    return r;
}

LaurentSeries LaurentSeries::truncated(long long prec) const {
    if (prec >= prec_) return *this;
    LaurentSeries r = *this;
    r.prec_ = prec;
    r.normalize();
    return r;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    return p_ == o.p_ && prec_ == o.prec_ && c_ == o.c_ && (c_.empty() || val_ == o.val_);
}

std::string LaurentSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long long e = val_ + static_cast<long long>(i);
        if (!first) out << " + ";
        first = false;
        if (e == 0) {
            out << c_[i];
        } else {
            if (c_[i] != 1) out << c_[i] << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    if (first && prec_ >= PREC_INF) return "0";
    if (prec_ < PREC_INF) {
        if (!first) out << " + ";
        out << "O(t^" << prec_ << ")";
    }
    return out.str();
}

long long valuation(const LaurentSeries& x) { return x.valuation(); }

LaurentSeries ls_invert(const LaurentSeries& x, long long prec_hint) {
    switch (x.kind()) {
        case LaurentSeries::Kind::ExactZero:
            throw ZeroDivision("inverse of the zero series");
        case LaurentSeries::Kind::IndeterminateZero:
            throw PrecisionExhausted("inverse of an element not certified nonzero");
        default:
            break;
    }
    std::uint32_t p = x.modulus();
    long long v = x.val_;
    // unit part u with u(0) != 0, x = t^v * u
    FpPoly u(p, x.c_);
    std::uint32_t lead_inv = invm(u.coeff(0), p);
    if (u.degree() == 0) {
        // monomial inverts exactly at the input precision pattern
        LaurentSeries r = LaurentSeries::from_poly_exact(FpPoly::constant(p, lead_inv), -v);
        if (x.prec_ < LaurentSeries::PREC_INF) r = r.truncated(x.prec_ - 2 * v);
        return r;
    }
    long long rel = x.prec_ < LaurentSeries::PREC_INF
                        ? x.prec_ - v
                        : (prec_hint > 0 ? prec_hint : DEFAULT_LAURENT_PREC);
    FpPoly inv = u.series_inverse(static_cast<std::size_t>(rel));
    return LaurentSeries::from_window(p, -v, inv.coeffs(), rel - v);
}

}  // namespace sl2k
