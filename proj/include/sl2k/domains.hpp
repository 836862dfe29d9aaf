#pragma once

#include "sl2k/laurent.hpp"
#include "sl2k/matrix2.hpp"
#include "sl2k/numberfield.hpp"
#include "sl2k/ratfunc.hpp"

namespace sl2k {

// Uniform helpers so template algorithms can run over every coefficient
// domain. The Laurent domain certifies statements only up to the tracked
// precision; the exact domains decide them outright.

inline LaurentSeries one_like(const LaurentSeries& x) { return LaurentSeries::from_int(x.modulus(), 1); }
inline LaurentSeries zero_like(const LaurentSeries& x) { return LaurentSeries(x.modulus()); }
inline RationalFunction one_like(const RationalFunction& x) { return RationalFunction::from_int(x.modulus(), 1); }
inline RationalFunction zero_like(const RationalFunction& x) { return RationalFunction(x.modulus()); }
inline NFElem one_like(const NFElem& x) { return NFElem::from_rational(x.field(), 1); }
inline NFElem zero_like(const NFElem& x) { return NFElem::from_rational(x.field(), 0); }

// x is provably not zero
inline bool certified_nonzero(const LaurentSeries& x) { return x.kind() == LaurentSeries::Kind::Known; }
inline bool certified_nonzero(const RationalFunction& x) { return !x.is_zero(); }
inline bool certified_nonzero(const NFElem& x) { return !x.is_zero(); }

// x = 1, exactly or to the tracked precision
inline bool certified_equals_one(const LaurentSeries& x) {
    return !certified_nonzero(x - one_like(x));
}
inline bool certified_equals_one(const RationalFunction& x) { return x == one_like(x); }
inline bool certified_equals_one(const NFElem& x) { return x == one_like(x); }

template <typename T>
void require_det_one(const Mat2<T>& g) {
    if (!certified_equals_one(g.det())) throw DeterminantNotOne();
}

}  // namespace sl2k
