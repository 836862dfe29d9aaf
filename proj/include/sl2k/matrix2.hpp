#pragma once

#include <cstdint>

#include "sl2k/errors.hpp"

namespace sl2k {

// Row-major 2x2 matrix over any commutative coefficient ring T.
// T must provide +, -, *, unary -, and ==.
template <typename T>
struct Mat2 {
    T a, b, c, d;  // [[a, b], [c, d]]

    T det() const { return a * d - b * c; }
    T trace() const { return a + d; }

    Mat2 operator*(const Mat2& o) const {
        return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-() const { return Mat2{-a, -b, -c, -d}; }
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    // inverse of a determinant-one matrix
    Mat2 adjugate() const { return Mat2{d, -b, -c, a}; }
};

template <typename T>
Mat2<T> mat2_identity(const T& one, const T& zero) {
    return Mat2<T>{one, zero, zero, one};
}

// g^e for det-1 g; negative exponents use the adjugate inverse
template <typename T>
Mat2<T> mat2_pow(const Mat2<T>& g, long long e, const T& one, const T& zero) {
    Mat2<T> base = e < 0 ? g.adjugate() : g;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Mat2<T> acc = mat2_identity(one, zero);
    while (k > 0) {
        if (k & 1ULL) acc = acc * base;
        base = base * base;
        k >>= 1ULL;
    }
    return acc;
}

}  // namespace sl2k
