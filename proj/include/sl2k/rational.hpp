#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace sl2k {

// mpq_class arithmetic keeps fractions canonical (positive denominator,
// lowest terms); these helpers cover the predicates the library needs.

inline mpq_class make_rational(long num, long den = 1) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const mpq_class& q) { return sgn(q); }

inline bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

// Rational square root when it exists.
inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

inline std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace sl2k
