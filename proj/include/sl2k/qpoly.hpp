#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sl2k/errors.hpp"
#include "sl2k/rational.hpp"

namespace sl2k {

// Dense polynomial over Q, coefficients ascending, trimmed.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly constant(const mpq_class& c);
    static QPoly monomial(const mpq_class& c, std::size_t deg);
    static QPoly from_integers(const std::vector<mpz_class>& coeffs);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool has_integer_coeffs() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly scaled(const mpq_class& c) const;

    void divrem(const QPoly& den, QPoly& quot, QPoly& rem) const;
    QPoly operator%(const QPoly& den) const;
    QPoly operator/(const QPoly& den) const;

    QPoly monic() const;
    static QPoly gcd(const QPoly& a, const QPoly& b);
    QPoly derivative() const;
    mpq_class eval(const mpq_class& x) const;

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    std::string str(const std::string& var = "x") const;

private:
    std::vector<mpq_class> c_;
    void trim();
};

// Closed interval with rational endpoints enclosing one real root of a
// squarefree polynomial.  lo == hi marks an exact rational root.
struct RealRootInterval {
    mpq_class lo;
    mpq_class hi;
    bool exact() const { return lo == hi; }
};

// Number of distinct real roots of f (no squarefreeness assumption; Sturm on
// f / gcd(f, f')).
int count_real_roots(const QPoly& f);

// Disjoint isolating intervals for the distinct real roots of f, sorted
// ascending.
std::vector<RealRootInterval> isolate_real_roots(const QPoly& f);

// Halve the isolating interval of a root of f.
void refine_root(const QPoly& f, RealRootInterval& root);

// Certified sign of e evaluated at the root of f enclosed by `root`,
// refining the enclosure as needed.  The element is expected to be reduced
// mod f; a nonzero e never evaluates to 0 at a root of an irreducible f, so
// the refinement loop terminates.  Raises NumericallySingular if the budget
// runs out.
int certified_sign_at_root(const QPoly& e, const QPoly& f, RealRootInterval& root,
                           int max_halvings = 4096);

}  // namespace sl2k
