#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sl2k/errors.hpp"
#include "sl2k/qpoly.hpp"
#include "sl2k/rational.hpp"

namespace sl2k {

// Number field Q[x]/(f) with f monic, integer coefficients, degree <= 24.
// Construction through create() certifies irreducibility by a rational root
// scan plus a factor-degree sieve modulo small primes; the sieve never
// certifies a reducible polynomial, and polynomials it cannot certify are
// rejected.  Cyclotomic and cyclotomic trace fields use a trusted
// constructor since their irreducibility is classical.
class NumberField {
public:
    static constexpr long MAX_DEGREE = 24;

    static std::shared_ptr<const NumberField> create(const QPoly& f);
    static std::shared_ptr<const NumberField> rationals();       // Q[x]/(x)
    static std::shared_ptr<const NumberField> cyclotomic(long m);  // Q(zeta_m)
    // Field generated by zeta_m + zeta_m^{-1}.
    static std::shared_ptr<const NumberField> cyclotomic_trace_field(long m);

    const QPoly& minpoly() const { return f_; }
    long degree() const { return f_.degree(); }

    QPoly reduce(const QPoly& a) const { return a % f_; }
    bool same(const NumberField& o) const { return f_ == o.f_; }

private:
    explicit NumberField(QPoly f) : f_(std::move(f)) {}
    QPoly f_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Throws NotIrreducible unless f is certified irreducible over Q.
void certify_irreducible(const QPoly& f);

QPoly cyclotomic_poly(long m);
// Minimal polynomial of 2cos(2*pi/m) over Q.
QPoly cyclotomic_trace_poly(long m);
long euler_phi(long m);

// Element of a number field, represented by its coordinate vector in the
// power basis 1, x, ..., x^(d-1).
class NFElem {
public:
    NFElem();  // 0 in Q
    NFElem(FieldPtr field, std::vector<mpq_class> coords);
    static NFElem from_rational(const FieldPtr& field, const mpq_class& q);
    static NFElem generator(const FieldPtr& field);

    const FieldPtr& field() const { return K_; }
    const std::vector<mpq_class>& coords() const { return c_; }
    QPoly poly() const { return QPoly(c_); }
    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_value() const;  // requires is_rational()

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator/(const NFElem& o) const;
    NFElem operator-() const;
    NFElem inverse() const;
    NFElem pow(long e) const;

    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    std::string str(const std::string& var = "x") const;

private:
    FieldPtr K_;
    std::vector<mpq_class> c_;
    NFElem with_coords(std::vector<mpq_class> c) const;
    void match(const NFElem& o) const;
};

// Monic minimal polynomial of e over Q; its degree divides the field degree.
QPoly minimal_polynomial(const NFElem& e);

// True when the minimal polynomial has integer coefficients.
bool is_algebraic_integer(const NFElem& e);

// zeta_m^k + zeta_m^{-k} as an element of the field generated by it.
NFElem cyclotomic_trace(long m, long k);

// Square test.  Complete for field degree <= 2 (with a square root witness);
// in higher degree decides through real-embedding signs and residue-field
// certificates and raises SearchBudgetExceeded when neither applies.
bool is_square_in_field(const NFElem& e, NFElem* sqrt_out = nullptr);

}  // namespace sl2k
