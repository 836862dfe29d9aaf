#pragma once

#include <string>
#include <vector>

#include "sl2k/numberfield.hpp"
#include "sl2k/sl2kit.hpp"

namespace sl2k {

// Target conjugacy class for a three-matrix tuple with product one: either a
// unipotent class with trace sign epsilon, or a semisimple class whose
// eigenvalue is the root of unity zeta_m^k (required distinct from +-1).
struct ClassSpec {
    ConjKind kind = ConjKind::UnipotentPlus;
    long m = 0, k = 0;  // eigenvalue exponent data, Semisimple only

    static ClassSpec unipotent(int sign);              // sign in {+1, -1}
    static ClassSpec eigenvalue(long m, long k);       // zeta_m^k != +-1

    // order of the eigenvalue after reducing k mod m (Semisimple only)
    long reduced_order() const;

    std::string str() const;
};

// dimension of the conjugacy class inside SL(2): 0 for the central classes,
// 2 for unipotent and regular semisimple ones
int class_dimension(ConjKind kind);

// expected moduli dimension of tuples with the given classes on a genus-zero
// base: sum of class dimensions minus 6; rigidity is the value 0
long long virtual_dimension(const std::vector<ConjKind>& kinds);

struct HypergeometricTuple {
    bool obstructed = false;
    std::string obstruction;         // reason when obstructed
    FieldPtr field;                  // coefficient field of the matrices
    std::vector<Mat2<NFElem>> mats;  // three matrices, product = identity
    std::vector<int> sign_twists;    // +-1 twist applied per slot vs the base solution
};

// Explicit solution of M1 M2 M3 = 1 realizing the requested classes, built
// from the three-case list: three unipotent classes (sign parity permitting),
// two unipotent + one torus class, one unipotent + two torus classes.  Three
// semisimple classes and even unipotent sign patterns return an obstruction.
// Central classes are rejected as DegenerateInput.
HypergeometricTuple hypergeometric_build(const std::vector<ClassSpec>& classes);

// true iff the tuple multiplies to the identity, every matrix has det 1 and
// lands in its requested class, a density witness exists at word length <= 4,
// and the virtual dimension of the class data is 0
bool verify_rigid_tuple(const std::vector<Mat2<NFElem>>& mats, const std::vector<ClassSpec>& classes);

}  // namespace sl2k
