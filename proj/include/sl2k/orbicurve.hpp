#pragma once

#include <string>
#include <vector>

#include "sl2k/errors.hpp"
#include "sl2k/rational.hpp"

namespace sl2k {

// Orbifold curve datum: closed genus, puncture count, and the indices of the
// orbifold points.  Indices are kept sorted descending, all >= 2.
struct OrbicurveData {
    long long genus = 0;
    long long punctures = 0;
    std::vector<long long> indices;

    OrbicurveData() = default;
    OrbicurveData(long long g, long long b, std::vector<long long> idx);

    mpq_class euler_characteristic() const;  // 2 - 2g - b - sum(1 - 1/n_i)

    bool operator==(const OrbicurveData& o) const;
    bool operator<(const OrbicurveData& o) const;  // (genus, punctures, indices)
    std::string str() const;
};

enum class GeomClass { Spherical, Elliptic, Hyperbolic };

std::string geom_class_str(GeomClass g);

// Sign trichotomy of the orbifold Euler characteristic; positive
// characteristic splits into Spherical (compact) and Elliptic (punctured,
// covered by the affine line or the punctured line).
GeomClass classify_orbicurve(const OrbicurveData& d);

// Largest orbifold index that can appear on a hyperbolic target covered by a
// curve of genus g with b punctures: the maximum of the three case bounds
// 2g-1, max(6, 42(3b+2g-2)), max(2, 6(4b+2g-2)).  (g,b)=(0,0) is degenerate.
long long hurwitz_index_bound(long long genus, long long punctures);

// Cap on the number of orbifold points of a candidate target: 2(2g-2+b)+4.
long long orbifold_point_cap(long long genus, long long punctures);

// Every hyperbolic OrbicurveData with genus <= g, punctures <= b, indices
// bounded by hurwitz_index_bound(g,b) and point count by orbifold_point_cap,
// deduplicated and sorted.  Negative overrides mean "derive from (g,b)";
// explicit overrides permit enumeration for the degenerate pair (0,0).
std::vector<OrbicurveData> enumerate_candidate_types(long long genus, long long punctures,
                                                     long long max_index = -1, long long max_points = -1);

}  // namespace sl2k
