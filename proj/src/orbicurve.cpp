#include "sl2k/orbicurve.hpp"

#include <algorithm>
#include <sstream>

namespace sl2k {

OrbicurveData::OrbicurveData(long long g, long long b, std::vector<long long> idx)
    : genus(g), punctures(b), indices(std::move(idx)) {
    if (genus < 0 || punctures < 0) throw DegenerateInput("negative genus or puncture count");
    for (long long n : indices)
        if (n < 2) throw DegenerateInput("orbifold index below 2");
    std::sort(indices.begin(), indices.end(), std::greater<long long>());
}

mpq_class OrbicurveData::euler_characteristic() const {
    mpq_class chi(static_cast<long>(2 - 2 * genus - punctures));
    for (long long n : indices) {
        chi -= mpq_class(static_cast<long>(n - 1), static_cast<long>(n));
    }
    chi.canonicalize();
    return chi;
}

bool OrbicurveData::operator==(const OrbicurveData& o) const {
    return genus == o.genus && punctures == o.punctures && indices == o.indices;
}

bool OrbicurveData::operator<(const OrbicurveData& o) const {
    if (genus != o.genus) return genus < o.genus;
    if (punctures != o.punctures) return punctures < o.punctures;
    return indices < o.indices;
}

std::string OrbicurveData::str() const {
    std::ostringstream os;
    os << "(g=" << genus << ", b=" << punctures;
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i == 0 ? "; " : ",") << indices[i];
    os << ")";
    return os.str();
}

std::string geom_class_str(GeomClass g) {
    switch (g) {
        case GeomClass::Spherical: return "spherical";
        case GeomClass::Elliptic: return "elliptic";
        case GeomClass::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

GeomClass classify_orbicurve(const OrbicurveData& d) {
    mpq_class chi = d.euler_characteristic();
    if (chi < 0) return GeomClass::Hyperbolic;
    if (chi == 0) return GeomClass::Elliptic;
    return d.punctures == 0 ? GeomClass::Spherical : GeomClass::Elliptic;
}

long long hurwitz_index_bound(long long genus, long long punctures) {
    if (genus < 0 || punctures < 0) throw DegenerateInput("negative genus or puncture count");
    if (genus == 0 && punctures == 0) throw DegenerateInput("no bound for the unpunctured genus-zero cover");
    long long positive_genus = 2 * genus - 1;
    long long ramified = std::max<long long>(6, 42 * (3 * punctures + 2 * genus - 2));
    long long unramified = std::max<long long>(2, 6 * (4 * punctures + 2 * genus - 2));
    return std::max(positive_genus, std::max(ramified, unramified));
}

long long orbifold_point_cap(long long genus, long long punctures) {
    return 2 * (2 * genus - 2 + punctures) + 4;
}

namespace {

void extend_indices(long long g, long long b, long long max_index, long long remaining,
                    long long next_max, std::vector<long long>& acc,
                    std::vector<OrbicurveData>& out) {
    OrbicurveData d(g, b, acc);
    if (classify_orbicurve(d) == GeomClass::Hyperbolic) out.push_back(std::move(d));
    if (remaining == 0) return;
    for (long long n = std::min(max_index, next_max); n >= 2; --n) {
        acc.push_back(n);
        extend_indices(g, b, max_index, remaining - 1, n, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<OrbicurveData> enumerate_candidate_types(long long genus, long long punctures,
                                                     long long max_index, long long max_points) {
    if (max_index < 0) max_index = hurwitz_index_bound(genus, punctures);
    if (max_points < 0) max_points = std::max<long long>(0, orbifold_point_cap(genus, punctures));
    std::vector<OrbicurveData> out;
    for (long long g = 0; g <= genus; ++g) {
        for (long long b = 0; b <= punctures; ++b) {
            std::vector<long long> acc;
            extend_indices(g, b, max_index, max_points, max_index, acc, out);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sl2k
