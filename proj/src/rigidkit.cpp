#include "sl2k/rigidkit.hpp"

#include <numeric>

namespace sl2k {

ClassSpec ClassSpec::unipotent(int sign) {
    if (sign != 1 && sign != -1) throw DegenerateInput("unipotent sign must be +-1");
    return ClassSpec{sign > 0 ? ConjKind::UnipotentPlus : ConjKind::UnipotentMinus, 0, 0};
}

ClassSpec ClassSpec::eigenvalue(long m, long k) {
    if (m < 1) throw DegenerateInput("eigenvalue order must be positive");
    ClassSpec c{ConjKind::Semisimple, m, k};
    if (c.reduced_order() < 3) throw DegenerateInput("eigenvalue +-1 is not a semisimple class");
    return c;
}

long ClassSpec::reduced_order() const {
    if (kind != ConjKind::Semisimple) throw DegenerateInput("not a semisimple class");
    if (m < 1) throw DegenerateInput("eigenvalue order must be positive");
    long kk = ((k % m) + m) % m;
    return m / std::gcd(m, kk == 0 ? m : kk);
}

std::string ClassSpec::str() const {
    switch (kind) {
        case ConjKind::UnipotentPlus: return "u+";
        case ConjKind::UnipotentMinus: return "u-";
        case ConjKind::Semisimple:
            return "e(" + std::to_string(m) + "," + std::to_string(k) + ")";
        default: return conj_kind_str(kind);
    }
}

int class_dimension(ConjKind kind) {
    return (kind == ConjKind::Identity || kind == ConjKind::MinusIdentity) ? 0 : 2;
}

long long virtual_dimension(const std::vector<ConjKind>& kinds) {
    long long sum = 0;
    for (ConjKind k : kinds) sum += class_dimension(k);
    return sum - 6;
}

namespace {

NFElem nf(const FieldPtr& K, long v) { return NFElem::from_rational(K, mpq_class(v)); }

Mat2<NFElem> nf_mat(const FieldPtr& K, long a, long b, long c, long d) {
    return Mat2<NFElem>{nf(K, a), nf(K, b), nf(K, c), nf(K, d)};
}

Mat2<NFElem> twisted(int s, const Mat2<NFElem>& m) { return s < 0 ? -m : m; }

HypergeometricTuple obstructed_tuple(std::string reason) {
    HypergeometricTuple t;
    t.obstructed = true;
    t.obstruction = std::move(reason);
    return t;
}

int unipotent_sign(const ClassSpec& c) { return c.kind == ConjKind::UnipotentPlus ? 1 : -1; }

// zeta_m^k inside Q(zeta_N) for m | N, as a power of the field generator
NFElem root_of_unity(const FieldPtr& K, long N, long m, long k) {
    long kk = ((k % m) + m) % m;
    return NFElem::generator(K).pow((N / m) * kk);
}

}  // namespace

HypergeometricTuple hypergeometric_build(const std::vector<ClassSpec>& classes) {
    if (classes.size() != 3) throw DegenerateInput("exactly three classes required");
    std::vector<std::size_t> uni, semi;
    for (std::size_t i = 0; i < 3; ++i) {
        switch (classes[i].kind) {
            case ConjKind::UnipotentPlus:
            case ConjKind::UnipotentMinus: uni.push_back(i); break;
            case ConjKind::Semisimple: semi.push_back(i); break;
            default: throw DegenerateInput("central classes admit no irreducible tuple");
        }
    }

    HypergeometricTuple out;
    out.sign_twists = {1, 1, 1};

    if (uni.size() == 3) {
        int target[3], minus = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            target[i] = unipotent_sign(classes[i]);
            if (target[i] < 0) ++minus;
        }
        if (minus % 2 == 0)
            return obstructed_tuple("unipotent sign parity: one or three classes must have eigenvalue -1");
        FieldPtr K = NumberField::rationals();
        Mat2<NFElem> M1 = nf_mat(K, 1, 1, 0, 1);
        Mat2<NFElem> M2 = nf_mat(K, 1, 0, -4, 1);
        Mat2<NFElem> M3 = (M1 * M2).adjugate();
        const int base[3] = {1, 1, -1};
        out.field = K;
        for (std::size_t i = 0; i < 3; ++i) out.sign_twists[i] = base[i] * target[i];
        out.mats = {twisted(out.sign_twists[0], M1), twisted(out.sign_twists[1], M2),
                    twisted(out.sign_twists[2], M3)};
        return out;
    }

    if (uni.size() == 2) {
        std::size_t s = semi[0];
        NFElem tau = cyclotomic_trace(classes[s].m, classes[s].k);
        if (classes[s].reduced_order() < 3) throw DegenerateInput("eigenvalue +-1 is not a semisimple class");
        FieldPtr K = tau.field();
        // base arrangement (u_{s1}, u_{s2}, e(tau)); rotations move the torus slot
        int s1 = 0, s2 = 0;
        if (s == 2) { s1 = unipotent_sign(classes[0]); s2 = unipotent_sign(classes[1]); }
        if (s == 0) { s1 = unipotent_sign(classes[1]); s2 = unipotent_sign(classes[2]); }
        if (s == 1) { s1 = unipotent_sign(classes[2]); s2 = unipotent_sign(classes[0]); }
        NFElem b = tau * nf(K, s1 * s2) - nf(K, 2);
        Mat2<NFElem> M1 = twisted(s1, nf_mat(K, 1, 1, 0, 1));
        Mat2<NFElem> M2 = twisted(s2, Mat2<NFElem>{nf(K, 1), nf(K, 0), b, nf(K, 1)});
        Mat2<NFElem> M3 = (M1 * M2).adjugate();
        out.field = K;
        if (s == 2) out.mats = {M1, M2, M3};
        if (s == 0) out.mats = {M3, M1, M2};
        if (s == 1) out.mats = {M2, M3, M1};
        return out;
    }

    if (uni.size() == 1) {
        std::size_t u = uni[0];
        int s = unipotent_sign(classes[u]);
        // base arrangement (e(alpha), e(beta), u_s)
        const ClassSpec* ca = nullptr;
        const ClassSpec* cb = nullptr;
        if (u == 2) { ca = &classes[0]; cb = &classes[1]; }
        if (u == 0) { ca = &classes[1]; cb = &classes[2]; }
        if (u == 1) { ca = &classes[2]; cb = &classes[0]; }
        long na = ca->reduced_order(), nb = cb->reduced_order();
        long N = std::lcm(na, nb);
        FieldPtr K = NumberField::cyclotomic(N);
        NFElem alpha = root_of_unity(K, N, ca->m, ca->k);
        NFElem beta = root_of_unity(K, N, cb->m, cb->k);
        NFElem ab = alpha * beta;
        // tr[M1,M2] = 2 + (tr M1 - s tr M2)^2: the classes admit only reducible
        // tuples exactly when alpha beta = s or alpha beta^{-1} = s
        if (ab == nf(K, s))
            return obstructed_tuple("eigenvalue product equals the unipotent sign: only reducible tuples exist");
        if (alpha * beta.inverse() == nf(K, s))
            return obstructed_tuple("eigenvalue ratio equals the unipotent sign: only reducible tuples exist");
        NFElem x = nf(K, 2 * s) - ab - ab.inverse();
        Mat2<NFElem> M1{alpha, nf(K, 1), nf(K, 0), alpha.inverse()};
        Mat2<NFElem> M2{beta, nf(K, 0), x, beta.inverse()};
        Mat2<NFElem> M3 = (M1 * M2).adjugate();
        out.field = K;
        if (u == 2) out.mats = {M1, M2, M3};
        if (u == 0) out.mats = {M3, M1, M2};
        if (u == 1) out.mats = {M2, M3, M1};
        return out;
    }

    return obstructed_tuple("three semisimple classes are outside the explicit construction list");
}

bool verify_rigid_tuple(const std::vector<Mat2<NFElem>>& mats, const std::vector<ClassSpec>& classes) {
    if (mats.size() != 3 || classes.size() != 3) return false;
    NFElem one = one_like(mats[0].a), zero = zero_like(mats[0].a);
    Mat2<NFElem> id = mat2_identity(one, zero);
    for (const auto& m : mats)
        if (m.det() != one) return false;
    if (mats[0] * mats[1] * mats[2] != id) return false;

    std::vector<ConjKind> kinds;
    for (std::size_t i = 0; i < 3; ++i) {
        ConjKind k = conjugacy_class_kind(mats[i]);
        kinds.push_back(classes[i].kind);
        if (k != classes[i].kind) return false;
        if (k == ConjKind::Semisimple) {
            if (classes[i].m < 1) return false;
            if (minimal_polynomial(mats[i].trace()) != cyclotomic_trace_poly(classes[i].reduced_order()))
                return false;
        }
    }
    if (virtual_dimension(kinds) != 0) return false;

    // any two of the matrices generate the group: the third is the inverse of
    // their product, so a witness from any pair certifies density
    for (std::size_t i = 0; i < 3; ++i) {
        RepPresentation<NFElem> rep;
        rep.add_generator('a', mats[i]);
        rep.add_generator('b', mats[(i + 1) % 3]);
        if (zariski_density_check(rep, 4).has_value()) return true;
    }
    return false;
}

}  // namespace sl2k
