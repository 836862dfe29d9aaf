#include <algorithm>

#include "doctest.h"
#include "sl2k/hodgesign.hpp"
#include "sl2k/sl2kit.hpp"

using namespace sl2k;

namespace {

// Gaussian numbers Q(i) presented as the CM extension of Q by delta = -1
CMPtr gaussian() {
    FieldPtr Q = NumberField::rationals();
    return CMField::create(Q, NFElem::from_rational(Q, -1));
}

// real quadratic base Q(sqrt 2), delta = -1
CMPtr cm_over_sqrt2() {
    FieldPtr F = NumberField::create(QPoly::from_integers({-2, 0, 1}));
    return CMField::create(F, NFElem::from_rational(F, -1));
}

CMElem ci(const CMPtr& L, const mpq_class& re, const mpq_class& im) {
    return CMElem(L, NFElem::from_rational(L->base(), re), NFElem::from_rational(L->base(), im));
}

Mat2<CMElem> cmat(const CMPtr& L, const CMElem& a, const CMElem& b, const CMElem& c, const CMElem& d) {
    return Mat2<CMElem>{a, b, c, d};
}

std::vector<FormSign> signs_of(const std::vector<EmbeddingSignRow>& rows) {
    std::vector<FormSign> s;
    for (const auto& r : rows) s.push_back(r.sign);
    return s;
}

}  // namespace

TEST_CASE("CM field construction certifies the defining properties") {
    CMPtr Qi = gaussian();
    CHECK(Qi->embedding_pairs() == 1);

    CMPtr L2 = cm_over_sqrt2();
    CHECK(L2->embedding_pairs() == 2);
    // roots are ascending: -sqrt(2) then sqrt(2)
    QPoly xpoly = QPoly::from_integers({0, 1});
    RealRootInterval r0 = L2->real_roots()[0], r1 = L2->real_roots()[1];
    CHECK(certified_sign_at_root(xpoly, L2->base()->minpoly(), r0) == -1);
    CHECK(certified_sign_at_root(xpoly, L2->base()->minpoly(), r1) == 1);

    // delta = x - 3 is totally negative over Q(sqrt 2) since |x| <= sqrt(2)
    FieldPtr F = NumberField::create(QPoly::from_integers({-2, 0, 1}));
    NFElem x = NFElem::generator(F);
    CMPtr L3 = CMField::create(F, x - NFElem::from_rational(F, 3));
    CHECK(L3->embedding_pairs() == 2);

    // delta = x - 1 is negative at -sqrt(2) but positive at sqrt(2): rejected
    CHECK_THROWS_AS(CMField::create(F, x - NFElem::from_rational(F, 1)), DegenerateInput);
    // delta = 0 and delta = +1 are rejected
    CHECK_THROWS_AS(CMField::create(F, NFElem::from_rational(F, 0)), DegenerateInput);
    FieldPtr Q = NumberField::rationals();
    CHECK_THROWS_AS(CMField::create(Q, NFElem::from_rational(Q, 1)), DegenerateInput);
    // a base that is not totally real is rejected
    FieldPtr Qi_base = NumberField::create(QPoly::from_integers({1, 0, 1}));
    CHECK_THROWS_AS(CMField::create(Qi_base, NFElem::from_rational(Qi_base, -1)), DegenerateInput);
}

TEST_CASE("CM arithmetic") {
    CMPtr L = gaussian();
    CMElem i = CMElem::sqrt_delta(L);
    CMElem one = CMElem::from_rational(L, 1);

    CHECK(i * i == -one);
    CHECK(i.conj() == -i);
    CHECK((i + i.conj()).is_zero());
    CHECK(i.norm() == NFElem::from_rational(L->base(), 1));
    CHECK(i.inverse() == -i);
    CHECK((one + i) * (one - i) == ci(L, 2, 0));
    CHECK((one / (one + i)) == ci(L, mpq_class(1, 2), mpq_class(-1, 2)));
    CHECK_THROWS_AS(ci(L, 0, 0).inverse(), ZeroDivision);

    // (3 + 4i)/5 is a unit on the circle: norm 1, infinite multiplicative order
    CMElem u = ci(L, mpq_class(3, 5), mpq_class(4, 5));
    CHECK(u.norm() == NFElem::from_rational(L->base(), 1));
    CHECK(u * u.conj() == one);

    // traces: 2 cos of a torsion rotation is real; anything with im != 0 is not
    CHECK(certified_infinite_order_trace(ci(L, 0, 1) + ci(L, 0, 1).conj()) == false);
    CHECK(certified_infinite_order_trace(ci(L, mpq_class(6, 5), mpq_class(8, 5))));
    CHECK(certified_infinite_order_trace(ci(L, 3, 0)));
    CHECK_FALSE(certified_infinite_order_trace(ci(L, 1, 0)));
}

TEST_CASE("sesquilinear form parametrization round-trips") {
    CMPtr L = cm_over_sqrt2();
    FieldPtr F = L->base();
    NFElem x = NFElem::generator(F);

    SesquiForm H{L, NFElem::from_rational(F, 1), x, NFElem::from_rational(F, -2), x + NFElem::from_rational(F, 1)};
    Mat2<CMElem> M = H.matrix();

    // conjugate-transpose equals minus the matrix
    Mat2<CMElem> ct{M.a.conj(), M.c.conj(), M.b.conj(), M.d.conj()};
    CHECK(ct == -M);

    SesquiForm back = SesquiForm::from_matrix(L, M);
    CHECK(back.a == H.a);
    CHECK(back.b == H.b);
    CHECK(back.c == H.c);
    CHECK(back.d == H.d);

    SesquiForm S = H.scaled(x);
    CHECK(S.a == x * H.a);
    CHECK(S.matrix() == Mat2<CMElem>{CMElem::from_real(L, x) * M.a, CMElem::from_real(L, x) * M.b,
                                     CMElem::from_real(L, x) * M.c, CMElem::from_real(L, x) * M.d});

    // a matrix that is not antihermitian is rejected
    Mat2<CMElem> bad = M;
    bad.a = CMElem::from_rational(L, 1);
    CHECK_THROWS_AS(SesquiForm::from_matrix(L, bad), DomainMismatch);
}

TEST_CASE("invariant form spaces") {
    CMPtr L = gaussian();
    CMElem one = CMElem::from_rational(L, 1), zero = CMElem::from_rational(L, 0);
    CMElem i = CMElem::sqrt_delta(L);

    // no constraints: the full 4-dimensional space over F
    CHECK(invariant_form_space(L, {}).size() == 4);
    // the identity constrains nothing
    CHECK(invariant_form_space(L, {cmat(L, one, zero, zero, one)}).size() == 4);

    // a unitary pair cuts the space to one line
    CMElem u = ci(L, mpq_class(3, 5), mpq_class(4, 5));
    Mat2<CMElem> rot = cmat(L, u, zero, zero, u.conj());
    Mat2<CMElem> swap = cmat(L, zero, one, -one, zero);
    std::vector<SesquiForm> line = invariant_form_space(L, {rot, swap});
    REQUIRE(line.size() == 1);
    CHECK_FALSE(line[0].is_zero());
    // the preserved form for this pair is the standard antihermitian i * identity direction
    Mat2<CMElem> M = line[0].matrix();
    CHECK(M.b.is_zero());
    CHECK(M.c.is_zero());
    CHECK(M.a == M.d);

    // irreducible pair with no invariant form at all
    Mat2<CMElem> n1 = cmat(L, one, one, zero, one);
    Mat2<CMElem> n2 = cmat(L, one, zero, i, one);
    CHECK(invariant_form_space(L, {n1, n2}).empty());

    // irreducible_certified tolerates dimension <= 1
    CHECK(invariant_form_space(L, {rot, swap}, true).size() == 1);
    CHECK_THROWS_AS(invariant_form_space(L, {cmat(L, one, zero, zero, one)}, true), Error);
}

TEST_CASE("embedding signs over the rationals") {
    CMPtr L = gaussian();
    CMElem one = CMElem::from_rational(L, 1), zero = CMElem::from_rational(L, 0);
    CMElem i = CMElem::sqrt_delta(L);
    FieldPtr Q = L->base();

    // H = diag(i, i): definite, opposite signs at the two conjugate embeddings
    SesquiForm def = SesquiForm::from_matrix(L, cmat(L, i, zero, zero, i));
    auto rows = embedding_signs(def);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].sqrt_choice == 1);
    CHECK(rows[1].sqrt_choice == -1);
    CHECK(rows[0].root_index == 0);
    CHECK(signs_of(rows) == std::vector<FormSign>({FormSign::Negative, FormSign::Positive}));
    CHECK(polydisk_dimension(def) == 0);

    // H = diag(i, -i): indefinite at both
    SesquiForm mix = SesquiForm::from_matrix(L, cmat(L, i, zero, zero, -i));
    CHECK(signs_of(embedding_signs(mix)) == std::vector<FormSign>({FormSign::Mixed, FormSign::Mixed}));
    CHECK(polydisk_dimension(mix) == 1);

    // scaling by a negative rational flips definite signs
    SesquiForm neg = def.scaled(NFElem::from_rational(Q, -3));
    CHECK(signs_of(embedding_signs(neg)) == std::vector<FormSign>({FormSign::Positive, FormSign::Negative}));
    CHECK(polydisk_dimension(neg) == 0);

    // the zero form is singular
    SesquiForm zero_form{L, NFElem::from_rational(Q, 0), NFElem::from_rational(Q, 0),
                         NFElem::from_rational(Q, 0), NFElem::from_rational(Q, 0)};
    CHECK_THROWS_AS(embedding_signs(zero_form), NumericallySingular);
    // off-diagonal c only: det factor is -c^2 < 0, indefinite
    SesquiForm offc{L, NFElem::from_rational(Q, 0), NFElem::from_rational(Q, 0),
                    NFElem::from_rational(Q, 1), NFElem::from_rational(Q, 0)};
    CHECK(signs_of(embedding_signs(offc)) == std::vector<FormSign>({FormSign::Mixed, FormSign::Mixed}));
}

TEST_CASE("embedding signs across several real places") {
    CMPtr L = cm_over_sqrt2();
    FieldPtr F = L->base();
    NFElem x = NFElem::generator(F);

    // H with a = 1, b = x: det factor D = -ab delta = x; definite where
    // sigma(x) > 0, mixed where sigma(x) < 0
    SesquiForm H{L, NFElem::from_rational(F, 1), x, NFElem::from_rational(F, 0), NFElem::from_rational(F, 0)};
    auto rows = embedding_signs(H);
    REQUIRE(rows.size() == 4);
    // rows: (root 0, +), (root 0, -), (root 1, +), (root 1, -)
    CHECK(rows[0].root_index == 0);
    CHECK(rows[2].root_index == 1);
    CHECK(rows[0].root_approx < 0);
    CHECK(rows[2].root_approx > 0);
    CHECK(signs_of(rows) == std::vector<FormSign>({FormSign::Mixed, FormSign::Mixed,
                                                   FormSign::Negative, FormSign::Positive}));
    CHECK(polydisk_dimension(H) == 1);

    // conjugate embeddings always carry either {Mixed, Mixed} or {Neg, Pos} pairs
    SesquiForm G{L, x + NFElem::from_rational(F, 2), NFElem::from_rational(F, 1),
                 NFElem::from_rational(F, 1), x};
    auto grows = embedding_signs(G);
    REQUIRE(grows.size() == 4);
    for (std::size_t k = 0; k < grows.size(); k += 2) {
        bool both_mixed = grows[k].sign == FormSign::Mixed && grows[k + 1].sign == FormSign::Mixed;
        bool flipped = (grows[k].sign == FormSign::Negative && grows[k + 1].sign == FormSign::Positive) ||
                       (grows[k].sign == FormSign::Positive && grows[k + 1].sign == FormSign::Negative);
        CHECK((both_mixed || flipped));
    }
}

TEST_CASE("sign fixing elements") {
    FieldPtr Q = NumberField::rationals();
    CHECK(sign_fixing_lambda(Q, {1}) == NFElem::from_rational(Q, 1));
    CHECK(sign_fixing_lambda(Q, {-1}) == NFElem::from_rational(Q, -1));

    FieldPtr F = NumberField::create(QPoly::from_integers({-2, 0, 1}));
    // all four sign patterns at the two real places of Q(sqrt 2)
    for (int s0 : {1, -1})
        for (int s1 : {1, -1}) {
            NFElem lam = sign_fixing_lambda(F, {s0, s1}, 3);
            std::vector<RealRootInterval> roots = isolate_real_roots(F->minpoly());
            REQUIRE(roots.size() == 2);
            CHECK(certified_sign_at_root(lam.poly(), F->minpoly(), roots[0]) == s0);
            CHECK(certified_sign_at_root(lam.poly(), F->minpoly(), roots[1]) == s1);
        }

    CHECK_THROWS_AS(sign_fixing_lambda(F, {1}), DomainMismatch);  // wrong target count

    // scaling a definite form by a sign-fixing lambda flips exactly the targeted places
    CMPtr L = cm_over_sqrt2();
    NFElem x = NFElem::generator(F);
    SesquiForm H{L, NFElem::from_rational(F, 1), NFElem::from_rational(F, 2),
                 NFElem::from_rational(F, 0), NFElem::from_rational(F, 0)};
    auto base_rows = embedding_signs(H);
    REQUIRE(signs_of(base_rows) == std::vector<FormSign>({FormSign::Negative, FormSign::Positive,
                                                          FormSign::Negative, FormSign::Positive}));
    NFElem lam = sign_fixing_lambda(F, {-1, 1}, 8);
    auto flipped = embedding_signs(H.scaled(lam));
    CHECK(signs_of(flipped) == std::vector<FormSign>({FormSign::Positive, FormSign::Negative,
                                                      FormSign::Negative, FormSign::Positive}));
}

TEST_CASE("unitary representation end to end") {
    CMPtr L = gaussian();
    CMElem one = CMElem::from_rational(L, 1), zero = CMElem::from_rational(L, 0);
    CMElem u = ci(L, mpq_class(3, 5), mpq_class(4, 5));
    Mat2<CMElem> rot = cmat(L, u, zero, zero, u.conj());
    Mat2<CMElem> swap = cmat(L, zero, one, -one, zero);

    std::vector<SesquiForm> space = invariant_form_space(L, {rot, swap}, true);
    REQUIRE(space.size() == 1);
    auto rows = embedding_signs(space[0]);
    REQUIRE(rows.size() == 2);
    // an invariant form of a group with an element of infinite order must be
    // definite at the archimedean place: the image lies in a compact unitary group
    CHECK(rows[0].sign != FormSign::Mixed);
    CHECK(polydisk_dimension(space[0]) == 0);
    CHECK(certified_infinite_order_trace(rot.trace()));
}
