#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sl2k/matrix2.hpp"
#include "sl2k/numberfield.hpp"

namespace sl2k {

// CM field L = F(sqrt(delta)) presented over a totally real base F with a
// totally negative delta; construction certifies both properties through
// exact real-root isolation.  Conjugation iota negates sqrt(delta).
class CMField {
public:
    static std::shared_ptr<const CMField> create(FieldPtr base, NFElem delta);

    const FieldPtr& base() const { return F_; }
    const NFElem& delta() const { return delta_; }
    // isolating intervals for the real embeddings of F, ascending
    const std::vector<RealRootInterval>& real_roots() const { return roots_; }
    long embedding_pairs() const { return static_cast<long>(roots_.size()); }

private:
    CMField(FieldPtr F, NFElem delta, std::vector<RealRootInterval> roots)
        : F_(std::move(F)), delta_(std::move(delta)), roots_(std::move(roots)) {}
    FieldPtr F_;
    NFElem delta_;
    std::vector<RealRootInterval> roots_;
};

using CMPtr = std::shared_ptr<const CMField>;

// Element re + im * sqrt(delta) of a CM field.
class CMElem {
public:
    CMElem() = default;
    CMElem(CMPtr L, NFElem re, NFElem im);
    static CMElem from_real(const CMPtr& L, const NFElem& re);
    static CMElem from_rational(const CMPtr& L, const mpq_class& q);
    static CMElem sqrt_delta(const CMPtr& L);

    const CMPtr& cm() const { return L_; }
    const NFElem& re() const { return re_; }
    const NFElem& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    CMElem conj() const;  // iota
    NFElem norm() const;  // re^2 - im^2 delta, an element of F

    CMElem operator+(const CMElem& o) const;
    CMElem operator-(const CMElem& o) const;
    CMElem operator*(const CMElem& o) const;
    CMElem operator/(const CMElem& o) const;
    CMElem operator-() const;
    CMElem inverse() const;

    bool operator==(const CMElem& o) const;
    bool operator!=(const CMElem& o) const { return !(*this == o); }

    std::string str() const;  // in terms of x (generator of F) and w = sqrt(delta)

private:
    CMPtr L_;
    NFElem re_, im_;
    void match(const CMElem& o) const;
};

// domain glue so Mat2<CMElem> and RepPresentation<CMElem> work
inline CMElem one_like(const CMElem& x) { return CMElem::from_rational(x.cm(), 1); }
inline CMElem zero_like(const CMElem& x) { return CMElem::from_rational(x.cm(), 0); }
inline bool certified_nonzero(const CMElem& x) { return !x.is_zero(); }
inline bool certified_equals_one(const CMElem& x) { return x == one_like(x); }
bool certified_infinite_order_trace(const CMElem& tr);

// Antihermitian form H = [[a w, c + d w], [-c + d w, b w]] with w = sqrt(delta)
// and a, b, c, d in F; this parametrization is exactly the condition
// conjugate-transpose(H) = -H.
struct SesquiForm {
    CMPtr L;
    NFElem a, b, c, d;

    Mat2<CMElem> matrix() const;
    static SesquiForm from_matrix(const CMPtr& L, const Mat2<CMElem>& H);  // DomainMismatch if not antihermitian
    SesquiForm scaled(const NFElem& lambda) const;  // lambda in F
    bool is_zero() const;
    std::string str() const;
};

// Basis of the F-space of forms with g^T H iota(g) = H for every generator.
// With irreducible_certified the dimension is checked to be at most 1.
std::vector<SesquiForm> invariant_form_space(const CMPtr& L, const std::vector<Mat2<CMElem>>& gens,
                                             bool irreducible_certified = false);

enum class FormSign { Positive, Mixed, Negative };

std::string form_sign_str(FormSign s);

// One complex embedding of L: the real root of the base field's minimal
// polynomial plus the branch choice sqrt(delta) -> sqrt_choice * i * sqrt(|delta|).
struct EmbeddingSignRow {
    std::size_t root_index = 0;  // into CMField::real_roots()
    int sqrt_choice = 1;         // +1 or -1
    FormSign sign = FormSign::Mixed;
    double root_approx = 0.0;    // midpoint of the isolating interval, for reports
};

// Definiteness of sqrt(-1) H^sigma per embedding, decided exactly through
// certified signs of det = sigma(-ab delta - c^2 + d^2 delta) and of the
// trace factor sigma(a + b).  Rows come in conjugate pairs: root ascending,
// sqrt_choice +1 then -1.  A singular embedding raises NumericallySingular.
std::vector<EmbeddingSignRow> embedding_signs(const SesquiForm& H);

// half the number of Mixed embeddings
std::size_t polydisk_dimension(const SesquiForm& H);

// Element of the totally real field F whose sign at the j-th real embedding
// (roots ascending) equals targets[j], found by bounded-height search over
// integer coordinate vectors in the power basis.  Raises SearchBudgetExceeded
// when no such element is found within the height budget.
NFElem sign_fixing_lambda(const FieldPtr& F, const std::vector<int>& targets, long long max_height = 32);

}  // namespace sl2k
