#include "sl2k/hodgesign.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "sl2k/sl2kit.hpp"

namespace sl2k {

std::shared_ptr<const CMField> CMField::create(FieldPtr base, NFElem delta) {
    if (!base) throw DomainMismatch("missing base field");
    if (delta.field() != base && !delta.field()->same(*base)) throw DomainMismatch("delta lives in a different field");
    const QPoly& f = base->minpoly();
    std::vector<RealRootInterval> roots = isolate_real_roots(f);
    if (static_cast<long>(roots.size()) != base->degree())
        throw DegenerateInput("base field is not totally real");
    if (delta.is_zero()) throw DegenerateInput("delta must be nonzero");
    for (RealRootInterval r : roots) {
        if (certified_sign_at_root(delta.poly(), f, r) >= 0)
            throw DegenerateInput("delta is not totally negative");
    }
    return std::shared_ptr<const CMField>(new CMField(std::move(base), std::move(delta), std::move(roots)));
}

CMElem::CMElem(CMPtr L, NFElem re, NFElem im) : L_(std::move(L)), re_(std::move(re)), im_(std::move(im)) {
    if (!L_) throw DomainMismatch("missing CM field");
}

CMElem CMElem::from_real(const CMPtr& L, const NFElem& re) {
    return CMElem(L, re, NFElem::from_rational(L->base(), 0));
}

CMElem CMElem::from_rational(const CMPtr& L, const mpq_class& q) {
    if (!L) throw DomainMismatch("missing CM field");
    return from_real(L, NFElem::from_rational(L->base(), q));
}

CMElem CMElem::sqrt_delta(const CMPtr& L) {
    if (!L) throw DomainMismatch("missing CM field");
    return CMElem(L, NFElem::from_rational(L->base(), 0), NFElem::from_rational(L->base(), 1));
}

void CMElem::match(const CMElem& o) const {
    if (!L_ || !o.L_) throw DomainMismatch("uninitialized CM element");
    if (L_ != o.L_ && !(L_->base()->same(*o.L_->base()) && L_->delta() == o.L_->delta()))
        throw DomainMismatch("CM elements from different fields");
}

CMElem CMElem::conj() const { return CMElem(L_, re_, -im_); }

NFElem CMElem::norm() const { return re_ * re_ - im_ * im_ * L_->delta(); }

CMElem CMElem::operator+(const CMElem& o) const {
    match(o);
    return CMElem(L_, re_ + o.re_, im_ + o.im_);
}

CMElem CMElem::operator-(const CMElem& o) const {
    match(o);
    return CMElem(L_, re_ - o.re_, im_ - o.im_);
}

CMElem CMElem::operator*(const CMElem& o) const {
    match(o);
    return CMElem(L_, re_ * o.re_ + im_ * o.im_ * L_->delta(), re_ * o.im_ + im_ * o.re_);
}

CMElem CMElem::operator/(const CMElem& o) const { return *this * o.inverse(); }

CMElem CMElem::operator-() const { return CMElem(L_, -re_, -im_); }

CMElem CMElem::inverse() const {
    NFElem n = norm();
    if (n.is_zero()) throw ZeroDivision("CM element is not invertible");
    return CMElem(L_, re_ / n, -(im_ / n));
}

bool CMElem::operator==(const CMElem& o) const {
    match(o);
    return re_ == o.re_ && im_ == o.im_;
}

std::string CMElem::str() const {
    if (!L_) return "0";
    if (im_.is_zero()) return re_.str("x");
    std::string s = "(" + re_.str("x") + ") + (" + im_.str("x") + ")*w";
    return s;
}

bool certified_infinite_order_trace(const CMElem& tr) {
    // torsion eigenvalues are roots of unity, whose trace is totally real
    if (!tr.im().is_zero()) return true;
    return !quasi_unipotent_trace_order(tr.re()).has_value();
}

Mat2<CMElem> SesquiForm::matrix() const {
    CMElem w = CMElem::sqrt_delta(L);
    auto real = [&](const NFElem& v) { return CMElem::from_real(L, v); };
    return Mat2<CMElem>{real(a) * w, real(c) + real(d) * w, -real(c) + real(d) * w, real(b) * w};
}

SesquiForm SesquiForm::from_matrix(const CMPtr& L, const Mat2<CMElem>& H) {
    if (!H.a.re().is_zero() || !H.d.re().is_zero())
        throw DomainMismatch("diagonal entries must be purely imaginary");
    SesquiForm out{L, H.a.im(), H.d.im(), H.b.re(), H.b.im()};
    if (H.c.re() != -out.c || H.c.im() != out.d)
        throw DomainMismatch("matrix is not antihermitian");
    return out;
}

SesquiForm SesquiForm::scaled(const NFElem& lambda) const {
    return SesquiForm{L, a * lambda, b * lambda, c * lambda, d * lambda};
}

bool SesquiForm::is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }

std::string SesquiForm::str() const {
    return "[a=" + a.str("x") + ", b=" + b.str("x") + ", c=" + c.str("x") + ", d=" + d.str("x") + "]";
}

namespace {

// Gaussian elimination kernel basis for an m x 4 matrix over the field F
std::vector<std::array<NFElem, 4>> kernel4(const FieldPtr& F, std::vector<std::array<NFElem, 4>> rows) {
    NFElem zero = NFElem::from_rational(F, 0);
    NFElem one = NFElem::from_rational(F, 1);
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int col = 0; col < 4 && rank < rows.size(); ++col) {
        std::size_t pr = rank;
        while (pr < rows.size() && rows[pr][col].is_zero()) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[rank], rows[pr]);
        NFElem inv = rows[rank][col].inverse();
        for (int j = 0; j < 4; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            NFElem factor = rows[r][col];
            for (int j = 0; j < 4; ++j) rows[r][j] = rows[r][j] - factor * rows[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<std::array<NFElem, 4>> basis;
    for (int col = 0; col < 4; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        std::array<NFElem, 4> v{zero, zero, zero, zero};
        v[col] = one;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat2<CMElem> transpose(const Mat2<CMElem>& g) { return Mat2<CMElem>{g.a, g.c, g.b, g.d}; }

Mat2<CMElem> iota(const Mat2<CMElem>& g) {
    return Mat2<CMElem>{g.a.conj(), g.b.conj(), g.c.conj(), g.d.conj()};
}

}  // namespace

std::vector<SesquiForm> invariant_form_space(const CMPtr& L, const std::vector<Mat2<CMElem>>& gens,
                                             bool irreducible_certified) {
    const FieldPtr& F = L->base();
    NFElem zero = NFElem::from_rational(F, 0);
    NFElem one = NFElem::from_rational(F, 1);

    std::vector<std::array<NFElem, 4>> rows;
    for (const auto& g : gens) {
        // columns of (T_g - I) where T_g is the pullback action on form parameters
        std::array<std::array<NFElem, 4>, 4> tcol;
        for (int k = 0; k < 4; ++k) {
            SesquiForm e{L, zero, zero, zero, zero};
            (k == 0 ? e.a : k == 1 ? e.b : k == 2 ? e.c : e.d) = one;
            Mat2<CMElem> X = transpose(g) * e.matrix() * iota(g);
            SesquiForm img = SesquiForm::from_matrix(L, X);
            tcol[k] = {img.a, img.b, img.c, img.d};
            tcol[k][k] = tcol[k][k] - one;
        }
        // transpose the column map into constraint rows
        for (int r = 0; r < 4; ++r) rows.push_back({tcol[0][r], tcol[1][r], tcol[2][r], tcol[3][r]});
    }

    std::vector<SesquiForm> out;
    if (rows.empty()) {
        // no generators: the whole parameter space
        for (int k = 0; k < 4; ++k) {
            SesquiForm e{L, zero, zero, zero, zero};
            (k == 0 ? e.a : k == 1 ? e.b : k == 2 ? e.c : e.d) = one;
            out.push_back(e);
        }
        return out;
    }
    for (auto& v : kernel4(F, std::move(rows))) out.push_back(SesquiForm{L, v[0], v[1], v[2], v[3]});
    if (irreducible_certified && out.size() > 1)
        throw Error("invariant form space has dimension > 1 on an irreducible representation");
    return out;
}

std::string form_sign_str(FormSign s) {
    switch (s) {
        case FormSign::Positive: return "positive";
        case FormSign::Mixed: return "mixed";
        case FormSign::Negative: return "negative";
    }
    return "?";
}

std::vector<EmbeddingSignRow> embedding_signs(const SesquiForm& H) {
    const CMPtr& L = H.L;
    const FieldPtr& F = L->base();
    const QPoly& f = F->minpoly();
    NFElem D = -(H.a * H.b * L->delta()) - H.c * H.c + H.d * H.d * L->delta();
    NFElem tr_factor = H.a + H.b;
    if (D.is_zero()) throw NumericallySingular("form is singular at every embedding");

    std::vector<EmbeddingSignRow> rows;
    for (std::size_t j = 0; j < L->real_roots().size(); ++j) {
        RealRootInterval root = L->real_roots()[j];
        int sD = certified_sign_at_root(D.poly(), f, root);
        if (sD == 0) throw NumericallySingular("degenerate embedding");
        int sAB = 0;
        if (sD > 0) {
            if (tr_factor.is_zero()) throw Error("definite form with zero trace factor");
            sAB = certified_sign_at_root(tr_factor.poly(), f, root);
        }
        double approx = mpq_class(mpq_class(root.lo + root.hi) / 2).get_d();
        for (int s : {1, -1}) {
            EmbeddingSignRow row;
            row.root_index = j;
            row.sqrt_choice = s;
            row.root_approx = approx;
            if (sD < 0) {
                row.sign = FormSign::Mixed;
            } else {
                row.sign = (-s * sAB) > 0 ? FormSign::Positive : FormSign::Negative;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::size_t polydisk_dimension(const SesquiForm& H) {
    std::size_t mixed = 0;
    for (const auto& row : embedding_signs(H))
        if (row.sign == FormSign::Mixed) ++mixed;
    return mixed / 2;
}

NFElem sign_fixing_lambda(const FieldPtr& F, const std::vector<int>& targets, long long max_height) {
    const QPoly& f = F->minpoly();
    std::vector<RealRootInterval> roots = isolate_real_roots(f);
    if (static_cast<long>(roots.size()) != F->degree()) throw DomainMismatch("field is not totally real");
    if (targets.size() != roots.size()) throw DomainMismatch("one target sign per real embedding required");
    for (int t : targets)
        if (t != 1 && t != -1) throw DomainMismatch("target signs must be +-1");

    long d = F->degree();
    long long budget = 2'000'000;
    std::vector<long long> c(static_cast<std::size_t>(d), 0);
    for (long long h = 1; h <= max_height; ++h) {
        // all coordinate vectors with max |c_i| = h, lexicographic
        std::function<bool(std::size_t, bool)> walk = [&](std::size_t i, bool saturated) -> bool {
            if (i == c.size()) {
                if (!saturated) return false;
                if (--budget < 0) throw SearchBudgetExceeded("sign search budget exhausted");
                std::vector<mpq_class> coords;
                coords.reserve(c.size());
                for (long long v : c) coords.emplace_back(static_cast<long>(v));
                NFElem lambda(F, coords);
                for (std::size_t j = 0; j < roots.size(); ++j) {
                    RealRootInterval r = roots[j];
                    if (certified_sign_at_root(lambda.poly(), f, r) != targets[j]) return false;
                }
                return true;
            }
            for (long long v = -h; v <= h; ++v) {
                c[i] = v;
                if (walk(i + 1, saturated || v == h || v == -h)) return true;
            }
            return false;
        };
        if (walk(0, false)) {
            std::vector<mpq_class> coords;
            for (long long v : c) coords.emplace_back(static_cast<long>(v));
            return NFElem(F, coords);
        }
    }
    throw SearchBudgetExceeded("no sign-fixing element within the height budget");
}

}  // namespace sl2k
