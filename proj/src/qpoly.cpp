#include "sl2k/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace sl2k {

QPoly QPoly::constant(const mpq_class& c) {
    QPoly r;
    if (c != 0) r.c_.push_back(c);
    return r;
}

QPoly QPoly::monomial(const mpq_class& c, std::size_t deg) {
    QPoly r;
    if (c != 0) {
        r.c_.assign(deg + 1, mpq_class(0));
        r.c_[deg] = c;
    }
    return r;
}

QPoly QPoly::from_integers(const std::vector<mpz_class>& coeffs) {
    std::vector<mpq_class> c;
    c.reserve(coeffs.size());
    for (const auto& z : coeffs) c.emplace_back(z);
    return QPoly(std::move(c));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& QPoly::leading() const {
    if (c_.empty()) throw ZeroDivision("leading coefficient of 0");
    return c_.back();
}

bool QPoly::has_integer_coeffs() const {
    for (const auto& c : c_) {
        if (!is_integer(c)) return false;
    }
    return true;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) - o.coeff(i);
    r.trim();
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly QPoly::scaled(const mpq_class& c) const {
    if (c == 0) return QPoly();
    QPoly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

void QPoly::divrem(const QPoly& den, QPoly& quot, QPoly& rem) const {
    if (den.c_.empty()) throw ZeroDivision("polynomial division by 0");
    quot = QPoly();
    rem = *this;
    mpq_class lead_inv = 1 / den.leading();
    if (rem.degree() >= den.degree()) quot.c_.assign(rem.c_.size() - den.c_.size() + 1, mpq_class(0));
    while (rem.degree() >= den.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - den.degree());
        mpq_class f = rem.leading() * lead_inv;
        quot.c_[shift] += f;
        for (std::size_t i = 0; i < den.c_.size(); ++i) rem.c_[i + shift] -= f * den.c_[i];
        rem.trim();
    }
    quot.trim();
}

QPoly QPoly::operator%(const QPoly& den) const {
    QPoly q, r;
    divrem(den, q, r);
    return r;
}

QPoly QPoly::operator/(const QPoly& den) const {
    QPoly q, r;
    divrem(den, q, r);
    return q;
}

QPoly QPoly::monic() const {
    if (c_.empty()) return *this;
    return scaled(1 / leading());
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        QPoly r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    return r0.monic();
}

QPoly QPoly::derivative() const {
    QPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
    return r;
}

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::string QPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        mpq_class a = c_[i];
        if (first) {
            if (sgn(a) < 0) out << "-";
        } else {
            out << (sgn(a) < 0 ? "-" : "+");
        }
        first = false;
        mpq_class mag = abs(a);
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

namespace {

std::vector<QPoly> sturm_chain(const QPoly& f) {
    std::vector<QPoly> chain;
    chain.push_back(f);
    QPoly d = f.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        QPoly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

mpq_class cauchy_bound(const QPoly& f) {
    mpq_class m(0);
    mpq_class lead = abs(f.leading());
    for (long i = 0; i < f.degree(); ++i) {
        mpq_class a = abs(f.coeff(static_cast<std::size_t>(i))) / lead;
        if (a > m) m = a;
    }
    return m + 1;
}

QPoly squarefree_part(const QPoly& f) {
    if (f.degree() <= 1) return f.monic();
    QPoly g = QPoly::gcd(f, f.derivative());
    if (g.degree() <= 0) return f.monic();
    return (f / g).monic();
}

}  // namespace

int count_real_roots(const QPoly& f) {
    if (f.degree() <= 0) return 0;
    QPoly s = squarefree_part(f);
    auto chain = sturm_chain(s);
    mpq_class bound = cauchy_bound(s);
    return sign_variations(chain, -bound) - sign_variations(chain, bound);
}

std::vector<RealRootInterval> isolate_real_roots(const QPoly& f) {
    std::vector<RealRootInterval> roots;
    if (f.degree() <= 0) return roots;
    QPoly s = squarefree_part(f);
    auto chain = sturm_chain(s);
    mpq_class bound = cauchy_bound(s);

    struct Seg { mpq_class lo, hi; int vlo, vhi; };
    std::vector<Seg> stack;
    stack.push_back({-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound)});
    while (!stack.empty()) {
        Seg seg = stack.back();
        stack.pop_back();
        int n = seg.vlo - seg.vhi;
        if (n <= 0) continue;
        mpq_class mid = (seg.lo + seg.hi) / 2;
        if (s.eval(mid) == 0) {
            roots.push_back({mid, mid});
            // split strictly around the exact root
            mpq_class quarter = (seg.hi - seg.lo) / 4;
            mpq_class l2 = mid - quarter, r2 = mid + quarter;
            stack.push_back({seg.lo, l2, seg.vlo, sign_variations(chain, l2)});
            stack.push_back({r2, seg.hi, sign_variations(chain, r2), seg.vhi});
            continue;
        }
        if (n == 1) {
            // single root: shrink a little for a tight initial enclosure
            RealRootInterval r{seg.lo, seg.hi};
            for (int i = 0; i < 8 && !r.exact(); ++i) refine_root(s, r);
            roots.push_back(r);
            continue;
        }
        int vmid = sign_variations(chain, mid);
        stack.push_back({seg.lo, mid, seg.vlo, vmid});
        stack.push_back({mid, seg.hi, vmid, seg.vhi});
    }
    std::sort(roots.begin(), roots.end(),
              [](const RealRootInterval& a, const RealRootInterval& b) { return a.lo < b.lo; });
    return roots;
}

void refine_root(const QPoly& f, RealRootInterval& root) {
    if (root.exact()) return;
    QPoly s = squarefree_part(f);
    mpq_class mid = (root.lo + root.hi) / 2;
    mpq_class fm = s.eval(mid);
    if (fm == 0) {
        root.lo = root.hi = mid;
        return;
    }
    int slo = sgn(s.eval(root.lo));
    if (slo == 0) {
        root.lo = root.hi = root.lo;
        return;
    }
    if (sgn(fm) == slo) {
        root.lo = mid;
    } else {
        root.hi = mid;
    }
}

int certified_sign_at_root(const QPoly& e, const QPoly& f, RealRootInterval& root, int max_halvings) {
    if (e.is_zero()) return 0;
    if (root.exact()) {
        return sgn(e.eval(root.lo));
    }
    for (int pass = 0; pass <= max_halvings; ++pass) {
        // interval Horner evaluation of e over [lo, hi]
        mpq_class lo(0), hi(0);
        for (std::size_t i = e.coeffs().size(); i-- > 0;) {
            mpq_class c1 = lo * root.lo, c2 = lo * root.hi, c3 = hi * root.lo, c4 = hi * root.hi;
            mpq_class nlo = std::min(std::min(c1, c2), std::min(c3, c4));
            mpq_class nhi = std::max(std::max(c1, c2), std::max(c3, c4));
            lo = nlo + e.coeffs()[i];
            hi = nhi + e.coeffs()[i];
        }
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        refine_root(f, root);
        if (root.exact()) return sgn(e.eval(root.lo));
    }
    throw NumericallySingular("sign not certified after interval refinement budget");
}

}  // namespace sl2k
