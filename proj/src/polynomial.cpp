#include "beilab/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace beilab {

int cmp_canonical(const Monomial& a, const Monomial& b) {
    static const MonomialOrder drl = MonomialOrder::degrevlex();
    return drl.cmp(a, b);
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring().compatible(b.ring()))
        throw std::invalid_argument("polynomial arithmetic: ambient ring mismatch");
}

Polynomial Polynomial::constant(const Ring& r, int64_t c) {
    uint32_t v = fp_normalize(c, r.p);
    Polynomial f(r);
    if (v != 0) f.terms_.push_back({Monomial::one(r.nvars), v});
    return f;
}

Polynomial Polynomial::variable(const Ring& r, int i) {
    return from_term(r, 1, Monomial::var(r.nvars, i));
}

Polynomial Polynomial::from_term(const Ring& r, int64_t c, const Monomial& m) {
    uint32_t v = fp_normalize(c, r.p);
    Polynomial f(r);
    if (v != 0) f.terms_.push_back({m, v});
    return f;
}

Polynomial Polynomial::make(
    const Ring& r,
    std::initializer_list<std::pair<int64_t, std::initializer_list<std::pair<int, int>>>> t) {
    std::vector<Term> ts;
    for (auto& [c, exps] : t) ts.push_back({Monomial::make(r.nvars, exps), fp_normalize(c, r.p)});
    return from_terms(r, std::move(ts));
}

Polynomial Polynomial::from_terms(const Ring& r, std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return cmp_canonical(a.m, b.m) > 0; });
    Polynomial f(r);
    for (auto& t : ts) {
        uint32_t c = t.c % r.p;
        if (c == 0) continue;
        if (!f.terms_.empty() && f.terms_.back().m == t.m) {
            f.terms_.back().c = fp_add(f.terms_.back().c, c, r.p);
            if (f.terms_.back().c == 0) f.terms_.pop_back();
        } else {
            f.terms_.push_back({t.m, c});
        }
    }
    return f;
}

// merge with b scaled by bc (residue); shared kernel of +,-
static Polynomial merge(const Polynomial& a, const Polynomial& b, uint32_t bc) {
    check_same_ring(a, b);
    const uint32_t p = a.ring().p;
    Polynomial r(a.ring());
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    size_t i = 0, j = 0;
    while (i < ta.size() && j < tb.size()) {
        int c = cmp_canonical(ta[i].m, tb[j].m);
        if (c > 0) {
            out.push_back(ta[i++]);
        } else if (c < 0) {
            uint32_t v = fp_mul(tb[j].c, bc, p);
            if (v) out.push_back({tb[j].m, v});
            ++j;
        } else {
            uint32_t v = fp_add(ta[i].c, fp_mul(tb[j].c, bc, p), p);
            if (v) out.push_back({ta[i].m, v});
            ++i; ++j;
        }
    }
    for (; i < ta.size(); ++i) out.push_back(ta[i]);
    for (; j < tb.size(); ++j) {
        uint32_t v = fp_mul(tb[j].c, bc, p);
        if (v) out.push_back({tb[j].m, v});
    }
    return Polynomial::from_terms(a.ring(), std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const { return merge(*this, o, 1); }

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return merge(*this, o, fp_neg(1, ring_.p));
}

Polynomial Polynomial::operator-() const { return scaled(fp_neg(1, ring_.p)); }

Polynomial Polynomial::scaled(uint32_t c) const {
    Polynomial r(ring_);
    if (c % ring_.p == 0) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.m, fp_mul(t.c, c, ring_.p)});
    return r;
}

Polynomial Polynomial::times_term(uint32_t c, const Monomial& m) const {
    Polynomial r(ring_);
    if (c % ring_.p == 0) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.m * m, fp_mul(t.c, c, ring_.p)});
    return r;  // multiplication by a monomial preserves the sort order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(*this, o);
    std::vector<Term> out;
    out.reserve(size() * o.size());
    for (auto& ta : terms_)
        for (auto& tb : o.terms())
            out.push_back({ta.m * tb.m, fp_mul(ta.c, tb.c, ring_.p)});
    return from_terms(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_.compatible(o.ring_) || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m) return false;
    return true;
}

Homogeneity Polynomial::homogeneity() const {
    if (terms_.empty()) return {true, std::nullopt};
    uint32_t d = terms_.front().m.deg;
    for (auto& t : terms_)
        if (t.m.deg != d) return {false, std::nullopt};
    return {true, static_cast<int>(d)};
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    uint32_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.m.deg);
    return static_cast<int>(d);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    const uint32_t p = ring_.p;
    for (auto& t : terms_) {
        // symmetric lift for readability
        bool neg = t.c > p / 2;
        uint32_t mag = neg ? p - t.c : t.c;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (mag != 1 || t.m.is_one()) {
            s += std::to_string(mag);
            if (!t.m.is_one()) s += "*";
        }
        if (!t.m.is_one()) s += monomial_string(t.m, ring_);
    }
    return s;
}

}  // namespace beilab
