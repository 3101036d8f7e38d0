#include "beilab/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace beilab {

namespace {

// Engine representation: terms ascending under the active order, so the
// leading term is back() and cancelling it is a pop.
using EPoly = std::vector<Term>;

struct Engine {
    Ring ring;
    MonomialOrder ord;
    std::vector<EPoly> basis;     // monic
    std::vector<Monomial> lead;

    EPoly to_engine(const Polynomial& f) const {
        EPoly t(f.terms().begin(), f.terms().end());
        std::sort(t.begin(), t.end(),
                  [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) < 0; });
        return t;
    }

    Polynomial to_poly(const EPoly& t) const {
        return Polynomial::from_terms(ring, std::vector<Term>(t.begin(), t.end()));
    }

    // a - c * m * b, both ascending
    EPoly submul(const EPoly& a, uint32_t c, const Monomial& m, const EPoly& b) const {
        const uint32_t p = ring.p;
        EPoly out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            Monomial bm = b[j].m * m;
            int cv = ord.cmp(a[i].m, bm);
            if (cv < 0) {
                out.push_back(a[i++]);
            } else if (cv > 0) {
                uint32_t v = fp_neg(fp_mul(b[j].c, c, p), p);
                if (v) out.push_back({bm, v});
                ++j;
            } else {
                uint32_t v = fp_sub(a[i].c, fp_mul(b[j].c, c, p), p);
                if (v) out.push_back({a[i].m, v});
                ++i; ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) {
            uint32_t v = fp_neg(fp_mul(b[j].c, c, p), p);
            if (v) out.push_back({b[j].m * m, v});
        }
        return out;
    }

    void make_monic(EPoly& f) const {
        if (f.empty()) return;
        uint32_t lc = f.back().c;
        if (lc == 1) return;
        uint32_t inv = fp_inv(lc, ring.p);
        for (auto& t : f) t.c = fp_mul(t.c, inv, ring.p);
    }

    int find_reducer(const Monomial& m, int skip) const {
        for (size_t k = 0; k < basis.size(); ++k) {
            if (static_cast<int>(k) == skip) continue;
            if (lead[k].deg <= m.deg && lead[k].divides(m)) return static_cast<int>(k);
        }
        return -1;
    }

    // full normal form; optionally records quotient terms per basis index
    EPoly reduce(EPoly f, std::vector<std::vector<Term>>* quot, int skip = -1) const {
        EPoly out;  // collected descending
        while (!f.empty()) {
            const Term t = f.back();
            int k = find_reducer(t.m, skip);
            if (k < 0) {
                out.push_back(t);
                f.pop_back();
            } else {
                Monomial q = lead[k].divide_into(t.m);
                f = submul(f, t.c, q, basis[k]);
                if (quot) (*quot)[k].push_back({q, t.c});
            }
        }
        std::reverse(out.begin(), out.end());
        return out;
    }
};

struct SPair {
    uint32_t deg;   // total degree of the lcm
    uint32_t t, i;  // i < t, indices into basis
    Monomial lcm;
    bool operator<(const SPair& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (t != o.t) return t < o.t;
        return i < o.i;
    }
};

// Gebauer-Moeller pair update (Becker-Weispfenning "Update").
void gm_update(const Engine& eng, std::set<SPair>& pairs, uint32_t t) {
    const Monomial& lt = eng.lead[t];
    struct Cand { uint32_t i; Monomial lcm; bool coprime; bool alive; };
    std::vector<Cand> cand;
    cand.reserve(t);
    for (uint32_t i = 0; i < t; ++i) {
        Monomial l = eng.lead[i].lcm(lt);
        cand.push_back({i, l, eng.lead[i].coprime(lt), true});
    }
    // criterion among new pairs: keep (i,t) if coprime or no other live
    // candidate's lcm divides it
    std::vector<Cand> kept;
    for (size_t a = 0; a < cand.size(); ++a) {
        bool drop = false;
        if (!cand[a].coprime) {
            for (size_t b = 0; b < cand.size() && !drop; ++b) {
                if (a == b || !cand[b].alive) continue;
                if (cand[b].lcm.divides(cand[a].lcm) && cand[b].lcm != cand[a].lcm) drop = true;
                // equal lcm: keep only the first occurrence
                if (cand[b].lcm == cand[a].lcm && b < a) drop = true;
            }
        }
        if (drop) cand[a].alive = false;
        else kept.push_back(cand[a]);
    }
    // prune old pairs via the chain criterion
    for (auto it = pairs.begin(); it != pairs.end();) {
        const SPair& pr = *it;
        if (lt.divides(pr.lcm) && eng.lead[pr.i].lcm(lt) != pr.lcm &&
            eng.lead[pr.t].lcm(lt) != pr.lcm) {
            it = pairs.erase(it);
        } else {
            ++it;
        }
    }
    // discard coprime-leading-term pairs (Buchberger's first criterion)
    for (auto& c : kept) {
        if (c.coprime) continue;
        pairs.insert({c.lcm.deg, t, c.i, c.lcm});
    }
}

void interreduce(Engine& eng) {
    const size_t r = eng.basis.size();
    std::vector<size_t> idx(r);
    for (size_t k = 0; k < r; ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int c = eng.ord.cmp(eng.lead[a], eng.lead[b]);
        if (c != 0) return c < 0;
        return a < b;
    });
    // minimalize: ascending leading monomials, drop divisible ones
    std::vector<size_t> min_idx;
    for (size_t k : idx) {
        bool redundant = false;
        for (size_t j : min_idx)
            if (eng.lead[j].divides(eng.lead[k])) { redundant = true; break; }
        if (!redundant) min_idx.push_back(k);
    }
    Engine red{eng.ring, eng.ord, {}, {}};
    for (size_t k : min_idx) {
        red.basis.push_back(eng.basis[k]);
        red.lead.push_back(eng.lead[k]);
    }
    // tail-reduce each element against the others (heads are pairwise
    // irreducible after minimalization, so the head passes through)
    for (size_t k = 0; k < red.basis.size(); ++k)
        red.basis[k] = red.reduce(red.basis[k], nullptr, static_cast<int>(k));
    eng = std::move(red);
}

}  // namespace

GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord) {
    Engine eng{ring, ord, {}, {}};
    std::set<SPair> pairs;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.ring().compatible(ring))
            throw std::invalid_argument("buchberger: generator from a different ring");
        EPoly e = eng.to_engine(g);
        eng.make_monic(e);
        eng.lead.push_back(e.back().m);
        eng.basis.push_back(std::move(e));
        gm_update(eng, pairs, static_cast<uint32_t>(eng.basis.size()) - 1);
    }
    while (!pairs.empty()) {
        SPair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        Monomial mi = eng.lead[pr.i].divide_into(pr.lcm);
        Monomial mt = eng.lead[pr.t].divide_into(pr.lcm);
        // s = m_i g_i - m_t g_t (both monic)
        EPoly s = eng.submul(EPoly{}, fp_neg(1, ring.p), mi, eng.basis[pr.i]);
        s = eng.submul(s, 1, mt, eng.basis[pr.t]);
        s = eng.reduce(std::move(s), nullptr);
        if (s.empty()) continue;
        eng.make_monic(s);
        eng.lead.push_back(s.back().m);
        eng.basis.push_back(std::move(s));
        gm_update(eng, pairs, static_cast<uint32_t>(eng.basis.size()) - 1);
    }
    interreduce(eng);
    GroebnerBasis out;
    out.ring = ring;
    out.order = ord;
    for (size_t k = 0; k < eng.basis.size(); ++k) {
        out.elems.push_back(eng.to_poly(eng.basis[k]));
        out.lead.push_back(eng.lead[k]);
    }
    return out;
}

namespace {
Engine engine_of(const GroebnerBasis& G) {
    Engine eng{G.ring, G.order, {}, {}};
    for (size_t k = 0; k < G.elems.size(); ++k) {
        eng.basis.push_back(eng.to_engine(G.elems[k]));
        eng.lead.push_back(G.lead[k]);
    }
    return eng;
}
}  // namespace

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (!f.ring().compatible(G.ring))
        throw std::invalid_argument("normal_form: ring mismatch");
    Engine eng = engine_of(G);
    return eng.to_poly(eng.reduce(eng.to_engine(f), nullptr));
}

Polynomial normal_form_with_quotients(const Polynomial& f, const GroebnerBasis& G,
                                      std::vector<Polynomial>& quotients) {
    if (!f.ring().compatible(G.ring))
        throw std::invalid_argument("normal_form: ring mismatch");
    Engine eng = engine_of(G);
    std::vector<std::vector<Term>> q(G.elems.size());
    Polynomial r = eng.to_poly(eng.reduce(eng.to_engine(f), &q));
    quotients.clear();
    for (auto& terms : q) quotients.push_back(Polynomial::from_terms(G.ring, std::move(terms)));
    return r;
}

Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("divide_exact: zero divisor polynomial");
    check_same_ring(g, f);
    const Ring& ring = g.ring();
    Engine eng{ring, MonomialOrder::degrevlex(), {}, {}};
    EPoly fe = eng.to_engine(f);
    uint32_t lc = fe.back().c;
    eng.make_monic(fe);
    eng.lead.push_back(fe.back().m);
    eng.basis.push_back(std::move(fe));
    std::vector<std::vector<Term>> q(1);
    EPoly rem = eng.reduce(eng.to_engine(g), &q);
    if (!rem.empty()) throw std::domain_error("divide_exact: division leaves a remainder");
    Polynomial quot = Polynomial::from_terms(ring, std::move(q[0]));
    return quot.scaled(fp_inv(lc, ring.p));
}

}  // namespace beilab
