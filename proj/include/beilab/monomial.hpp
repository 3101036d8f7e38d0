#ifndef BEILAB_MONOMIAL_HPP
#define BEILAB_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>

#include "beilab/ring.hpp"

namespace beilab {

constexpr int kMaxVars = 24;

// Exponent-vector monomial with a cached total degree.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint16_t n = 0;       // number of ambient variables
    uint32_t deg = 0;     // cached total degree

    static Monomial one(int nvars) {
        Monomial m;
        m.n = static_cast<uint16_t>(nvars);
        return m;
    }

    static Monomial var(int nvars, int i, int exp = 1) {
        Monomial m = one(nvars);
        m.e[i] = static_cast<uint16_t>(exp);
        m.deg = exp;
        return m;
    }

    // exps: list of (variable index, exponent)
    static Monomial make(int nvars, std::initializer_list<std::pair<int, int>> exps) {
        Monomial m = one(nvars);
        for (auto& [i, a] : exps) {
            if (i < 0 || i >= nvars) throw std::out_of_range("Monomial::make: bad variable");
            m.e[i] = static_cast<uint16_t>(m.e[i] + a);
            m.deg += a;
        }
        return m;
    }

    bool is_one() const { return deg == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < n; ++i) r.e[i] = static_cast<uint16_t>(r.e[i] + o.e[i]);
        r.deg += o.deg;
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < n; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // componentwise o / this; requires divides(o)
    Monomial divide_into(const Monomial& o) const {
        Monomial r = o;
        for (int i = 0; i < n; ++i) r.e[i] = static_cast<uint16_t>(r.e[i] - e[i]);
        r.deg = o.deg - deg;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r = *this;
        r.deg = 0;
        for (int i = 0; i < n; ++i) {
            r.e[i] = std::max(e[i], o.e[i]);
            r.deg += r.e[i];
        }
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (int i = 0; i < n; ++i)
            if (e[i] != 0 && o.e[i] != 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const {
        if (n != o.n || deg != o.deg) return false;
        for (int i = 0; i < n; ++i)
            if (e[i] != o.e[i]) return false;
        return true;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

// Structural lexicographic comparison on exponent vectors (used only as a
// deterministic tie-breaker for canonical container ordering, not as a
// monomial order).
inline int cmp_structural(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.n; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

enum class OrderKind : uint8_t { DegRevLex, Lex, ElimBlock };

// Monomial orders on the ambient variables, priority v_0 > v_1 > ... .
// ElimBlock compares the eliminated block (mask) first by degree then
// degrevlex, then the remaining variables likewise; any monomial order
// of this shape eliminates the masked variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    uint32_t elim_mask = 0;

    static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder elim(uint32_t mask) { return {OrderKind::ElimBlock, mask}; }
    // eliminate the leading block v_0..v_{k-1}
    static MonomialOrder elim_first(int k) { return elim((k >= 32) ? ~0u : ((1u << k) - 1u)); }

    bool is_graded() const { return kind == OrderKind::DegRevLex; }

    // -1: a < b, 0: equal, 1: a > b
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::Lex:
                for (int i = 0; i < a.n; ++i)
                    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
                return 0;
            case OrderKind::DegRevLex:
                return cmp_drl_range(a, b, 0, a.n);
            case OrderKind::ElimBlock: {
                int c = cmp_drl_mask(a, b, true);
                if (c != 0) return c;
                return cmp_drl_mask(a, b, false);
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != OrderKind::ElimBlock || elim_mask == o.elim_mask);
    }
    bool operator<(const MonomialOrder& o) const {  // cache key ordering
        if (kind != o.kind) return kind < o.kind;
        if (kind != OrderKind::ElimBlock) return false;
        return elim_mask < o.elim_mask;
    }

  private:
    static int cmp_drl_range(const Monomial& a, const Monomial& b, int lo, int hi) {
        uint32_t da = 0, db = 0;
        for (int i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
        if (da != db) return da < db ? -1 : 1;
        for (int i = hi - 1; i >= lo; --i) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;  // smaller last exponent wins
        }
        return 0;
    }
    int cmp_drl_mask(const Monomial& a, const Monomial& b, bool in_mask) const {
        uint32_t da = 0, db = 0;
        for (int i = 0; i < a.n; ++i) {
            if ((((elim_mask >> i) & 1u) != 0) == in_mask) { da += a.e[i]; db += b.e[i]; }
        }
        if (da != db) return da < db ? -1 : 1;
        for (int i = a.n - 1; i >= 0; --i) {
            if ((((elim_mask >> i) & 1u) != 0) == in_mask && a.e[i] != b.e[i])
                return a.e[i] < b.e[i] ? 1 : -1;
        }
        return 0;
    }
};

inline std::string monomial_string(const Monomial& m, const Ring& r) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.n; ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(r, i);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

}  // namespace beilab

#endif
