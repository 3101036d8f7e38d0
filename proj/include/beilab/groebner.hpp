#ifndef BEILAB_GROEBNER_HPP
#define BEILAB_GROEBNER_HPP

#include <vector>

#include "beilab/polynomial.hpp"

namespace beilab {

// Reduced Groebner basis: elements monic, interreduced, sorted ascending
// by leading monomial under `order`.  `lead[k]` caches the leading
// monomial of `elems[k]` under `order` (which need not be the canonical
// storage order of Polynomial).
struct GroebnerBasis {
    Ring ring;
    MonomialOrder order;
    std::vector<Polynomial> elems;
    std::vector<Monomial> lead;

    bool is_unit() const { return elems.size() == 1 && elems[0].size() == 1 && lead[0].is_one(); }
    bool is_zero() const { return elems.empty(); }
};

// Buchberger completion with the Gebauer-Moeller pair criteria; normal
// selection strategy (lowest lcm degree first, ties first-in-first-out).
// Deterministic for a fixed generator sequence.
GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord);

// Unique canonical remainder of f modulo G (fully reduced: no term of the
// result is divisible by any leading monomial of G).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

// As normal_form, also accumulating the quotients: f = sum q_k G_k + r.
Polynomial normal_form_with_quotients(const Polynomial& f, const GroebnerBasis& G,
                                      std::vector<Polynomial>& quotients);

inline bool reduces_to_zero(const Polynomial& f, const GroebnerBasis& G) {
    return normal_form(f, G).is_zero();
}

// Exact division g / f for g in the principal ideal (f); throws if the
// division leaves a remainder.
Polynomial divide_exact(const Polynomial& g, const Polynomial& f);

}  // namespace beilab

#endif
