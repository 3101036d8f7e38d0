#ifndef BEILAB_POLYNOMIAL_HPP
#define BEILAB_POLYNOMIAL_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "beilab/monomial.hpp"
#include "beilab/ring.hpp"

namespace beilab {

struct Term {
    Monomial m;
    uint32_t c = 0;  // nonzero residue mod ring prime
};

struct Homogeneity {
    bool homogeneous = false;
    std::optional<int> degree;  // empty for the zero polynomial (degree unknown)
};

// Sparse multivariate polynomial over Z/p in canonical form: no zero
// coefficients, terms sorted descending under degrevlex.  The storage
// order is a normal form only; every monomial order can be applied to a
// Polynomial by re-sorting a copy (the Groebner engine does this).
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const Ring& r) : ring_(r) {}

    static Polynomial zero(const Ring& r) { return Polynomial(r); }
    static Polynomial constant(const Ring& r, int64_t c);
    static Polynomial variable(const Ring& r, int i);
    static Polynomial from_term(const Ring& r, int64_t c, const Monomial& m);
    // terms: list of (coefficient, {(var, exp), ...})
    static Polynomial make(const Ring& r,
                           std::initializer_list<std::pair<int64_t, std::initializer_list<std::pair<int, int>>>> t);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // leading data under the canonical (degrevlex) storage order
    const Term& lead() const { return terms_.front(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(uint32_t c) const;                       // c * this
    Polynomial times_term(uint32_t c, const Monomial& m) const;  // c*m * this

    Homogeneity homogeneity() const;
    bool is_homogeneous() const { return homogeneity().homogeneous; }
    std::optional<int> degree() const;  // max total degree; empty if zero

    std::string str() const;

    // construction helper for the engine: takes terms in any order, with
    // arbitrary (possibly zero / duplicate) residues, and normalizes.
    static Polynomial from_terms(const Ring& r, std::vector<Term> ts);

  private:
    Ring ring_;
    std::vector<Term> terms_;
};

// canonical storage comparator (degrevlex, descending)
int cmp_canonical(const Monomial& a, const Monomial& b);

void check_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace beilab

#endif
