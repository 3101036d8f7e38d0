#ifndef BEILAB_RING_HPP
#define BEILAB_RING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace beilab {

// Ambient polynomial ring descriptor: K[v_0,...,v_{nvars-1}] with K = Z/p.
// When npairs = n > 0 the first 2n variables are the pair block
// x_1..x_n, y_1..y_n of a ring attached to a graph on [n]; any trailing
// variables are auxiliary (tag variables for intersections etc.).
struct Ring {
    uint32_t p = 32003;
    uint16_t nvars = 0;
    uint16_t npairs = 0;

    bool compatible(const Ring& o) const { return p == o.p && nvars == o.nvars; }
    bool operator==(const Ring& o) const { return p == o.p && nvars == o.nvars; }
};

inline Ring pair_ring(int n, uint32_t p = 32003) {
    Ring r;
    r.p = p;
    r.nvars = static_cast<uint16_t>(2 * n);
    r.npairs = static_cast<uint16_t>(n);
    return r;
}

inline std::string var_name(const Ring& r, int i) {
    if (i < 2 * r.npairs) {
        if (i < r.npairs) return "x" + std::to_string(i + 1);
        return "y" + std::to_string(i - r.npairs + 1);
    }
    return "t" + std::to_string(i - 2 * r.npairs);
}

// --- prime field helpers (p odd prime, p < 2^31) ---

inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t fp_inv(uint32_t a, uint32_t p) {
    if (a == 0) throw std::domain_error("fp_inv: division by zero");
    // extended Euclid
    int64_t t = 0, newt = 1;
    int64_t r = p, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

inline uint32_t fp_div(uint32_t a, uint32_t b, uint32_t p) {
    return fp_mul(a, fp_inv(b, p), p);
}

inline uint32_t fp_normalize(int64_t v, uint32_t p) {
    int64_t m = v % static_cast<int64_t>(p);
    if (m < 0) m += p;
    return static_cast<uint32_t>(m);
}

// Residue wrapper used at API boundaries and in the field-axiom tests.
class Zp {
  public:
    Zp() = default;
    Zp(int64_t v, uint32_t p) : p_(p), v_(fp_normalize(v, p)) {}

    uint32_t value() const { return v_; }
    uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Zp operator+(const Zp& o) const { check(o); return raw(fp_add(v_, o.v_, p_)); }
    Zp operator-(const Zp& o) const { check(o); return raw(fp_sub(v_, o.v_, p_)); }
    Zp operator*(const Zp& o) const { check(o); return raw(fp_mul(v_, o.v_, p_)); }
    Zp operator/(const Zp& o) const { check(o); return raw(fp_div(v_, o.v_, p_)); }
    Zp operator-() const { return raw(fp_neg(v_, p_)); }
    Zp inverse() const { return raw(fp_inv(v_, p_)); }
    bool operator==(const Zp& o) const { return p_ == o.p_ && v_ == o.v_; }

  private:
    Zp raw(uint32_t v) const { Zp z; z.p_ = p_; z.v_ = v; return z; }
    void check(const Zp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Zp: modulus mismatch");
    }
    uint32_t p_ = 32003;
    uint32_t v_ = 0;
};

}  // namespace beilab

#endif
