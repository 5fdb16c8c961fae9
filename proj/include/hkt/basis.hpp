#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hkt/rational.hpp"

namespace hkt {

// Generators of the exterior algebra are indexed 0..4n-1. In the real basis
// the order is (x_1, y_1, z_1, w_1, ..., x_n, y_n, z_n, w_n); in the complex
// basis it is (dzeta^1, ..., dzeta^{2n}, conj(dzeta^1), ..., conj(dzeta^{2n}))
// with dzeta^{2a} = dx_a + i dy_a and dzeta^{2a+1} = dz_a + i dw_a.
// A monomial is a bitmask over generators, wedge-ordered by ascending index.
using Mask = uint32_t;

inline int mask_degree(Mask m) { return std::popcount(m); }

// Sign of e_A ^ e_B relative to the sorted merge; 0 when they intersect.
inline int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  Mask bb = b;
  while (bb) {
    Mask low = bb & (~bb + 1);
    // generators of a that come after this generator of b
    inversions += std::popcount(a & ~(low | (low - 1)));
    bb ^= low;
  }
  return (inversions & 1) ? -1 : 1;
}

// All degree-k masks over ngen generators, ascending numeric order.
std::vector<Mask> degree_masks(int ngen, int k);

// Index lookup for a slice basis.
class SliceIndex {
 public:
  SliceIndex() = default;
  explicit SliceIndex(std::vector<Mask> masks) : masks_(std::move(masks)) {
    for (size_t i = 0; i < masks_.size(); ++i) pos_[masks_[i]] = int(i);
  }
  int size() const { return int(masks_.size()); }
  Mask mask(int i) const { return masks_[i]; }
  const std::vector<Mask>& masks() const { return masks_; }
  int index_of(Mask m) const {
    auto it = pos_.find(m);
    return it == pos_.end() ? -1 : it->second;
  }

 private:
  std::vector<Mask> masks_;
  std::unordered_map<Mask, int> pos_;
};

// Complex-basis masks of bidegree (p,q): p holomorphic and q antiholomorphic
// generators. Holomorphic generator indices are 0..2n-1, antiholomorphic
// 2n..4n-1.
std::vector<Mask> bidegree_masks(int n, int p, int q);

inline int holo_degree(Mask m, int n) {
  return std::popcount(m & ((Mask(1) << (2 * n)) - 1));
}
inline int anti_degree(Mask m, int n) {
  return std::popcount(m >> (2 * n));
}

// A coefficient of the form i^phase / 2^shift (shift may be negative); the
// only scalars appearing in the change of basis between real and complex
// generators.
struct PhaseCoef {
  int8_t phase;  // exponent of i, mod 4
  int8_t shift;  // exponent of 2 in the denominator

  Gaussian value() const {
    Gaussian g = Gaussian::i_pow(phase);
    Rational d(1);
    for (int s = 0; s < shift; ++s) d *= 2;
    for (int s = 0; s > shift; --s) d /= 2;
    return Gaussian(g.re / d, g.im / d);
  }
};

struct FrameTerm {
  Mask mask;
  PhaseCoef coef;
};

// Change-of-basis tables between the real and complex generator monomials,
// built once per n and cached (thread-safe magic-static initialization).
class ComplexFrame {
 public:
  static const ComplexFrame& get(int n);

  int n() const { return n_; }
  int ngen() const { return 4 * n_; }

  // Expansion of a real-basis monomial in complex-basis monomials.
  const std::vector<FrameTerm>& real_to_cx(Mask real_mask) const {
    return r2c_[real_mask];
  }
  // Expansion of a complex-basis monomial in real-basis monomials.
  const std::vector<FrameTerm>& cx_to_real(Mask cx_mask) const {
    return c2r_[cx_mask];
  }

 private:
  explicit ComplexFrame(int n);
  int n_;
  std::vector<std::vector<FrameTerm>> r2c_;
  std::vector<std::vector<FrameTerm>> c2r_;
};

}  // namespace hkt
