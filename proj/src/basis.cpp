#include "hkt/basis.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hkt {

std::vector<Mask> degree_masks(int ngen, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > ngen) return out;
  // Gosper's hack enumerates k-subsets in ascending order.
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  Mask v = (Mask(1) << k) - 1;
  Mask limit = Mask(1) << ngen;
  while (v < limit) {
    out.push_back(v);
    Mask t = v | (v - 1);
    if (t == Mask(-1)) break;
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

std::vector<Mask> bidegree_masks(int n, int p, int q) {
  std::vector<Mask> out;
  if (p < 0 || q < 0 || p > 2 * n || q > 2 * n) return out;
  auto holo = degree_masks(2 * n, p);
  auto anti = degree_masks(2 * n, q);
  for (Mask h : holo)
    for (Mask a : anti) out.push_back(h | (a << (2 * n)));
  return out;
}

namespace {

// Multiply two expansions, wedging masks with signs. Two terms can land on
// the same mask (one per choice of the appended generator); their phase
// coefficients then share the same power of 2, so the sum is again a phase
// coefficient (doubled) or zero.
std::vector<FrameTerm> wedge_expansions(const std::vector<FrameTerm>& a,
                                        const std::vector<FrameTerm>& b) {
  std::map<Mask, PhaseCoef> acc;
  for (const auto& ta : a)
    for (const auto& tb : b) {
      int s = wedge_sign(ta.mask, tb.mask);
      if (s == 0) continue;
      int phase = (ta.coef.phase + tb.coef.phase + (s < 0 ? 2 : 0)) & 3;
      int shift = ta.coef.shift + tb.coef.shift;
      Mask m = ta.mask | tb.mask;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(m, PhaseCoef{int8_t(phase), int8_t(shift)});
        continue;
      }
      if (it->second.shift != shift)
        throw std::logic_error("frame expansion: mismatched dyadic shifts");
      int dp = (phase - it->second.phase) & 3;
      if (dp == 0) {
        it->second.shift -= 1;  // equal contributions: coefficient doubles
      } else if (dp == 2) {
        acc.erase(it);  // exact cancellation
      } else {
        throw std::logic_error("frame expansion: incompatible phases");
      }
    }
  std::vector<FrameTerm> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) out.push_back(FrameTerm{m, c});
  return out;
}

}  // namespace

ComplexFrame::ComplexFrame(int n) : n_(n) {
  const int ng = 4 * n;
  const Mask total = Mask(1) << ng;
  r2c_.resize(total);
  c2r_.resize(total);

  // Degree-one expansions.
  // Real generator layout per quaternionic block a: x=4a, y=4a+1, z=4a+2,
  // w=4a+3. Complex: hol 2a <-> dx+i dy, hol 2a+1 <-> dz+i dw.
  std::vector<std::vector<FrameTerm>> r1(ng), c1(ng);
  for (int a = 0; a < n; ++a) {
    int x = 4 * a, y = 4 * a + 1, z = 4 * a + 2, w = 4 * a + 3;
    int h0 = 2 * a, h1 = 2 * a + 1;
    int a0 = 2 * n + 2 * a, a1 = 2 * n + 2 * a + 1;
    // dx = (dzeta + conj)/2, dy = -i/2 dzeta + i/2 conj
    r1[x] = {{Mask(1) << h0, {0, 1}}, {Mask(1) << a0, {0, 1}}};
    r1[y] = {{Mask(1) << h0, {3, 1}}, {Mask(1) << a0, {1, 1}}};
    r1[z] = {{Mask(1) << h1, {0, 1}}, {Mask(1) << a1, {0, 1}}};
    r1[w] = {{Mask(1) << h1, {3, 1}}, {Mask(1) << a1, {1, 1}}};
    // dzeta = dx + i dy, conj(dzeta) = dx - i dy
    c1[h0] = {{Mask(1) << x, {0, 0}}, {Mask(1) << y, {1, 0}}};
    c1[a0] = {{Mask(1) << x, {0, 0}}, {Mask(1) << y, {3, 0}}};
    c1[h1] = {{Mask(1) << z, {0, 0}}, {Mask(1) << w, {1, 0}}};
    c1[a1] = {{Mask(1) << z, {0, 0}}, {Mask(1) << w, {3, 0}}};
  }

  r2c_[0] = {{0, {0, 0}}};
  c2r_[0] = {{0, {0, 0}}};
  for (Mask m = 1; m < total; ++m) {
    int top = 31 - std::countl_zero(m);  // highest generator; appended last
    Mask rest = m & ~(Mask(1) << top);
    r2c_[m] = wedge_expansions(r2c_[rest], r1[top]);
    c2r_[m] = wedge_expansions(c2r_[rest], c1[top]);
  }
}

const ComplexFrame& ComplexFrame::get(int n) {
  if (n < 1 || n > 3)
    throw std::out_of_range("ComplexFrame supports n in 1..3");
  static std::mutex mu;
  static std::map<int, const ComplexFrame*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, new ComplexFrame(n)).first;
  return *it->second;
}

}  // namespace hkt
