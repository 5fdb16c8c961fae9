#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "hkt/rational.hpp"

namespace hkt {

// Multivariate polynomial over Gaussian rationals in the 4n real coordinates
// (x_1, y_1, z_1, w_1, ..., x_n, y_n, z_n, w_n).
//
// Exponent vectors are packed into a 64-bit key, 4 bits per coordinate
// (supports up to 16 coordinates of individual degree <= 15, which covers
// every computation in this project). Only nonzero coefficients are stored.
class Polynomial {
 public:
  using Key = uint64_t;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) { check_nvars(nvars); }

  static Polynomial constant(int nvars, const Gaussian& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_[0] = c;
    return p;
  }
  static Polynomial variable(int nvars, int coord, int power = 1) {
    Polynomial p(nvars);
    if (coord < 0 || coord >= nvars)
      throw std::out_of_range("variable index out of range");
    p.terms_[pack_single(coord, power)] = Gaussian(1);
    return p;
  }
  static Polynomial monomial(int nvars, const std::vector<int>& exps,
                             const Gaussian& c) {
    Polynomial p(nvars);
    if (static_cast<int>(exps.size()) != nvars)
      throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) return p;
    Key k = 0;
    for (int i = 0; i < nvars; ++i) {
      if (exps[i] < 0 || exps[i] > 15)
        throw std::out_of_range("exponent out of packed range");
      k |= (Key(exps[i]) << (4 * i));
    }
    p.terms_[k] = c;
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Key, Gaussian>& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  Gaussian constant_value() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Gaussian(0) : it->second;
  }

  bool is_real() const {
    for (const auto& [k, c] : terms_)
      if (sgn(c.im) != 0) return false;
    return true;
  }

  int degree() const {  // max total degree, -1 for the zero polynomial
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, total_degree(k));
    return d;
  }

  static int exponent_of(Key k, int coord) { return int((k >> (4 * coord)) & 0xF); }
  static std::vector<int> unpack(Key k, int nvars) {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = exponent_of(k, i);
    return e;
  }

  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial r(a.nvars_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term(add_keys(ka, kb, a.nvars_), ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Gaussian& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
  }

  Polynomial conj() const {
    Polynomial r(nvars_);
    for (const auto& [k, c] : terms_) r.terms_[k] = c.conj();
    return r;
  }
  Polynomial real_part() const {
    Polynomial r(nvars_);
    for (const auto& [k, c] : terms_)
      if (sgn(c.re) != 0) r.terms_[k] = Gaussian(c.re);
    return r;
  }
  Polynomial imag_part() const {
    Polynomial r(nvars_);
    for (const auto& [k, c] : terms_)
      if (sgn(c.im) != 0) r.terms_[k] = Gaussian(c.im);
    return r;
  }

  // Exact formal partial derivative with respect to coordinate `coord`.
  Polynomial partial(int coord) const {
    if (coord < 0 || coord >= nvars_)
      throw std::out_of_range("partial: coordinate index out of range");
    Polynomial r(nvars_);
    for (const auto& [k, c] : terms_) {
      int e = exponent_of(k, coord);
      if (e == 0) continue;
      Key k2 = k - (Key(1) << (4 * coord));
      r.add_term(k2, c * Gaussian(e));
    }
    return r;
  }

  Gaussian eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw std::invalid_argument("eval: point dimension mismatch");
    Gaussian acc(0);
    for (const auto& [k, c] : terms_) {
      Rational m(1);
      for (int i = 0; i < nvars_; ++i) {
        int e = exponent_of(k, i);
        for (int j = 0; j < e; ++j) m *= point[i];
      }
      acc += c * Gaussian(m);
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  void add_term(Key k, const Gaussian& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  static void check_nvars(int nvars) {
    if (nvars < 0 || nvars > 16)
      throw std::invalid_argument("polynomial supports up to 16 coordinates");
  }
  void check_same(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("polynomial coordinate count mismatch");
  }
  static Key pack_single(int coord, int power) {
    if (power < 0 || power > 15) throw std::out_of_range("exponent too large");
    return Key(power) << (4 * coord);
  }
  static int total_degree(Key k) {
    int d = 0;
    while (k) {
      d += int(k & 0xF);
      k >>= 4;
    }
    return d;
  }
  static Key add_keys(Key a, Key b, int nvars) {
    Key r = 0;
    for (int i = 0; i < nvars; ++i) {
      int e = int((a >> (4 * i)) & 0xF) + int((b >> (4 * i)) & 0xF);
      if (e > 15) throw std::overflow_error("packed exponent overflow");
      r |= (Key(e) << (4 * i));
    }
    return r;
  }

  int nvars_;
  std::map<Key, Gaussian> terms_;
};

inline Polynomial operator*(const Gaussian& c, const Polynomial& p) {
  return p.scaled(c);
}

}  // namespace hkt
