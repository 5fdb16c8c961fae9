#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hkt {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator), which is exactly the invariant we need.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Serialized as "p/q", with "/q" omitted for integers.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: " + s);
  r.canonicalize();
  return r;
}

// Approximate size of the numerator/denominator, used for pivot selection.
inline size_t bit_size(const Rational& r) {
  return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

// Exact square root; throws unless the argument is a perfect square.
inline Rational exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) throw std::domain_error("exact_sqrt of negative rational");
  mpz_class num_root, num_rem, den_root, den_rem;
  mpz_sqrtrem(num_root.get_mpz_t(), num_rem.get_mpz_t(),
              r.get_num().get_mpz_t());
  mpz_sqrtrem(den_root.get_mpz_t(), den_rem.get_mpz_t(),
              r.get_den().get_mpz_t());
  if (num_rem != 0 || den_rem != 0)
    throw std::domain_error("exact_sqrt: not a perfect square");
  return Rational(num_root, den_root);
}

// Gaussian rational a + b*i: the coefficient field for all complexified
// computations. Closed under +, *, conjugation and inversion.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() : re(0), im(0) {}
  Gaussian(const Rational& r) : re(r), im(0) {}
  Gaussian(long r) : re(r), im(0) {}
  Gaussian(const Rational& r, const Rational& i) : re(r), im(i) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }
  // i^t for t mod 4.
  static Gaussian i_pow(int t) {
    switch (((t % 4) + 4) % 4) {
      case 0: return Gaussian(1);
      case 1: return Gaussian(Rational(0), Rational(1));
      case 2: return Gaussian(-1);
      default: return Gaussian(Rational(0), Rational(-1));
    }
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Gaussian conj() const { return Gaussian(re, -im); }
  Rational norm() const { return re * re + im * im; }

  Gaussian operator-() const { return Gaussian(-re, -im); }
  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re + b.re, a.im + b.im);
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re - b.re, a.im - b.im);
  }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  Gaussian inv() const {
    if (is_zero()) throw std::domain_error("division by zero Gaussian");
    Rational n = norm();
    return Gaussian(re / n, -im / n);
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    return a * b.inv();
  }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  Gaussian& operator/=(const Gaussian& o) { return *this = *this * o.inv(); }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) {
    return !(a == b);
  }
};

inline size_t bit_size(const Gaussian& g) {
  return bit_size(g.re) + bit_size(g.im);
}

inline std::string to_string(const Gaussian& g) {
  if (g.is_real()) return to_string(g.re);
  if (sgn(g.re) == 0) return to_string(g.im) + "*i";
  std::string s = to_string(g.re);
  if (sgn(g.im) > 0) s += "+";
  return s + to_string(g.im) + "*i";
}

}  // namespace hkt
