#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hkt/basis.hpp"
#include "hkt/linalg.hpp"
#include "hkt/polynomial.hpp"

namespace hkt {

namespace detail {

template <typename Derived>
struct FormOps {
  int n = 1;  // quaternionic dimension; 4n real coordinates/generators
  std::map<Mask, Polynomial> terms;

  int nvars() const { return 4 * n; }
  bool is_zero() const { return terms.empty(); }

  void add_term(Mask m, const Polynomial& p) {
    if (p.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  // -1 for the zero form; the common degree when homogeneous; throws else.
  int degree() const {
    int d = -1;
    for (const auto& [m, p] : terms) {
      int k = mask_degree(m);
      if (d < 0)
        d = k;
      else if (d != k)
        throw std::domain_error("form is not homogeneous");
    }
    return d;
  }
  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [m, p] : terms) {
      int k = mask_degree(m);
      if (d < 0)
        d = k;
      else if (d != k)
        return false;
    }
    return true;
  }
  bool has_constant_coefficients() const {
    for (const auto& [m, p] : terms)
      if (!p.is_constant()) return false;
    return true;
  }

  Derived& self() { return static_cast<Derived&>(*this); }
  const Derived& self() const { return static_cast<const Derived&>(*this); }

  Derived operator-() const {
    Derived r;
    r.n = n;
    for (const auto& [m, p] : terms) r.terms.emplace(m, -p);
    return r;
  }
  Derived& operator+=(const Derived& o) {
    check_same(o);
    for (const auto& [m, p] : o.terms) add_term(m, p);
    return self();
  }
  Derived& operator-=(const Derived& o) {
    check_same(o);
    for (const auto& [m, p] : o.terms) add_term(m, -p);
    return self();
  }
  friend Derived operator+(Derived a, const Derived& b) {
    a += b;
    return a;
  }
  friend Derived operator-(Derived a, const Derived& b) {
    a -= b;
    return a;
  }
  friend bool operator==(const Derived& a, const Derived& b) {
    return a.n == b.n && a.terms == b.terms;
  }

  Derived scaled(const Gaussian& c) const {
    Derived r;
    r.n = n;
    if (c.is_zero()) return r;
    for (const auto& [m, p] : terms) r.terms.emplace(m, p.scaled(c));
    return r;
  }
  Derived scaled(const Polynomial& f) const {
    Derived r;
    r.n = n;
    for (const auto& [m, p] : terms) {
      Polynomial q = p * f;
      if (!q.is_zero()) r.terms.emplace(m, q);
    }
    return r;
  }

  friend Derived operator*(const Gaussian& c, const Derived& f) {
    return f.scaled(c);
  }

  // Graded wedge product.
  friend Derived wedge(const Derived& a, const Derived& b) {
    a.check_same(b);
    Derived r;
    r.n = a.n;
    for (const auto& [ma, pa] : a.terms)
      for (const auto& [mb, pb] : b.terms) {
        int s = wedge_sign(ma, mb);
        if (s == 0) continue;
        Polynomial p = pa * pb;
        if (s < 0) p = -p;
        r.add_term(ma | mb, p);
      }
    return r;
  }

  Derived wedge_pow(int k) const {
    Derived r = Derived::unit(n);
    for (int i = 0; i < k; ++i) r = wedge(r, self());
    return r;
  }

  // Coefficient-wise conjugation. In the real basis this is complex
  // conjugation of forms; in the complex basis use CxForm::conj instead.
  Derived coeff_conj() const {
    Derived r;
    r.n = n;
    for (const auto& [m, p] : terms) r.terms.emplace(m, p.conj());
    return r;
  }

  Derived eval_at(const std::vector<Rational>& point) const {
    Derived r;
    r.n = n;
    for (const auto& [m, p] : terms) {
      Gaussian v = p.eval(point);
      if (!v.is_zero())
        r.terms.emplace(m, Polynomial::constant(nvars(), v));
    }
    return r;
  }

  Gaussian coefficient(Mask m) const {
    auto it = terms.find(m);
    if (it == terms.end()) return Gaussian(0);
    if (!it->second.is_constant())
      throw std::domain_error("coefficient: non-constant term");
    return it->second.constant_value();
  }
  const Polynomial* coefficient_poly(Mask m) const {
    auto it = terms.find(m);
    return it == terms.end() ? nullptr : &it->second;
  }

  void check_same(const FormOps& o) const {
    if (n != o.n)
      throw std::invalid_argument("form dimension (n) mismatch");
  }
};

}  // namespace detail

// Differential form stored in the real generator basis
// (dx_1, dy_1, dz_1, dw_1, ...). This is the canonical representation.
struct Form : detail::FormOps<Form> {
  static Form zero(int n) {
    Form f;
    f.n = n;
    return f;
  }
  static Form unit(int n) {  // the 0-form 1
    Form f;
    f.n = n;
    f.terms.emplace(0, Polynomial::constant(4 * n, Gaussian(1)));
    return f;
  }
  static Form monomial(int n, Mask m, const Gaussian& c) {
    Form f;
    f.n = n;
    if (!c.is_zero()) f.terms.emplace(m, Polynomial::constant(4 * n, c));
    return f;
  }
  static Form from_function(int n, const Polynomial& p) {
    Form f;
    f.n = n;
    if (!p.is_zero()) f.terms.emplace(0, p);
    return f;
  }
};

// Differential form in the complex generator basis
// (dzeta^1..dzeta^{2n}, conj(dzeta^1)..conj(dzeta^{2n})); used internally for
// bidegree-aware computations.
struct CxForm : detail::FormOps<CxForm> {
  static CxForm zero(int n) {
    CxForm f;
    f.n = n;
    return f;
  }
  static CxForm unit(int n) {
    CxForm f;
    f.n = n;
    f.terms.emplace(0, Polynomial::constant(4 * n, Gaussian(1)));
    return f;
  }
  static CxForm monomial(int n, Mask m, const Gaussian& c) {
    CxForm f;
    f.n = n;
    if (!c.is_zero()) f.terms.emplace(m, Polynomial::constant(4 * n, c));
    return f;
  }

  // (p,q) of a mask.
  std::pair<int, int> mask_bidegree(Mask m) const {
    return {holo_degree(m, n), anti_degree(m, n)};
  }
  bool is_pure_bidegree(int* p_out = nullptr, int* q_out = nullptr) const {
    int p = -1, q = -1;
    for (const auto& [m, poly] : terms) {
      auto [mp, mq] = mask_bidegree(m);
      if (p < 0) {
        p = mp;
        q = mq;
      } else if (p != mp || q != mq) {
        return false;
      }
    }
    if (p_out) *p_out = p;
    if (q_out) *q_out = q;
    return true;
  }
  CxForm bidegree_component(int p, int q) const {
    CxForm r = zero(n);
    for (const auto& [m, poly] : terms) {
      auto [mp, mq] = mask_bidegree(m);
      if (mp == p && mq == q) r.terms.emplace(m, poly);
    }
    return r;
  }
  std::map<std::pair<int, int>, CxForm> bidegree_components() const {
    std::map<std::pair<int, int>, CxForm> out;
    for (const auto& [m, poly] : terms) {
      auto pq = mask_bidegree(m);
      auto it = out.find(pq);
      if (it == out.end()) {
        CxForm f = zero(n);
        f.terms.emplace(m, poly);
        out.emplace(pq, std::move(f));
      } else {
        it->second.terms.emplace(m, poly);
      }
    }
    return out;
  }
};

// Conversions between the two bases (exact).
CxForm to_cx(const Form& f);
Form to_real(const CxForm& f);

// Complex conjugation of a complex-basis form: conjugates coefficients and
// swaps holomorphic/antiholomorphic generators (with the reordering sign).
CxForm cx_conj(const CxForm& f);

// Euclidean Hodge star on constant-coefficient homogeneous forms, with the
// orientation Vol = dx_1^dy_1^dz_1^dw_1^... .
Form hodge_star(const Form& a);

// Pointwise Hodge star for a rational SPD Gram matrix on V. Requires the
// volume normalization sqrt(det G) to be rational, which holds for every
// complex-Hermitian (in particular quaternionic-Hermitian) Gram matrix.
Form hodge_star(const Form& a, const Matrix& gram);

// Hermitian inner product of constant-coefficient forms of equal degree;
// the real generator monomials form an orthonormal basis. Conjugate-linear
// in the second argument.
Gaussian hermitian_pair(const Form& a, const Form& b);
Gaussian hermitian_pair(const CxForm& a, const CxForm& b);

// Inner product induced by a Gram matrix on V (covector Gram is its inverse).
Gaussian hermitian_pair(const Form& a, const Form& b, const Matrix& gram);

// Evaluate a constant 2-form on two complexified vectors.
Gaussian eval_two_form(const Form& f, const std::vector<Gaussian>& u,
                       const std::vector<Gaussian>& v);

// Top-degree coefficient (multiple of the unit volume monomial).
Gaussian top_coefficient(const Form& f);
Gaussian top_coefficient(const CxForm& f);

// Coefficient vector of a constant form on a slice basis; throws if the form
// has support outside the slice.
std::vector<Gaussian> coords_on(const CxForm& f, const SliceIndex& slice);
CxForm from_coords(int n, const SliceIndex& slice,
                   const std::vector<Gaussian>& coeffs);

}  // namespace hkt
