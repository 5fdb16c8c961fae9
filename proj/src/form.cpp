#include "hkt/form.hpp"

#include <map>

namespace hkt {

CxForm to_cx(const Form& f) {
  const ComplexFrame& frame = ComplexFrame::get(f.n);
  CxForm r = CxForm::zero(f.n);
  for (const auto& [m, p] : f.terms)
    for (const auto& t : frame.real_to_cx(m))
      r.add_term(t.mask, p.scaled(t.coef.value()));
  return r;
}

Form to_real(const CxForm& f) {
  const ComplexFrame& frame = ComplexFrame::get(f.n);
  Form r = Form::zero(f.n);
  for (const auto& [m, p] : f.terms)
    for (const auto& t : frame.cx_to_real(m))
      r.add_term(t.mask, p.scaled(t.coef.value()));
  return r;
}

CxForm cx_conj(const CxForm& f) {
  const int n = f.n;
  CxForm r = CxForm::zero(n);
  const Mask lower = (Mask(1) << (2 * n)) - 1;
  for (const auto& [m, p] : f.terms) {
    Mask h = m & lower;
    Mask a = m >> (2 * n);
    Mask swapped = (h << (2 * n)) | a;
    // Sign from reordering: generators map pairwise (c <-> c+2n), preserving
    // relative order inside each group; crossing pairs contribute
    // (-1)^{#(h)*#(a)} only... count inversions directly for safety.
    // The swapped monomial in ascending order is e_{a-group} ^ e_{h-group}:
    // moving the h-block (now high indices) past the a-block (now low).
    int ph = std::popcount(h), pa = std::popcount(a);
    int sign = ((ph * pa) % 2 == 0) ? 1 : -1;
    Polynomial q = p.conj();
    if (sign < 0) q = -q;
    r.add_term(swapped, q);
  }
  return r;
}

Form hodge_star(const Form& a) {
  if (!a.is_homogeneous())
    throw std::domain_error("hodge_star: non-homogeneous form");
  if (!a.has_constant_coefficients())
    throw std::domain_error("hodge_star: non-constant coefficients");
  const Mask full = (Mask(1) << (4 * a.n)) - 1;
  Form r = Form::zero(a.n);
  for (const auto& [m, p] : a.terms) {
    Mask comp = full & ~m;
    int s = wedge_sign(m, comp);
    r.add_term(comp, s < 0 ? -p : p);
  }
  return r;
}

namespace {

// Gram matrix of a degree-k slice for covector Gram W (minor determinants).
Gaussian minor_det(const Matrix& w, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
  const int k = int(rows.size());
  if (k == 0) return Gaussian(1);
  Matrix g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = w(rows[i], cols[j]);
  Gaussian det(1);
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r2 = col; r2 < k; ++r2)
      if (!g(r2, col).is_zero()) {
        pivot = r2;
        break;
      }
    if (pivot < 0) return Gaussian(0);
    if (pivot != col) {
      for (int c2 = 0; c2 < k; ++c2) std::swap(g(pivot, c2), g(col, c2));
      det = -det;
    }
    det *= g(col, col);
    Gaussian inv = g(col, col).inv();
    for (int r2 = col + 1; r2 < k; ++r2) {
      if (g(r2, col).is_zero()) continue;
      Gaussian f = g(r2, col) * inv;
      for (int c2 = col; c2 < k; ++c2) g(r2, c2) -= f * g(col, c2);
    }
  }
  return det;
}

std::vector<int> mask_bits(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

}  // namespace

Form hodge_star(const Form& a, const Matrix& gram) {
  if (!a.is_homogeneous())
    throw std::domain_error("hodge_star: non-homogeneous form");
  if (!a.has_constant_coefficients())
    throw std::domain_error("hodge_star: non-constant coefficients");
  const int ngen = 4 * a.n;
  if (gram.rows() != ngen || gram.cols() != ngen)
    throw std::invalid_argument("hodge_star: gram size mismatch");
  if (a.is_zero()) return a;

  const Matrix w = inverse_of(gram);  // covector Gram
  Gaussian detg(1);
  {
    // det(G) via elimination on a copy
    Matrix g = gram;
    Gaussian det(1);
    const int k = ngen;
    for (int col = 0; col < k; ++col) {
      int pivot = -1;
      for (int r2 = col; r2 < k; ++r2)
        if (!g(r2, col).is_zero()) {
          pivot = r2;
          break;
        }
      if (pivot < 0) throw std::domain_error("hodge_star: degenerate gram");
      if (pivot != col) {
        for (int c2 = 0; c2 < k; ++c2) std::swap(g(pivot, c2), g(col, c2));
        det = -det;
      }
      det *= g(col, col);
      Gaussian inv = g(col, col).inv();
      for (int r2 = col + 1; r2 < k; ++r2) {
        if (g(r2, col).is_zero()) continue;
        Gaussian f = g(r2, col) * inv;
        for (int c2 = col; c2 < k; ++c2) g(r2, c2) -= f * g(col, c2);
      }
    }
    detg = det;
  }
  if (!detg.is_real() || sgn(detg.re) <= 0)
    throw std::domain_error("hodge_star: gram not positive");
  const Rational vol_scale = exact_sqrt(detg.re);

  const int k = a.degree();
  const Mask full = (Mask(1) << ngen) - 1;
  auto slice = degree_masks(ngen, k);

  Form r = Form::zero(a.n);
  for (Mask s : slice) {
    // coefficient of e_{s^c} in *a comes from the test form e_s:
    // e_s ^ *a = <e_s, a>_G Vol_G
    Gaussian inner(0);
    auto rows = mask_bits(s);
    for (const auto& [t, p] : a.terms) {
      Gaussian det = minor_det(w, rows, mask_bits(t));
      if (!det.is_zero()) inner += det * p.constant_value();
    }
    if (inner.is_zero()) continue;
    Mask comp = full & ~s;
    int sign = wedge_sign(s, comp);
    Gaussian coef = inner * Gaussian(vol_scale);
    if (sign < 0) coef = -coef;
    r.add_term(comp, Polynomial::constant(ngen, coef));
  }
  return r;
}

Gaussian hermitian_pair(const Form& a, const Form& b) {
  a.check_same(b);
  if (!a.has_constant_coefficients() || !b.has_constant_coefficients())
    throw std::domain_error("hermitian_pair: non-constant coefficients");
  if (!a.is_zero() && !b.is_zero() && a.degree() != b.degree())
    throw std::domain_error("hermitian_pair: degree mismatch");
  Gaussian acc(0);
  for (const auto& [m, p] : a.terms) {
    auto it = b.terms.find(m);
    if (it != b.terms.end())
      acc += p.constant_value() * it->second.constant_value().conj();
  }
  return acc;
}

Gaussian hermitian_pair(const CxForm& a, const CxForm& b) {
  a.check_same(b);
  if (!a.is_zero() && !b.is_zero() && a.degree() != b.degree())
    throw std::domain_error("hermitian_pair: degree mismatch");
  // <dZ_S, dZ_S> = 2^{|S|}; distinct complex monomials are orthogonal.
  Gaussian acc(0);
  for (const auto& [m, p] : a.terms) {
    auto it = b.terms.find(m);
    if (it == b.terms.end()) continue;
    Rational scale(1);
    for (int i = 0; i < mask_degree(m); ++i) scale *= 2;
    acc += p.constant_value() * it->second.constant_value().conj() *
           Gaussian(scale);
  }
  return acc;
}

Gaussian hermitian_pair(const Form& a, const Form& b, const Matrix& gram) {
  a.check_same(b);
  if (!a.is_zero() && !b.is_zero() && a.degree() != b.degree())
    throw std::domain_error("hermitian_pair: degree mismatch");
  const Matrix w = inverse_of(gram);
  Gaussian acc(0);
  for (const auto& [ma, pa] : a.terms) {
    auto rows = mask_bits(ma);
    for (const auto& [mb, pb] : b.terms) {
      Gaussian det = minor_det(w, rows, mask_bits(mb));
      if (!det.is_zero())
        acc += det * pa.constant_value() * pb.constant_value().conj();
    }
  }
  return acc;
}

Gaussian eval_two_form(const Form& f, const std::vector<Gaussian>& u,
                       const std::vector<Gaussian>& v) {
  Gaussian acc(0);
  for (const auto& [m, p] : f.terms) {
    auto bits = mask_bits(m);
    if (bits.size() != 2)
      throw std::domain_error("eval_two_form: not a 2-form");
    const Gaussian c = p.constant_value();
    acc += c * (u[bits[0]] * v[bits[1]] - u[bits[1]] * v[bits[0]]);
  }
  return acc;
}

Gaussian top_coefficient(const Form& f) {
  const Mask full = (Mask(1) << (4 * f.n)) - 1;
  for (const auto& [m, p] : f.terms)
    if (m != full) throw std::domain_error("top_coefficient: not top degree");
  return f.coefficient(full);
}

Gaussian top_coefficient(const CxForm& f) {
  // convert: the complex top monomial is proportional to the volume form
  return top_coefficient(to_real(f));
}

std::vector<Gaussian> coords_on(const CxForm& f, const SliceIndex& slice) {
  std::vector<Gaussian> v(slice.size());
  for (const auto& [m, p] : f.terms) {
    int i = slice.index_of(m);
    if (i < 0) throw std::domain_error("coords_on: form outside slice");
    v[i] = p.constant_value();
  }
  return v;
}

CxForm from_coords(int n, const SliceIndex& slice,
                   const std::vector<Gaussian>& coeffs) {
  CxForm f = CxForm::zero(n);
  for (int i = 0; i < slice.size(); ++i)
    if (!coeffs[i].is_zero())
      f.terms.emplace(slice.mask(i),
                      Polynomial::constant(4 * n, coeffs[i]));
  return f;
}

}  // namespace hkt
