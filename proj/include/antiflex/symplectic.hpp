#pragma once

// Cyclic nondegenerate skew forms and the pre-Lie product they induce.

#include "antiflex/identities.hpp"

namespace antiflex {

namespace detail {

template <class S>
Vec<S> scalar_vec(const S& s) {
  Vec<S> v(1);
  v(0) = s;
  return v;
}

template <class S>
void require_form(const Algebra<S>& a, const BilinearForm<S>& w) {
  require_map(w.omega, a.dim(), a.dim(), a.field(), "bilinear form");
  if (w.field != a.field()) throw Error(ErrorKind::FieldMismatch, "form and algebra over different fields");
}

// ω(p(a,b),c) + ω(p(b,c),a) + ω(p(c,a),b) at the first failing basis triple.
template <class S>
CheckReport<S> cyclic_sum(const Algebra<S>& p, const BilinearForm<S>& w, const std::string& name) {
  const int n = p.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const S s = (p.basis_product(i, j).transpose() * w.omega.col(k))(0, 0) +
                    (p.basis_product(j, k).transpose() * w.omega.col(i))(0, 0) +
                    (p.basis_product(k, i).transpose() * w.omega.col(j))(0, 0);
        if (!s.is_zero()) return CheckReport<S>::failed(name, {i, j, k}, scalar_vec(s));
      }
  return CheckReport<S>::passed(name);
}

}  // namespace detail

/// Skew (clause "skew"), nondegenerate by exact determinant (clause
/// "nondegenerate"), and ω(a·b,c) + ω(b·c,a) + ω(c·a,b) = 0 (clause "cyclic").
template <class S>
CheckReport<S> check_cyclic_form(const Algebra<S>& a, const BilinearForm<S>& w) {
  detail::require_form(a, w);
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const S s = w.omega(i, j) + w.omega(j, i);
      if (!s.is_zero()) return CheckReport<S>::failed("cyclic_form", {i, j}, detail::scalar_vec(s), "skew");
    }
  const S det = determinant<S>(w.omega);
  if (det.is_zero()) return CheckReport<S>::failed("cyclic_form", {}, detail::scalar_vec(det), "nondegenerate");
  CheckReport<S> cyc = detail::cyclic_sum(a, w, "cyclic_form");
  if (!cyc.pass) cyc.witness->clause = "cyclic";
  return cyc;
}

/// ω([a,b],c) + ω([b,c],a) + ω([c,a],b) = 0 on the commutator bracket.
template <class S>
CheckReport<S> check_symplectic_lie(const Algebra<S>& a, const BilinearForm<S>& w) {
  detail::require_form(a, w);
  return detail::cyclic_sum(commutator_algebra(a), w, "symplectic_lie");
}

/// ω(a∘b, c) − ω(b, [c,a]) at every basis triple.
template <class S>
CheckReport<S> check_symplectic_residual(const Algebra<S>& a, const BilinearForm<S>& w, const Algebra<S>& circ) {
  detail::require_form(a, w);
  require_dims(circ.dim() == a.dim(), "pre-Lie product lives on another space");
  const Algebra<S> br = commutator_algebra(a);
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const S s = (circ.basis_product(i, j).transpose() * w.omega.col(k))(0, 0) -
                    (w.omega.row(j) * br.basis_product(k, i))(0, 0);
        if (!s.is_zero()) return CheckReport<S>::failed("symplectic_residual", {i, j, k}, detail::scalar_vec(s));
      }
  return CheckReport<S>::passed("symplectic_residual");
}

/// The product a∘b defined by ω(a∘b, c) = ω(b, [c,a]). Requires a passing
/// check_cyclic_form and, unless `skip_ambient_check`, an anti-flexible input.
/// Each e_i∘e_j solves Ωᵀu = v with v_k = ω(e_j, [e_k, e_i]) against one
/// precomputed inverse; the residual is re-verified before returning.
template <class S>
Algebra<S> pre_lie_from_symplectic(const Algebra<S>& a, const BilinearForm<S>& w, bool skip_ambient_check = false) {
  const CheckReport<S> form = check_cyclic_form(a, w);
  if (!form.pass) throw Error(ErrorKind::PreconditionFailed, "form is not a cyclic symplectic form (" + form.witness->clause + ")");
  if (!skip_ambient_check && !satisfies(a, IdentityKind::AntiFlexible))
    throw Error(ErrorKind::PreconditionFailed, "algebra is not anti-flexible");
  const std::optional<Mat<S>> inv = inverse<S>(Mat<S>(w.omega.transpose()));
  if (!inv) throw Error(ErrorKind::SingularForm, "form matrix is singular");
  const Algebra<S> br = commutator_algebra(a);
  const int n = a.dim();
  Algebra<S> circ = Algebra<S>::from_products(a.field(), n, [&](int i, int j) {
    Vec<S> v(n);
    for (int k = 0; k < n; ++k) v(k) = (w.omega.row(j) * br.basis_product(k, i))(0, 0);
    return Vec<S>(*inv * v);
  });
  if (!check_symplectic_residual(a, w, circ).pass)
    throw Error(ErrorKind::SingularForm, "pre-Lie solve left a nonzero residual");
  return circ;
}

}  // namespace antiflex
