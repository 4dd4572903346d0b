#pragma once

// Bimodules, semidirect products and O-operators T: M → A with
// T(m)·T(n) = T(r(m, T(n)) + l(T(m), n)).
//
// Actions are stored per algebra basis element: left_action(i) is the m×m
// matrix of f ↦ l(e_i, f), right_action(i) the matrix of f ↦ r(f, e_i).

#include <string>
#include <utility>
#include <vector>

#include "antiflex/nijenhuis.hpp"

namespace antiflex {

template <class S>
class Bimodule {
 public:
  Bimodule() = default;

  Bimodule(Algebra<S> algebra, int moddim, std::vector<Mat<S>> left, std::vector<Mat<S>> right)
      : algebra_(std::move(algebra)), moddim_(moddim), left_(std::move(left)), right_(std::move(right)) {
    const auto n = static_cast<std::size_t>(algebra_.dim());
    require_dims(left_.size() == n && right_.size() == n, "one left and one right action matrix per algebra basis element");
    for (const auto* side : {&left_, &right_})
      for (const auto& m : *side) require_map(m, moddim_, moddim_, algebra_.field(), "module action");
  }

  /// Zero actions of `algebra` on an m-dimensional space.
  static Bimodule zero(Algebra<S> algebra, int moddim) {
    std::vector<Mat<S>> z(static_cast<std::size_t>(algebra.dim()), Mat<S>::Zero(moddim, moddim));
    return Bimodule(std::move(algebra), moddim, z, z);
  }

  const Algebra<S>& algebra() const { return algebra_; }
  const FieldSpec& field() const { return algebra_.field(); }
  int dim() const { return algebra_.dim(); }
  int moddim() const { return moddim_; }
  const Mat<S>& left_action(int i) const { return left_[static_cast<std::size_t>(i)]; }
  const Mat<S>& right_action(int i) const { return right_[static_cast<std::size_t>(i)]; }

  /// Matrix of f ↦ l(a, f).
  Mat<S> left_of(const Vec<S>& a) const { return weighted(left_, a); }
  /// Matrix of f ↦ r(f, a).
  Mat<S> right_of(const Vec<S>& a) const { return weighted(right_, a); }

  Vec<S> l(const Vec<S>& a, const Vec<S>& m) const { return left_of(a) * m; }
  Vec<S> r(const Vec<S>& m, const Vec<S>& a) const { return right_of(a) * m; }

  friend bool operator==(const Bimodule& a, const Bimodule& b) {
    return a.algebra_ == b.algebra_ && a.moddim_ == b.moddim_ && a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  Mat<S> weighted(const std::vector<Mat<S>>& side, const Vec<S>& a) const {
    require_vector(algebra_, a);
    Mat<S> out = Mat<S>::Zero(moddim_, moddim_);
    for (int i = 0; i < algebra_.dim(); ++i)
      if (!a(i).is_zero()) out += a(i) * side[static_cast<std::size_t>(i)];
    return out;
  }

  Algebra<S> algebra_;
  int moddim_ = 0;
  std::vector<Mat<S>> left_;
  std::vector<Mat<S>> right_;
};

/// l(a·b, m) − l(a, l(b,m)) = r(r(m,b), a) − r(m, b·a)                (clause "first")
/// l(a, r(m,b)) − r(l(a,m), b) = l(b, r(m,a)) − r(l(b,m), a)          (clause "second")
/// over tuples (e_i, e_j, f_α) in lexicographic order.
template <class S>
CheckReport<S> check_bimodule(const Bimodule<S>& b) {
  const Algebra<S>& a = b.algebra();
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      const Mat<S>& li = b.left_action(i);
      const Mat<S>& lj = b.left_action(j);
      const Mat<S>& ri = b.right_action(i);
      const Mat<S>& rj = b.right_action(j);
      const Mat<S> first = b.left_of(Vec<S>(a.basis_product(i, j))) - li * lj - ri * rj +
                           b.right_of(Vec<S>(a.basis_product(j, i)));
      const Mat<S> second = li * rj - rj * li - lj * ri + ri * lj;
      for (int m = 0; m < b.moddim(); ++m) {
        if (!is_zero(first.col(m))) return CheckReport<S>::failed("bimodule", {i, j, m}, Vec<S>(first.col(m)), "first");
        if (!is_zero(second.col(m))) return CheckReport<S>::failed("bimodule", {i, j, m}, Vec<S>(second.col(m)), "second");
      }
    }
  }
  return CheckReport<S>::passed("bimodule");
}

/// A* with l*(a,f)(b) = f(b·a) and r*(f,a)(b) = f(a·b).
template <class S>
Bimodule<S> dual_bimodule(const Algebra<S>& a) {
  std::vector<Mat<S>> left, right;
  for (int i = 0; i < a.dim(); ++i) {
    const Vec<S> e = unit_vector<S>(a.field(), a.dim(), i);
    left.push_back(right_mult(a, e).transpose());
    right.push_back(a.left(i).transpose());
  }
  return Bimodule<S>(a, a.dim(), std::move(left), std::move(right));
}

/// A acting on itself by left and right multiplication.
template <class S>
Bimodule<S> adjoint_bimodule(const Algebra<S>& a) {
  std::vector<Mat<S>> left, right;
  for (int i = 0; i < a.dim(); ++i) {
    left.push_back(a.left(i));
    right.push_back(right_mult(a, unit_vector<S>(a.field(), a.dim(), i)));
  }
  return Bimodule<S>(a, a.dim(), std::move(left), std::move(right));
}

/// (a,m)∗(b,n) = (a·b, l(a,n) + r(m,b)) on A⊕M, A-block first.
template <class S>
Algebra<S> semidirect_product(const Bimodule<S>& b) {
  const Algebra<S>& a = b.algebra();
  const int n = a.dim(), m = b.moddim();
  return Algebra<S>::from_products(a.field(), n + m, [&](int i, int j) {
    Vec<S> out = Vec<S>::Zero(n + m);
    if (i < n && j < n) out.head(n) = a.basis_product(i, j);
    if (i < n && j >= n) out.tail(m) = b.left_action(i).col(j - n);
    if (i >= n && j < n) out.tail(m) = b.right_action(j).col(i - n);
    return out;
  });
}

template <class S>
void require_module_operator(const Bimodule<S>& b, const Mat<S>& t) {
  require_map(t, b.dim(), b.moddim(), b.field(), "module operator");
}

/// T(m)·T(n) − T(r(m,T(n)) + l(T(m),n)) at module basis pairs.
template <class S>
CheckReport<S> check_o_operator(const Bimodule<S>& b, const Mat<S>& t) {
  require_module_operator(b, t);
  const Algebra<S>& a = b.algebra();
  for (int p = 0; p < b.moddim(); ++p) {
    const Vec<S> tp = t.col(p);
    const Mat<S> l_tp = b.left_of(tp);
    for (int q = 0; q < b.moddim(); ++q) {
      const Vec<S> tq = t.col(q);
      Vec<S> d = multiply(a, tp, tq) - t * (b.right_of(tq).col(p) + l_tp.col(q));
      if (!is_zero(d)) return CheckReport<S>::failed("o_operator", {p, q}, std::move(d));
    }
  }
  return CheckReport<S>::passed("o_operator");
}

/// m·_T n = r(m,T(n)) + l(T(m),n) on M.
template <class S>
Algebra<S> o_induced_module_algebra(const Bimodule<S>& b, const Mat<S>& t) {
  require_module_operator(b, t);
  return Algebra<S>::from_products(b.field(), b.moddim(), [&](int p, int q) {
    return Vec<S>(b.right_of(Vec<S>(t.col(q))).col(p) + b.left_of(Vec<S>(t.col(p))).col(q));
  });
}

/// Closure of {(T(f_α), f_α)} in the semidirect product.
template <class S>
CheckReport<S> o_graph_check(const Bimodule<S>& b, const Mat<S>& t) {
  require_module_operator(b, t);
  const BlockLayout layout{{b.dim(), b.moddim()}};
  std::vector<Vec<S>> gens;
  for (int p = 0; p < b.moddim(); ++p)
    gens.push_back(layout.concat<S>({Vec<S>(t.col(p)), unit_vector<S>(b.field(), b.moddim(), p)}));
  CheckReport<S> rep = check_span_closed(semidirect_product(b), gens);
  rep.identity = "o_graph_closed";
  return rep;
}

/// m≺n = r(m,T(n)),  m≻n = l(T(m),n)
template <class S>
PreAntiFlexible<S> o_pre_anti_flexible(const Bimodule<S>& b, const Mat<S>& t) {
  require_module_operator(b, t);
  auto prec = Algebra<S>::from_products(b.field(), b.moddim(), [&](int p, int q) {
    return Vec<S>(b.right_of(Vec<S>(t.col(q))).col(p));
  });
  auto succ = Algebra<S>::from_products(b.field(), b.moddim(), [&](int p, int q) {
    return Vec<S>(b.left_of(Vec<S>(t.col(p))).col(q));
  });
  return PreAntiFlexible<S>(std::move(prec), std::move(succ));
}

/// m⋆n = l(T(m),n) − r(n,T(m))
template <class S>
Algebra<S> o_left_symmetric(const Bimodule<S>& b, const Mat<S>& t) {
  require_module_operator(b, t);
  return Algebra<S>::from_products(b.field(), b.moddim(), [&](int p, int q) {
    const Vec<S> tp = t.col(p);
    return Vec<S>(b.left_of(tp).col(q) - b.right_of(tp).col(q));
  });
}

/// m∗n = r(n,T(m)) − l(T(m),n)
template <class S>
Algebra<S> o_right_symmetric(const Bimodule<S>& b, const Mat<S>& t) {
  require_module_operator(b, t);
  return Algebra<S>::from_products(b.field(), b.moddim(), [&](int p, int q) {
    const Vec<S> tp = t.col(p);
    return Vec<S>(b.right_of(tp).col(q) - b.left_of(tp).col(q));
  });
}

/// A as a bimodule over (M,·_T): l_T(m,a) = T(m)·a − T(r(m,a)),
/// r_T(a,m) = a·T(m) − T(l(a,m)). T must be an O-operator.
template <class S>
Bimodule<S> extended_bimodule(const Bimodule<S>& b, const Mat<S>& t) {
  const CheckReport<S> ok = check_o_operator(b, t);
  if (!ok.pass) throw Error(ErrorKind::PreconditionFailed, "extended_bimodule requires an O-operator");
  const Algebra<S>& a = b.algebra();
  const int n = a.dim();
  std::vector<Mat<S>> left, right;
  for (int p = 0; p < b.moddim(); ++p) {
    const Vec<S> tp = t.col(p);
    Mat<S> r_of_m(b.moddim(), n);  // a ↦ r(f_p, a)
    Mat<S> l_of_m(b.moddim(), n);  // a ↦ l(a, f_p)
    for (int k = 0; k < n; ++k) {
      r_of_m.col(k) = b.right_action(k).col(p);
      l_of_m.col(k) = b.left_action(k).col(p);
    }
    left.push_back(left_mult(a, tp) - t * r_of_m);
    right.push_back(right_mult(a, tp) - t * l_of_m);
  }
  return Bimodule<S>(o_induced_module_algebra(b, t), n, std::move(left), std::move(right));
}

/// φ: A → A', ψ: M → M'. Clauses in order: "multiplicative", "intertwines"
/// (φT = T'ψ), "left_equivariant", "right_equivariant".
template <class S>
CheckReport<S> check_o_morphism(const Bimodule<S>& src, const Mat<S>& t, const Bimodule<S>& dst, const Mat<S>& t2,
                                const Mat<S>& phi, const Mat<S>& psi) {
  require_module_operator(src, t);
  require_module_operator(dst, t2);
  require_map(psi, dst.moddim(), src.moddim(), src.field(), "module morphism");
  CheckReport<S> mult = check_algebra_morphism(src.algebra(), dst.algebra(), phi);
  if (!mult.pass) {
    mult.identity = "o_morphism";
    return mult;
  }
  const Mat<S> tw = phi * t - t2 * psi;
  for (int p = 0; p < src.moddim(); ++p)
    if (!is_zero(tw.col(p))) return CheckReport<S>::failed("o_morphism", {p}, Vec<S>(tw.col(p)), "intertwines");
  for (int i = 0; i < src.dim(); ++i) {
    const Vec<S> pe = phi.col(i);
    const Mat<S> d = psi * src.left_action(i) - dst.left_of(pe) * psi;
    for (int p = 0; p < src.moddim(); ++p)
      if (!is_zero(d.col(p))) return CheckReport<S>::failed("o_morphism", {i, p}, Vec<S>(d.col(p)), "left_equivariant");
  }
  for (int i = 0; i < src.dim(); ++i) {
    const Vec<S> pe = phi.col(i);
    const Mat<S> d = psi * src.right_action(i) - dst.right_of(pe) * psi;
    for (int p = 0; p < src.moddim(); ++p)
      if (!is_zero(d.col(p))) return CheckReport<S>::failed("o_morphism", {p, i}, Vec<S>(d.col(p)), "right_equivariant");
  }
  return CheckReport<S>::passed("o_morphism");
}

/// Closure of {((T(m), m), (φT(m), ψ(m)))} in (A⊕M)⊕(A'⊕M'), both halves semidirect.
template <class S>
CheckReport<S> o_morphism_graph_check(const Bimodule<S>& src, const Mat<S>& t, const Bimodule<S>& dst,
                                      const Mat<S>& t2, const Mat<S>& phi, const Mat<S>& psi) {
  require_module_operator(src, t);
  require_module_operator(dst, t2);
  const Algebra<S> ambient = direct_sum(semidirect_product(src), semidirect_product(dst));
  const BlockLayout layout{{src.dim(), src.moddim(), dst.dim(), dst.moddim()}};
  std::vector<Vec<S>> gens;
  for (int p = 0; p < src.moddim(); ++p) {
    const Vec<S> tp = t.col(p);
    gens.push_back(layout.concat<S>(
        {tp, unit_vector<S>(src.field(), src.moddim(), p), Vec<S>(phi * tp), Vec<S>(psi.col(p))}));
  }
  CheckReport<S> rep = check_span_closed(ambient, gens);
  rep.identity = "o_morphism_graph_closed";
  return rep;
}

/// [[0, T], [0, −λ·Id]] on A⊕M.
template <class S>
WeightedOperator<S> lift_rb_from_o(const Bimodule<S>& b, const Mat<S>& t, const S& weight) {
  require_module_operator(b, t);
  const int n = b.dim(), m = b.moddim();
  Mat<S> r = Mat<S>::Zero(n + m, n + m);
  r.topRightCorner(n, m) = t;
  r.bottomRightCorner(m, m) = -weight * identity_map<S>(b.field(), m);
  return {std::move(r), weight};
}

enum class LiftVariant { Nilpotent, Idempotent };

/// [[0, T], [0, 0]] (Nilpotent) or [[0, T], [0, Id]] (Idempotent) on A⊕M.
template <class S>
Mat<S> lift_nijenhuis_from_o(const Bimodule<S>& b, const Mat<S>& t, LiftVariant variant) {
  require_module_operator(b, t);
  const int n = b.dim(), m = b.moddim();
  Mat<S> r = Mat<S>::Zero(n + m, n + m);
  r.topRightCorner(n, m) = t;
  if (variant == LiftVariant::Idempotent) r.bottomRightCorner(m, m) = identity_map<S>(b.field(), m);
  return r;
}

}  // namespace antiflex
