#pragma once

// Rota-Baxter operators of weight λ: R(a)·R(b) = R(a·R(b) + R(a)·b) + λR(a·b).

#include <string>
#include <tuple>
#include <vector>

#include "antiflex/identities.hpp"

namespace antiflex {

template <class S>
struct WeightedOperator {
  Mat<S> map;
  S weight;
};

template <class S>
void require_operator(const Algebra<S>& a, const Mat<S>& m, const char* what) {
  require_map(m, a.dim(), a.dim(), a.field(), what);
}

template <class S>
Identity<S> rota_baxter_identity(const S& weight) {
  const words::Vars<S> v;
  const auto& [x, y, z] = v;
  auto P = [](const Combination<S>& a, const Combination<S>& b) { return prod(0, a, b); };
  auto R = [](const Combination<S>& a) { return apply(0, a); };
  return {"rota_baxter", 2, P(R(x), R(y)) - R(P(x, R(y)) + P(R(x), y)) - weight * R(P(x, y))};
}

template <class S>
CheckReport<S> check_rota_baxter(const Algebra<S>& a, const WeightedOperator<S>& r) {
  require_operator(a, r.map, "rota-baxter operator");
  const Interpretation<S> in{{&a}, {&r.map}, a.dim()};
  return check_identity(rota_baxter_identity<S>(r.weight), in);
}

/// a ·_R b = a·R(b) + R(a)·b + λ a·b. Defined for any linear map.
template <class S>
Algebra<S> rb_induced_product(const Algebra<S>& a, const WeightedOperator<S>& r) {
  require_operator(a, r.map, "rota-baxter operator");
  const auto e = [&](int i) { return unit_vector<S>(a.field(), a.dim(), i); };
  return Algebra<S>::from_products(a.field(), a.dim(), [&](int i, int j) {
    return Vec<S>(multiply(a, e(i), Vec<S>(r.map.col(j))) + multiply(a, Vec<S>(r.map.col(i)), e(j)) +
                  r.weight * a.basis_product(i, j));
  });
}

/// Seven-term expansion of the induced associator in plain associators.
template <class S>
Vec<S> rb_associator_expansion(const Algebra<S>& a, const WeightedOperator<S>& r, const Vec<S>& x, const Vec<S>& y,
                               const Vec<S>& z) {
  require_operator(a, r.map, "rota-baxter operator");
  const Vec<S> rx = r.map * x, ry = r.map * y, rz = r.map * z;
  const S& l = r.weight;
  return associator(a, x, ry, rz) + associator(a, rx, y, rz) + associator(a, rx, ry, z) +
         l * associator(a, rx, y, z) + l * associator(a, x, ry, z) + l * associator(a, x, y, rz) +
         (l * l) * associator(a, x, y, z);
}

namespace detail {

// λ/2, defined in characteristic 2 only for λ = 0.
template <class S>
S half_weight(const FieldSpec& field, const S& weight, const char* what) {
  if (weight.is_zero()) return S(0);
  require_char_not_2(field, what);
  return weight * scalar_div<S>(field, 1, 2);
}

}  // namespace detail

/// a≺b = a·R(b) + (λ/2)a·b,  a≻b = R(a)·b + (λ/2)a·b.
template <class S>
PreAntiFlexible<S> rb_pre_anti_flexible(const Algebra<S>& a, const WeightedOperator<S>& r) {
  require_operator(a, r.map, "rota-baxter operator");
  const S h = detail::half_weight(a.field(), r.weight, "rb_pre_anti_flexible");
  auto prec = Algebra<S>::from_products(a.field(), a.dim(), [&](int i, int j) {
    return Vec<S>(a.left(i) * r.map.col(j) + h * a.basis_product(i, j));
  });
  auto succ = Algebra<S>::from_products(a.field(), a.dim(), [&](int i, int j) {
    return Vec<S>(left_mult(a, Vec<S>(r.map.col(i))).col(j) + h * a.basis_product(i, j));
  });
  return PreAntiFlexible<S>(std::move(prec), std::move(succ));
}

/// The condition λ²((a·b)·c + c·(b·a)) = 0 under which the induced pair is
/// pre-anti-flexible.
template <class S>
CheckReport<S> check_rb_pre_condition(const Algebra<S>& a, const S& weight) {
  Identity<S> id = named_identity<S>(IdentityKind::CyclicCondition);
  id.name = "rb_pre_condition";
  id.expr = (weight * weight) * id.expr;
  return check_identity(id, Interpretation<S>{{&a}, {}, a.dim()});
}

/// a∗b = [R(a),b] + (λ/2)[a,b]
template <class S>
Algebra<S> rb_left_symmetric(const Algebra<S>& a, const WeightedOperator<S>& r) {
  require_operator(a, r.map, "rota-baxter operator");
  const S h = detail::half_weight(a.field(), r.weight, "rb_left_symmetric");
  const Algebra<S> br = commutator_algebra(a);
  return Algebra<S>::from_products(a.field(), a.dim(), [&](int i, int j) {
    return Vec<S>(left_mult(br, Vec<S>(r.map.col(i))).col(j) + h * br.basis_product(i, j));
  });
}

/// a⋆b = [a,R(b)] + (λ/2)[a,b]
template <class S>
Algebra<S> rb_right_symmetric(const Algebra<S>& a, const WeightedOperator<S>& r) {
  require_operator(a, r.map, "rota-baxter operator");
  const S h = detail::half_weight(a.field(), r.weight, "rb_right_symmetric");
  const Algebra<S> br = commutator_algebra(a);
  return Algebra<S>::from_products(a.field(), a.dim(), [&](int i, int j) {
    return Vec<S>(br.left(i) * r.map.col(j) + h * br.basis_product(i, j));
  });
}

template <class S>
struct GraphAlgebra {
  Algebra<S> ambient;
  std::vector<Vec<S>> generators;
};

/// A⊕A with (u,a)∗(v,b) = (u·v, a·v + u·b + λ a·b) and the graph {(R(e_i), e_i)}.
template <class S>
GraphAlgebra<S> rb_graph_algebra(const Algebra<S>& a, const WeightedOperator<S>& r) {
  require_operator(a, r.map, "rota-baxter operator");
  const int n = a.dim();
  const BlockLayout layout{{n, n}};
  auto ambient = Algebra<S>::from_products(a.field(), 2 * n, [&](int i, int j) {
    Vec<S> out = Vec<S>::Zero(2 * n);
    const bool i_first = i < n, j_first = j < n;
    const int ii = i % n, jj = j % n;
    const Vec<S> prod = a.basis_product(ii, jj);
    if (i_first && j_first) out.head(n) = prod;                 // u·v
    if (!i_first && j_first) out.tail(n) = prod;                // a·v
    if (i_first && !j_first) out.tail(n) = prod;                // u·b
    if (!i_first && !j_first) out.tail(n) = r.weight * prod;    // λ a·b
    return out;
  });
  std::vector<Vec<S>> gens;
  for (int i = 0; i < n; ++i) {
    gens.push_back(layout.concat<S>({Vec<S>(r.map.col(i)), unit_vector<S>(a.field(), n, i)}));
  }
  return {std::move(ambient), std::move(gens)};
}

template <class S>
CheckReport<S> rb_graph_check(const Algebra<S>& a, const WeightedOperator<S>& r) {
  const GraphAlgebra<S> g = rb_graph_algebra(a, r);
  CheckReport<S> rep = check_span_closed(g.ambient, g.generators);
  rep.identity = "rb_graph_closed";
  return rep;
}

/// φ(a·b) = φ(a)·'φ(b) at basis pairs.
template <class S>
CheckReport<S> check_algebra_morphism(const Algebra<S>& src, const Algebra<S>& dst, const Mat<S>& phi) {
  require_map(phi, dst.dim(), src.dim(), src.field(), "morphism");
  if (src.field() != dst.field()) throw Error(ErrorKind::FieldMismatch, "morphism between different fields");
  for (int i = 0; i < src.dim(); ++i) {
    for (int j = 0; j < src.dim(); ++j) {
      Vec<S> d = phi * src.basis_product(i, j) - multiply(dst, Vec<S>(phi.col(i)), Vec<S>(phi.col(j)));
      if (!is_zero(d)) return CheckReport<S>::failed("algebra_morphism", {i, j}, std::move(d), "multiplicative");
    }
  }
  return CheckReport<S>::passed("algebra_morphism");
}

/// φ preserves both ≺ and ≻ (clauses "prec", "succ").
template <class S>
CheckReport<S> check_pre_morphism(const PreAntiFlexible<S>& src, const PreAntiFlexible<S>& dst, const Mat<S>& phi) {
  for (const auto& [clause, s, d] : {std::tuple{"prec", &src.prec, &dst.prec}, std::tuple{"succ", &src.succ, &dst.succ}}) {
    CheckReport<S> r = check_algebra_morphism(*s, *d, phi);
    if (!r.pass) {
      r.identity = "pre_morphism";
      r.witness->clause = clause;
      return r;
    }
  }
  return CheckReport<S>::passed("pre_morphism");
}

/// φ algebra morphism with φ∘R = R'∘φ. Unequal weights fail with tag
/// "weight-mismatch" (witness discrepancy is λ − λ').
template <class S>
CheckReport<S> check_rb_morphism(const Algebra<S>& src, const WeightedOperator<S>& r, const Algebra<S>& dst,
                                 const WeightedOperator<S>& r2, const Mat<S>& phi) {
  require_operator(src, r.map, "source operator");
  require_operator(dst, r2.map, "target operator");
  if (r.weight != r2.weight) {
    Vec<S> d(1);
    d(0) = r.weight - r2.weight;
    auto rep = CheckReport<S>::failed("rb_morphism", {}, std::move(d), "weight");
    rep.tag = "weight-mismatch";
    return rep;
  }
  CheckReport<S> mult = check_algebra_morphism(src, dst, phi);
  if (!mult.pass) {
    mult.identity = "rb_morphism";
    return mult;
  }
  const Mat<S> diff = phi * r.map - r2.map * phi;
  for (int j = 0; j < src.dim(); ++j) {
    if (!is_zero(diff.col(j))) return CheckReport<S>::failed("rb_morphism", {j}, Vec<S>(diff.col(j)), "intertwines");
  }
  return CheckReport<S>::passed("rb_morphism");
}

/// Graph {((R(a),a), (φR(a), φ(a)))} inside (A⊕A)⊕(A'⊕A'), both halves with
/// the graph product of rb_graph_algebra.
template <class S>
CheckReport<S> rb_morphism_graph_check(const Algebra<S>& src, const WeightedOperator<S>& r, const Algebra<S>& dst,
                                       const WeightedOperator<S>& r2, const Mat<S>& phi) {
  const GraphAlgebra<S> g1 = rb_graph_algebra(src, r);
  const GraphAlgebra<S> g2 = rb_graph_algebra(dst, r2);
  const Algebra<S> ambient = direct_sum(g1.ambient, g2.ambient);
  const BlockLayout layout{{src.dim(), src.dim(), dst.dim(), dst.dim()}};
  std::vector<Vec<S>> gens;
  for (int i = 0; i < src.dim(); ++i) {
    const Vec<S> e = unit_vector<S>(src.field(), src.dim(), i);
    const Vec<S> re = r.map.col(i);
    gens.push_back(layout.concat<S>({re, e, Vec<S>(phi * re), Vec<S>(phi.col(i))}));
  }
  CheckReport<S> rep = check_span_closed(ambient, gens);
  rep.identity = "rb_morphism_graph_closed";
  return rep;
}

/// Lie Rota-Baxter identity of R on the commutator bracket.
template <class S>
CheckReport<S> check_lie_rota_baxter(const Algebra<S>& a, const WeightedOperator<S>& r) {
  CheckReport<S> rep = check_rota_baxter(commutator_algebra(a), r);
  rep.identity = "lie_rota_baxter";
  return rep;
}

/// R^k as a matrix, R^0 = Id.
template <class S>
Mat<S> matrix_power(const FieldSpec& field, const Mat<S>& m, int k) {
  Mat<S> out = identity_map<S>(field, static_cast<int>(m.rows()));
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

/// First basis pair where two tensors differ.
template <class S>
CheckReport<S> compare_products(const std::string& name, const Algebra<S>& a, const Algebra<S>& b) {
  require_dims(a.dim() == b.dim(), "compared algebras differ in dimension");
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      Vec<S> d = a.basis_product(i, j) - b.basis_product(i, j);
      if (!is_zero(d)) return CheckReport<S>::failed(name, {i, j}, std::move(d));
    }
  }
  return CheckReport<S>::passed(name);
}

// ---------------------------------------------------------------------------
// power claims

/// One evaluated claim about powers of an operator. `p`, `q` are the powers
/// involved (q = 0 when unused); `alpha`/`beta` the sampled coefficients for
/// compatibility claims.
template <class S>
struct PowerClaim {
  std::string claim;
  int p = 0;
  int q = 0;
  std::optional<std::pair<S, S>> coefficients;
  CheckReport<S> report;
};

template <class S>
struct PowerSuite {
  std::vector<PowerClaim<S>> claims;

  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.report.pass) return false;
    return true;
  }
};

namespace detail {

// Anti-flexibility of α·μ + β·ν at fixed basis triples is a binary quadratic
// form in (α, β); its values at (1,0), (0,1), (1,1) determine it. The sample
// grid {0,1,2,-1}² contains all three in every characteristic, so a clean
// sweep over the grid proves compatibility for all (α, β).
template <class S>
std::vector<std::pair<S, S>> compatibility_samples(const FieldSpec& field) {
  std::vector<std::pair<S, S>> out;
  for (int a : {0, 1, 2, -1})
    for (int b : {0, 1, 2, -1}) out.emplace_back(embed<S>(field, a), embed<S>(field, b));
  return out;
}

template <class S, class Induce, class IsOperator>
PowerSuite<S> power_suite(const Algebra<S>& a, const Mat<S>& op, int maxpq, Induce induce, IsOperator is_operator) {
  if (maxpq < 1) throw Error(ErrorKind::PreconditionFailed, "maxpq must be at least 1");
  const FieldSpec& f = a.field();
  std::vector<Mat<S>> pw;
  std::vector<Algebra<S>> induced;  // induced[k] = product deformed by op^k
  for (int k = 0; k <= 2 * maxpq; ++k) {
    pw.push_back(matrix_power(f, op, k));
    induced.push_back(induce(a, pw.back()));
  }
  PowerSuite<S> suite;
  for (int p = 1; p <= maxpq; ++p) {
    suite.claims.push_back({"induced_anti_flexible", p, 0, std::nullopt, check_identity(induced[p], IdentityKind::AntiFlexible)});
  }
  for (int p = 1; p <= maxpq; ++p) {
    for (int q = 1; q <= maxpq; ++q) {
      suite.claims.push_back({"power_is_operator", p, q, std::nullopt, is_operator(induced[p], pw[q])});
      suite.claims.push_back(
          {"iterated_product_coincides", p, q, std::nullopt,
           compare_products<S>("iterated_product_coincides", induce(induced[p], pw[q]), induced[p + q])});
      CheckReport<S> compat = CheckReport<S>::passed("compatible");
      std::optional<std::pair<S, S>> bad;
      for (const auto& [al, be] : compatibility_samples<S>(f)) {
        const Algebra<S> mix = combine<S>({{al, &induced[p]}, {be, &induced[q]}}, f, a.dim());
        CheckReport<S> r = check_identity(mix, IdentityKind::AntiFlexible);
        if (!r.pass) {
          r.identity = "compatible";
          compat = std::move(r);
          bad = std::make_pair(al, be);
          break;
        }
      }
      suite.claims.push_back({"compatible", p, q, bad, std::move(compat)});
      CheckReport<S> hom = check_algebra_morphism(induced[p + q], induced[p], pw[q]);
      hom.identity = "homomorphism";
      suite.claims.push_back({"homomorphism", p, q, std::nullopt, std::move(hom)});
    }
  }
  return suite;
}

}  // namespace detail

/// Evaluates, for 1 ≤ p, q ≤ maxpq, the five claims about powers R^p: the
/// deformed product ·_{R^p} (same weight λ) is anti-flexible; R^q is a
/// weight-λ operator on it; deforming ·_{R^p} by R^q gives ·_{R^{p+q}}; the
/// pencil α·_{R^p} + β·_{R^q} is anti-flexible; R^q maps ·_{R^{p+q}} to
/// ·_{R^p}. Nothing is assumed; every verdict is computed.
template <class S>
PowerSuite<S> rb_power_suite(const Algebra<S>& a, const WeightedOperator<S>& r, int maxpq) {
  require_operator(a, r.map, "rota-baxter operator");
  const S w = r.weight;
  return detail::power_suite<S>(
      a, r.map, maxpq, [&](const Algebra<S>& alg, const Mat<S>& m) { return rb_induced_product(alg, {m, w}); },
      [&](const Algebra<S>& alg, const Mat<S>& m) {
        CheckReport<S> rep = check_rota_baxter(alg, {m, w});
        rep.identity = "power_is_operator";
        return rep;
      });
}

}  // namespace antiflex
