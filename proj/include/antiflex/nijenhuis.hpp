#pragma once

// Nijenhuis operators, the deformed product x·_N y, the induced
// pre-anti-flexible splitting and its condition, the Rota-Baxter
// correspondences for N² ∈ {0, N, Id}, and the complex-structure double.

#include <string>
#include <vector>

#include "antiflex/rota.hpp"

namespace antiflex {

/// N(x)·N(y) − N(N(x)·y + x·N(y) − N(x·y))
template <class S>
Vec<S> nijenhuis_torsion(const Algebra<S>& a, const Mat<S>& n, const Vec<S>& x, const Vec<S>& y) {
  require_operator(a, n, "nijenhuis operator");
  const Vec<S> nx = n * x, ny = n * y;
  return multiply(a, nx, ny) - n * (multiply(a, nx, y) + multiply(a, x, ny) - n * multiply(a, x, y));
}

template <class S>
Identity<S> nijenhuis_identity() {
  const words::Vars<S> v;
  const auto& [x, y, z] = v;
  auto P = [](const Combination<S>& a, const Combination<S>& b) { return prod(0, a, b); };
  auto N = [](const Combination<S>& a) { return apply(0, a); };
  return {"nijenhuis", 2, P(N(x), N(y)) - N(P(N(x), y) + P(x, N(y)) - N(P(x, y)))};
}

template <class S>
CheckReport<S> check_nijenhuis(const Algebra<S>& a, const Mat<S>& n) {
  require_operator(a, n, "nijenhuis operator");
  return check_identity(nijenhuis_identity<S>(), Interpretation<S>{{&a}, {&n}, a.dim()});
}

/// x·_N y = N(x)·y + x·N(y) − N(x·y)
template <class S>
Algebra<S> nj_induced_product(const Algebra<S>& a, const Mat<S>& n) {
  require_operator(a, n, "nijenhuis operator");
  const auto e = [&](int i) { return unit_vector<S>(a.field(), a.dim(), i); };
  return Algebra<S>::from_products(a.field(), a.dim(), [&](int i, int j) {
    return Vec<S>(multiply(a, Vec<S>(n.col(i)), e(j)) + multiply(a, e(i), Vec<S>(n.col(j))) -
                  n * a.basis_product(i, j));
  });
}

/// Seven-term expression of the deformed associator in plain associators:
/// [Nx,Ny,z] + [Nx,y,Nz] + [x,Ny,Nz] + N²[x,y,z] − N[Nx,y,z] − N[x,Ny,z] − N[x,y,Nz].
template <class S>
Vec<S> nj_associator_expansion(const Algebra<S>& a, const Mat<S>& n, const Vec<S>& x, const Vec<S>& y,
                               const Vec<S>& z) {
  require_operator(a, n, "nijenhuis operator");
  const Vec<S> nx = n * x, ny = n * y, nz = n * z;
  return associator(a, nx, ny, z) + associator(a, nx, y, nz) + associator(a, x, ny, nz) +
         n * (n * associator(a, x, y, z)) -
         n * (associator(a, nx, y, z) + associator(a, x, ny, z) + associator(a, x, y, nz));
}

/// x≻y = N(x)·y − ½N(x·y),  x≺y = x·N(y) − ½N(x·y)
template <class S>
PreAntiFlexible<S> nj_pre_anti_flexible(const Algebra<S>& a, const Mat<S>& n) {
  require_operator(a, n, "nijenhuis operator");
  require_char_not_2(a.field(), "nj_pre_anti_flexible");
  const S half = scalar_div<S>(a.field(), 1, 2);
  auto prec = Algebra<S>::from_products(a.field(), a.dim(), [&](int i, int j) {
    return Vec<S>(a.left(i) * n.col(j) - half * (n * a.basis_product(i, j)));
  });
  auto succ = Algebra<S>::from_products(a.field(), a.dim(), [&](int i, int j) {
    return Vec<S>(left_mult(a, Vec<S>(n.col(i))).col(j) - half * (n * a.basis_product(i, j)));
  });
  return PreAntiFlexible<S>(std::move(prec), std::move(succ));
}

/// (3/2)N(N(z·y)·x + x·N(y·z)) = N²((z·y)·x + x·(y·z)) at all basis triples.
/// In characteristic 3 the left side vanishes identically; the report then
/// carries the note "char-3-left-side-vanishes".
template <class S>
CheckReport<S> check_nj_condition(const Algebra<S>& a, const Mat<S>& n) {
  require_operator(a, n, "nijenhuis operator");
  require_char_not_2(a.field(), "check_nj_condition");
  const words::Vars<S> v;
  const auto& [x, y, z] = v;
  auto P = [](const Combination<S>& p, const Combination<S>& q) { return prod(0, p, q); };
  auto N = [](const Combination<S>& p) { return apply(0, p); };
  const S three_halves = scalar_div<S>(a.field(), 3, 2);
  const Identity<S> id{"nj_condition", 3,
                       three_halves * N(P(N(P(z, y)), x) + P(x, N(P(y, z)))) -
                           N(N(P(P(z, y), x) + P(x, P(y, z))))};
  CheckReport<S> rep = check_identity(id, Interpretation<S>{{&a}, {&n}, a.dim()});
  if (a.field().characteristic() == 3) rep.notes.emplace_back("char-3-left-side-vanishes");
  return rep;
}

/// x∘y = [N(x),y] − ½N([x,y])
template <class S>
Algebra<S> nj_left_symmetric(const Algebra<S>& a, const Mat<S>& n) {
  require_operator(a, n, "nijenhuis operator");
  require_char_not_2(a.field(), "nj_left_symmetric");
  const S half = scalar_div<S>(a.field(), 1, 2);
  const Algebra<S> br = commutator_algebra(a);
  return Algebra<S>::from_products(a.field(), a.dim(), [&](int i, int j) {
    return Vec<S>(left_mult(br, Vec<S>(n.col(i))).col(j) - half * (n * br.basis_product(i, j)));
  });
}

// ---------------------------------------------------------------------------

/// One applicable Rota-Baxter correspondence and both of its sides.
struct BridgeCase {
  std::string relation;    // "N^2=0", "N^2=N", "N^2=Id"
  bool nijenhuis = false;  // left side
  std::vector<std::pair<std::string, bool>> rota_baxter;  // right side(s)
  bool agree = false;
};

struct BridgeReport {
  bool applicable = false;
  std::vector<BridgeCase> cases;

  bool all_agree() const {
    for (const auto& c : cases)
      if (!c.agree) return false;
    return true;
  }
};

/// Classifies N by N² ∈ {0, N, Id} and evaluates both sides of each matching
/// equivalence: N²=0 with weight 0; N²=N with weight −1; N²=Id with N+Id at
/// weight −2 and N−Id at weight +2.
template <class S>
BridgeReport nj_rb_bridge(const Algebra<S>& a, const Mat<S>& n) {
  require_operator(a, n, "nijenhuis operator");
  const FieldSpec& f = a.field();
  const Mat<S> sq = n * n;
  const Mat<S> id = identity_map<S>(f, a.dim());
  const bool nj = check_nijenhuis(a, n).pass;
  BridgeReport out;
  auto rb = [&](const Mat<S>& m, std::int64_t w) { return check_rota_baxter(a, {m, embed<S>(f, w)}).pass; };
  if (is_zero(sq)) {
    const bool r = rb(n, 0);
    out.cases.push_back({"N^2=0", nj, {{"N weight 0", r}}, nj == r});
  }
  if (sq == n) {
    const bool r = rb(n, -1);
    out.cases.push_back({"N^2=N", nj, {{"N weight -1", r}}, nj == r});
  }
  if (sq == id) {
    const bool plus = rb(Mat<S>(n + id), -2);
    const bool minus = rb(Mat<S>(n - id), 2);
    out.cases.push_back({"N^2=Id", nj, {{"N+Id weight -2", plus}, {"N-Id weight 2", minus}}, nj == plus && nj == minus});
  }
  out.applicable = !out.cases.empty();
  return out;
}

/// Mirror of rb_power_suite for ·_{N^p} and N^q.
template <class S>
PowerSuite<S> nj_power_suite(const Algebra<S>& a, const Mat<S>& n, int maxpq) {
  require_operator(a, n, "nijenhuis operator");
  return detail::power_suite<S>(
      a, n, maxpq, [](const Algebra<S>& alg, const Mat<S>& m) { return nj_induced_product(alg, m); },
      [](const Algebra<S>& alg, const Mat<S>& m) {
        CheckReport<S> rep = check_nijenhuis(alg, m);
        rep.identity = "power_is_operator";
        return rep;
      });
}

// ---------------------------------------------------------------------------

template <class S>
struct ComplexDouble {
  Algebra<S> bracket;  // on A ⊕ A
  Mat<S> j;            // J(u, v) = (−v, u)
  CheckReport<S> lie;
  CheckReport<S> j_squared;
  CheckReport<S> integrability;
  CheckReport<S> report;  // first failing of the three, in that order
};

/// The bracket [x+a, y+b] = [x,y] + (L−R)(x)b − (L−R)(y)a on A⊕A (first block
/// the commutator algebra, second block an abelian ideal) with
/// J(u,v) = (−v,u), checked for the Lie axioms, J² = −Id and
/// J[x,y] = [Jx,y] + [x,Jy] + J[Jx,Jy].
template <class S>
ComplexDouble<S> lie_double_with_complex_structure(const Algebra<S>& a) {
  const FieldSpec& f = a.field();
  require_char_not_2(f, "lie_double_with_complex_structure");
  const int n = a.dim();
  const Algebra<S> br = commutator_algebra(a);
  auto bracket = Algebra<S>::from_products(f, 2 * n, [&](int i, int j) {
    Vec<S> out = Vec<S>::Zero(2 * n);
    const int ii = i % n, jj = j % n;
    const bool i_first = i < n, j_first = j < n;
    if (i_first && j_first) out.head(n) = br.basis_product(ii, jj);
    if (i_first && !j_first) out.tail(n) = br.basis_product(ii, jj);   // (L−R)(x)b = x·b − b·x
    if (!i_first && j_first) out.tail(n) = br.basis_product(ii, jj);   // −(L−R)(y)a = a·y − y·a
    return out;
  });
  Mat<S> j = Mat<S>::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(n + i, i) = embed<S>(f, 1);   // (u, 0) ↦ (0, u)
    j(i, n + i) = embed<S>(f, -1);  // (0, v) ↦ (−v, 0)
  }

  ComplexDouble<S> out{bracket, j, check_identity(bracket, IdentityKind::Lie), CheckReport<S>::passed("j_squared"),
                       CheckReport<S>::passed("integrability"), CheckReport<S>::passed("complex_structure")};
  const Mat<S> sq = j * j + identity_map<S>(f, 2 * n);
  for (int c = 0; c < 2 * n; ++c) {
    if (!is_zero(sq.col(c))) {
      out.j_squared = CheckReport<S>::failed("j_squared", {c}, Vec<S>(sq.col(c)));
      break;
    }
  }
  const words::Vars<S> v;
  const auto& [x, y, z] = v;
  auto B = [](const Combination<S>& p, const Combination<S>& q) { return prod(0, p, q); };
  auto J = [](const Combination<S>& p) { return apply(0, p); };
  const Identity<S> integ{"integrability", 2, J(B(x, y)) - B(J(x), y) - B(x, J(y)) - J(B(J(x), J(y)))};
  out.integrability = check_identity(integ, Interpretation<S>{{&out.bracket}, {&out.j}, 2 * n});

  for (const CheckReport<S>* r : {&out.lie, &out.j_squared, &out.integrability}) {
    if (!r->pass) {
      out.report = *r;
      out.report.witness->clause = r->identity;
      out.report.identity = "complex_structure";
      break;
    }
  }
  return out;
}

}  // namespace antiflex
