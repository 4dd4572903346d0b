#include "support.hpp"

using namespace antiflex;
using namespace testing;

namespace {

using Ring = oracle::ModRing;

std::vector<Mat<Fp>> all_maps(const FieldSpec& f, int n) {
  std::vector<Mat<Fp>> out;
  for (std::uint64_t i = 0; i < search_space_size(f.p, n * n); ++i) out.push_back(matrix_at(f, n, n, i));
  return out;
}

}  // namespace

TEST_SUITE("nijenhuis") {

TEST_CASE("torsion vanishes exactly for Nijenhuis operators") {
  const Ring ring{3};
  for (const char* name : {"E_f3.json", "D_f3.json"}) {
    const auto a = fixture_algebra<Fp>(name, true);
    const auto c = oracle::tensor(ring, a);
    for (const auto& n : all_maps(F3, 2)) {
      const auto rep = check_nijenhuis(a, n);
      CHECK(agrees(ring, rep, oracle::nijenhuis(ring, c, oracle::matrix(ring, F3, n)), F3));
      bool zero = true;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) zero = zero && is_zero(nijenhuis_torsion(a, n, e<Fp>(F3, 2, i), e<Fp>(F3, 2, j)));
      CHECK(zero == rep.pass);
      CHECK(oracle::tensor(ring, nj_induced_product(a, n)) == oracle::nj_product(ring, c, oracle::matrix(ring, F3, n)));
    }
  }
}

TEST_CASE("scalar multiples of the identity are Nijenhuis") {
  const auto e = fixture_algebra<Rational>("E.json");
  for (int s : {-2, 0, 1, 3}) {
    const Mat<Rational> n = embed<Rational>(Q, s) * identity_map<Rational>(Q, 2);
    CHECK(check_nijenhuis(e, n).pass);
  }
}

TEST_CASE("the identity operator reproduces the associator") {
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_algebra<Rational>(rng, Q, 3);
    const Mat<Rational> id = identity_map<Rational>(Q, 3);
    CHECK(nj_induced_product(a, id) == a);
    const auto x = random_vec<Rational>(rng, Q, 3), y = random_vec<Rational>(rng, Q, 3), z = random_vec<Rational>(rng, Q, 3);
    CHECK(nj_associator_expansion(a, id, x, y, z) == associator(a, x, y, z));
  }
}

TEST_CASE("associator expansion for Nijenhuis operators") {
  for (const auto& a : corpus(F3)) {
    for (const auto& n : enumerate_operators(a, {OperatorKind::Nijenhuis, Fp(0)}, wide()).hits) {
      const auto prod = nj_induced_product(a, n);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) {
            const auto x = e<Fp>(F3, 2, i), y = e<Fp>(F3, 2, j), z = e<Fp>(F3, 2, k);
            CHECK(associator(prod, x, y, z) == nj_associator_expansion(a, n, x, y, z));
          }
    }
  }
}

TEST_CASE("splitting and left-symmetric products agree with the oracle") {
  const Ring ring{5};
  std::mt19937 rng(8);
  for (int t = 0; t < 60; ++t) {
    const auto a = random_algebra<Fp>(rng, F5, 2);
    const auto n = random_mat<Fp>(rng, F5, 2, 2);
    const auto c = oracle::tensor(ring, a);
    const auto on = oracle::matrix(ring, F5, n);
    const auto p = nj_pre_anti_flexible(a, n);
    const auto [prec, succ] = oracle::nj_pre(ring, c, on);
    CHECK(oracle::tensor(ring, p.prec) == prec);
    CHECK(oracle::tensor(ring, p.succ) == succ);
    CHECK(oracle::tensor(ring, nj_left_symmetric(a, n)) == oracle::nj_lsym(ring, c, on));
    CHECK(agrees(ring, check_nj_condition(a, n), oracle::nj_condition(ring, c, on), F5));
  }
}

TEST_CASE("a left-symmetric product without the cyclic condition") {
  // e2·e2 = e2, all other products zero, N = diag(0, 1)
  const auto a = algebra<Rational>(Q, {{{0, 0}, {0, 0}}, {{0, 0}, {0, 1}}});
  const Mat<Rational> n = mat<Rational>(Q, 2, {0, 0, 0, 1});
  REQUIRE(check_nijenhuis(a, n).pass);
  REQUIRE(satisfies(a, IdentityKind::AntiFlexible));
  const auto circ = nj_left_symmetric(a, n);
  CHECK(circ == Algebra<Rational>(Q, 2));
  CHECK(satisfies(circ, IdentityKind::LeftSymmetric));
  const auto cond = check_nj_condition(a, n);
  REQUIRE_FALSE(cond.pass);
  CHECK(cond.witness->indices == std::vector<int>{1, 1, 1});
  CHECK(cond.witness->discrepancy == vec<Rational>(Q, {0, 1}));
}

TEST_CASE("characteristic restrictions") {
  const auto a2 = algebra<Fp>(F2, {{{1, 0}, {0, 0}}, {{1, 0}, {0, 1}}});
  const Mat<Fp> z = Mat<Fp>::Zero(2, 2);
  CHECK(error_kind([&] { nj_pre_anti_flexible(a2, z); }) == ErrorKind::CharacteristicObstruction);
  CHECK(error_kind([&] { nj_left_symmetric(a2, z); }) == ErrorKind::CharacteristicObstruction);
  CHECK(error_kind([&] { check_nj_condition(a2, z); }) == ErrorKind::CharacteristicObstruction);
  CHECK(error_kind([&] { lie_double_with_complex_structure(a2); }) == ErrorKind::CharacteristicObstruction);

  const auto a3 = fixture_algebra<Fp>("E_f3.json", true);
  const auto rep = check_nj_condition(a3, identity_map<Fp>(F3, 2));
  CHECK(std::find(rep.notes.begin(), rep.notes.end(), "char-3-left-side-vanishes") != rep.notes.end());
}

TEST_CASE("bridge to Rota-Baxter operators") {
  const auto d = fixture_algebra<Rational>("D.json");
  const auto r = map_from_json<Rational>(fixture("D_rb.json")).map;
  const auto b0 = nj_rb_bridge(d, r);
  REQUIRE(b0.applicable);
  CHECK(b0.cases.front().relation == "N^2=0");
  CHECK(b0.all_agree());

  const auto e = fixture_algebra<Rational>("E.json");
  const auto b1 = nj_rb_bridge(e, map_from_json<Rational>(fixture("E_minus_id.json")).map);
  REQUIRE(b1.cases.size() == 1);
  CHECK(b1.cases.front().relation == "N^2=Id");
  CHECK(b1.cases.front().nijenhuis);
  CHECK(b1.all_agree());

  CHECK_FALSE(nj_rb_bridge(e, mat<Rational>(Q, 2, {1, 1, 0, 2})).applicable);

  for (const char* name : {"E_f3.json", "D_f3.json"}) {
    const auto a = fixture_algebra<Fp>(name, true);
    for (const auto& n : all_maps(F3, 2)) CHECK(nj_rb_bridge(a, n).all_agree());
  }
}

TEST_CASE("complex double") {
  const auto e = fixture_algebra<Rational>("E.json");
  const auto dbl = lie_double_with_complex_structure(e);
  CHECK(dbl.bracket.dim() == 4);
  CHECK(dbl.j_squared.pass);
  CHECK_FALSE(dbl.report.pass);
  CHECK(dbl.report.identity == "complex_structure");

  const auto flat = lie_double_with_complex_structure(Algebra<Rational>(Q, 2));
  CHECK(flat.report.pass);
  CHECK(dbl.j * dbl.j == Rational(-1) * identity_map<Rational>(Q, 4));
}

TEST_CASE("power suite for a nilpotent operator") {
  const auto d = fixture_algebra<Rational>("D.json");
  const auto suite = nj_power_suite(d, map_from_json<Rational>(fixture("D_rb.json")).map, 2);
  CHECK(suite.all_pass());
}

}
