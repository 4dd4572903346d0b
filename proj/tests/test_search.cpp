#include <cstdlib>

#include "support.hpp"

using namespace antiflex;
using namespace testing;

namespace {

std::vector<std::string> keys(const FieldSpec& f, const std::vector<Mat<Fp>>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(compact_string(map_to_json(f, m)));
  return out;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("search space sizes") {
  CHECK(search_space_size(2, 2) == 4);
  CHECK(search_space_size(3, 8) == 6561);
  CHECK(search_space_size(5, 28) == UINT64_MAX);
  CHECK(search_space_size(5, 27) == 7450580596923828125ULL);
}

TEST_CASE("unfiltered enumeration visits every tensor") {
  const auto r = enumerate_algebras(F2, 1, std::nullopt, wide());
  CHECK(r.scanned == 2);
  CHECK(r.hits.size() == 2);
  CHECK(enumerate_algebras(F3, 2, std::nullopt, wide()).hits.size() == 6561);
}

TEST_CASE("anti-flexible counts in dimension 2") {
  const json golden = fixture("golden.json");
  for (auto [f, key] : {std::pair{F2, "f2_dim2_anti_flexible"}, std::pair{F3, "f3_dim2_anti_flexible"}}) {
    const auto r = enumerate_algebras(f, 2, IdentityKind::AntiFlexible, wide());
    CHECK(r.hits.size() == golden[key]["count"].get<std::size_t>());
    CHECK(r.scanned == golden[key]["scanned"].get<std::uint64_t>());
    // brute force with the library check
    std::size_t brute = 0;
    for (std::uint64_t i = 0; i < r.scanned; ++i) brute += satisfies(algebra_at(f, 2, i), IdentityKind::AntiFlexible);
    CHECK(brute == r.hits.size());
  }
}

TEST_CASE("candidate order is lexicographic and complete") {
  CHECK(is_zero(matrix_at(F3, 2, 2, 0)));
  const Mat<Fp> last = matrix_at(F3, 2, 2, 80);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(last(r, c).str() == "2");
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < 81; ++i) seen.insert(compact_string(map_to_json(F3, matrix_at(F3, 2, 2, i))));
  CHECK(seen.size() == 81);
  CHECK(algebra_at(F2, 2, 0) == Algebra<Fp>(F2, 2));
}

TEST_CASE("budget") {
  SearchOptions o;
  o.budget = 100;
  CHECK(error_kind([&] { enumerate_algebras(F3, 2, IdentityKind::AntiFlexible, o); }) == ErrorKind::SearchSpaceTooLarge);
  CHECK(error_kind([&] { enumerate_algebras(F5, 3, std::nullopt); }) == ErrorKind::SearchSpaceTooLarge);
  o.budget = 6561;
  CHECK_NOTHROW(enumerate_algebras(F3, 2, IdentityKind::AntiFlexible, o));
  CHECK(kDefaultBudget == 10'000'000);
}

TEST_CASE("budget environment override") {
  const char* old = std::getenv("ANTIFLEX_BUDGET");
  const std::string saved = old ? old : "";
  setenv("ANTIFLEX_BUDGET", "1234", 1);
  CHECK(default_budget() == 1234);
  unsetenv("ANTIFLEX_BUDGET");
  CHECK(default_budget() == kDefaultBudget);
  if (old) setenv("ANTIFLEX_BUDGET", saved.c_str(), 1);
}

TEST_CASE("worker count does not change the results") {
  SearchOptions one = wide(), many = wide();
  many.workers = 4;
  const auto a = enumerate_algebras(F3, 2, IdentityKind::AntiFlexible, one);
  const auto b = enumerate_algebras(F3, 2, IdentityKind::AntiFlexible, many);
  REQUIRE(a.hits.size() == b.hits.size());
  for (std::size_t i = 0; i < a.hits.size(); ++i) CHECK(a.hits[i] == b.hits[i]);
  const auto d = fixture_algebra<Fp>("D_f3.json", true);
  for (OperatorKind k : {OperatorKind::RotaBaxter, OperatorKind::Nijenhuis})
    CHECK(keys(F3, enumerate_operators(d, {k, Fp(0)}, one).hits) == keys(F3, enumerate_operators(d, {k, Fp(0)}, many).hits));
}

TEST_CASE("Rota-Baxter hits on F_3 dual numbers") {
  const auto d = fixture_algebra<Fp>("D_f3.json", true);
  const auto r = enumerate_operators(d, {OperatorKind::RotaBaxter, embed<Fp>(F3, 0)}, wide());
  CHECK(r.scanned == 81);
  const json expected = fixture("golden.json").at("D_f3_rb0_hits");
  std::vector<std::string> golden;
  for (const auto& m : expected) {
    json j = map_to_json(F3, Mat<Fp>(Mat<Fp>::Zero(2, 2)));
    j["entries"] = m;
    golden.push_back(compact_string(j));
  }
  CHECK(keys(F3, r.hits) == golden);
  for (const auto& m : r.hits) CHECK(check_rota_baxter(d, {m, embed<Fp>(F3, 0)}).pass);
}

TEST_CASE("Nijenhuis hits contain the scalar maps") {
  const auto e = fixture_algebra<Fp>("E_f3.json", true);
  const auto hits = keys(F3, enumerate_operators(e, {OperatorKind::Nijenhuis, Fp(0)}, wide()).hits);
  for (int s = 0; s < 3; ++s) {
    const auto k = compact_string(map_to_json(F3, Mat<Fp>(embed<Fp>(F3, s) * identity_map<Fp>(F3, 2))));
    CHECK(std::find(hits.begin(), hits.end(), k) != hits.end());
  }
}

TEST_CASE("O-operator hits on the F_3 dual bimodule") {
  const auto b = bimodule_from_json<Fp>(fixture("E_f3_dual.json"), true);
  const auto r = enumerate_o_operators(b, wide());
  CHECK(r.hits.size() == fixture("golden.json").at("E_f3_dual_o_operator_hits").size());
  for (const auto& t : r.hits) CHECK(check_o_operator(b, t).pass);
}

TEST_CASE("bimodule enumeration matches brute force") {
  const auto e = fixture_algebra<Fp>("E_f3.json", true);
  const auto r = enumerate_bimodules(e, 1, wide());
  CHECK(r.scanned == 81);
  std::size_t brute = 0;
  for (std::uint64_t i = 0; i < 81; ++i) {
    const Mat<Fp> m = matrix_at(F3, 1, 4, i);
    std::vector<Mat<Fp>> left, right;
    for (int k = 0; k < 2; ++k) {
      left.push_back(m.block(0, k, 1, 1));
      right.push_back(m.block(0, 2 + k, 1, 1));
    }
    brute += check_bimodule(Bimodule<Fp>(e, 1, left, right)).pass;
  }
  CHECK(brute == r.hits.size());
  for (const auto& b : r.hits) CHECK(check_bimodule(b).pass);
}

}
