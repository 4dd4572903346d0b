#pragma once

// Shared helpers for the unit tests: fixture loading and compact builders.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "antiflex/io.hpp"
#include "antiflex/search.hpp"
#include "antiflex/symplectic.hpp"
#include "oracle/oracle.hpp"

namespace testing {

using namespace antiflex;

inline const std::string kFixtures = ANTIFLEX_FIXTURES;

inline json fixture(const std::string& name) { return read_json_file(kFixtures + "/" + name); }

template <class S>
Algebra<S> fixture_algebra(const std::string& name, bool allow_small = false) {
  return algebra_from_json<S>(fixture(name), allow_small);
}

inline const FieldSpec Q = FieldSpec::rationals();
inline const FieldSpec F2 = FieldSpec::prime(2, true);
inline const FieldSpec F3 = FieldSpec::prime(3, true);
inline const FieldSpec F5 = FieldSpec::prime(5);
inline const FieldSpec F7 = FieldSpec::prime(7);

/// Square matrix from row-major integers.
template <class S>
Mat<S> mat(const FieldSpec& f, int n, std::vector<int> rowmajor) {
  Mat<S> m(n, static_cast<int>(rowmajor.size()) / n);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = embed<S>(f, rowmajor[static_cast<std::size_t>(r * m.cols() + c)]);
  return m;
}

template <class S>
Vec<S> vec(const FieldSpec& f, std::vector<int> xs) {
  Vec<S> v(static_cast<int>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<int>(i)) = embed<S>(f, xs[i]);
  return v;
}

/// Algebra from c[i][j] = coordinate list of e_i e_j.
template <class S>
Algebra<S> algebra(const FieldSpec& f, const std::vector<std::vector<std::vector<int>>>& c) {
  const int n = static_cast<int>(c.size());
  return Algebra<S>::from_products(f, n, [&](int i, int j) { return vec<S>(f, c[i][j]); });
}

template <class S>
Vec<S> e(const FieldSpec& f, int n, int i) {
  return unit_vector<S>(f, n, i);
}

/// Random element of the corpus-friendly range [-3, 3].
template <class S>
Vec<S> random_vec(std::mt19937& rng, const FieldSpec& f, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vec<S> v(n);
  for (int i = 0; i < n; ++i) v(i) = embed<S>(f, d(rng));
  return v;
}

template <class S>
Mat<S> random_mat(std::mt19937& rng, const FieldSpec& f, int rows, int cols) {
  std::uniform_int_distribution<int> d(-3, 3);
  Mat<S> m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = embed<S>(f, d(rng));
  return m;
}

template <class S>
Algebra<S> random_algebra(std::mt19937& rng, const FieldSpec& f, int n) {
  return Algebra<S>::from_products(f, n, [&](int, int) { return random_vec<S>(rng, f, n); });
}

inline std::vector<Algebra<Fp>> corpus(const FieldSpec& f, std::optional<IdentityKind> filter = IdentityKind::AntiFlexible) {
  SearchOptions o;
  o.budget = 1'000'000'000;
  return enumerate_algebras(f, 2, filter, o).hits;
}

inline SearchOptions wide() {
  SearchOptions o;
  o.budget = 1'000'000'000;
  return o;
}

/// Library report and oracle verdict agree on pass/fail, first tuple and discrepancy.
template <class R, class S>
bool agrees(const R& ring, const CheckReport<S>& rep, const oracle::Verdict<R>& v, const FieldSpec& f) {
  if (rep.pass != !v.has_value()) return false;
  if (rep.pass) return true;
  return rep.witness->indices == v->indices && oracle::vec(ring, f, rep.witness->discrepancy) == v->discrepancy;
}

template <class Fn>
ErrorKind error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no antiflex::Error raised");
  return ErrorKind::Format;
}

}  // namespace testing
