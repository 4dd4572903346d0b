#pragma once

// JSON encodings of fields, algebras, maps, forms, bimodules and reports.
//
// Scalars are strings ("a" or "a/b" over Q, "0".."p-1" over F_p). Canonical
// text has sorted keys, objects expanded one key per line with two-space
// indentation, arrays inline, and a final newline; parse followed by print
// reproduces a canonical file byte for byte.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "antiflex/omod.hpp"

namespace antiflex {

using json = nlohmann::json;

json field_to_json(const FieldSpec& field);
/// Accepts {"kind":"Q"} and {"kind":"Fp","p":p}.
FieldSpec field_from_json(const json& j, bool allow_small_char = false);

std::string canonical_string(const json& j);
/// One line, no trailing newline (JSON-lines records).
std::string compact_string(const json& j);
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// ---------------------------------------------------------------------------

template <class S>
json scalar_to_json(const S& s) {
  return s.str();
}

template <class S>
S scalar_from_json(const FieldSpec& field, const json& j) {
  if (j.is_string()) return S::parse(field, j.get<std::string>());
  if (j.is_number_integer()) return embed<S>(field, j.get<std::int64_t>());
  throw Error(ErrorKind::Format, "scalar must be a string or an integer, got " + j.dump());
}

/// Field values are bound to their field (Fp(0) becomes 0 mod p).
template <class S>
S normalize(const FieldSpec& field, const S& s) {
  if constexpr (std::is_same_v<S, Fp>) {
    return Fp(s.value(), field.p);
  } else {
    return s;
  }
}

template <class S>
Vec<S> normalize_vec(const FieldSpec& field, Vec<S> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = normalize(field, v(i));
  return v;
}

template <class S>
json vector_to_json(const FieldSpec& field, const Vec<S>& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(normalize(field, v(i))));
  return out;
}

template <class S>
Vec<S> vector_from_json(const FieldSpec& field, const json& j, int expected, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::Format, std::string(what) + " must be an array");
  if (static_cast<int>(j.size()) != expected) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": expected " + std::to_string(expected) +
                                                  " coordinates, got " + std::to_string(j.size()));
  }
  Vec<S> v(expected);
  for (int i = 0; i < expected; ++i) v(i) = scalar_from_json<S>(field, j[static_cast<std::size_t>(i)]);
  return v;
}

namespace detail {

inline const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Format, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

inline int dim_member(const json& j, const char* key) {
  const json& d = member(j, key);
  if (!d.is_number_integer() || d.get<long long>() < 0) throw Error(ErrorKind::Format, std::string(key) + " must be a non-negative integer");
  return d.get<int>();
}

}  // namespace detail

// --- Algebra ---------------------------------------------------------------

template <class S>
json algebra_to_json(const Algebra<S>& a) {
  json out;
  out["field"] = field_to_json(a.field());
  out["dim"] = a.dim();
  json basis = json::array();
  for (int i = 0; i < a.dim(); ++i)
    basis.push_back(a.labels().empty() ? "e" + std::to_string(i + 1) : a.labels()[static_cast<std::size_t>(i)]);
  out["basis"] = basis;
  json product = json::array();
  for (int i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.dim(); ++j) row.push_back(vector_to_json<S>(a.field(), a.basis_product(i, j)));
    product.push_back(row);
  }
  out["product"] = product;
  return out;
}

template <class S>
Algebra<S> algebra_from_json(const json& j, bool allow_small_char = false) {
  const FieldSpec field = field_from_json(detail::member(j, "field"), allow_small_char);
  const int n = detail::dim_member(j, "dim");
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    const json& b = j.at("basis");
    if (!b.is_array() || static_cast<int>(b.size()) != n) throw Error(ErrorKind::DimensionMismatch, "basis must list dim names");
    for (const auto& name : b) labels.push_back(name.get<std::string>());
  }
  const json& prod = detail::member(j, "product");
  if (!prod.is_array() || static_cast<int>(prod.size()) != n) throw Error(ErrorKind::DimensionMismatch, "product must have dim rows");
  for (const auto& row : prod)
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw Error(ErrorKind::DimensionMismatch, "product rows must have dim entries");
  return Algebra<S>::from_products(
      field, n,
      [&](int i, int k) {
        return normalize_vec(field, vector_from_json<S>(field, prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], n, "product entry"));
      },
      labels);
}

// --- LinearMap -------------------------------------------------------------

template <class S>
json map_to_json(const FieldSpec& field, const Mat<S>& m) {
  json out;
  out["field"] = field_to_json(field);
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) entries.push_back(vector_to_json<S>(field, Vec<S>(m.row(r).transpose())));
  out["entries"] = entries;
  return out;
}

template <class S>
struct FieldMap {
  FieldSpec field;
  Mat<S> map;
};

template <class S>
FieldMap<S> map_from_json(const json& j, bool allow_small_char = false) {
  const FieldSpec field = field_from_json(detail::member(j, "field"), allow_small_char);
  const int rows = detail::dim_member(j, "rows");
  const int cols = detail::dim_member(j, "cols");
  const json& e = detail::member(j, "entries");
  if (!e.is_array() || static_cast<int>(e.size()) != rows) throw Error(ErrorKind::DimensionMismatch, "entries must have rows rows");
  Mat<S> m(rows, cols);
  for (int r = 0; r < rows; ++r) m.row(r) = normalize_vec(field, vector_from_json<S>(field, e[static_cast<std::size_t>(r)], cols, "matrix row")).transpose();
  return {field, std::move(m)};
}

// --- BilinearForm ----------------------------------------------------------

template <class S>
json form_to_json(const BilinearForm<S>& w) {
  json out;
  out["field"] = field_to_json(w.field);
  out["dim"] = w.dim();
  json omega = json::array();
  for (int r = 0; r < w.dim(); ++r) omega.push_back(vector_to_json<S>(w.field, Vec<S>(w.omega.row(r).transpose())));
  out["omega"] = omega;
  return out;
}

template <class S>
BilinearForm<S> form_from_json(const json& j, bool allow_small_char = false) {
  const FieldSpec field = field_from_json(detail::member(j, "field"), allow_small_char);
  const int n = detail::dim_member(j, "dim");
  const json& o = detail::member(j, "omega");
  if (!o.is_array() || static_cast<int>(o.size()) != n) throw Error(ErrorKind::DimensionMismatch, "omega must have dim rows");
  Mat<S> m(n, n);
  for (int r = 0; r < n; ++r) m.row(r) = normalize_vec(field, vector_from_json<S>(field, o[static_cast<std::size_t>(r)], n, "omega row")).transpose();
  return {field, std::move(m)};
}

// --- Bimodule --------------------------------------------------------------
// "left"[i][α] = coordinates of l(e_i, f_α); "right"[α][i] = coordinates of r(f_α, e_i).

template <class S>
json bimodule_to_json(const Bimodule<S>& b) {
  json out;
  out["algebra"] = algebra_to_json(b.algebra());
  out["moddim"] = b.moddim();
  json left = json::array(), right = json::array();
  for (int i = 0; i < b.dim(); ++i) {
    json row = json::array();
    for (int m = 0; m < b.moddim(); ++m) row.push_back(vector_to_json<S>(b.field(), Vec<S>(b.left_action(i).col(m))));
    left.push_back(row);
  }
  for (int m = 0; m < b.moddim(); ++m) {
    json row = json::array();
    for (int i = 0; i < b.dim(); ++i) row.push_back(vector_to_json<S>(b.field(), Vec<S>(b.right_action(i).col(m))));
    right.push_back(row);
  }
  out["left"] = left;
  out["right"] = right;
  return out;
}

template <class S>
Bimodule<S> bimodule_from_json(const json& j, bool allow_small_char = false) {
  Algebra<S> a = algebra_from_json<S>(detail::member(j, "algebra"), allow_small_char);
  const FieldSpec field = a.field();
  const int n = a.dim();
  const int m = detail::dim_member(j, "moddim");
  const json& l = detail::member(j, "left");
  const json& r = detail::member(j, "right");
  if (!l.is_array() || static_cast<int>(l.size()) != n) throw Error(ErrorKind::DimensionMismatch, "left must have dim rows");
  if (!r.is_array() || static_cast<int>(r.size()) != m) throw Error(ErrorKind::DimensionMismatch, "right must have moddim rows");
  std::vector<Mat<S>> left(static_cast<std::size_t>(n), Mat<S>(m, m)), right(static_cast<std::size_t>(n), Mat<S>(m, m));
  for (int i = 0; i < n; ++i) {
    if (!l[static_cast<std::size_t>(i)].is_array() || static_cast<int>(l[static_cast<std::size_t>(i)].size()) != m)
      throw Error(ErrorKind::DimensionMismatch, "left rows must have moddim entries");
    for (int a_ = 0; a_ < m; ++a_)
      left[static_cast<std::size_t>(i)].col(a_) = normalize_vec(field, vector_from_json<S>(field, l[static_cast<std::size_t>(i)][static_cast<std::size_t>(a_)], m, "left action"));
  }
  for (int a_ = 0; a_ < m; ++a_) {
    if (!r[static_cast<std::size_t>(a_)].is_array() || static_cast<int>(r[static_cast<std::size_t>(a_)].size()) != n)
      throw Error(ErrorKind::DimensionMismatch, "right rows must have dim entries");
    for (int i = 0; i < n; ++i)
      right[static_cast<std::size_t>(i)].col(a_) = normalize_vec(field, vector_from_json<S>(field, r[static_cast<std::size_t>(a_)][static_cast<std::size_t>(i)], m, "right action"));
  }
  return Bimodule<S>(std::move(a), m, std::move(left), std::move(right));
}

// --- PreAntiFlexible -------------------------------------------------------

template <class S>
json pre_to_json(const PreAntiFlexible<S>& p) {
  json out;
  out["prec"] = algebra_to_json(p.prec);
  out["succ"] = algebra_to_json(p.succ);
  return out;
}

// --- CheckReport -----------------------------------------------------------

template <class S>
json report_to_json(const FieldSpec& field, const CheckReport<S>& r) {
  json out;
  out["identity"] = r.identity;
  out["pass"] = r.pass;
  if (r.witness) {
    json w;
    w["indices"] = r.witness->indices;
    w["discrepancy"] = vector_to_json<S>(field, r.witness->discrepancy);
    if (!r.witness->clause.empty()) w["clause"] = r.witness->clause;
    out["witness"] = w;
  }
  if (!r.tag.empty()) out["tag"] = r.tag;
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

}  // namespace antiflex
