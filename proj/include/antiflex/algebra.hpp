#pragma once

// Structure-constant algebras and the maps that act on them.
//
// An Algebra stores one n×n matrix per basis element: left(i) is the matrix of
// y ↦ e_i·y, so column j of left(i) is e_i·e_j and c[i][j][k] = left(i)(k, j).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antiflex/linalg.hpp"

namespace antiflex {

/// Square or rectangular exact matrix; column j is the image of e_j.
template <class S>
using LinearMap = Mat<S>;

template <class S>
class Algebra {
 public:
  Algebra() = default;

  /// The zero product on an n-dimensional space.
  Algebra(FieldSpec field, int dim)
      : field_(field), dim_(dim), left_(static_cast<std::size_t>(dim), Mat<S>::Zero(dim, dim)) {}

  /// From left multiplication tables: left[i](k, j) = c[i][j][k].
  Algebra(FieldSpec field, std::vector<Mat<S>> left, std::vector<std::string> labels = {})
      : field_(field), dim_(static_cast<int>(left.size())), left_(std::move(left)), labels_(std::move(labels)) {
    for (const auto& m : left_) {
      require_dims(m.rows() == dim_ && m.cols() == dim_, "structure tensor must be n x n x n");
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
          if (!belongs_to(m(r, c), field_)) throw Error(ErrorKind::FieldMismatch, "structure constant outside " + field_.name());
    }
    require_dims(labels_.empty() || static_cast<int>(labels_.size()) == dim_, "basis label count differs from dim");
  }

  /// Builds the table from a callback giving e_i·e_j as a coordinate vector.
  template <class F>
  static Algebra from_products(FieldSpec field, int dim, F&& product, std::vector<std::string> labels = {}) {
    std::vector<Mat<S>> left(static_cast<std::size_t>(dim), Mat<S>::Zero(dim, dim));
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        Vec<S> v = product(i, j);
        require_dims(v.size() == dim, "product vector has wrong length");
        left[static_cast<std::size_t>(i)].col(j) = v;
      }
    }
    return Algebra(field, std::move(left), std::move(labels));
  }

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Mat<S>& left(int i) const { return left_[static_cast<std::size_t>(i)]; }
  const S& coeff(int i, int j, int k) const { return left_[static_cast<std::size_t>(i)](k, j); }
  /// e_i · e_j
  auto basis_product(int i, int j) const { return left_[static_cast<std::size_t>(i)].col(j); }

  Algebra with_labels(std::vector<std::string> labels) const { return Algebra(field_, left_, std::move(labels)); }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    if (a.field_ != b.field_ || a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i) {
      if (a.left(i) != b.left(i)) return false;
    }
    return true;
  }

 private:
  FieldSpec field_;
  int dim_ = 0;
  std::vector<Mat<S>> left_;
  std::vector<std::string> labels_;
};

template <class S>
struct BilinearForm {
  FieldSpec field;
  Mat<S> omega;  // ω(e_i, e_j) = omega(i, j)

  int dim() const { return static_cast<int>(omega.rows()); }
  S operator()(const Vec<S>& x, const Vec<S>& y) const { return (x.transpose() * omega * y)(0, 0); }
};

/// Outcome of an identity check. A failing report names the first failing
/// basis tuple (lexicographic) and the exact nonzero discrepancy there.
template <class S>
struct CheckReport {
  struct Witness {
    std::vector<int> indices;
    Vec<S> discrepancy;
    std::string clause;  // which sub-identity failed, empty for single identities
  };

  bool pass = true;
  std::string identity;
  std::optional<Witness> witness;
  std::string tag;                 // distinguishes failure modes, e.g. "weight-mismatch"
  std::vector<std::string> notes;  // non-fatal flags such as vacuous coefficients

  static CheckReport passed(std::string name) { return CheckReport{true, std::move(name), std::nullopt, {}, {}}; }
  static CheckReport failed(std::string name, std::vector<int> idx, Vec<S> disc, std::string clause = {}) {
    return CheckReport{false, std::move(name), Witness{std::move(idx), std::move(disc), std::move(clause)}, {}, {}};
  }
  explicit operator bool() const { return pass; }
};

// ---------------------------------------------------------------------------
// products and multiplication operators

template <class S>
void require_vector(const Algebra<S>& a, const Vec<S>& x) {
  require_dims(x.size() == a.dim(), "vector length " + std::to_string(x.size()) + " vs algebra dim " + std::to_string(a.dim()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!belongs_to(x(i), a.field())) throw Error(ErrorKind::FieldMismatch, "vector coordinate outside " + a.field().name());
  }
}

/// x·y by bilinear extension: (x·y)_k = Σ x_i y_j c[i][j][k].
template <class S>
Vec<S> multiply(const Algebra<S>& a, const Vec<S>& x, const Vec<S>& y) {
  require_vector(a, x);
  require_vector(a, y);
  Vec<S> out = Vec<S>::Zero(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    if (!x(i).is_zero()) out += x(i) * (a.left(i) * y);
  }
  return out;
}

/// (x·y)·z − x·(y·z)
template <class S>
Vec<S> associator(const Algebra<S>& a, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
  return multiply(a, multiply(a, x, y), z) - multiply(a, x, multiply(a, y, z));
}

/// Matrix of y ↦ x·y.
template <class S>
LinearMap<S> left_mult(const Algebra<S>& a, const Vec<S>& x) {
  require_vector(a, x);
  Mat<S> m = Mat<S>::Zero(a.dim(), a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    if (!x(i).is_zero()) m += x(i) * a.left(i);
  }
  return m;
}

/// Matrix of y ↦ y·x.
template <class S>
LinearMap<S> right_mult(const Algebra<S>& a, const Vec<S>& x) {
  require_vector(a, x);
  Mat<S> m(a.dim(), a.dim());
  for (int j = 0; j < a.dim(); ++j) m.col(j) = a.left(j) * x;
  return m;
}

template <class S>
Algebra<S> opposite(const Algebra<S>& a) {
  return Algebra<S>::from_products(a.field(), a.dim(), [&](int i, int j) { return Vec<S>(a.basis_product(j, i)); },
                                   a.labels());
}

/// The bracket x·y − y·x as a new algebra.
template <class S>
Algebra<S> commutator_algebra(const Algebra<S>& a) {
  return Algebra<S>::from_products(
      a.field(), a.dim(), [&](int i, int j) { return Vec<S>(a.basis_product(i, j) - a.basis_product(j, i)); },
      a.labels());
}

/// Pointwise linear combination Σ w_t · (product t) of algebras on one space.
template <class S>
Algebra<S> combine(const std::vector<std::pair<S, const Algebra<S>*>>& terms, const FieldSpec& field, int dim) {
  std::vector<Mat<S>> left(static_cast<std::size_t>(dim), Mat<S>::Zero(dim, dim));
  for (const auto& [w, alg] : terms) {
    require_dims(alg->dim() == dim, "combined algebras must share a dimension");
    for (int i = 0; i < dim; ++i) left[static_cast<std::size_t>(i)] += w * alg->left(i);
  }
  return Algebra<S>(field, std::move(left));
}

enum class ScalarProductVariant { LeftL, RightL };

/// x·y = ⟨x,c⟩⟨y,c⟩c + L(x)y (LeftL) or + L(y)x (RightL). Requires L(c) = 0.
template <class S>
Algebra<S> scalar_product_algebra(const BilinearForm<S>& form, const Vec<S>& c, const Vec<S>& functional,
                                  ScalarProductVariant variant) {
  const int n = form.dim();
  require_dims(form.omega.cols() == n && c.size() == n && functional.size() == n,
               "form, distinguished vector and functional must share a dimension");
  if (!functional.dot(c).is_zero()) {
    throw Error(ErrorKind::ConstraintViolated, "the linear form must vanish on c");
  }
  const Vec<S> form_c = form.omega * c;  // ⟨e_i, c⟩ = (Ω c)_i
  return Algebra<S>::from_products(form.field, n, [&](int i, int j) {
    Vec<S> v = (form_c(i) * form_c(j)) * c;
    if (variant == ScalarProductVariant::LeftL) {
      v(j) += functional(i);
    } else {
      v(i) += functional(j);
    }
    return v;
  });
}

// ---------------------------------------------------------------------------
// direct sums

/// Coordinates of V_0 ⊕ V_1 ⊕ ... concatenated in block order.
struct BlockLayout {
  std::vector<int> sizes;

  int total() const {
    int t = 0;
    for (int s : sizes) t += s;
    return t;
  }
  int offset(std::size_t block) const {
    int t = 0;
    for (std::size_t b = 0; b < block; ++b) t += sizes[b];
    return t;
  }

  template <class S>
  Vec<S> embed(std::size_t block, const Vec<S>& v) const {
    require_dims(block < sizes.size() && v.size() == sizes[block], "embed: block size mismatch");
    Vec<S> out = Vec<S>::Zero(total());
    out.segment(offset(block), sizes[block]) = v;
    return out;
  }

  template <class S>
  Vec<S> project(std::size_t block, const Vec<S>& v) const {
    require_dims(block < sizes.size() && v.size() == total(), "project: vector does not match layout");
    return v.segment(offset(block), sizes[block]);
  }

  template <class S>
  Vec<S> concat(const std::vector<Vec<S>>& parts) const {
    require_dims(parts.size() == sizes.size(), "concat: part count");
    Vec<S> out(total());
    for (std::size_t b = 0; b < parts.size(); ++b) {
      require_dims(parts[b].size() == sizes[b], "concat: part size");
      out.segment(offset(b), sizes[b]) = parts[b];
    }
    return out;
  }
};

/// The direct-sum algebra A ⊕ B with componentwise product.
template <class S>
Algebra<S> direct_sum(const Algebra<S>& a, const Algebra<S>& b) {
  const BlockLayout layout{{a.dim(), b.dim()}};
  return Algebra<S>::from_products(a.field(), layout.total(), [&](int i, int j) {
    Vec<S> v = Vec<S>::Zero(layout.total());
    if (i < a.dim() && j < a.dim()) v.head(a.dim()) = a.basis_product(i, j);
    if (i >= a.dim() && j >= a.dim()) v.tail(b.dim()) = b.basis_product(i - a.dim(), j - a.dim());
    return v;
  });
}

// ---------------------------------------------------------------------------
// subspace closure

/// Whether span(gens) is closed under the product. The witness is the first
/// generator pair (i, j) whose product leaves the span, with the residual
/// left after eliminating the span's pivot coordinates.
template <class S>
CheckReport<S> check_span_closed(const Algebra<S>& a, const std::vector<Vec<S>>& gens) {
  for (const auto& g : gens) require_vector(a, g);
  const Echelon<S> span = span_of<S>(gens, a.dim());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Vec<S> res = span.residual(multiply(a, gens[i], gens[j]));
      if (!is_zero(res)) {
        return CheckReport<S>::failed("span_closed", {static_cast<int>(i), static_cast<int>(j)}, std::move(res));
      }
    }
  }
  return CheckReport<S>::passed("span_closed");
}

/// The image of e_0..e_{n-1} under `m`, as a list of vectors.
template <class S>
std::vector<Vec<S>> columns(const Mat<S>& m) {
  std::vector<Vec<S>> out;
  out.reserve(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.emplace_back(m.col(j));
  return out;
}

template <class S>
void require_map(const Mat<S>& m, Eigen::Index rows, Eigen::Index cols, const FieldSpec& field, const char* what) {
  require_dims(m.rows() == rows && m.cols() == cols,
               std::string(what) + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) + " map, got " +
                   std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!belongs_to(m(r, c), field)) throw Error(ErrorKind::FieldMismatch, std::string(what) + ": entry outside " + field.name());
}

}  // namespace antiflex
