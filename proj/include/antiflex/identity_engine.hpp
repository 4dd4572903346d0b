#pragma once

// A small evaluator for fixed multilinear identities.
//
// An identity is a formal linear combination of parenthesized words in
// variables x_0..x_{k-1}, built from indexed binary products and indexed
// linear maps, asserted to vanish. Since every such word is multilinear in
// the variables, checking all basis tuples decides the identity.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "antiflex/algebra.hpp"

namespace antiflex {

/// A single word: a variable, a product of two words, or a map applied to a word.
class Word {
 public:
  enum class Kind { Var, Prod, Map };

  static Word var(int i) { return Word(std::make_shared<const Node>(Node{Kind::Var, i, nullptr, nullptr})); }
  static Word prod(int op, Word a, Word b) {
    return Word(std::make_shared<const Node>(Node{Kind::Prod, op, std::move(a.node_), std::move(b.node_)}));
  }
  static Word map(int m, Word a) {
    return Word(std::make_shared<const Node>(Node{Kind::Map, m, std::move(a.node_), nullptr}));
  }

  Kind kind() const { return node_->kind; }
  int index() const { return node_->index; }
  Word lhs() const { return Word(node_->lhs); }
  Word rhs() const { return Word(node_->rhs); }

 private:
  struct Node {
    Kind kind;
    int index;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  explicit Word(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Σ coef · word.
template <class S>
class Combination {
 public:
  Combination() = default;
  Combination(Word w) : terms_{{S(1), std::move(w)}} {}  // NOLINT: a word is a combination

  const std::vector<std::pair<S, Word>>& terms() const { return terms_; }

  Combination& operator+=(const Combination& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [c, w] : o.terms_) terms_.emplace_back(-c, w);
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator-(const Combination& a) { return Combination() - a; }
  friend Combination operator*(const S& s, Combination a) {
    for (auto& t : a.terms_) t.first = s * t.first;
    return a;
  }

 private:
  std::vector<std::pair<S, Word>> terms_;
};

/// Bilinear expansion of op(a, b).
template <class S>
Combination<S> prod(int op, const Combination<S>& a, const Combination<S>& b) {
  Combination<S> out;
  for (const auto& [ca, wa] : a.terms())
    for (const auto& [cb, wb] : b.terms()) out += (ca * cb) * Combination<S>(Word::prod(op, wa, wb));
  return out;
}

template <class S>
Combination<S> apply(int m, const Combination<S>& a) {
  Combination<S> out;
  for (const auto& [c, w] : a.terms()) out += c * Combination<S>(Word::map(m, w));
  return out;
}

template <class S>
struct Identity {
  std::string name;
  int arity = 0;
  Combination<S> expr;  // asserted to vanish
};

/// The products and maps an identity's indices refer to; all act on one space.
template <class S>
struct Interpretation {
  std::vector<const Algebra<S>*> products;
  std::vector<const Mat<S>*> maps;
  int dim = 0;
};

template <class S>
class IdentityEvaluator {
 public:
  explicit IdentityEvaluator(const Interpretation<S>& interp) : in_(interp) {
    for (const auto* p : in_.products) require_dims(p->dim() == in_.dim, "identity product dimension");
    for (const auto* m : in_.maps) require_dims(m->rows() == in_.dim && m->cols() == in_.dim, "identity map dimension");
  }

  Vec<S> eval(const Combination<S>& c, const std::vector<int>& basis) const {
    Vec<S> out = Vec<S>::Zero(in_.dim);
    for (const auto& [coef, w] : c.terms()) {
      if (coef.is_zero()) continue;
      out += coef * word(w, basis);
    }
    return out;
  }

 private:
  Vec<S> word(const Word& w, const std::vector<int>& basis) const {
    switch (w.kind()) {
      case Word::Kind::Var: {
        Vec<S> v = Vec<S>::Zero(in_.dim);
        v(basis[static_cast<std::size_t>(w.index())]) = S(1);
        return v;
      }
      case Word::Kind::Map: {
        const Mat<S>& m = *in_.maps[static_cast<std::size_t>(w.index())];
        const Word a = w.lhs();
        if (a.kind() == Word::Kind::Var) return m.col(basis[static_cast<std::size_t>(a.index())]);
        return m * word(a, basis);
      }
      case Word::Kind::Prod: {
        const Algebra<S>& alg = *in_.products[static_cast<std::size_t>(w.index())];
        const Word a = w.lhs();
        const Word b = w.rhs();
        if (a.kind() == Word::Kind::Var) {
          const Mat<S>& left = alg.left(basis[static_cast<std::size_t>(a.index())]);
          if (b.kind() == Word::Kind::Var) return left.col(basis[static_cast<std::size_t>(b.index())]);
          return left * word(b, basis);
        }
        const Vec<S> x = word(a, basis);
        const Vec<S> y = word(b, basis);
        Vec<S> out = Vec<S>::Zero(in_.dim);
        for (int i = 0; i < in_.dim; ++i) {
          if (!x(i).is_zero()) out += x(i) * (alg.left(i) * y);
        }
        return out;
      }
    }
    return {};
  }

  const Interpretation<S>& in_;
};

/// Advances a lexicographic counter over {0..n-1}^k; false when exhausted.
inline bool next_tuple(std::vector<int>& t, int n) {
  for (std::size_t pos = t.size(); pos-- > 0;) {
    if (++t[pos] < n) return true;
    t[pos] = 0;
  }
  return false;
}

/// Checks a list of identities of equal arity under one interpretation. Basis
/// tuples are visited in lexicographic order; within a tuple, identities in
/// list order. The first nonzero evaluation becomes the witness.
template <class S>
CheckReport<S> check_identities(const std::string& name, const std::vector<Identity<S>>& ids,
                                const Interpretation<S>& interp) {
  if (ids.empty() || interp.dim == 0) return CheckReport<S>::passed(name);
  const int arity = ids.front().arity;
  for (const auto& id : ids) require_dims(id.arity == arity, "identities in one check must share arity");
  const IdentityEvaluator<S> ev(interp);
  std::vector<int> t(static_cast<std::size_t>(arity), 0);
  do {
    for (const auto& id : ids) {
      Vec<S> d = ev.eval(id.expr, t);
      if (!is_zero(d)) {
        return CheckReport<S>::failed(name, t, std::move(d), ids.size() > 1 ? id.name : std::string());
      }
    }
  } while (next_tuple(t, interp.dim));
  return CheckReport<S>::passed(name);
}

template <class S>
CheckReport<S> check_identity(const Identity<S>& id, const Interpretation<S>& interp) {
  return check_identities<S>(id.name, {id}, interp);
}

/// Evaluates one identity at a given tuple (used to re-verify witnesses).
template <class S>
Vec<S> evaluate_at(const Identity<S>& id, const Interpretation<S>& interp, const std::vector<int>& tuple) {
  return IdentityEvaluator<S>(interp).eval(id.expr, tuple);
}

}  // namespace antiflex
