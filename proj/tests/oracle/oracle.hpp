#pragma once

// Naive reference implementations used to cross-check the library.
//
// Everything here is written directly from the defining formulas with plain
// nested loops over std::vector, over one of two rings: exact rationals
// (gmpxx) or integers mod p. Nothing is shared with the library except the
// conversion of its objects into plain tables via their text encoding.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "antiflex/io.hpp"

namespace oracle {

struct QRing {
  using T = mpq_class;
  T zero() const { return 0; }
  T from(std::int64_t v) const { return T(static_cast<long>(v)); }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T frac(std::int64_t num, std::int64_t den) const { return T(static_cast<long>(num), static_cast<long>(den)); }
  bool is_zero(const T& a) const { return a == 0; }
  T parse(const std::string& s) const { T v(s); v.canonicalize(); return v; }
  std::string str(const T& a) const { return a.get_str(); }
};

struct ModRing {
  using T = std::int64_t;
  std::int64_t p;
  T norm(std::int64_t v) const { v %= p; return v < 0 ? v + p : v; }
  T zero() const { return 0; }
  T from(std::int64_t v) const { return norm(v); }
  T add(T a, T b) const { return norm(a + b); }
  T sub(T a, T b) const { return norm(a - b); }
  T mul(T a, T b) const { return norm(a * b); }
  // num * den^(p-2) by Fermat.
  T frac(std::int64_t num, std::int64_t den) const {
    T r = 1, b = norm(den);
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
    }
    return mul(norm(num), r);
  }
  bool is_zero(T a) const { return norm(a) == 0; }
  T parse(const std::string& s) const { return norm(std::stoll(s)); }
  std::string str(T a) const { return std::to_string(norm(a)); }
};

template <class R>
using V = std::vector<typename R::T>;
template <class R>
using M = std::vector<V<R>>;  // m[row][col]
template <class R>
using Tensor = std::vector<std::vector<V<R>>>;  // c[i][j] = e_i e_j

template <class R>
struct Ops {
  R ring;
  int n;

  V<R> zero_vec(int len) const { return V<R>(static_cast<std::size_t>(len), ring.zero()); }
  V<R> e(int i) const {
    V<R> v = zero_vec(n);
    v[i] = ring.from(1);
    return v;
  }
  V<R> add(V<R> a, const V<R>& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = ring.add(a[i], b[i]);
    return a;
  }
  V<R> sub(V<R> a, const V<R>& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = ring.sub(a[i], b[i]);
    return a;
  }
  V<R> scale(const typename R::T& s, V<R> a) const {
    for (auto& x : a) x = ring.mul(s, x);
    return a;
  }
  bool is_zero(const V<R>& a) const {
    for (const auto& x : a)
      if (!ring.is_zero(x)) return false;
    return true;
  }
  // (x·y)_k = Σ x_i y_j c[i][j][k]
  V<R> mul(const Tensor<R>& c, const V<R>& x, const V<R>& y) const {
    V<R> out = zero_vec(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out[k] = ring.add(out[k], ring.mul(ring.mul(x[i], y[j]), c[i][j][k]));
    return out;
  }
  V<R> apply(const M<R>& m, const V<R>& x) const {
    V<R> out = zero_vec(static_cast<int>(m.size()));
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < x.size(); ++c) out[r] = ring.add(out[r], ring.mul(m[r][c], x[c]));
    return out;
  }
  V<R> assoc(const Tensor<R>& c, const V<R>& x, const V<R>& y, const V<R>& z) const {
    return sub(mul(c, mul(c, x, y), z), mul(c, x, mul(c, y, z)));
  }
};

/// First failing basis tuple and the discrepancy there.
template <class R>
struct Failure {
  std::vector<int> indices;
  V<R> discrepancy;
};

template <class R>
using Verdict = std::optional<Failure<R>>;  // nullopt = identity holds

// --- conversion from library objects ----------------------------------------

template <class R, class S>
Tensor<R> tensor(const R& ring, const antiflex::Algebra<S>& a) {
  const antiflex::json j = antiflex::algebra_to_json(a);
  Tensor<R> c;
  for (const auto& row : j["product"]) {
    std::vector<V<R>> r;
    for (const auto& cell : row) {
      V<R> v;
      for (const auto& s : cell) v.push_back(ring.parse(s.template get<std::string>()));
      r.push_back(v);
    }
    c.push_back(r);
  }
  return c;
}

template <class R, class S>
M<R> matrix(const R& ring, const antiflex::FieldSpec& f, const antiflex::Mat<S>& m) {
  const antiflex::json j = antiflex::map_to_json(f, m);
  M<R> out;
  for (const auto& row : j["entries"]) {
    V<R> v;
    for (const auto& s : row) v.push_back(ring.parse(s.template get<std::string>()));
    out.push_back(v);
  }
  return out;
}

template <class R, class S>
V<R> vec(const R& ring, const antiflex::FieldSpec& f, const antiflex::Vec<S>& x) {
  V<R> out;
  for (const auto& s : antiflex::vector_to_json<S>(f, x)) out.push_back(ring.parse(s.template get<std::string>()));
  return out;
}

template <class R>
int dim(const std::vector<R>& c) {
  return static_cast<int>(c.size());
}

// --- single-product identities ------------------------------------------------

/// Evaluates f(i, j, k) over all basis triples in lexicographic order.
template <class R, class F>
Verdict<R> scan3(const Ops<R>& o, F f) {
  for (int i = 0; i < o.n; ++i)
    for (int j = 0; j < o.n; ++j)
      for (int k = 0; k < o.n; ++k) {
        V<R> d = f(o.e(i), o.e(j), o.e(k));
        if (!o.is_zero(d)) return Failure<R>{{i, j, k}, d};
      }
  return std::nullopt;
}

template <class R, class F>
Verdict<R> scan2(const Ops<R>& o, F f) {
  for (int i = 0; i < o.n; ++i)
    for (int j = 0; j < o.n; ++j) {
      V<R> d = f(o.e(i), o.e(j));
      if (!o.is_zero(d)) return Failure<R>{{i, j}, d};
    }
  return std::nullopt;
}

template <class R>
Verdict<R> anti_flexible(const R& ring, const Tensor<R>& c) {
  const Ops<R> o{ring, dim(c)};
  return scan3(o, [&](auto x, auto y, auto z) { return o.sub(o.assoc(c, x, y, z), o.assoc(c, z, y, x)); });
}

template <class R>
Verdict<R> flexible(const R& ring, const Tensor<R>& c) {
  const Ops<R> o{ring, dim(c)};
  return scan3(o, [&](auto x, auto y, auto z) { return o.add(o.assoc(c, x, y, z), o.assoc(c, z, y, x)); });
}

template <class R>
Verdict<R> associative(const R& ring, const Tensor<R>& c) {
  const Ops<R> o{ring, dim(c)};
  return scan3(o, [&](auto x, auto y, auto z) { return o.assoc(c, x, y, z); });
}

template <class R>
Verdict<R> left_symmetric(const R& ring, const Tensor<R>& c) {
  const Ops<R> o{ring, dim(c)};
  return scan3(o, [&](auto x, auto y, auto z) { return o.sub(o.assoc(c, x, y, z), o.assoc(c, y, x, z)); });
}

template <class R>
Verdict<R> right_symmetric(const R& ring, const Tensor<R>& c) {
  const Ops<R> o{ring, dim(c)};
  return scan3(o, [&](auto x, auto y, auto z) { return o.sub(o.assoc(c, x, y, z), o.assoc(c, x, z, y)); });
}

template <class R>
Verdict<R> cyclic_condition(const R& ring, const Tensor<R>& c) {
  const Ops<R> o{ring, dim(c)};
  return scan3(o, [&](auto x, auto y, auto z) { return o.add(o.mul(c, o.mul(c, x, y), z), o.mul(c, z, o.mul(c, y, x))); });
}

template <class R>
bool lie(const R& ring, const Tensor<R>& c) {
  const Ops<R> o{ring, dim(c)};
  if (scan2(o, [&](auto x, auto y) { return o.add(o.mul(c, x, y), o.mul(c, y, x)); })) return false;
  return !scan3(o, [&](auto x, auto y, auto z) {
    return o.add(o.add(o.mul(c, o.mul(c, x, y), z), o.mul(c, o.mul(c, y, z), x)), o.mul(c, o.mul(c, z, x), y));
  });
}

// --- derived tables -----------------------------------------------------------

template <class R, class F>
Tensor<R> table(const Ops<R>& o, F f) {
  Tensor<R> c(static_cast<std::size_t>(o.n), std::vector<V<R>>(static_cast<std::size_t>(o.n)));
  for (int i = 0; i < o.n; ++i)
    for (int j = 0; j < o.n; ++j) c[i][j] = f(o.e(i), o.e(j));
  return c;
}

template <class R>
Tensor<R> opposite(const R& ring, const Tensor<R>& c) {
  const Ops<R> o{ring, dim(c)};
  return table(o, [&](auto x, auto y) { return o.mul(c, y, x); });
}

template <class R>
Tensor<R> commutator(const R& ring, const Tensor<R>& c) {
  const Ops<R> o{ring, dim(c)};
  return table(o, [&](auto x, auto y) { return o.sub(o.mul(c, x, y), o.mul(c, y, x)); });
}

// --- two-product identities ---------------------------------------------------

template <class R>
Verdict<R> pre_anti_flexible(const R& ring, const Tensor<R>& prec, const Tensor<R>& succ) {
  const Ops<R> o{ring, dim(prec)};
  auto L = [&](const V<R>& a, const V<R>& b) { return o.mul(prec, a, b); };
  auto G = [&](const V<R>& a, const V<R>& b) { return o.mul(succ, a, b); };
  for (int i = 0; i < o.n; ++i)
    for (int j = 0; j < o.n; ++j)
      for (int k = 0; k < o.n; ++k) {
        const V<R> x = o.e(i), y = o.e(j), z = o.e(k);
        const V<R> first = o.sub(o.sub(L(G(x, y), z), G(x, L(y, z))), o.sub(L(G(z, y), x), G(z, L(y, x))));
        if (!o.is_zero(first)) return Failure<R>{{i, j, k}, first};
        const V<R> lhs = o.sub(G(o.add(G(x, y), L(x, y)), z), G(x, G(y, z)));
        const V<R> rhs = o.sub(L(L(z, y), x), L(z, o.add(L(y, x), G(y, x))));
        const V<R> second = o.sub(lhs, rhs);
        if (!o.is_zero(second)) return Failure<R>{{i, j, k}, second};
      }
  return std::nullopt;
}

template <class R>
bool dendriform(const R& ring, const Tensor<R>& prec, const Tensor<R>& succ) {
  const Ops<R> o{ring, dim(prec)};
  auto L = [&](const V<R>& a, const V<R>& b) { return o.mul(prec, a, b); };
  auto G = [&](const V<R>& a, const V<R>& b) { return o.mul(succ, a, b); };
  return !scan3(o, [&](auto x, auto y, auto z) {
    V<R> d = o.sub(L(L(x, y), z), L(x, o.add(L(y, z), G(y, z))));
    if (o.is_zero(d)) d = o.sub(L(G(x, y), z), G(x, L(y, z)));
    if (o.is_zero(d)) d = o.sub(G(o.add(L(x, y), G(x, y)), z), G(x, G(y, z)));
    return d;
  });
}

// --- operators ----------------------------------------------------------------

template <class R>
Verdict<R> rota_baxter(const R& ring, const Tensor<R>& c, const M<R>& r, const typename R::T& w) {
  const Ops<R> o{ring, dim(c)};
  return scan2(o, [&](auto a, auto b) {
    const V<R> ra = o.apply(r, a), rb = o.apply(r, b);
    const V<R> inner = o.add(o.mul(c, a, rb), o.mul(c, ra, b));
    return o.sub(o.mul(c, ra, rb), o.add(o.apply(r, inner), o.scale(w, o.apply(r, o.mul(c, a, b)))));
  });
}

template <class R>
Verdict<R> nijenhuis(const R& ring, const Tensor<R>& c, const M<R>& nm) {
  const Ops<R> o{ring, dim(c)};
  return scan2(o, [&](auto x, auto y) {
    const V<R> nx = o.apply(nm, x), ny = o.apply(nm, y);
    const V<R> inner = o.sub(o.add(o.mul(c, nx, y), o.mul(c, x, ny)), o.apply(nm, o.mul(c, x, y)));
    return o.sub(o.mul(c, nx, ny), o.apply(nm, inner));
  });
}

template <class R>
Tensor<R> rb_product(const R& ring, const Tensor<R>& c, const M<R>& r, const typename R::T& w) {
  const Ops<R> o{ring, dim(c)};
  return table(o, [&](auto a, auto b) {
    return o.add(o.add(o.mul(c, a, o.apply(r, b)), o.mul(c, o.apply(r, a), b)), o.scale(w, o.mul(c, a, b)));
  });
}

template <class R>
Tensor<R> nj_product(const R& ring, const Tensor<R>& c, const M<R>& nm) {
  const Ops<R> o{ring, dim(c)};
  return table(o, [&](auto x, auto y) {
    return o.sub(o.add(o.mul(c, o.apply(nm, x), y), o.mul(c, x, o.apply(nm, y))), o.apply(nm, o.mul(c, x, y)));
  });
}

/// {prec, succ} from a Rota-Baxter operator; `half_w` is λ/2 in the ring.
template <class R>
std::pair<Tensor<R>, Tensor<R>> rb_pre(const R& ring, const Tensor<R>& c, const M<R>& r, const typename R::T& half_w) {
  const Ops<R> o{ring, dim(c)};
  auto prec = table(o, [&](auto a, auto b) { return o.add(o.mul(c, a, o.apply(r, b)), o.scale(half_w, o.mul(c, a, b))); });
  auto succ = table(o, [&](auto a, auto b) { return o.add(o.mul(c, o.apply(r, a), b), o.scale(half_w, o.mul(c, a, b))); });
  return {prec, succ};
}

template <class R>
std::pair<Tensor<R>, Tensor<R>> nj_pre(const R& ring, const Tensor<R>& c, const M<R>& nm) {
  const Ops<R> o{ring, dim(c)};
  const auto half = ring.frac(1, 2);
  auto prec = table(o, [&](auto x, auto y) { return o.sub(o.mul(c, x, o.apply(nm, y)), o.scale(half, o.apply(nm, o.mul(c, x, y)))); });
  auto succ = table(o, [&](auto x, auto y) { return o.sub(o.mul(c, o.apply(nm, x), y), o.scale(half, o.apply(nm, o.mul(c, x, y)))); });
  return {prec, succ};
}

/// (3/2)N(N(zy)x + xN(yz)) − N²((zy)x + x(yz))
template <class R>
Verdict<R> nj_condition(const R& ring, const Tensor<R>& c, const M<R>& nm) {
  const Ops<R> o{ring, dim(c)};
  const auto th = ring.frac(3, 2);
  return scan3(o, [&](auto x, auto y, auto z) {
    const V<R> zy = o.mul(c, z, y), yz = o.mul(c, y, z);
    const V<R> lhs = o.scale(th, o.apply(nm, o.add(o.mul(c, o.apply(nm, zy), x), o.mul(c, x, o.apply(nm, yz)))));
    const V<R> rhs = o.apply(nm, o.apply(nm, o.add(o.mul(c, zy, x), o.mul(c, x, yz))));
    return o.sub(lhs, rhs);
  });
}

/// x∘y = [N(x),y] − ½N([x,y])
template <class R>
Tensor<R> nj_lsym(const R& ring, const Tensor<R>& c, const M<R>& nm) {
  const Ops<R> o{ring, dim(c)};
  const Tensor<R> br = commutator(ring, c);
  const auto half = ring.frac(1, 2);
  return table(o, [&](auto x, auto y) { return o.sub(o.mul(br, o.apply(nm, x), y), o.scale(half, o.apply(nm, o.mul(br, x, y)))); });
}

// --- bimodules ------------------------------------------------------------------

/// l[i][α] = l(e_i, f_α), r[α][i] = r(f_α, e_i), both coordinate vectors in M.
template <class R>
struct Module {
  int m;
  std::vector<std::vector<V<R>>> l;
  std::vector<std::vector<V<R>>> r;
};

template <class R, class S>
Module<R> module(const R& ring, const antiflex::Bimodule<S>& b) {
  const antiflex::json j = antiflex::bimodule_to_json(b);
  Module<R> out{b.moddim(), {}, {}};
  auto read = [&](const antiflex::json& t) {
    std::vector<std::vector<V<R>>> res;
    for (const auto& row : t) {
      std::vector<V<R>> rr;
      for (const auto& cell : row) {
        V<R> v;
        for (const auto& s : cell) v.push_back(ring.parse(s.template get<std::string>()));
        rr.push_back(v);
      }
      res.push_back(rr);
    }
    return res;
  };
  out.l = read(j["left"]);
  out.r = read(j["right"]);
  return out;
}

template <class R>
struct ModOps {
  Ops<R> a;  // algebra side
  const Module<R>& mod;

  V<R> l(const V<R>& x, const V<R>& f) const {
    V<R> out = a.zero_vec(mod.m);
    for (int i = 0; i < a.n; ++i)
      for (int al = 0; al < mod.m; ++al) out = a.add(out, a.scale(a.ring.mul(x[i], f[al]), mod.l[i][al]));
    return out;
  }
  V<R> r(const V<R>& f, const V<R>& x) const {
    V<R> out = a.zero_vec(mod.m);
    for (int i = 0; i < a.n; ++i)
      for (int al = 0; al < mod.m; ++al) out = a.add(out, a.scale(a.ring.mul(x[i], f[al]), mod.r[al][i]));
    return out;
  }
  V<R> f(int al) const {
    V<R> v = a.zero_vec(mod.m);
    v[al] = a.ring.from(1);
    return v;
  }
};

template <class R>
bool bimodule(const R& ring, const Tensor<R>& c, const Module<R>& mod) {
  const ModOps<R> mo{Ops<R>{ring, dim(c)}, mod};
  const Ops<R>& o = mo.a;
  for (int i = 0; i < o.n; ++i)
    for (int j = 0; j < o.n; ++j)
      for (int al = 0; al < mod.m; ++al) {
        const V<R> a = o.e(i), b = o.e(j), m = mo.f(al);
        const V<R> d1 = o.sub(o.sub(mo.l(o.mul(c, a, b), m), mo.l(a, mo.l(b, m))),
                              o.sub(mo.r(mo.r(m, b), a), mo.r(m, o.mul(c, b, a))));
        const V<R> d2 = o.sub(o.sub(mo.l(a, mo.r(m, b)), mo.r(mo.l(a, m), b)),
                              o.sub(mo.l(b, mo.r(m, a)), mo.r(mo.l(b, m), a)));
        if (!o.is_zero(d1) || !o.is_zero(d2)) return false;
      }
  return true;
}

/// T: M → A given as an n×m matrix.
template <class R>
Verdict<R> o_operator(const R& ring, const Tensor<R>& c, const Module<R>& mod, const M<R>& t) {
  const ModOps<R> mo{Ops<R>{ring, dim(c)}, mod};
  const Ops<R>& o = mo.a;
  for (int p = 0; p < mod.m; ++p)
    for (int q = 0; q < mod.m; ++q) {
      const V<R> tp = o.apply(t, mo.f(p)), tq = o.apply(t, mo.f(q));
      const V<R> d = o.sub(o.mul(c, tp, tq), o.apply(t, o.add(mo.r(mo.f(p), tq), mo.l(tp, mo.f(q)))));
      if (!o.is_zero(d)) return Failure<R>{{p, q}, d};
    }
  return std::nullopt;
}

/// Semidirect product (a,m)(b,n) = (ab, l(a,n) + r(m,b)) on A⊕M.
template <class R>
Tensor<R> semidirect(const R& ring, const Tensor<R>& c, const Module<R>& mod) {
  const ModOps<R> mo{Ops<R>{ring, dim(c)}, mod};
  const int n = dim(c), m = mod.m;
  const Ops<R> big{ring, n + m};
  auto split = [&](const V<R>& v) {
    return std::pair<V<R>, V<R>>{V<R>(v.begin(), v.begin() + n), V<R>(v.begin() + n, v.end())};
  };
  return table(big, [&](auto x, auto y) {
    const auto [a, mm] = split(x);
    const auto [b, nn] = split(y);
    V<R> out = mo.a.mul(c, a, b);
    const V<R> tail = mo.a.add(mo.l(a, nn), mo.r(mm, b));
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  });
}

template <class R>
std::string show(const R& ring, const V<R>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + ring.str(v[i]);
  return s + "]";
}

}  // namespace oracle
