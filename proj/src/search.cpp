#include "antiflex/search.hpp"

#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>

namespace antiflex {
namespace {

// Small dense arithmetic mod p on raw integers, used to reject candidates
// quickly. Everything it accepts is re-checked with the exact library code.
class Kernel {
 public:
  Kernel(std::uint32_t p, int n) : p_(p), n_(n) {}

  std::uint64_t p() const { return p_; }
  int n() const { return n_; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

 private:
  std::uint64_t p_;
  int n_;
};

using IVec = std::vector<std::uint64_t>;

// Structure tensor c[(i*n + j)*n + k].
struct ITensor {
  const Kernel* k;
  IVec c;

  IVec prod(const IVec& x, const IVec& y) const {
    const int n = k->n();
    IVec out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        const std::uint64_t s = k->mul(x[i], y[j]);
        const std::uint64_t* row = &c[static_cast<std::size_t>((i * n + j) * n)];
        for (int t = 0; t < n; ++t) out[t] = k->add(out[t], k->mul(s, row[t]));
      }
    }
    return out;
  }
  IVec basis(int i, int j) const {
    const int n = k->n();
    return IVec(c.begin() + (i * n + j) * n, c.begin() + (i * n + j + 1) * n);
  }
};

// rows×cols matrix, m[r*cols + c]; apply to a vector of length cols.
struct IMat {
  const Kernel* k;
  int rows, cols;
  IVec m;

  IVec apply(const IVec& x) const {
    IVec out(static_cast<std::size_t>(rows), 0);
    for (int c = 0; c < cols; ++c) {
      if (x[c] == 0) continue;
      for (int r = 0; r < rows; ++r) out[r] = k->add(out[r], k->mul(m[r * cols + c], x[c]));
    }
    return out;
  }
  IVec col(int c) const {
    IVec out(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) out[r] = m[r * cols + c];
    return out;
  }
};

IVec sub(const Kernel& k, IVec a, const IVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = k.add(a[i], k.neg(b[i]));
  return a;
}
IVec add(const Kernel& k, IVec a, const IVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = k.add(a[i], b[i]);
  return a;
}
IVec scale(const Kernel& k, std::uint64_t s, IVec a) {
  for (auto& v : a) v = k.mul(s, v);
  return a;
}

void digits(std::uint64_t index, std::uint32_t p, IVec& out) {
  for (std::size_t pos = out.size(); pos-- > 0;) {
    out[pos] = index % p;
    index /= p;
  }
}

std::uint64_t to_raw(const Fp& x) { return static_cast<std::uint64_t>(x.value()); }

ITensor tensor_of(const Kernel& k, const Algebra<Fp>& a) {
  const int n = a.dim();
  ITensor t{&k, IVec(static_cast<std::size_t>(n * n * n))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) t.c[static_cast<std::size_t>((i * n + j) * n + l)] = to_raw(a.coeff(i, j, l));
  return t;
}

IMat imat_of(const Kernel& k, const Mat<Fp>& m) {
  IMat out{&k, static_cast<int>(m.rows()), static_cast<int>(m.cols()), IVec(static_cast<std::size_t>(m.size()))};
  for (int r = 0; r < out.rows; ++r)
    for (int c = 0; c < out.cols; ++c) out.m[static_cast<std::size_t>(r * out.cols + c)] = to_raw(m(r, c));
  return out;
}

IVec unit(int n, int i) {
  IVec v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

bool fast_anti_flexible(const ITensor& t) {
  const int n = t.k->n();
  const Kernel& k = *t.k;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const IVec lhs = sub(k, t.prod(t.basis(i, j), unit(n, l)), t.prod(unit(n, i), t.basis(j, l)));
        const IVec rhs = sub(k, t.prod(t.basis(l, j), unit(n, i)), t.prod(unit(n, l), t.basis(j, i)));
        if (lhs != rhs) return false;
      }
  return true;
}

bool fast_rota_baxter(const ITensor& t, const IMat& r, std::uint64_t weight) {
  const int n = t.k->n();
  const Kernel& k = *t.k;
  for (int i = 0; i < n; ++i) {
    const IVec ri = r.col(i);
    for (int j = 0; j < n; ++j) {
      const IVec rj = r.col(j);
      const IVec inner = add(k, add(k, t.prod(unit(n, i), rj), t.prod(ri, unit(n, j))), scale(k, weight, t.basis(i, j)));
      if (t.prod(ri, rj) != r.apply(inner)) return false;
    }
  }
  return true;
}

bool fast_nijenhuis(const ITensor& t, const IMat& nm) {
  const int n = t.k->n();
  const Kernel& k = *t.k;
  for (int i = 0; i < n; ++i) {
    const IVec ni = nm.col(i);
    for (int j = 0; j < n; ++j) {
      const IVec nj = nm.col(j);
      const IVec inner = sub(k, add(k, t.prod(ni, unit(n, j)), t.prod(unit(n, i), nj)), nm.apply(t.basis(i, j)));
      if (t.prod(ni, nj) != nm.apply(inner)) return false;
    }
  }
  return true;
}

// Action matrices as IMat; left[i] is f ↦ l(e_i, f), right[i] is f ↦ r(f, e_i).
struct IActions {
  std::vector<IMat> left, right;

  IVec l(const Kernel& k, const IVec& a, const IVec& m) const { return act(k, left, a, m); }
  IVec r(const Kernel& k, const IVec& m, const IVec& a) const { return act(k, right, a, m); }

 private:
  static IVec act(const Kernel& k, const std::vector<IMat>& side, const IVec& a, const IVec& m) {
    IVec out(m.size(), 0);
    for (std::size_t i = 0; i < side.size(); ++i)
      if (a[i] != 0) out = add(k, out, scale(k, a[i], side[i].apply(m)));
    return out;
  }
};

bool fast_o_operator(const ITensor& t, const IActions& acts, const IMat& tm) {
  const Kernel& k = *t.k;
  for (int p = 0; p < tm.cols; ++p) {
    const IVec tp = tm.col(p);
    const IVec fp = unit(tm.cols, p);
    for (int q = 0; q < tm.cols; ++q) {
      const IVec tq = tm.col(q);
      const IVec fq = unit(tm.cols, q);
      if (t.prod(tp, tq) != tm.apply(add(k, acts.r(k, fp, tq), acts.l(k, tp, fq)))) return false;
    }
  }
  return true;
}

bool fast_bimodule(const ITensor& t, const IActions& acts, int moddim) {
  const Kernel& k = *t.k;
  const int n = k.n();
  for (int i = 0; i < n; ++i) {
    const IVec a = unit(n, i);
    for (int j = 0; j < n; ++j) {
      const IVec b = unit(n, j);
      for (int m = 0; m < moddim; ++m) {
        const IVec f = unit(moddim, m);
        const IVec first_l = sub(k, acts.l(k, t.basis(i, j), f), acts.l(k, a, acts.l(k, b, f)));
        const IVec first_r = sub(k, acts.r(k, acts.r(k, f, b), a), acts.r(k, f, t.basis(j, i)));
        if (first_l != first_r) return false;
        const IVec second_l = sub(k, acts.l(k, a, acts.r(k, f, b)), acts.r(k, acts.l(k, a, f), b));
        const IVec second_r = sub(k, acts.l(k, b, acts.r(k, f, a)), acts.r(k, acts.l(k, b, f), a));
        if (second_l != second_r) return false;
      }
    }
  }
  return true;
}

void require_budget(std::uint64_t total, const SearchOptions& opts, const std::string& what) {
  if (total > opts.budget) {
    throw Error(ErrorKind::SearchSpaceTooLarge, what + ": " + (total == UINT64_MAX ? std::string("more than 2^64") : std::to_string(total)) +
                                                    " candidates exceed the budget of " + std::to_string(opts.budget));
  }
}

void require_search_field(const FieldSpec& field) {
  if (!field.is_prime_field()) throw Error(ErrorKind::PreconditionFailed, "enumeration needs a prime field");
}

// Scans [0, total) in contiguous blocks, one thread per block; `visit(index,
// hits)` appends any hit for that index. Blocks are merged in order.
template <class T>
SearchResult<T> partitioned_scan(std::uint64_t total, int workers,
                                 const std::function<void(std::uint64_t, std::vector<T>&)>& visit) {
  const auto w = static_cast<std::uint64_t>(std::max(1, workers));
  std::vector<std::vector<T>> parts(w);
  std::vector<std::exception_ptr> errors(w);
  auto run = [&](std::uint64_t b) {
    try {
      const std::uint64_t lo = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * b) / w);
      const std::uint64_t hi = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * (b + 1)) / w);
      for (std::uint64_t idx = lo; idx < hi; ++idx) visit(idx, parts[b]);
    } catch (...) {
      errors[b] = std::current_exception();
    }
  };
  if (w == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t b = 0; b < w; ++b) threads.emplace_back(run, b);
    for (auto& th : threads) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  SearchResult<T> out;
  out.scanned = total;
  for (auto& p : parts) out.hits.insert(out.hits.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

[[noreturn]] void oracle_disagreement(const std::string& what) {
  throw std::logic_error("fast filter and library check disagree on " + what);
}

}  // namespace

std::uint64_t default_budget() {
  if (const char* env = std::getenv("ANTIFLEX_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Format, std::string("ANTIFLEX_BUDGET is not an integer: ") + env);
    }
  }
  return kDefaultBudget;
}

std::uint64_t search_space_size(std::uint32_t p, int entries) {
  std::uint64_t total = 1;
  for (int i = 0; i < entries; ++i) {
    if (total > UINT64_MAX / p) return UINT64_MAX;
    total *= p;
  }
  return total;
}

Mat<Fp> matrix_at(const FieldSpec& field, int rows, int cols, std::uint64_t index) {
  IVec d(static_cast<std::size_t>(rows * cols));
  digits(index, field.p, d);
  Mat<Fp> m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Fp(static_cast<std::int64_t>(d[static_cast<std::size_t>(r * cols + c)]), field.p);
  return m;
}

Algebra<Fp> algebra_at(const FieldSpec& field, int dim, std::uint64_t index) {
  IVec d(static_cast<std::size_t>(dim * dim * dim));
  digits(index, field.p, d);
  return Algebra<Fp>::from_products(field, dim, [&](int i, int j) {
    Vec<Fp> v(dim);
    for (int k = 0; k < dim; ++k) v(k) = Fp(static_cast<std::int64_t>(d[static_cast<std::size_t>((i * dim + j) * dim + k)]), field.p);
    return v;
  });
}

SearchResult<Algebra<Fp>> enumerate_algebras(const FieldSpec& field, int dim, std::optional<IdentityKind> filter,
                                             const SearchOptions& opts) {
  require_search_field(field);
  require_dims(dim >= 0, "negative dimension");
  const std::uint64_t total = search_space_size(field.p, dim * dim * dim);
  require_budget(total, opts, "algebra enumeration");
  const Kernel k(field.p, dim);
  return partitioned_scan<Algebra<Fp>>(total, opts.workers, [&](std::uint64_t idx, std::vector<Algebra<Fp>>& hits) {
    if (filter == IdentityKind::AntiFlexible) {
      ITensor t{&k, IVec(static_cast<std::size_t>(dim * dim * dim))};
      digits(idx, field.p, t.c);
      if (!fast_anti_flexible(t)) return;
      Algebra<Fp> a = algebra_at(field, dim, idx);
      if (!satisfies(a, IdentityKind::AntiFlexible)) oracle_disagreement("anti-flexibility");
      hits.push_back(std::move(a));
      return;
    }
    Algebra<Fp> a = algebra_at(field, dim, idx);
    if (!filter || satisfies(a, *filter)) hits.push_back(std::move(a));
  });
}

SearchResult<Mat<Fp>> enumerate_operators(const Algebra<Fp>& a, const OperatorQuery& query, const SearchOptions& opts) {
  const FieldSpec& field = a.field();
  require_search_field(field);
  const int n = a.dim();
  if (query.kind == OperatorKind::RotaBaxter && !belongs_to(query.weight, field))
    throw Error(ErrorKind::FieldMismatch, "weight outside " + field.name());
  const std::uint64_t total = search_space_size(field.p, n * n);
  require_budget(total, opts, "operator enumeration");
  const Kernel k(field.p, n);
  const ITensor t = tensor_of(k, a);
  const Fp weight = Fp(query.weight.value(), field.p);
  return partitioned_scan<Mat<Fp>>(total, opts.workers, [&](std::uint64_t idx, std::vector<Mat<Fp>>& hits) {
    IMat m{&k, n, n, IVec(static_cast<std::size_t>(n * n))};
    digits(idx, field.p, m.m);
    if (query.kind == OperatorKind::RotaBaxter) {
      if (!fast_rota_baxter(t, m, to_raw(weight))) return;
      Mat<Fp> r = matrix_at(field, n, n, idx);
      if (!check_rota_baxter(a, WeightedOperator<Fp>{r, weight}).pass) oracle_disagreement("rota-baxter");
      hits.push_back(std::move(r));
    } else {
      if (!fast_nijenhuis(t, m)) return;
      Mat<Fp> nm = matrix_at(field, n, n, idx);
      if (!check_nijenhuis(a, nm).pass) oracle_disagreement("nijenhuis");
      hits.push_back(std::move(nm));
    }
  });
}

namespace {

IActions actions_of(const Kernel& k, const Bimodule<Fp>& b) {
  IActions acts;
  for (int i = 0; i < b.dim(); ++i) {
    acts.left.push_back(imat_of(k, b.left_action(i)));
    acts.right.push_back(imat_of(k, b.right_action(i)));
  }
  return acts;
}

}  // namespace

SearchResult<Mat<Fp>> enumerate_o_operators(const Bimodule<Fp>& b, const SearchOptions& opts) {
  const FieldSpec& field = b.field();
  require_search_field(field);
  const int n = b.dim(), m = b.moddim();
  const std::uint64_t total = search_space_size(field.p, n * m);
  require_budget(total, opts, "O-operator enumeration");
  const Kernel k(field.p, n);
  const ITensor t = tensor_of(k, b.algebra());
  const IActions acts = actions_of(k, b);
  return partitioned_scan<Mat<Fp>>(total, opts.workers, [&](std::uint64_t idx, std::vector<Mat<Fp>>& hits) {
    IMat tm{&k, n, m, IVec(static_cast<std::size_t>(n * m))};
    digits(idx, field.p, tm.m);
    if (!fast_o_operator(t, acts, tm)) return;
    Mat<Fp> op = matrix_at(field, n, m, idx);
    if (!check_o_operator(b, op).pass) oracle_disagreement("O-operator");
    hits.push_back(std::move(op));
  });
}

SearchResult<Bimodule<Fp>> enumerate_bimodules(const Algebra<Fp>& a, int moddim, const SearchOptions& opts) {
  const FieldSpec& field = a.field();
  require_search_field(field);
  const int n = a.dim();
  const int per = moddim * moddim;
  const std::uint64_t total = search_space_size(field.p, 2 * n * per);
  require_budget(total, opts, "bimodule enumeration");
  const Kernel k(field.p, n);
  const ITensor t = tensor_of(k, a);
  // Flat order: left[0], ..., left[n-1], right[0], ..., right[n-1], each row-major.
  return partitioned_scan<Bimodule<Fp>>(total, opts.workers, [&](std::uint64_t idx, std::vector<Bimodule<Fp>>& hits) {
    IVec d(static_cast<std::size_t>(2 * n * per));
    digits(idx, field.p, d);
    IActions acts;
    for (int s = 0; s < 2 * n; ++s) {
      IMat mm{&k, moddim, moddim, IVec(d.begin() + s * per, d.begin() + (s + 1) * per)};
      (s < n ? acts.left : acts.right).push_back(std::move(mm));
    }
    if (!fast_bimodule(t, acts, moddim)) return;
    std::vector<Mat<Fp>> left, right;
    for (int s = 0; s < 2 * n; ++s) {
      Mat<Fp> mm(moddim, moddim);
      for (int r = 0; r < moddim; ++r)
        for (int c = 0; c < moddim; ++c)
          mm(r, c) = Fp(static_cast<std::int64_t>(d[static_cast<std::size_t>(s * per + r * moddim + c)]), field.p);
      (s < n ? left : right).push_back(std::move(mm));
    }
    Bimodule<Fp> bm(a, moddim, std::move(left), std::move(right));
    if (!check_bimodule(bm).pass) oracle_disagreement("bimodule");
    hits.push_back(std::move(bm));
  });
}

}  // namespace antiflex
