// antiflex: command-line front end for the workbench.
//
// Exit codes: 0 pass, 1 check failure, 2 usage or input error,
// 3 search space larger than the budget.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "antiflex/io.hpp"
#include "antiflex/search.hpp"
#include "antiflex/symplectic.hpp"

namespace {

using namespace antiflex;

enum Exit { kPass = 0, kFail = 1, kInput = 2, kTooLarge = 3 };

struct Options {
  bool allow_small = false;
  bool timing = false;

  std::string algebra;
  std::string identity;
  std::string kind;
  std::string weight = "0";
  std::string op;
  std::string bimodule;
  std::string form;
  std::string construction;
  std::string variant = "nilpotent";
  std::string output;
  std::string filter;
  bool skip_ambient = false;
  std::uint32_t field_p = 0;
  int dim = 2;
  int moddim = 2;
  std::optional<std::uint64_t> budget;
  int workers = 1;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    write_text_file(path, text);
  }
}

/// Field named by a file: its "field" member, or its algebra's.
FieldSpec field_of(const json& j, bool allow_small) {
  if (j.contains("field")) return field_from_json(j.at("field"), allow_small);
  if (j.contains("algebra")) return field_of(j.at("algebra"), allow_small);
  throw Error(ErrorKind::Format, "input names no field");
}

template <class F>
int dispatch(const FieldSpec& field, F&& body) {
  if (field.is_prime_field()) return body(Fp{});
  return body(Rational{});
}

template <class S>
Mat<S> load_map(const Options& o, const FieldSpec& field) {
  if (o.op.empty()) throw Error(ErrorKind::Format, "--operator is required");
  FieldMap<S> m = map_from_json<S>(read_json_file(o.op), o.allow_small);
  if (m.field != field) throw Error(ErrorKind::FieldMismatch, "operator and algebra are over different fields");
  return std::move(m.map);
}

template <class S>
S load_weight(const Options& o, const FieldSpec& field) {
  return normalize(field, S::parse(field, o.weight));
}

template <class S>
Bimodule<S> load_bimodule(const Options& o) {
  if (o.bimodule.empty()) throw Error(ErrorKind::Format, "--bimodule is required");
  return bimodule_from_json<S>(read_json_file(o.bimodule), o.allow_small);
}

template <class S>
Algebra<S> load_algebra(const Options& o) {
  if (o.algebra.empty()) throw Error(ErrorKind::Format, "an algebra file is required");
  return algebra_from_json<S>(read_json_file(o.algebra), o.allow_small);
}

template <class S>
int report(const FieldSpec& field, const CheckReport<S>& r, const Options& o) {
  emit(canonical_string(report_to_json(field, r)), o.output);
  return r.pass ? kPass : kFail;
}

// --- check / check-op ---------------------------------------------------------

int cmd_check(const Options& o) {
  const json j = read_json_file(o.algebra);
  return dispatch(field_of(j, o.allow_small), [&](auto tag) {
    using S = decltype(tag);
    const Algebra<S> a = algebra_from_json<S>(j, o.allow_small);
    return report(a.field(), check_identity(a, parse_identity(o.identity)), o);
  });
}

int cmd_check_op(const Options& o) {
  if (o.kind == "o-operator") {
    const json j = read_json_file(o.bimodule);
    return dispatch(field_of(j, o.allow_small), [&](auto tag) {
      using S = decltype(tag);
      const Bimodule<S> b = bimodule_from_json<S>(j, o.allow_small);
      return report(b.field(), check_o_operator(b, load_map<S>(o, b.field())), o);
    });
  }
  const json j = read_json_file(o.algebra);
  return dispatch(field_of(j, o.allow_small), [&](auto tag) {
    using S = decltype(tag);
    const Algebra<S> a = algebra_from_json<S>(j, o.allow_small);
    const Mat<S> m = load_map<S>(o, a.field());
    if (o.kind == "rb") return report(a.field(), check_rota_baxter(a, {m, load_weight<S>(o, a.field())}), o);
    if (o.kind == "nijenhuis") return report(a.field(), check_nijenhuis(a, m), o);
    throw Error(ErrorKind::Format, "unknown operator kind '" + o.kind + "'");
  });
}

// --- derive -------------------------------------------------------------------

template <class S>
json derive_from_algebra(const Options& o, const Algebra<S>& a) {
  const FieldSpec& f = a.field();
  const std::string& c = o.construction;
  if (c == "dual-bimodule") return bimodule_to_json(dual_bimodule(a));
  if (c == "adjoint-bimodule") return bimodule_to_json(adjoint_bimodule(a));
  if (c == "symplectic-prelie") {
    if (o.form.empty()) throw Error(ErrorKind::Format, "--form is required");
    const BilinearForm<S> w = form_from_json<S>(read_json_file(o.form), o.allow_small);
    return algebra_to_json(pre_lie_from_symplectic(a, w, o.skip_ambient));
  }
  const Mat<S> m = load_map<S>(o, f);
  if (c.rfind("rb-", 0) == 0) {
    const WeightedOperator<S> r{m, load_weight<S>(o, f)};
    if (c == "rb-product") return algebra_to_json(rb_induced_product(a, r));
    if (c == "rb-pre") return pre_to_json(rb_pre_anti_flexible(a, r));
    if (c == "rb-lsym") return algebra_to_json(rb_left_symmetric(a, r));
    if (c == "rb-rsym") return algebra_to_json(rb_right_symmetric(a, r));
  }
  if (c == "nj-product") return algebra_to_json(nj_induced_product(a, m));
  if (c == "nj-pre") return pre_to_json(nj_pre_anti_flexible(a, m));
  if (c == "nj-lsym") return algebra_to_json(nj_left_symmetric(a, m));
  throw Error(ErrorKind::Format, "unknown construction '" + c + "'");
}

template <class S>
json derive_from_bimodule(const Options& o, const Bimodule<S>& b) {
  const FieldSpec& f = b.field();
  const std::string& c = o.construction;
  if (c == "semidirect") return algebra_to_json(semidirect_product(b));
  const Mat<S> t = load_map<S>(o, f);
  if (c == "o-pre") return pre_to_json(o_pre_anti_flexible(b, t));
  if (c == "o-lsym") return algebra_to_json(o_left_symmetric(b, t));
  if (c == "o-rsym") return algebra_to_json(o_right_symmetric(b, t));
  if (c == "extend-bimodule") return bimodule_to_json(extended_bimodule(b, t));
  if (c == "lift-rb") {
    const WeightedOperator<S> r = lift_rb_from_o(b, t, load_weight<S>(o, f));
    json out;
    out["operator"] = map_to_json(f, r.map);
    out["semidirect"] = algebra_to_json(semidirect_product(b));
    out["weight"] = scalar_to_json(normalize(f, r.weight));
    return out;
  }
  if (c == "lift-nj") {
    LiftVariant v;
    if (o.variant == "nilpotent") {
      v = LiftVariant::Nilpotent;
    } else if (o.variant == "idempotent") {
      v = LiftVariant::Idempotent;
    } else {
      throw Error(ErrorKind::Format, "--variant must be nilpotent or idempotent");
    }
    json out;
    out["operator"] = map_to_json(f, lift_nijenhuis_from_o(b, t, v));
    out["semidirect"] = algebra_to_json(semidirect_product(b));
    return out;
  }
  throw Error(ErrorKind::Format, "unknown construction '" + c + "'");
}

bool uses_bimodule(const std::string& c) {
  for (const char* name : {"semidirect", "o-pre", "o-lsym", "o-rsym", "extend-bimodule", "lift-rb", "lift-nj"})
    if (c == name) return true;
  return false;
}

int cmd_derive(const Options& o) {
  if (o.construction == "nj-double") {
    const json j = read_json_file(o.algebra);
    return dispatch(field_of(j, o.allow_small), [&](auto tag) {
      using S = decltype(tag);
      const Algebra<S> a = algebra_from_json<S>(j, o.allow_small);
      const ComplexDouble<S> d = lie_double_with_complex_structure(a);
      json out;
      out["bracket"] = algebra_to_json(d.bracket);
      out["j"] = map_to_json(a.field(), d.j);
      out["report"] = report_to_json(a.field(), d.report);
      emit(canonical_string(out), o.output);
      return d.report.pass ? kPass : kFail;
    });
  }
  if (uses_bimodule(o.construction)) {
    const json j = read_json_file(o.bimodule);
    return dispatch(field_of(j, o.allow_small), [&](auto tag) {
      using S = decltype(tag);
      emit(canonical_string(derive_from_bimodule(o, bimodule_from_json<S>(j, o.allow_small))), o.output);
      return kPass;
    });
  }
  const json j = read_json_file(o.algebra);
  return dispatch(field_of(j, o.allow_small), [&](auto tag) {
    using S = decltype(tag);
    emit(canonical_string(derive_from_algebra(o, algebra_from_json<S>(j, o.allow_small))), o.output);
    return kPass;
  });
}

// --- search -------------------------------------------------------------------

template <class T, class Encode>
int write_hits(const Options& o, const SearchResult<T>& res, Encode encode, double elapsed) {
  std::string text;
  for (const auto& h : res.hits) text += compact_string(encode(h)) + "\n";
  json summary;
  summary["count"] = res.hits.size();
  summary["scanned"] = res.scanned;
  summary["elapsed"] = o.timing ? json(elapsed) : json(nullptr);
  text += compact_string(summary) + "\n";
  emit(text, o.output);
  return kPass;
}

int cmd_search(const Options& o) {
  SearchOptions opts;
  if (o.budget) opts.budget = *o.budget;
  opts.workers = o.workers;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  if (o.kind == "algebras") {
    if (o.field_p == 0) throw Error(ErrorKind::Format, "--field p is required");
    const FieldSpec f = FieldSpec::prime(o.field_p, o.allow_small);
    std::optional<IdentityKind> filter;
    if (!o.filter.empty()) filter = parse_identity(o.filter);
    const auto res = enumerate_algebras(f, o.dim, filter, opts);
    return write_hits(o, res, [](const Algebra<Fp>& a) { return algebra_to_json(a); }, elapsed());
  }
  if (o.kind == "o-operator") {
    const Bimodule<Fp> b = load_bimodule<Fp>(o);
    const auto res = enumerate_o_operators(b, opts);
    return write_hits(o, res, [&](const Mat<Fp>& m) { return map_to_json(b.field(), m); }, elapsed());
  }
  const Algebra<Fp> a = load_algebra<Fp>(o);
  if (!a.field().is_prime_field()) throw Error(ErrorKind::Format, "search runs over prime fields only");
  if (o.kind == "bimodules") {
    const auto res = enumerate_bimodules(a, o.moddim, opts);
    return write_hits(o, res, [](const Bimodule<Fp>& b) { return bimodule_to_json(b); }, elapsed());
  }
  OperatorQuery q;
  if (o.kind == "rb") {
    q.kind = OperatorKind::RotaBaxter;
    q.weight = load_weight<Fp>(o, a.field());
  } else if (o.kind == "nijenhuis") {
    q.kind = OperatorKind::Nijenhuis;
  } else {
    throw Error(ErrorKind::Format, "unknown search kind '" + o.kind + "'");
  }
  const auto res = enumerate_operators(a, q, opts);
  return write_hits(o, res, [&](const Mat<Fp>& m) { return map_to_json(a.field(), m); }, elapsed());
}

// --- demo ---------------------------------------------------------------------

template <class S>
Mat<S> mat2(const FieldSpec& f, int a, int b, int c, int d) {
  Mat<S> m(2, 2);
  m << embed<S>(f, a), embed<S>(f, b), embed<S>(f, c), embed<S>(f, d);
  return m;
}

int cmd_demo(const Options& o) {
  using S = Rational;
  const FieldSpec q = FieldSpec::rationals();
  json items = json::object();
  auto item = [&](const std::string& name, bool pass) { items[name] = pass; };

  // x·y = ⟨x,c⟩⟨y,c⟩c + L(x)y with the standard form, c = e1, L = (0, 1).
  const BilinearForm<S> std_form{q, mat2<S>(q, 1, 0, 0, 1)};
  Vec<S> c(2), l(2);
  c << S(1), S(0);
  l << S(0), S(1);
  const Algebra<S> e = scalar_product_algebra(std_form, c, l, ScalarProductVariant::LeftL);
  const Algebra<S> e_right = scalar_product_algebra(std_form, c, l, ScalarProductVariant::RightL);
  item("scalar_product_algebra_anti_flexible", satisfies(e, IdentityKind::AntiFlexible));
  item("scalar_product_right_variant_is_opposite", e_right == opposite(e));
  item("opposite_anti_flexible", satisfies(opposite(e), IdentityKind::AntiFlexible));
  item("commutator_is_lie", satisfies(commutator_algebra(e), IdentityKind::Lie));

  // Dual numbers e1 = 1, e2 = x with x² = 0, and R: e1 ↦ e2, e2 ↦ 0.
  const Algebra<S> d = Algebra<S>::from_products(q, 2, [&](int i, int j) {
    Vec<S> v = Vec<S>::Zero(2);
    if (i + j < 2) v(i + j) = S(1);
    return v;
  });
  const Mat<S> r = mat2<S>(q, 0, 0, 1, 0);
  const WeightedOperator<S> rd{r, S(0)};
  item("rb_operator_on_dual_numbers", check_rota_baxter(d, rd).pass);
  item("rb_induced_product_anti_flexible", satisfies(rb_induced_product(d, rd), IdentityKind::AntiFlexible));

  // Weight-one operator −Id on E; the splitting exists exactly when the condition holds.
  const WeightedOperator<S> re{mat2<S>(q, -1, 0, 0, -1), S(1)};
  const bool rb_pre = check_pre_anti_flexible(rb_pre_anti_flexible(e, re)).pass;
  item("rb_pre_splitting_matches_condition", check_rota_baxter(e, re).pass && rb_pre == check_rb_pre_condition(e, re.weight).pass);
  item("rb_pre_splitting_weight_zero", check_pre_anti_flexible(rb_pre_anti_flexible(d, rd)).pass);

  const Bimodule<S> adj = adjoint_bimodule(d);
  item("adjoint_bimodule", check_bimodule(adj).pass);
  item("dual_bimodule", check_bimodule(dual_bimodule(e)).pass);
  item("o_operator_on_adjoint", check_o_operator(adj, r).pass);
  const PreAntiFlexible<S> opre = o_pre_anti_flexible(adj, r);
  item("o_operator_pre_anti_flexible", check_pre_anti_flexible(opre).pass);
  item("o_operator_left_symmetric", satisfies(o_left_symmetric(adj, r), IdentityKind::LeftSymmetric) &&
                                        left_sym_from_pre(opre) == o_left_symmetric(adj, r));
  item("o_operator_right_symmetric", satisfies(o_right_symmetric(adj, r), IdentityKind::RightSymmetric));

  item("nijenhuis_on_dual_numbers", check_nijenhuis(d, r).pass);
  item("nijenhuis_induced_anti_flexible", satisfies(nj_induced_product(d, r), IdentityKind::AntiFlexible));
  item("nijenhuis_pre_matches_condition",
       check_pre_anti_flexible(nj_pre_anti_flexible(d, r)).pass == check_nj_condition(d, r).pass);
  const BridgeReport bridge = nj_rb_bridge(d, r);
  item("nijenhuis_rota_baxter_bridge", bridge.applicable && bridge.all_agree());

  const BilinearForm<S> omega{q, mat2<S>(q, 0, 1, -1, 0)};
  const Algebra<S> zero(q, 2);
  const Algebra<S> circ = pre_lie_from_symplectic(zero, omega);
  item("symplectic_pre_lie_zero_algebra", circ == zero && satisfies(circ, IdentityKind::LeftSymmetric));

  // A nonzero cyclic-form algebra over F_5 found by exhaustive search.
  const FieldSpec f5 = FieldSpec::prime(5);
  const Algebra<Fp> h = algebra_from_json<Fp>(json::parse(R"({"field":{"kind":"Fp","p":5},"dim":2,
      "product":[[["1","0"],["0","1"]],[["0","0"],["0","0"]]]})"));
  const BilinearForm<Fp> omega5{f5, mat2<Fp>(f5, 0, 1, -1, 0)};
  const bool cyclic = check_cyclic_form(h, omega5).pass;
  item("symplectic_pre_lie_search_hit",
       cyclic && satisfies(pre_lie_from_symplectic(h, omega5), IdentityKind::LeftSymmetric));

  bool all = true;
  for (const auto& [k, v] : items.items()) all = all && v.template get<bool>();
  json out;
  out["items"] = items;
  out["pass"] = all;
  emit(canonical_string(out), o.output);
  return all ? kPass : kFail;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::SearchSpaceTooLarge: return kTooLarge;
    case ErrorKind::PreconditionFailed:
    case ErrorKind::ConstraintViolated:
    case ErrorKind::SingularForm: return kFail;
    default: return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact-arithmetic workbench for anti-flexible algebras"};
  app.require_subcommand(1);
  app.add_flag("--allow-small-char", o.allow_small, "admit prime fields of characteristic 2 and 3");
  app.add_flag("--timing", o.timing, "include elapsed time in search summaries");

  auto* check = app.add_subcommand("check", "check a named identity on an algebra");
  check->add_option("algebra", o.algebra, "algebra file")->required();
  check->add_option("--identity", o.identity, "identity name")->required();
  check->add_option("-o,--output", o.output, "report file (default stdout)");

  auto* check_op = app.add_subcommand("check-op", "check an operator");
  check_op->add_option("algebra", o.algebra, "algebra file (rb, nijenhuis)");
  check_op->add_option("--kind", o.kind, "rb | nijenhuis | o-operator")->required();
  check_op->add_option("--operator", o.op, "map file")->required();
  check_op->add_option("--weight", o.weight, "Rota-Baxter weight");
  check_op->add_option("--bimodule", o.bimodule, "bimodule file (o-operator)");
  check_op->add_option("-o,--output", o.output, "report file (default stdout)");

  auto* derive = app.add_subcommand("derive", "build a derived structure");
  derive->add_option("algebra", o.algebra, "algebra file");
  derive->add_option("--construction", o.construction, "construction name")->required();
  derive->add_option("--operator", o.op, "map file");
  derive->add_option("--weight", o.weight, "Rota-Baxter weight");
  derive->add_option("--bimodule", o.bimodule, "bimodule file");
  derive->add_option("--form", o.form, "bilinear form file");
  derive->add_option("--variant", o.variant, "lift-nj variant: nilpotent | idempotent");
  derive->add_flag("--skip-ambient-check", o.skip_ambient, "do not require an anti-flexible input");
  derive->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* search = app.add_subcommand("search", "exhaustive search over a prime field");
  search->add_option("--kind", o.kind, "algebras | rb | nijenhuis | o-operator | bimodules")->required();
  search->add_option("--field", o.field_p, "prime p (algebras)");
  search->add_option("--dim", o.dim, "dimension (algebras)");
  search->add_option("--filter", o.filter, "identity filter (algebras)");
  search->add_option("--algebra", o.algebra, "algebra file");
  search->add_option("--bimodule", o.bimodule, "bimodule file (o-operator)");
  search->add_option("--moddim", o.moddim, "module dimension (bimodules)");
  search->add_option("--weight", o.weight, "Rota-Baxter weight");
  search->add_option("--budget", o.budget, "maximum number of candidates");
  search->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1, 256));
  search->add_option("-o,--output", o.output, "JSON-lines file (default stdout)");

  auto* demo = app.add_subcommand("demo", "walk every construction on built-in fixtures");
  demo->add_option("-o,--output", o.output, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*check) return cmd_check(o);
    if (*check_op) return cmd_check_op(o);
    if (*derive) return cmd_derive(o);
    if (*search) return cmd_search(o);
    if (*demo) return cmd_demo(o);
  } catch (const Error& e) {
    std::cerr << "antiflex: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "antiflex: malformed input: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
