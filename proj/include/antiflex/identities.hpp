#pragma once

// Verdicts for the algebra classes in play (anti-flexible, flexible,
// associative, left/right-symmetric, Lie, ...) and the two-product
// pre-anti-flexible structures.

#include <array>
#include <string>
#include <string_view>

#include "antiflex/identity_engine.hpp"

namespace antiflex {

enum class IdentityKind {
  AntiFlexible,
  Flexible,
  Associative,
  LeftSymmetric,
  RightSymmetric,
  Antisymmetric,
  Jacobi,
  Lie,
  CyclicCondition,
};

inline constexpr std::array<IdentityKind, 9> kAllIdentities = {
    IdentityKind::AntiFlexible,  IdentityKind::Flexible,      IdentityKind::Associative,
    IdentityKind::LeftSymmetric, IdentityKind::RightSymmetric, IdentityKind::Antisymmetric,
    IdentityKind::Jacobi,        IdentityKind::Lie,           IdentityKind::CyclicCondition,
};

std::string_view identity_name(IdentityKind kind);
/// Accepts "anti_flexible" and "anti-flexible" spellings; UnknownIdentity otherwise.
IdentityKind parse_identity(std::string_view name);

namespace words {

template <class S>
struct Vars {
  Combination<S> x = Word::var(0);
  Combination<S> y = Word::var(1);
  Combination<S> z = Word::var(2);
};

/// (a·b)·c − a·(b·c) for product index `op`.
template <class S>
Combination<S> assoc(int op, const Combination<S>& a, const Combination<S>& b, const Combination<S>& c) {
  return prod(op, prod(op, a, b), c) - prod(op, a, prod(op, b, c));
}

}  // namespace words

/// The named single-product identity. Lie expands to two identities
/// (antisymmetry, then Jacobi) and is handled by check_identity below.
template <class S>
Identity<S> named_identity(IdentityKind kind) {
  using words::assoc;
  const words::Vars<S> v;
  const auto& [x, y, z] = v;
  auto P = [](const Combination<S>& a, const Combination<S>& b) { return prod(0, a, b); };
  const std::string name(identity_name(kind));
  switch (kind) {
    case IdentityKind::AntiFlexible: return {name, 3, assoc(0, x, y, z) - assoc(0, z, y, x)};
    case IdentityKind::Flexible: return {name, 3, assoc(0, x, y, z) + assoc(0, z, y, x)};
    case IdentityKind::Associative: return {name, 3, assoc(0, x, y, z)};
    case IdentityKind::LeftSymmetric: return {name, 3, assoc(0, x, y, z) - assoc(0, y, x, z)};
    case IdentityKind::RightSymmetric: return {name, 3, assoc(0, x, y, z) - assoc(0, x, z, y)};
    case IdentityKind::Antisymmetric: return {name, 2, P(x, y) + P(y, x)};
    case IdentityKind::Jacobi: return {name, 3, P(P(x, y), z) + P(P(y, z), x) + P(P(z, x), y)};
    case IdentityKind::CyclicCondition: return {name, 3, P(P(x, y), z) + P(z, P(y, x))};
    case IdentityKind::Lie: break;
  }
  throw Error(ErrorKind::UnknownIdentity, "lie is a conjunction; use check_identity");
}

template <class S>
CheckReport<S> check_identity(const Algebra<S>& a, IdentityKind kind) {
  const Interpretation<S> in{{&a}, {}, a.dim()};
  if (kind == IdentityKind::Lie) {
    for (IdentityKind part : {IdentityKind::Antisymmetric, IdentityKind::Jacobi}) {
      CheckReport<S> r = check_identity(named_identity<S>(part), in);
      if (!r.pass) {
        r.identity = std::string(identity_name(IdentityKind::Lie));
        r.witness->clause = std::string(identity_name(part));
        return r;
      }
    }
    return CheckReport<S>::passed(std::string(identity_name(IdentityKind::Lie)));
  }
  return check_identity(named_identity<S>(kind), in);
}

template <class S>
bool satisfies(const Algebra<S>& a, IdentityKind kind) {
  return check_identity(a, kind).pass;
}

// ---------------------------------------------------------------------------

/// Two products ≺ (prec) and ≻ (succ) on one space.
template <class S>
struct PreAntiFlexible {
  Algebra<S> prec;
  Algebra<S> succ;

  PreAntiFlexible(Algebra<S> p, Algebra<S> s) : prec(std::move(p)), succ(std::move(s)) {
    require_dims(prec.dim() == succ.dim(), "both products must live on one space");
    if (prec.field() != succ.field()) throw Error(ErrorKind::FieldMismatch, "both products must share a field");
  }

  int dim() const { return prec.dim(); }
  const FieldSpec& field() const { return prec.field(); }

  friend bool operator==(const PreAntiFlexible& a, const PreAntiFlexible& b) {
    return a.prec == b.prec && a.succ == b.succ;
  }
};

namespace words {
inline constexpr int kPrec = 0;
inline constexpr int kSucc = 1;
}  // namespace words

/// The two defining identities, both sides moved to the left.
template <class S>
std::vector<Identity<S>> pre_anti_flexible_identities() {
  using words::kPrec;
  using words::kSucc;
  const words::Vars<S> v;
  const auto& [x, y, z] = v;
  auto L = [](const Combination<S>& a, const Combination<S>& b) { return prod(kPrec, a, b); };
  auto G = [](const Combination<S>& a, const Combination<S>& b) { return prod(kSucc, a, b); };
  return {
      {"pre_anti_flexible:first", 3, L(G(x, y), z) - G(x, L(y, z)) - L(G(z, y), x) + G(z, L(y, x))},
      {"pre_anti_flexible:second", 3,
       G(G(x, y) + L(x, y), z) - G(x, G(y, z)) - L(L(z, y), x) + L(z, L(y, x) + G(y, x))},
  };
}

template <class S>
std::vector<Identity<S>> dendriform_identities() {
  using words::kPrec;
  using words::kSucc;
  const words::Vars<S> v;
  const auto& [x, y, z] = v;
  auto L = [](const Combination<S>& a, const Combination<S>& b) { return prod(kPrec, a, b); };
  auto G = [](const Combination<S>& a, const Combination<S>& b) { return prod(kSucc, a, b); };
  return {
      {"dendriform:prec", 3, L(L(x, y), z) - L(x, L(y, z) + G(y, z))},
      {"dendriform:middle", 3, L(G(x, y), z) - G(x, L(y, z))},
      {"dendriform:succ", 3, G(L(x, y) + G(x, y), z) - G(x, G(y, z))},
  };
}

template <class S>
CheckReport<S> check_pre_anti_flexible(const PreAntiFlexible<S>& p) {
  const Interpretation<S> in{{&p.prec, &p.succ}, {}, p.dim()};
  return check_identities<S>("pre_anti_flexible", pre_anti_flexible_identities<S>(), in);
}

template <class S>
CheckReport<S> check_dendriform(const PreAntiFlexible<S>& p) {
  const Interpretation<S> in{{&p.prec, &p.succ}, {}, p.dim()};
  return check_identities<S>("dendriform", dendriform_identities<S>(), in);
}

/// x∗y = x≻y + x≺y
template <class S>
Algebra<S> sum_algebra(const PreAntiFlexible<S>& p) {
  return combine<S>({{S(1), &p.succ}, {S(1), &p.prec}}, p.field(), p.dim());
}

/// x◁y = x≻y − y≺x
template <class S>
Algebra<S> left_sym_from_pre(const PreAntiFlexible<S>& p) {
  return Algebra<S>::from_products(p.field(), p.dim(), [&](int i, int j) {
    return Vec<S>(p.succ.basis_product(i, j) - p.prec.basis_product(j, i));
  });
}

/// x▷y = x≺y − y≻x
template <class S>
Algebra<S> right_sym_from_pre(const PreAntiFlexible<S>& p) {
  return Algebra<S>::from_products(p.field(), p.dim(), [&](int i, int j) {
    return Vec<S>(p.prec.basis_product(i, j) - p.succ.basis_product(j, i));
  });
}

}  // namespace antiflex
