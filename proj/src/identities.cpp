#include "antiflex/identities.hpp"

#include <algorithm>

namespace antiflex {

std::string_view identity_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::AntiFlexible: return "anti_flexible";
    case IdentityKind::Flexible: return "flexible";
    case IdentityKind::Associative: return "associative";
    case IdentityKind::LeftSymmetric: return "left_symmetric";
    case IdentityKind::RightSymmetric: return "right_symmetric";
    case IdentityKind::Antisymmetric: return "antisymmetric";
    case IdentityKind::Jacobi: return "jacobi";
    case IdentityKind::Lie: return "lie";
    case IdentityKind::CyclicCondition: return "cyclic_condition";
  }
  return "unknown";
}

IdentityKind parse_identity(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  for (IdentityKind k : kAllIdentities) {
    if (identity_name(k) == key) return k;
  }
  throw Error(ErrorKind::UnknownIdentity, "unknown identity '" + std::string(name) + "'");
}

}  // namespace antiflex
