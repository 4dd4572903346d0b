#include "antiflex/scalar.hpp"

#include <charconv>
#include <utility>

namespace antiflex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::CharacteristicObstruction: return "CharacteristicObstruction";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::SingularForm: return "SingularForm";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::Format: return "Format";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p, bool allow_small) {
  if (!is_prime(p)) throw Error(ErrorKind::Format, std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw Error(ErrorKind::Format, "prime " + std::to_string(p) + " exceeds 2^31");
  if (p < 5 && !allow_small) {
    throw Error(ErrorKind::CharacteristicObstruction,
                "F_" + std::to_string(p) + " requires the small-characteristic override");
  }
  return {Kind::PrimeField, p};
}

bool FieldSpec::kills(std::int64_t n) const {
  if (kind == Kind::Rationals) return n == 0;
  return n % static_cast<std::int64_t>(p) == 0;
}

std::string FieldSpec::name() const {
  return kind == Kind::Rationals ? std::string("Q") : "F_" + std::to_string(p);
}

void require_char_not_2(const FieldSpec& field, std::string_view what) {
  if (field.characteristic() == 2) {
    throw Error(ErrorKind::CharacteristicObstruction,
                std::string(what) + " divides by 2, undefined in " + field.name());
  }
}

// ---------------------------------------------------------------------------

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in Q");
  v_ /= o.v_;
  return *this;
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(const FieldSpec& field, std::string_view text) {
  if (field.kind != FieldSpec::Kind::Rationals) {
    throw Error(ErrorKind::FieldMismatch, "rational scalar requested for " + field.name());
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) {
    throw Error(ErrorKind::Format, "bad rational scalar '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class d(std::string(den[0] == '+' ? den.substr(1) : den));
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  return Rational(mpq_class(n, d));
}

// ---------------------------------------------------------------------------

Fp Fp::from_int(const FieldSpec& field, std::int64_t n) {
  if (field.kind != FieldSpec::Kind::PrimeField) {
    throw Error(ErrorKind::FieldMismatch, "prime-field scalar requested for " + field.name());
  }
  return Fp(n, field.p);
}

Fp Fp::parse(const FieldSpec& field, std::string_view text) {
  if (field.kind != FieldSpec::Kind::PrimeField) {
    throw Error(ErrorKind::FieldMismatch, "prime-field scalar requested for " + field.name());
  }
  std::string_view s = text;
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorKind::Format, "bad F_p scalar '" + std::string(text) + "'");
  }
  return Fp(v, field.p);
}

FieldSpec Fp::field() const {
  return FieldSpec{FieldSpec::Kind::PrimeField, p_};
}

std::int64_t Fp::inverse(std::int64_t v, std::uint32_t p) {
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p, nr = v;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return t < 0 ? t + p : t;
}

Fp& Fp::operator/=(const Fp& o) {
  const std::uint32_t p = join(o);
  if (p == 0) {
    // Two unbound integer constants: only exact quotients make sense.
    if (o.v_ == 0 || v_ % o.v_ != 0) throw_div_zero();
    v_ /= o.v_;
    return *this;
  }
  const std::int64_t w = reduce(o.v_, p);
  if (w == 0) throw_div_zero();
  v_ = (v_ * inverse(w, p)) % p;
  return *this;
}

void Fp::throw_mismatch(std::uint32_t p, std::uint32_t q) {
  throw Error(ErrorKind::FieldMismatch,
              "operands from F_" + std::to_string(p) + " and F_" + std::to_string(q));
}

void Fp::throw_div_zero() {
  throw Error(ErrorKind::DivisionByZero, "division by zero in F_p");
}

}  // namespace antiflex
