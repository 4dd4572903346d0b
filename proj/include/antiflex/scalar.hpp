#pragma once

// Exact scalars: arbitrary-precision rationals and prime fields F_p.
//
// Both scalar types plug into Eigen as custom scalar types. An Fp value
// carries its modulus; a value built from a bare integer (as Eigen does for
// Scalar(0) and Scalar(1)) stays "unbound" until it meets a bound operand.

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

#include "antiflex/error.hpp"

namespace antiflex {

bool is_prime(std::uint64_t n);

struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;  // 0 for the rationals

  static FieldSpec rationals() { return {}; }

  /// F_p. Characteristics 2 and 3 are rejected unless `allow_small` is set.
  static FieldSpec prime(std::uint32_t p, bool allow_small = false);

  std::uint32_t characteristic() const { return kind == Kind::Rationals ? 0 : p; }
  bool is_prime_field() const { return kind == Kind::PrimeField; }

  /// True when the integer `n` maps to zero in this field.
  bool kills(std::int64_t n) const;

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Throws CharacteristicObstruction when 2 is not invertible in `field`.
void require_char_not_2(const FieldSpec& field, std::string_view what);

// ---------------------------------------------------------------------------

class Rational {
 public:
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::Rationals;

  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT: Eigen constructs Scalar(0), Scalar(1)
  Rational(long v) : v_(v) {}  // NOLINT
  Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational from_int(const FieldSpec&, std::int64_t n) { return Rational(static_cast<long>(n)); }
  /// Parses "a" or "a/b". Non-canonical text is accepted and normalized.
  static Rational parse(const FieldSpec& field, std::string_view text);

  bool is_zero() const { return sgn(v_) == 0; }
  std::string str() const { return v_.get_str(); }
  const mpq_class& value() const { return v_; }
  FieldSpec field() const { return FieldSpec::rationals(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  // Total order on ℚ; only used for container keys.
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

// ---------------------------------------------------------------------------

class Fp {
 public:
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::PrimeField;

  Fp() = default;
  Fp(int v) : v_(v) {}  // NOLINT: unbound integer constant
  Fp(long v) : v_(v) {}  // NOLINT
  Fp(long long v) : v_(v) {}  // NOLINT
  Fp(std::int64_t v, std::uint32_t p) : v_(reduce(v, p)), p_(p) {}

  static Fp from_int(const FieldSpec& field, std::int64_t n);
  /// Parses a decimal integer; canonical text is 0..p-1 but any integer reduces.
  static Fp parse(const FieldSpec& field, std::string_view text);

  bool is_zero() const { return v_ == 0; }
  bool bound() const { return p_ != 0; }
  std::uint32_t modulus() const { return p_; }
  std::int64_t value() const { return v_; }
  std::string str() const { return std::to_string(v_); }
  FieldSpec field() const;

  Fp& operator+=(const Fp& o) {
    const std::uint32_t p = join(o);
    const std::int64_t w = p == 0 ? o.v_ : reduce(o.v_, p);
    v_ += w;
    if (p != 0 && v_ >= static_cast<std::int64_t>(p)) v_ -= p;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    const std::uint32_t p = join(o);
    const std::int64_t w = p == 0 ? o.v_ : reduce(o.v_, p);
    v_ -= w;
    if (p != 0 && v_ < 0) v_ += p;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    const std::uint32_t p = join(o);
    if (p == 0) {
      v_ *= o.v_;
    } else {
      v_ = (v_ * reduce(o.v_, p)) % p;
    }
    return *this;
  }
  Fp& operator/=(const Fp& o);

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator-(const Fp& a) { return Fp() - a; }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.p_ == b.p_) return a.v_ == b.v_;
    if (a.p_ == 0) return reduce(a.v_, b.p_) == b.v_;
    if (b.p_ == 0) return reduce(b.v_, a.p_) == a.v_;
    return false;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

 private:
  static std::int64_t reduce(std::int64_t v, std::uint32_t p) {
    const auto m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
  }
  // Settles the modulus shared with `o`, reducing an unbound value onto it.
  // Throws FieldMismatch when both operands are bound to different primes.
  std::uint32_t join(const Fp& o) {
    if (p_ == o.p_) return p_;
    if (p_ == 0) {
      p_ = o.p_;
      v_ = reduce(v_, p_);
      return p_;
    }
    if (o.p_ == 0) return p_;
    throw_mismatch(p_, o.p_);
  }
  [[noreturn]] static void throw_mismatch(std::uint32_t p, std::uint32_t q);
  [[noreturn]] static void throw_div_zero();
  static std::int64_t inverse(std::int64_t v, std::uint32_t p);

  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;  // 0 = unbound integer constant
};

// ---------------------------------------------------------------------------

template <class S>
inline constexpr bool is_scalar_v = std::is_same_v<S, Rational> || std::is_same_v<S, Fp>;

template <class S>
S embed(const FieldSpec& field, std::int64_t n) {
  return S::from_int(field, n);
}

/// Exact a / b for field elements. Throws DivisionByZero when b = 0.
template <class S>
S scalar_div(const S& a, const S& b) {
  return a / b;
}

/// The field element num/den. A literal denominator that vanishes in the
/// field's characteristic raises CharacteristicObstruction (e.g. 1/2 in F_2).
template <class S>
S scalar_div(const FieldSpec& field, std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "literal denominator is zero");
  if (field.kills(den)) {
    throw Error(ErrorKind::CharacteristicObstruction,
                std::to_string(den) + " is zero in " + field.name());
  }
  return embed<S>(field, num) / embed<S>(field, den);
}

/// Whether `x` is an element of `field` (unbound integer constants are).
template <class S>
bool belongs_to(const S& x, const FieldSpec& field) {
  if constexpr (std::is_same_v<S, Rational>) {
    return field.kind == FieldSpec::Kind::Rationals;
  } else {
    return field.kind == FieldSpec::Kind::PrimeField && (!x.bound() || x.modulus() == field.p);
  }
}

}  // namespace antiflex

namespace Eigen {

template <>
struct NumTraits<antiflex::Rational> : GenericNumTraits<antiflex::Rational> {
  using Real = antiflex::Rational;
  using NonInteger = antiflex::Rational;
  using Literal = antiflex::Rational;
  using Nested = antiflex::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80,
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<antiflex::Fp> : GenericNumTraits<antiflex::Fp> {
  using Real = antiflex::Fp;
  using NonInteger = antiflex::Fp;
  using Literal = antiflex::Fp;
  using Nested = antiflex::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
