#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <variant>

#include "orthodim/error.hpp"

namespace orthodim {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// A prime field GF(p) or the rationals.
class Field {
 public:
  static Field gf(std::uint64_t p) {
    detail::require(p < (std::uint64_t{1} << 31), "field: modulus must be below 2^31");
    detail::require(is_prime(p), "field: GF(" + std::to_string(p) + ") requires a prime modulus");
    return Field(p);
  }
  static Field rationals() { return Field(0); }

  /// Parses `gf:<p>` or `rat`.
  static Field parse(const std::string& s) {
    if (s == "rat") return rationals();
    if (s.rfind("gf:", 0) == 0) {
      std::uint64_t p = 0;
      try {
        std::size_t pos = 0;
        p = std::stoull(s.substr(3), &pos);
        if (pos != s.size() - 3) throw std::invalid_argument(s);
      } catch (const std::logic_error&) {
        throw InvalidArgument("field: bad modulus in '" + s + "'");
      }
      return gf(p);
    }
    throw InvalidArgument("field: unknown field '" + s + "'");
  }

  bool is_prime_field() const noexcept { return p_ != 0; }
  bool is_rational() const noexcept { return p_ == 0; }
  /// The modulus p (0 for the rationals).
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const { return p_ ? "gf:" + std::to_string(p_) : "rat"; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Element of a Field. Residues live in [0,p); rationals are kept normalized
/// by Boost (lowest terms, positive denominator).
class FieldScalar {
 public:
  FieldScalar() : field_(Field::rationals()), v_(Rational(0)) {}
  FieldScalar(Field f, long long x) : field_(f) {
    if (f.is_prime_field()) {
      const auto p = static_cast<long long>(f.characteristic());
      v_ = static_cast<std::uint64_t>(((x % p) + p) % p);
    } else {
      v_ = Rational(x);
    }
  }
  FieldScalar(Field f, Rational q) : field_(f) {
    if (f.is_prime_field()) {
      const std::uint64_t p = f.characteristic();
      BigInt num = boost::multiprecision::numerator(q) % p;
      BigInt den = boost::multiprecision::denominator(q) % p;
      if (num < 0) num += p;
      if (den == 0) throw InvalidArgument("field: denominator divisible by the characteristic");
      v_ = static_cast<std::uint64_t>(num);
      *this = *this / FieldScalar(f, static_cast<long long>(den));
    } else {
      v_ = std::move(q);
    }
  }

  static FieldScalar zero(Field f) { return FieldScalar(f, 0LL); }
  static FieldScalar one(Field f) { return FieldScalar(f, 1LL); }

  /// Decimal residue for GF(p); `p/q` or an integer for rationals.
  static FieldScalar parse(Field f, const std::string& s) {
    try {
      if (f.is_prime_field()) {
        std::size_t pos = 0;
        const long long x = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return FieldScalar(f, x);
      }
      const auto slash = s.find('/');
      auto integer = [](const std::string& t) {
        const std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (start == t.size() || t.find_first_not_of("0123456789", start) != std::string::npos)
          throw std::invalid_argument(t);
        return BigInt(t[0] == '+' ? t.substr(1) : t);
      };
      if (slash == std::string::npos) return FieldScalar(f, Rational(integer(s)));
      BigInt num = integer(s.substr(0, slash));
      BigInt den = integer(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument(s);
      if (den < 0) {
        num = -num;
        den = -den;
      }
      return FieldScalar(f, Rational(num, den));
    } catch (const InvalidArgument&) {
      throw;
    } catch (const std::exception&) {
      throw InvalidArgument("field: cannot parse scalar '" + s + "' in " + f.name());
    }
  }

  const Field& field() const noexcept { return field_; }
  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }

  bool is_zero() const {
    return field_.is_prime_field() ? residue() == 0 : rational() == 0;
  }

  std::string to_string() const {
    if (field_.is_prime_field()) return std::to_string(residue());
    return rational().str();
  }

  FieldScalar operator+(const FieldScalar& o) const {
    check(o);
    if (field_.is_prime_field()) return raw(field_, (residue() + o.residue()) % field_.characteristic());
    return FieldScalar(field_, Rational(rational() + o.rational()));
  }
  FieldScalar operator-(const FieldScalar& o) const {
    check(o);
    if (field_.is_prime_field())
      return raw(field_, (residue() + field_.characteristic() - o.residue()) % field_.characteristic());
    return FieldScalar(field_, Rational(rational() - o.rational()));
  }
  FieldScalar operator-() const { return zero(field_) - *this; }
  FieldScalar operator*(const FieldScalar& o) const {
    check(o);
    if (field_.is_prime_field()) return raw(field_, (residue() * o.residue()) % field_.characteristic());
    return FieldScalar(field_, Rational(rational() * o.rational()));
  }
  FieldScalar inverse() const {
    if (is_zero()) throw InvalidArgument("field: inverse of zero");
    if (field_.is_prime_field()) return raw(field_, pow_mod(residue(), field_.characteristic() - 2));
    return FieldScalar(field_, Rational(1 / rational()));
  }
  FieldScalar operator/(const FieldScalar& o) const { return *this * o.inverse(); }
  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

  friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }

 private:
  static FieldScalar raw(Field f, std::uint64_t r) {
    FieldScalar s;
    s.field_ = f;
    s.v_ = r;
    return s;
  }
  std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) const {
    const std::uint64_t p = field_.characteristic();
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  void check(const FieldScalar& o) const {
    if (!(field_ == o.field_)) throw InvalidArgument("field mismatch: " + field_.name() + " vs " + o.field_.name());
  }

  Field field_;
  std::variant<std::uint64_t, Rational> v_;
};

}  // namespace orthodim
