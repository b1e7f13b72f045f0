#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "errors.hpp"

namespace miura {

// Exact scalar arithmetic over GF(p) and over the rationals.  GF(p) values
// are canonical residues in [0, p) held in machine words; rationals are
// GMP fractions kept in lowest terms with a positive denominator.

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  while (exp > 0) {
    if (exp & 1) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

}  // namespace detail

// Deterministic Miller-Rabin; the witness set covers all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

enum class FieldKind { prime, rationals };

class FieldSpec {
public:
  static FieldSpec prime(std::uint64_t p) {
    if (p >= (1ull << 62))
      throw Error(Errc::Unsupported, "prime moduli must fit in 62 bits");
    if (!is_prime_u64(p))
      throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::prime, p);
  }
  static FieldSpec rationals() { return FieldSpec(FieldKind::rationals, 0); }

  FieldKind kind() const noexcept { return kind_; }
  // characteristic: p for GF(p), 0 for the rationals
  std::uint64_t characteristic() const noexcept { return p_; }

  bool operator==(const FieldSpec& o) const noexcept = default;

  std::string to_string() const {
    return kind_ == FieldKind::prime ? "GF(" + std::to_string(p_) + ")" : "QQ";
  }

private:
  FieldSpec(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint64_t p_;
};

class FieldValue {
public:
  static FieldValue zero(const FieldSpec& spec) { return from_integer(0, spec); }
  static FieldValue one(const FieldSpec& spec) { return from_integer(1, spec); }

  static FieldValue from_integer(long long n, const FieldSpec& spec) {
    if (spec.kind() == FieldKind::prime) {
      long long p = static_cast<long long>(spec.characteristic());
      long long r = n % p;
      if (r < 0) r += p;
      return FieldValue(spec, static_cast<std::uint64_t>(r));
    }
    return FieldValue(spec, mpq_class(static_cast<long>(n)));
  }

  static FieldValue from_integer(const mpz_class& n, const FieldSpec& spec) {
    if (spec.kind() == FieldKind::prime) {
      mpz_class p(static_cast<unsigned long>(spec.characteristic()));
      mpz_class r = n % p;
      if (r < 0) r += p;
      return FieldValue(spec, r.get_ui());
    }
    return FieldValue(spec, mpq_class(n));
  }

  static FieldValue from_fraction(long long num, long long den, const FieldSpec& spec) {
    return from_fraction(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)), spec);
  }

  // num/den as field division; canonicalizes (reduced fraction, den > 0).
  static FieldValue from_fraction(const mpz_class& num, const mpz_class& den, const FieldSpec& spec) {
    if (den == 0) throw Error(Errc::DivisionByZero, "fraction with zero denominator");
    if (spec.kind() == FieldKind::prime)
      return from_integer(num, spec) / from_integer(den, spec);
    mpq_class q(num, den);
    q.canonicalize();
    return FieldValue(spec, std::move(q));
  }

  const FieldSpec& spec() const noexcept { return spec_; }

  bool is_zero() const {
    return spec_.kind() == FieldKind::prime ? residue() == 0 : rational() == 0;
  }
  bool is_one() const {
    return spec_.kind() == FieldKind::prime ? residue() == 1 % spec_.characteristic()
                                            : rational() == 1;
  }

  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  friend FieldValue operator+(const FieldValue& a, const FieldValue& b) {
    a.require_same(b);
    if (a.prime_kind()) {
      std::uint64_t p = a.spec_.characteristic();
      std::uint64_t s = a.residue() + b.residue();
      if (s >= p) s -= p;
      return FieldValue(a.spec_, s);
    }
    return FieldValue(a.spec_, mpq_class(a.rational() + b.rational()));
  }

  friend FieldValue operator-(const FieldValue& a, const FieldValue& b) {
    a.require_same(b);
    if (a.prime_kind()) {
      std::uint64_t p = a.spec_.characteristic();
      std::uint64_t s = a.residue() + p - b.residue();
      if (s >= p) s -= p;
      return FieldValue(a.spec_, s);
    }
    return FieldValue(a.spec_, mpq_class(a.rational() - b.rational()));
  }

  friend FieldValue operator*(const FieldValue& a, const FieldValue& b) {
    a.require_same(b);
    if (a.prime_kind())
      return FieldValue(a.spec_, detail::mul_mod(a.residue(), b.residue(), a.spec_.characteristic()));
    return FieldValue(a.spec_, mpq_class(a.rational() * b.rational()));
  }

  friend FieldValue operator/(const FieldValue& a, const FieldValue& b) { return a * inv(b); }

  FieldValue operator-() const {
    if (prime_kind()) {
      std::uint64_t p = spec_.characteristic();
      return FieldValue(spec_, residue() == 0 ? 0 : p - residue());
    }
    return FieldValue(spec_, mpq_class(-rational()));
  }

  friend FieldValue inv(const FieldValue& a) {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (a.prime_kind()) {
      std::uint64_t p = a.spec_.characteristic();
      return FieldValue(a.spec_, detail::pow_mod(a.residue(), p - 2, p));
    }
    return FieldValue(a.spec_, mpq_class(1 / a.rational()));
  }

  FieldValue pow(std::uint64_t e) const {
    FieldValue acc = one(spec_);
    FieldValue base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  bool operator==(const FieldValue& o) const {
    if (spec_ != o.spec_) return false;
    return prime_kind() ? residue() == o.residue() : rational() == o.rational();
  }

  std::string to_string() const {
    if (prime_kind()) return std::to_string(residue());
    return rational().get_str();
  }

private:
  FieldValue(FieldSpec spec, std::uint64_t r) : spec_(spec), v_(r) {}
  FieldValue(FieldSpec spec, mpq_class q) : spec_(spec), v_(std::move(q)) {}

  bool prime_kind() const noexcept { return spec_.kind() == FieldKind::prime; }

  void require_same(const FieldValue& o) const {
    if (spec_ != o.spec_)
      throw Error(Errc::FieldMismatch, spec_.to_string() + " vs " + o.spec_.to_string());
  }

  FieldSpec spec_;
  std::variant<std::uint64_t, mpq_class> v_;
};

// Accepts an optional sign and an optional /denominator, e.g. "-3", "5/2".
inline FieldValue parse_scalar(std::string_view text, const FieldSpec& spec) {
  std::size_t i = 0;
  auto fail = [&](const char* why) { throw Error(Errc::SyntaxError, std::string(why) + " in scalar '" + std::string(text) + "'", 0, i); };
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&]() -> mpz_class {
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start) fail("expected digits");
    return mpz_class(std::string(text.substr(start, i - start)), 10);
  };
  mpz_class num = digits();
  mpz_class den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits();
  }
  if (i != text.size()) fail("trailing characters");
  if (negative) num = -num;
  return FieldValue::from_fraction(num, den, spec);
}

}  // namespace miura
