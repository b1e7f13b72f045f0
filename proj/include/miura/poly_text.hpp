#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "polynomial.hpp"

namespace miura {

// Polynomial grammar (e.g. `y^2-x^3-3*x`):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ['*'? powers] | powers
//   powers := power ('*' power)*
//   power  := VAR ['^' POSINT]
//   coeff  := INT ['/' POSINT]
// Whitespace is insignificant.  Variables must be declared in the ring.
inline Polynomial parse_poly(std::string_view text, const RingPtr& ring, std::size_t line = 0,
                             std::size_t col_offset = 0) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> void {
    throw Error(Errc::SyntaxError, why, line, col_offset + i + 1);
  };
  auto peek = [&]() -> int {
    return i < text.size() ? static_cast<unsigned char>(text[i]) : -1;
  };

  auto parse_uint = [&]() -> mpz_class {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail("expected digits");
    return mpz_class(std::string(text.substr(start, i - start)), 10);
  };

  auto parse_ident = [&]() -> std::string {
    std::size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      ++i;
    return std::string(text.substr(start, i - start));
  };

  Polynomial result = Polynomial::zero(ring);
  skip_ws();
  if (i == text.size()) fail("empty polynomial");

  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) {
      if (first) fail("empty polynomial");
      break;
    }
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = text[i] == '-';
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }

    FieldValue coeff = FieldValue::one(ring->field);
    bool saw_coeff = false;
    if (std::isdigit(peek())) {
      mpz_class num = parse_uint();
      mpz_class den = 1;
      if (peek() == '/') {
        ++i;
        skip_ws();
        if (!std::isdigit(peek())) fail("expected denominator digits");
        den = parse_uint();
        if (den == 0) fail("zero denominator");
      }
      coeff = FieldValue::from_fraction(num, den, ring->field);
      saw_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++i;
        skip_ws();
      }
    }

    Monomial mono;
    mono.exps.assign(ring->arity(), 0);
    bool saw_var = false;
    while (std::isalpha(peek()) || peek() == '_') {
      std::string name = parse_ident();
      std::size_t var = 0;
      for (; var < ring->vars.size(); ++var)
        if (ring->vars[var] == name) break;
      if (var == ring->vars.size())
        throw Error(Errc::UnknownVariable, "unknown variable '" + name + "'", line,
                    col_offset + i + 1 - name.size());
      std::uint32_t exp = 1;
      skip_ws();
      if (peek() == '^') {
        ++i;
        skip_ws();
        if (!std::isdigit(peek())) fail("expected exponent digits");
        mpz_class e = parse_uint();
        if (e <= 0 || e > 100000) fail("exponent out of range");
        exp = static_cast<std::uint32_t>(e.get_ui());
      }
      mono.exps[var] += exp;
      saw_var = true;
      skip_ws();
      if (peek() == '*') {
        ++i;
        skip_ws();
        if (!(std::isalpha(peek()) || peek() == '_')) fail("expected variable after '*'");
      } else {
        break;
      }
    }
    if (!saw_coeff && !saw_var) fail("expected term");

    if (negative) coeff = -coeff;
    result = result + Polynomial::term(ring, std::move(mono), std::move(coeff));
    first = false;
    skip_ws();
    if (i == text.size()) break;
    if (peek() != '+' && peek() != '-') fail("expected '+' or '-' between terms");
  }
  return result;
}

inline std::string format_monomial(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t v = 0; v < m.exps.size(); ++v) {
    if (m.exps[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.vars[v];
    if (m.exps[v] > 1) out += "^" + std::to_string(m.exps[v]);
  }
  return out;
}

// Terms in descending order; GF(p) coefficients print as canonical residues
// (joined with '+'), rational coefficients carry their sign.
inline std::string format_poly(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Ring& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = false;
    std::string coeff_text;
    if (ring.field.kind() == FieldKind::rationals && t.coeff.rational() < 0) {
      negative = true;
      coeff_text = (-t.coeff).to_string();
    } else {
      coeff_text = t.coeff.to_string();
    }
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono_text = format_monomial(t.mono, ring);
    if (mono_text.empty()) {
      out += coeff_text;
    } else if (coeff_text == "1") {
      out += mono_text;
    } else {
      out += coeff_text + "*" + mono_text;
    }
  }
  return out;
}

}  // namespace miura
