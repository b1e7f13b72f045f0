#pragma once

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "poly_text.hpp"

namespace miura {

// Number of gaps of the numerical semigroup generated by the weights:
// dynamic programming over representable integers until a full run of
// min(weights) consecutive representables appears.
inline std::uint64_t genus_of_weights(const std::vector<std::uint64_t>& weights) {
  if (weights.empty()) throw Error(Errc::WeightsNotCoprime, "no weights");
  std::uint64_t g = 0;
  std::uint64_t min_w = weights[0];
  for (auto w : weights) {
    if (w == 0) throw Error(Errc::WeightsNotCoprime, "weights must be positive");
    g = std::gcd(g, w);
    min_w = std::min(min_w, w);
  }
  if (g != 1) throw Error(Errc::WeightsNotCoprime, "weights must have gcd 1");
  std::vector<char> representable = {1};  // representable[0]
  std::uint64_t gaps = 0;
  std::uint64_t run = 1;
  for (std::uint64_t n = 1; run < min_w; ++n) {
    bool ok = false;
    for (auto w : weights)
      if (n >= w && representable[n - w]) {
        ok = true;
        break;
      }
    representable.push_back(ok ? 1 : 0);
    if (ok) {
      ++run;
    } else {
      run = 0;
      ++gaps;
    }
  }
  return gaps;
}

// A validated Miura-form curve: the coordinate ring presentation with its
// weighted order, the t-1 defining polynomials, their cached reduced basis,
// and the genus of the weight semigroup.
struct CurveRing {
  RingPtr ring;
  std::vector<Polynomial> gens;
  Basis gb;
  std::uint64_t genus;

  bool operator==(const CurveRing& o) const {
    return same_ring(ring, o.ring) && gens == o.gens;
  }
};

using CurvePtr = std::shared_ptr<const CurveRing>;

// Checks each generator against the canonical-form requirements: after
// normalizing to a monic leading term X^M, M must not be a canonical
// exponent, and every body monomial X^N must be canonical with
// Psi(N) <= Psi(M).
inline CurvePtr make_curve(const FieldSpec& field, std::vector<std::string> vars,
                           std::vector<std::uint64_t> weights, std::vector<Polynomial> gens) {
  RingPtr ring = make_ring(field, std::move(vars), std::move(weights));
  if (gens.size() + 1 != ring->arity())
    throw Error(Errc::WrongGeneratorCount,
                "expected " + std::to_string(ring->arity() - 1) + " generators, got " +
                    std::to_string(gens.size()));
  for (auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) throw Error(Errc::NotMonic, "zero curve generator");
    g = g.monic();
    const Monomial& lead = g.leading().mono;
    if (is_canonical_exponent(lead, ring->order))
      throw Error(Errc::LeadingExponentInB,
                  "leading monomial " + format_monomial(lead, *ring) + " is canonical");
    std::uint64_t lead_psi = psi(lead, ring->order);
    for (const auto& t : g.terms()) {
      if (t.mono == lead) continue;
      if (psi(t.mono, ring->order) > lead_psi || !is_canonical_exponent(t.mono, ring->order))
        throw Error(Errc::BodyMonomialNotInB,
                    "body monomial " + (t.mono.is_one() ? std::string("1") : format_monomial(t.mono, *ring)) +
                        " of " + format_poly(g) + " is not canonical below the leading term");
    }
  }
  Basis gb = groebner_basis(ring, gens);
  if (gb.is_unit_ideal()) throw Error(Errc::UnitCurveIdeal, "curve generators span the unit ideal");
  std::uint64_t genus = genus_of_weights(ring->order.weights);
  return std::make_shared<const CurveRing>(CurveRing{ring, std::move(gens), std::move(gb), genus});
}

inline CurvePtr make_curve(const FieldSpec& field, std::vector<std::string> vars,
                           std::vector<std::uint64_t> weights,
                           const std::vector<std::string>& gen_texts) {
  RingPtr ring = make_ring(field, vars, weights);
  std::vector<Polynomial> gens;
  gens.reserve(gen_texts.size());
  for (const auto& text : gen_texts) gens.push_back(parse_poly(text, ring));
  return make_curve(field, std::move(vars), std::move(weights), std::move(gens));
}

inline bool same_curve(const CurvePtr& a, const CurvePtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace detail {

inline Polynomial matrix_det(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
  std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, FieldValue::one(ring->field));
  if (n == 1) return m[0][0];
  Polynomial det = Polynomial::zero(ring);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Polynomial>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial contrib = m[0][col] * matrix_det(minor, ring);
    det = (col % 2 == 0) ? det + contrib : det - contrib;
  }
  return det;
}

}  // namespace detail

// Affine Jacobian criterion: the curve ideal together with all maximal
// minors of the matrix of partial derivatives must span the unit ideal.
inline bool is_nonsingular_affine(const CurvePtr& curve) {
  const RingPtr& ring = curve->ring;
  std::size_t t = ring->arity();
  std::size_t rows = t - 1;
  std::vector<std::vector<Polynomial>> jac;
  jac.reserve(rows);
  for (const auto& g : curve->gens) {
    std::vector<Polynomial> row;
    row.reserve(t);
    for (std::size_t v = 0; v < t; ++v) row.push_back(g.derivative(v));
    jac.push_back(std::move(row));
  }
  std::vector<Polynomial> gens = curve->gens;
  // one maximal minor per deleted column
  for (std::size_t skip = 0; skip < t; ++skip) {
    std::vector<std::vector<Polynomial>> square;
    square.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<Polynomial> row;
      row.reserve(rows);
      for (std::size_t c = 0; c < t; ++c)
        if (c != skip) row.push_back(jac[r][c]);
      square.push_back(std::move(row));
    }
    gens.push_back(detail::matrix_det(square, ring));
  }
  return is_unit(groebner_basis(ring, std::move(gens)));
}

}  // namespace miura
