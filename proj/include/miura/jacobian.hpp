#pragma once

#include <cstdlib>
#include <span>
#include <utility>
#include <vector>

#include "curve.hpp"

namespace miura {

// An ideal of the coordinate ring, represented by the reduced basis of its
// preimage (user generators together with the curve generators) in the
// polynomial ring.  Immutable; every operation builds a fresh handle.
class IdealHandle {
public:
  IdealHandle(CurvePtr curve, std::vector<Polynomial> gens)
      : curve_(std::move(curve)), gens_(std::move(gens)) {
    std::vector<Polynomial> all = gens_;
    for (const auto& g : curve_->gens) all.push_back(g);
    preimage_ = groebner_basis(curve_->ring, std::move(all));
  }

  static IdealHandle unit(CurvePtr curve) {
    auto one = Polynomial::constant(curve->ring, FieldValue::one(curve->ring->field));
    return IdealHandle(std::move(curve), {std::move(one)});
  }

  // For results whose reduced preimage basis is already known (colon and
  // product outputs); skips the redundant basis recomputation.
  static IdealHandle from_reduced_basis(CurvePtr curve, Basis preimage) {
    IdealHandle h;
    h.curve_ = std::move(curve);
    h.preimage_ = std::move(preimage);
    h.gens_ = h.quotient_generators();
    return h;
  }

  const CurvePtr& curve() const noexcept { return curve_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }
  const Basis& preimage() const noexcept { return preimage_; }

  bool is_unit_class() const { return preimage_.is_unit_ideal(); }

  // The ideal is zero in the coordinate ring iff the preimage collapses to
  // the curve ideal, i.e. no basis element survives curve reduction.
  bool is_zero_class() const { return quotient_generators().empty(); }

  // Preimage basis elements whose leading monomial survives in the quotient
  // ring: those not divisible by a curve-basis leading monomial.  These are
  // exactly the generators the interpreter prints.
  std::vector<Polynomial> quotient_generators() const {
    std::vector<Polynomial> out;
    for (const auto& g : preimage_.elems) {
      bool survives = true;
      for (const auto& c : curve_->gb.elems)
        if (mono_divides(c.leading().mono, g.leading().mono)) {
          survives = false;
          break;
        }
      if (survives) out.push_back(g);
    }
    return out;
  }

  bool operator==(const IdealHandle& o) const {
    return same_curve(curve_, o.curve_) && preimage_ == o.preimage_;
  }

private:
  IdealHandle() = default;

  CurvePtr curve_;
  std::vector<Polynomial> gens_;
  Basis preimage_;
};

inline void require_same_curve(const IdealHandle& a, const IdealHandle& b) {
  if (!same_curve(a.curve(), b.curve()))
    throw Error(Errc::CurveMismatch, "ideals live on different curves");
}

// The prime ideal of a rational point; every curve generator must vanish at
// the given coordinates.
inline IdealHandle point_ideal(const CurvePtr& curve, const std::vector<FieldValue>& coords) {
  const RingPtr& ring = curve->ring;
  if (coords.size() != ring->arity())
    throw Error(Errc::ArityMismatch, "expected " + std::to_string(ring->arity()) + " coordinates");
  for (const auto& c : coords)
    if (c.spec() != ring->field) throw Error(Errc::FieldMismatch, "coordinate outside the curve field");
  for (const auto& g : curve->gens) {
    if (!g.evaluate(coords).is_zero())
      throw Error(Errc::PointNotOnCurve, format_poly(g) + " does not vanish at the point");
  }
  std::vector<Polynomial> gens;
  gens.reserve(ring->arity());
  for (std::size_t v = 0; v < ring->arity(); ++v)
    gens.push_back(Polynomial::variable(ring, v) - Polynomial::constant(ring, coords[v]));
  return IdealHandle(curve, std::move(gens));
}

// Colength of the ideal: the number of monomials outside the leading ideal
// of the preimage basis.
inline std::uint64_t ideal_degree(const IdealHandle& I) {
  const Basis& gb = I.preimage();
  const std::size_t t = gb.ring->arity();
  if (gb.is_zero_ideal()) throw Error(Errc::ZeroIdeal, "degree of the zero ideal");
  std::vector<std::uint32_t> box(t, 0);
  for (std::size_t v = 0; v < t; ++v) {
    bool found = false;
    for (const auto& g : gb.elems) {
      const Monomial& m = g.leading().mono;
      bool pure = true;
      for (std::size_t w = 0; w < t; ++w)
        if (w != v && m.exps[w] != 0) {
          pure = false;
          break;
        }
      if (pure) {
        box[v] = found ? std::min(box[v], m.exps[v]) : m.exps[v];
        found = true;
      }
    }
    if (!found)
      throw Error(Errc::NotZeroDimensional,
                  "no pure power of " + gb.ring->vars[v] + " among leading monomials");
  }
  std::uint64_t count = 0;
  Monomial cur;
  cur.exps.assign(t, 0);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == t) {
      for (const auto& g : gb.elems)
        if (mono_divides(g.leading().mono, cur)) return;
      ++count;
      return;
    }
    for (std::uint32_t e = 0; e < box[v]; ++e) {
      cur.exps[v] = e;
      self(self, v + 1);
    }
    cur.exps[v] = 0;
  };
  rec(rec, 0);
  return count;
}

// Minimum nonzero element of the ideal in the coordinate ring: the basis
// element with the smallest leading monomial among those that do not reduce
// to zero modulo the curve.
inline Polynomial min_element(const IdealHandle& I) {
  for (const auto& g : I.preimage().elems) {
    if (!normal_form(g, I.curve()->gb).is_zero()) return g;
  }
  throw Error(Errc::ZeroIdeal, "no nonzero element in the coordinate ring");
}

// Reduced ideal of the inverse class: <min_element(I)> : I, computed on
// preimages (both sides contain the curve ideal, so the colon descends to
// the quotient).
inline IdealHandle inv(const IdealHandle& I) {
  const CurvePtr& curve = I.curve();
  Polynomial f = min_element(I);
  std::vector<Polynomial> fgens = {std::move(f)};
  for (const auto& g : curve->gens) fgens.push_back(g);
  Basis A = groebner_basis(curve->ring, std::move(fgens));
  // A : I = the intersection of A : <b> over quotient generators b of I;
  // curve-ideal generators satisfy b*R, subset of curve ideal, subset of A.
  Basis quotient = ideal_colon(A, Basis{curve->ring, I.quotient_generators()});
  return IdealHandle::from_reduced_basis(curve, std::move(quotient));
}

inline IdealHandle reduce_class(const IdealHandle& I) { return inv(inv(I)); }

// Semi-reduced product ideal: pairwise products of quotient generators (the
// handle constructor adjoins the curve ideal again).
inline IdealHandle ideal_product(const IdealHandle& J, const IdealHandle& K) {
  require_same_curve(J, K);
  auto a = J.quotient_generators();
  auto b = K.quotient_generators();
  if (a.empty() || b.empty()) throw Error(Errc::ZeroIdeal, "product with the zero ideal");
  std::vector<Polynomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& p : a)
    for (const auto& q : b) gens.push_back(p * q);
  return IdealHandle(J.curve(), std::move(gens));
}

inline IdealHandle add(const IdealHandle& J, const IdealHandle& K) {
  return reduce_class(ideal_product(J, K));
}

inline IdealHandle double_class(const IdealHandle& J) { return add(J, J); }

// [J]^m by binary double-and-add; m = 0 yields the unit ideal and negative
// multiples go through the class inverse.
inline IdealHandle multi(const IdealHandle& J, long long m) {
  if (J.is_zero_class()) throw Error(Errc::ZeroIdeal, "multiple of the zero ideal");
  if (m == 0) return IdealHandle::unit(J.curve());
  if (m < 0) return multi(inv(J), -m);
  if (m % 2 == 0) return double_class(multi(J, m / 2));
  return add(double_class(multi(J, (m - 1) / 2)), J);
}

inline bool class_eq(const IdealHandle& J, const IdealHandle& K) {
  require_same_curve(J, K);
  return reduce_class(J).preimage() == reduce_class(K).preimage();
}

inline bool is_identity(const IdealHandle& J) { return reduce_class(J).is_unit_class(); }

}  // namespace miura
