#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "curve.hpp"

namespace miura {

// Independent elliptic-curve arithmetic on y^2 = x^3 + a*x + b via the
// explicit chord-tangent formulas; used to cross-validate the ideal-based
// pipeline.  Characteristics 2 and 3 are outside the formulas' domain.
class ECPoint {
public:
  static ECPoint at_infinity() { return ECPoint(); }
  ECPoint(FieldValue x, FieldValue y) : xy_(std::in_place, std::move(x), std::move(y)) {}

  bool is_infinity() const noexcept { return !xy_.has_value(); }
  const FieldValue& x() const { return xy_->first; }
  const FieldValue& y() const { return xy_->second; }

  bool operator==(const ECPoint& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return x() == o.x() && y() == o.y();
  }

private:
  ECPoint() = default;
  std::optional<std::pair<FieldValue, FieldValue>> xy_;
};

namespace detail {

inline void require_weierstrass_domain(const FieldValue& a, const FieldValue& b) {
  const FieldSpec& spec = a.spec();
  if (spec != b.spec()) throw Error(Errc::FieldMismatch, "curve coefficients in different fields");
  std::uint64_t p = spec.characteristic();
  if (p == 2 || p == 3)
    throw Error(Errc::Unsupported, "chord-tangent formulas need characteristic != 2, 3");
  auto four = FieldValue::from_integer(4, spec);
  auto twenty_seven = FieldValue::from_integer(27, spec);
  if ((four * a.pow(3) + twenty_seven * b.pow(2)).is_zero())
    throw Error(Errc::SingularCurve, "4a^3 + 27b^2 = 0");
}

inline void require_on_curve(const ECPoint& P, const FieldValue& a, const FieldValue& b) {
  if (P.is_infinity()) return;
  if (!(P.y().pow(2) == P.x().pow(3) + a * P.x() + b))
    throw Error(Errc::PointNotOnCurve, "point fails y^2 = x^3 + ax + b");
}

}  // namespace detail

inline ECPoint ec_negate(const ECPoint& P) {
  if (P.is_infinity()) return P;
  return ECPoint(P.x(), -P.y());
}

inline ECPoint ec_add(const ECPoint& P, const ECPoint& Q, const FieldValue& a, const FieldValue& b) {
  detail::require_weierstrass_domain(a, b);
  detail::require_on_curve(P, a, b);
  detail::require_on_curve(Q, a, b);
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  const FieldSpec& spec = a.spec();
  if (P.x() == Q.x() && P.y() == -Q.y()) return ECPoint::at_infinity();  // Q = -P
  FieldValue lambda = [&] {
    if (P.x() == Q.x()) {  // doubling; y_P != 0 here
      auto three = FieldValue::from_integer(3, spec);
      auto two = FieldValue::from_integer(2, spec);
      return (three * P.x().pow(2) + a) / (two * P.y());
    }
    return (Q.y() - P.y()) / (Q.x() - P.x());
  }();
  FieldValue xr = lambda.pow(2) - P.x() - Q.x();
  FieldValue yr = lambda * (P.x() - xr) - P.y();
  return ECPoint(std::move(xr), std::move(yr));
}

inline ECPoint ec_mul(const ECPoint& P, long long m, const FieldValue& a, const FieldValue& b) {
  detail::require_weierstrass_domain(a, b);
  detail::require_on_curve(P, a, b);
  if (m < 0) return ec_mul(ec_negate(P), -m, a, b);
  ECPoint acc = ECPoint::at_infinity();
  ECPoint base = P;
  unsigned long long k = static_cast<unsigned long long>(m);
  while (k > 0) {
    if (k & 1) acc = ec_add(acc, base, a, b);
    if (k >>= 1) base = ec_add(base, base, a, b);
  }
  return acc;
}

struct ECGroup {
  std::uint64_t order;           // affine points plus the point at infinity
  std::vector<ECPoint> affine;
};

// Exhaustive (x, y) scan over GF(p).
inline ECGroup ec_enumerate(const FieldValue& a, const FieldValue& b) {
  detail::require_weierstrass_domain(a, b);
  const FieldSpec& spec = a.spec();
  if (spec.kind() != FieldKind::prime)
    throw Error(Errc::Unsupported, "enumeration needs a finite field");
  std::uint64_t p = spec.characteristic();
  ECGroup group;
  for (std::uint64_t xi = 0; xi < p; ++xi)
    for (std::uint64_t yi = 0; yi < p; ++yi) {
      auto x = FieldValue::from_integer(static_cast<long long>(xi), spec);
      auto y = FieldValue::from_integer(static_cast<long long>(yi), spec);
      if (y.pow(2) == x.pow(3) + a * x + b) group.affine.emplace_back(std::move(x), std::move(y));
    }
  group.order = group.affine.size() + 1;
  return group;
}

// For a genus-1 curve in the two-variable canonical shape: the second
// intersection of the vertical line x = alpha has
// y = -beta - c11*alpha - c01, with c11 and c01 the xy and y coefficients
// of the defining polynomial.
inline FieldValue c23_negate_y(const CurvePtr& curve, const FieldValue& alpha,
                               const FieldValue& beta) {
  const RingPtr& ring = curve->ring;
  if (ring->arity() != 2 || ring->order.weights != std::vector<std::uint64_t>{2, 3} ||
      curve->genus != 1)
    throw Error(Errc::WrongCurveShape, "vertical-line negation needs weights (2,3)");
  std::vector<FieldValue> coords = {alpha, beta};
  if (!curve->gens[0].evaluate(coords).is_zero())
    throw Error(Errc::PointNotOnCurve, "point fails the curve equation");
  FieldValue c11 = FieldValue::zero(ring->field);
  FieldValue c01 = FieldValue::zero(ring->field);
  for (const auto& t : curve->gens[0].terms()) {
    if (t.mono.exps == std::vector<std::uint32_t>{1, 1}) c11 = t.coeff;
    if (t.mono.exps == std::vector<std::uint32_t>{0, 1}) c01 = t.coeff;
  }
  return -beta - c11 * alpha - c01;
}

}  // namespace miura
