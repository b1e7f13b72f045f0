#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace miura {

struct Ring {
  FieldSpec field;
  std::vector<std::string> vars;
  MiuraOrder order;

  std::size_t arity() const noexcept { return vars.size(); }
  bool operator==(const Ring& o) const = default;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(FieldSpec field, std::vector<std::string> vars,
                         std::vector<std::uint64_t> weights, std::size_t elim_prefix = 0) {
  if (vars.size() != weights.size() + elim_prefix)
    throw Error(Errc::ArityMismatch, "variable/weight count mismatch");
  for (auto w : weights)
    if (w == 0) throw Error(Errc::WeightsNotCoprime, "weights must be positive");
  if (elim_prefix == 0 && !weights.empty()) {
    std::uint64_t g = 0;
    for (auto w : weights) g = std::gcd(g, w);
    if (g != 1) throw Error(Errc::WeightsNotCoprime, "weights must have gcd 1");
  }
  return std::make_shared<const Ring>(
      Ring{std::move(field), std::move(vars), MiuraOrder{std::move(weights), elim_prefix}});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw Error(Errc::RingMismatch, "operands live in different rings");
}

struct Term {
  Monomial mono;
  FieldValue coeff;
  bool operator==(const Term& o) const = default;
};

// Terms are kept sorted descending under the ring order, with no zero
// coefficients; the zero polynomial is the empty term list.
class Polynomial {
public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    for (auto& t : terms) {
      if (t.mono.arity() != ring_->arity())
        throw Error(Errc::ArityMismatch, "term arity does not match ring");
      if (t.coeff.spec() != ring_->field)
        throw Error(Errc::FieldMismatch, "coefficient outside the ring's field");
    }
    terms_ = std::move(terms);
    canonicalize();
  }

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, FieldValue c) {
    Monomial one;
    one.exps.assign(ring->arity(), 0);
    std::vector<Term> ts;
    if (!c.is_zero()) ts.push_back({std::move(one), std::move(c)});
    return Polynomial(std::move(ring), std::move(ts));
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    internal_check(index < ring->arity(), "variable index out of range");
    Monomial m;
    m.exps.assign(ring->arity(), 0);
    m.exps[index] = 1;
    auto c = FieldValue::one(ring->field);
    return Polynomial(std::move(ring), {{std::move(m), std::move(c)}});
  }

  static Polynomial term(RingPtr ring, Monomial m, FieldValue c) {
    std::vector<Term> ts;
    if (!c.is_zero()) ts.push_back({std::move(m), std::move(c)});
    return Polynomial(std::move(ring), std::move(ts));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  const Term& leading() const {
    if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "zero polynomial has no leading term");
    return terms_.front();
  }

  std::uint64_t pole_order() const { return psi(leading().mono, ring_->order); }

  bool is_constant_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merged(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merged(a, b, true); }

  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_)
        r.terms_.push_back({mono_mul(ta.mono, tb.mono), ta.coeff * tb.coeff});
    r.canonicalize();
    return r;
  }

  Polynomial scaled(const FieldValue& c) const {
    if (c.spec() != ring_->field) throw Error(Errc::FieldMismatch, "scalar outside the ring's field");
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
  }

  // this * c * X^m, the workhorse of division steps
  Polynomial times_term(const Monomial& m, const FieldValue& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, m), t.coeff * c});
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) throw Error(Errc::ZeroPolynomial, "cannot normalize the zero polynomial");
    if (leading().coeff.is_one()) return *this;
    return scaled(inv(leading().coeff));
  }

  // Over the rationals: divide by the content so coefficients become
  // coprime integers with a positive leading one.  Controls coefficient
  // growth during basis computations.  Over GF(p): make monic.
  Polynomial content_normalized() const {
    if (is_zero()) return *this;
    if (ring_->field.kind() == FieldKind::prime) return monic();
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& t : terms_) {
      num_gcd = gcd(num_gcd, t.coeff.rational().get_num());
      den_lcm = lcm(den_lcm, t.coeff.rational().get_den());
    }
    mpq_class factor(den_lcm, num_gcd);
    if (leading().coeff.rational() < 0) factor = -factor;
    auto c = FieldValue::from_fraction(factor.get_num(), factor.get_den(), ring_->field);
    return scaled(c);
  }

  FieldValue evaluate(std::span<const FieldValue> coords) const {
    if (coords.size() != ring_->arity())
      throw Error(Errc::ArityMismatch, "wrong number of coordinates");
    FieldValue acc = FieldValue::zero(ring_->field);
    for (const auto& t : terms_) {
      FieldValue v = t.coeff;
      for (std::size_t i = 0; i < coords.size(); ++i)
        if (t.mono.exps[i] != 0) v = v * coords[i].pow(t.mono.exps[i]);
      acc = acc + v;
    }
    return acc;
  }

  Polynomial derivative(std::size_t var) const {
    internal_check(var < ring_->arity(), "derivative variable out of range");
    Polynomial r(ring_);
    for (const auto& t : terms_) {
      if (t.mono.exps[var] == 0) continue;
      auto c = t.coeff * FieldValue::from_integer(static_cast<long long>(t.mono.exps[var]), ring_->field);
      if (c.is_zero()) continue;
      Monomial m = t.mono;
      m.exps[var] -= 1;
      r.terms_.push_back({std::move(m), std::move(c)});
    }
    r.canonicalize();
    return r;
  }

  bool operator==(const Polynomial& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
  }

private:
  static Polynomial merged(const Polynomial& a, const Polynomial& b, bool subtract) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    const auto& order = a.ring_->order;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      auto c = mono_cmp(a.terms_[i].mono, b.terms_[j].mono, order);
      if (c == Ordering::greater) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c == Ordering::less) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        auto coeff = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                              : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!coeff.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(coeff)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      const auto& t = b.terms_[j];
      r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
    }
    return r;
  }

  void canonicalize() {
    const auto& order = ring_->order;
    std::sort(terms_.begin(), terms_.end(), [&](const Term& x, const Term& y) {
      return mono_cmp(x.mono, y.mono, order) == Ordering::greater;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = out.back().coeff + t.coeff;
        if (out.back().coeff.is_zero()) out.pop_back();
      } else if (!t.coeff.is_zero()) {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace miura
