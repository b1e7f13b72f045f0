#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace miura {

// Exponent vector of a monomial X^N.  With an elimination prefix in force,
// the first `elim_prefix` entries belong to auxiliary variables that carry
// no pole-order weight.
struct Monomial {
  std::vector<std::uint32_t> exps;

  std::size_t arity() const noexcept { return exps.size(); }
  bool is_one() const noexcept {
    for (auto e : exps)
      if (e != 0) return false;
    return true;
  }
  bool operator==(const Monomial& o) const noexcept = default;
};

// The weighted order: monomials are graded by the pole order Psi and ties
// break at the first differing exponent, larger exponent first.  Auxiliary
// prefix variables are compared before anything else so that they can be
// eliminated.
struct MiuraOrder {
  std::vector<std::uint64_t> weights;
  std::size_t elim_prefix = 0;

  std::size_t arity() const noexcept { return elim_prefix + weights.size(); }
  bool operator==(const MiuraOrder& o) const noexcept = default;
};

enum class Ordering { less, equal, greater };

inline void require_arity(const Monomial& m, const MiuraOrder& order) {
  if (m.arity() != order.arity())
    throw Error(Errc::ArityMismatch, "monomial arity " + std::to_string(m.arity()) +
                                         " vs order arity " + std::to_string(order.arity()));
}

// Pole order of X^N at the place at infinity: sum of n_i * a_i over the
// weighted (non-auxiliary) coordinates.
inline std::uint64_t psi(const Monomial& m, const MiuraOrder& order) {
  require_arity(m, order);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < order.weights.size(); ++i)
    total += static_cast<std::uint64_t>(m.exps[order.elim_prefix + i]) * order.weights[i];
  return total;
}

inline Ordering mono_cmp(const Monomial& a, const Monomial& b, const MiuraOrder& order) {
  require_arity(a, order);
  require_arity(b, order);
  for (std::size_t i = 0; i < order.elim_prefix; ++i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? Ordering::less : Ordering::greater;
  }
  std::uint64_t pa = psi(a, order);
  std::uint64_t pb = psi(b, order);
  if (pa != pb) return pa < pb ? Ordering::less : Ordering::greater;
  for (std::size_t i = order.elim_prefix; i < a.exps.size(); ++i) {
    // larger exponent at the first difference sorts lower
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? Ordering::less : Ordering::greater;
  }
  return Ordering::equal;
}

inline bool mono_less(const Monomial& a, const Monomial& b, const MiuraOrder& order) {
  return mono_cmp(a, b, order) == Ordering::less;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  internal_check(a.arity() == b.arity(), "monomial product arity");
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
  return r;
}

inline bool mono_divides(const Monomial& d, const Monomial& m) {
  if (d.arity() != m.arity()) return false;
  for (std::size_t i = 0; i < d.exps.size(); ++i)
    if (d.exps[i] > m.exps[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& m, const Monomial& d) {
  internal_check(mono_divides(d, m), "inexact monomial division");
  Monomial r = m;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= d.exps[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  internal_check(a.arity() == b.arity(), "monomial lcm arity");
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(r.exps[i], b.exps[i]);
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] != 0 && b.exps[i] != 0) return false;
  return true;
}

namespace detail {

// Visit every exponent vector with the given Psi value.
template <typename Fn>
void walk_psi_fiber(const MiuraOrder& order, std::uint64_t budget, std::size_t i, Monomial& scratch,
                    Fn&& fn) {
  if (i == order.weights.size()) {
    if (budget == 0) fn(const_cast<const Monomial&>(scratch));
    return;
  }
  if (i + 1 == order.weights.size()) {
    if (budget % order.weights[i] == 0) {
      scratch.exps[order.elim_prefix + i] = static_cast<std::uint32_t>(budget / order.weights[i]);
      fn(const_cast<const Monomial&>(scratch));
      scratch.exps[order.elim_prefix + i] = 0;
    }
    return;
  }
  for (std::uint64_t e = 0; e * order.weights[i] <= budget; ++e) {
    scratch.exps[order.elim_prefix + i] = static_cast<std::uint32_t>(e);
    walk_psi_fiber(order, budget - e * order.weights[i], i + 1, scratch, fn);
  }
  scratch.exps[order.elim_prefix + i] = 0;
}

}  // namespace detail

// True iff N is the minimum of its Psi fiber, i.e. X^N is the canonical
// monomial for the pole order Psi(N).
inline bool is_canonical_exponent(const Monomial& m, const MiuraOrder& order) {
  require_arity(m, order);
  for (std::size_t i = 0; i < order.elim_prefix; ++i)
    internal_check(m.exps[i] == 0, "canonical-exponent test on auxiliary monomial");
  std::uint64_t target = psi(m, order);
  bool minimal = true;
  Monomial scratch;
  scratch.exps.assign(order.arity(), 0);
  detail::walk_psi_fiber(order, target, 0, scratch, [&](const Monomial& n) {
    if (minimal && mono_cmp(n, m, order) == Ordering::less) minimal = false;
  });
  return minimal;
}

}  // namespace miura
