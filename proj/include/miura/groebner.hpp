#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "polynomial.hpp"

namespace miura {

// A reduced Groebner basis: monic elements, no monomial of any element
// divisible by another element's leading monomial, sorted ascending by
// leading monomial.  The zero ideal is the empty basis.
struct Basis {
  RingPtr ring;
  std::vector<Polynomial> elems;

  bool is_zero_ideal() const noexcept { return elems.empty(); }
  bool is_unit_ideal() const { return elems.size() == 1 && elems[0].is_constant_one(); }
  bool operator==(const Basis& o) const { return same_ring(ring, o.ring) && elems == o.elems; }
};

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  const Term& fl = f.leading();
  const Term& gl = g.leading();
  Monomial l = mono_lcm(fl.mono, gl.mono);
  return f.times_term(mono_div(l, fl.mono), inv(fl.coeff)) -
         g.times_term(mono_div(l, gl.mono), inv(gl.coeff));
}

// Remainder of f on division by the (nonzero) polynomials in G: reduces the
// greatest reducible monomial first and, among eligible divisors, uses the
// one with the smallest leading monomial.
inline Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G) {
  const RingPtr& ring = f.ring();
  const MiuraOrder& order = ring->order;
  Polynomial rest = f;
  std::vector<Term> out;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading();
    const Polynomial* divisor = nullptr;
    for (const Polynomial& g : G) {
      if (g.is_zero()) continue;
      if (!mono_divides(g.leading().mono, lt.mono)) continue;
      if (divisor == nullptr ||
          mono_cmp(g.leading().mono, divisor->leading().mono, order) == Ordering::less)
        divisor = &g;
    }
    if (divisor == nullptr) {
      out.push_back(lt);
      rest = rest - Polynomial::term(ring, lt.mono, lt.coeff);
    } else {
      const Term& dl = divisor->leading();
      rest = rest - divisor->times_term(mono_div(lt.mono, dl.mono), lt.coeff / dl.coeff);
    }
  }
  return Polynomial(ring, std::move(out));  // already sorted, no duplicates
}

inline Polynomial normal_form(const Polynomial& f, const Basis& G) {
  require_same_ring(f.ring(), G.ring);
  return normal_form(f, std::span<const Polynomial>(G.elems));
}

// Exact division h / b for h in <b>; a nonzero remainder is a library bug.
inline Polynomial exact_divide(const Polynomial& h, const Polynomial& b) {
  require_same_ring(h.ring(), b.ring());
  const Term& bl = b.leading();
  Polynomial rem = h;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    internal_check(mono_divides(bl.mono, lt.mono), "inexact division inside colon");
    Term q{mono_div(lt.mono, bl.mono), lt.coeff / bl.coeff};
    rem = rem - b.times_term(q.mono, q.coeff);
    quot.push_back(std::move(q));
  }
  return Polynomial(h.ring(), std::move(quot));
}

namespace detail {

// Minimalize + tail-reduce a set already known to be a Groebner basis,
// producing the unique reduced basis.
inline Basis reduce_known_gb(const RingPtr& ring, std::vector<Polynomial> gens) {
  const MiuraOrder& order = ring->order;
  std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_cmp(a.leading().mono, b.leading().mono, order) == Ordering::less;
  });
  std::vector<Polynomial> minimal;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (mono_divides(kept.leading().mono, g.leading().mono)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form(minimal[i], std::span<const Polynomial>(others)).monic();
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_cmp(a.leading().mono, b.leading().mono, order) == Ordering::less;
  });
  return Basis{ring, std::move(minimal)};
}

}  // namespace detail

// Buchberger with the normal selection strategy (smallest lcm first) and the
// coprime-leading-monomial criterion.
inline Basis groebner_basis(const RingPtr& ring, std::vector<Polynomial> gens) {
  const MiuraOrder& order = ring->order;
  for (const auto& g : gens) require_same_ring(ring, g.ring());
  std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
  if (gens.empty()) return Basis{ring, {}};

  // seed the working set with mutually reduced generators
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_cmp(a.leading().mono, b.leading().mono, order) == Ordering::less;
  });
  std::vector<Polynomial> basis;
  for (auto& g : gens) {
    Polynomial h = normal_form(g, std::span<const Polynomial>(basis));
    if (!h.is_zero()) basis.push_back(h.content_normalized());
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto push_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, mono_lcm(basis[i].leading().mono, basis[j].leading().mono)});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      auto c = mono_cmp(pairs[k].lcm, pairs[best].lcm, order);
      if (c == Ordering::less ||
          (c == Ordering::equal &&
           (pairs[k].j < pairs[best].j || (pairs[k].j == pairs[best].j && pairs[k].i < pairs[best].i))))
        best = k;
    }
    Pair pair = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    const Monomial& li = basis[pair.i].leading().mono;
    const Monomial& lj = basis[pair.j].leading().mono;
    if (mono_coprime(li, lj)) continue;  // S-polynomial reduces to zero
    Polynomial h =
        normal_form(s_polynomial(basis[pair.i], basis[pair.j]), std::span<const Polynomial>(basis));
    if (h.is_zero()) continue;
    basis.push_back(h.content_normalized());
    push_pairs_with(basis.size() - 1);
  }

  return detail::reduce_known_gb(ring, std::move(basis));
}

inline bool ideal_member(const Polynomial& f, const Basis& A) {
  return normal_form(f, A).is_zero();
}

inline bool ideal_equal(const Basis& A, const Basis& B) {
  require_same_ring(A.ring, B.ring);
  return A.elems == B.elems;
}

inline bool is_unit(const Basis& A) { return A.is_unit_ideal(); }

// Reduced basis of the ideal generated by all pairwise generator products.
inline Basis ideal_product(const Basis& A, const Basis& B) {
  require_same_ring(A.ring, B.ring);
  if (A.is_zero_ideal() || B.is_zero_ideal()) return Basis{A.ring, {}};
  std::vector<Polynomial> gens;
  gens.reserve(A.elems.size() * B.elems.size());
  for (const auto& a : A.elems)
    for (const auto& b : B.elems) gens.push_back(a * b);
  return groebner_basis(A.ring, std::move(gens));
}

namespace detail {

inline RingPtr extended_ring(const RingPtr& ring) {
  std::vector<std::string> vars;
  vars.reserve(ring->vars.size() + 1);
  vars.push_back("~u~");
  vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
  return make_ring(ring->field, std::move(vars), ring->order.weights, ring->order.elim_prefix + 1);
}

inline Polynomial lift(const Polynomial& f, const RingPtr& ext) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m;
    m.exps.reserve(t.mono.exps.size() + 1);
    m.exps.push_back(0);
    m.exps.insert(m.exps.end(), t.mono.exps.begin(), t.mono.exps.end());
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial(ext, std::move(terms));
}

inline Polynomial project(const Polynomial& f, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m;
    m.exps.assign(t.mono.exps.begin() + 1, t.mono.exps.end());
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial(ring, std::move(terms));
}

}  // namespace detail

// A  cap  B via one auxiliary elimination variable u: the u-free part of a
// Groebner basis of u*A + (1-u)*B.
inline Basis ideal_intersect(const Basis& A, const Basis& B) {
  require_same_ring(A.ring, B.ring);
  if (A.is_zero_ideal() || B.is_zero_ideal()) return Basis{A.ring, {}};
  RingPtr ext = detail::extended_ring(A.ring);
  Polynomial u = Polynomial::variable(ext, 0);
  Polynomial one_minus_u = Polynomial::constant(ext, FieldValue::one(ext->field)) - u;
  std::vector<Polynomial> gens;
  gens.reserve(A.elems.size() + B.elems.size());
  for (const auto& a : A.elems) gens.push_back(u * detail::lift(a, ext));
  for (const auto& b : B.elems) gens.push_back(one_minus_u * detail::lift(b, ext));
  Basis eliminated = groebner_basis(ext, std::move(gens));
  std::vector<Polynomial> kept;
  for (const auto& g : eliminated.elems) {
    bool u_free = true;
    for (const auto& t : g.terms())
      if (t.mono.exps[0] != 0) {
        u_free = false;
        break;
      }
    if (u_free) kept.push_back(detail::project(g, A.ring));
  }
  return detail::reduce_known_gb(A.ring, std::move(kept));
}

// Colon ideal A : B, as the intersection over generators b of B of
// (A cap <b>) / b.
inline Basis ideal_colon(const Basis& A, const Basis& B) {
  require_same_ring(A.ring, B.ring);
  if (B.is_zero_ideal()) throw Error(Errc::ZeroDivisorIdeal, "colon by the zero ideal");
  if (A.is_zero_ideal()) return Basis{A.ring, {}};
  std::optional<Basis> result;
  for (const auto& b : B.elems) {
    if (ideal_member(b, A)) continue;  // b in A makes that factor the unit ideal
    Basis cap = ideal_intersect(A, Basis{A.ring, {b.monic()}});
    std::vector<Polynomial> quotients;
    quotients.reserve(cap.elems.size());
    for (const auto& h : cap.elems) quotients.push_back(exact_divide(h, b));
    Basis part = detail::reduce_known_gb(A.ring, std::move(quotients));
    result = result ? ideal_intersect(*result, part) : std::move(part);
  }
  if (!result) {
    // every generator of B already lies in A
    return Basis{A.ring, {Polynomial::constant(A.ring, FieldValue::one(A.ring->field))}};
  }
  return *result;
}

}  // namespace miura
