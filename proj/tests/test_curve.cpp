#include <catch2/catch.hpp>

#include <miura/jacobian.hpp>

#include <numeric>
#include <random>

using namespace miura;

namespace {

CurvePtr elliptic_qq() {
  return make_curve(FieldSpec::rationals(), {"x", "y"}, {2, 3},
                    std::vector<std::string>{"y^2 - x^3 - 3*x"});
}

CurvePtr miura_gf5() {
  return make_curve(FieldSpec::prime(5), {"x", "y", "z"}, {4, 6, 5},
                    std::vector<std::string>{"y^2 - x^3 - 1", "z^2 - x*y - 1"});
}

std::vector<FieldValue> coords(const CurvePtr& curve, std::initializer_list<long long> vals) {
  std::vector<FieldValue> out;
  for (long long v : vals) out.push_back(FieldValue::from_integer(v, curve->ring->field));
  return out;
}

// independent gap counter: direct representability search
bool representable(std::uint64_t n, const std::vector<std::uint64_t>& ws) {
  if (n == 0) return true;
  for (auto w : ws)
    if (n >= w && representable(n - w, ws)) return true;
  return false;
}

std::uint64_t gaps_brute_force(const std::vector<std::uint64_t>& ws, std::uint64_t bound) {
  std::uint64_t gaps = 0;
  for (std::uint64_t n = 1; n <= bound; ++n)
    if (!representable(n, ws)) ++gaps;
  return gaps;
}

}  // namespace

TEST_CASE("genus from the weight semigroup", "[curve]") {
  CHECK(genus_of_weights({2, 3}) == 1);
  CHECK(genus_of_weights({4, 6, 5}) == 4);  // gaps {1, 2, 3, 7}
  CHECK(genus_of_weights({2, 5}) == 2);     // gaps {1, 3}
  CHECK_THROWS_AS(genus_of_weights({2, 4}), Error);
  try {
    genus_of_weights({2, 4});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WeightsNotCoprime);
  }
}

TEST_CASE("genus matches brute-force gap counting for coprime pairs", "[curve]") {
  for (std::uint64_t a = 2; a <= 9; ++a)
    for (std::uint64_t b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(genus_of_weights({a, b}) == gaps_brute_force({a, b}, a * b));
    }
}

TEST_CASE("valid curves construct, with V-exponents rejected from B", "[curve]") {
  auto e = elliptic_qq();
  CHECK(e->genus == 1);
  CHECK(e->gens.size() == 1);
  CHECK_FALSE(is_canonical_exponent(e->gens[0].leading().mono, e->ring->order));

  auto m = miura_gf5();
  CHECK(m->genus == 4);
  REQUIRE(m->gens.size() == 2);
  // leading exponents are the V set {(0,2,0), (0,0,2)}
  CHECK(m->gens[0].leading().mono.exps == std::vector<std::uint32_t>{0, 2, 0});
  CHECK(m->gens[1].leading().mono.exps == std::vector<std::uint32_t>{0, 0, 2});
}

TEST_CASE("curve validation rejects malformed generators", "[curve]") {
  auto expect = [](Errc code, auto&& fn) {
    try {
      fn();
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  expect(Errc::BodyMonomialNotInB, [] {
    make_curve(FieldSpec::rationals(), {"x", "y"}, {2, 3},
               std::vector<std::string>{"y^2 - x^3 - y^3"});
  });
  expect(Errc::WrongGeneratorCount, [] {
    make_curve(FieldSpec::rationals(), {"x", "y"}, {2, 3},
               std::vector<std::string>{"y^2 - x^3", "y^2 - x^3 - 1"});
  });
  expect(Errc::WeightsNotCoprime, [] {
    make_curve(FieldSpec::rationals(), {"x", "y"}, {2, 4},
               std::vector<std::string>{"y^2 - x^3"});
  });
  expect(Errc::LeadingExponentInB, [] {
    make_curve(FieldSpec::rationals(), {"x", "y"}, {2, 3},
               std::vector<std::string>{"x^3 + y - 1"});
  });
  expect(Errc::UnitCurveIdeal, [] {
    make_curve(FieldSpec::prime(5), {"x", "y", "z"}, {4, 6, 5},
               std::vector<std::string>{"y^2 - x^3 - 1", "y^2 - x^3"});
  });
  expect(Errc::NotMonic, [] {
    auto ring = make_ring(FieldSpec::rationals(), {"x", "y"}, {2, 3});
    make_curve(FieldSpec::rationals(), {"x", "y"}, {2, 3}, {Polynomial::zero(ring)});
  });
}

TEST_CASE("canonical-shape inputs with random coefficients validate", "[curve]") {
  std::mt19937 rng(71);
  for (std::uint64_t p : {5ull, 7ull}) {
    auto field = FieldSpec::prime(p);
    std::uniform_int_distribution<long long> c(0, static_cast<long long>(p) - 1);
    for (int trial = 0; trial < 40; ++trial) {
      auto ring = make_ring(field, {"x", "y"}, {2, 3});
      // y^2 + c11*xy + c01*y + c30*x^3 + c20*x^2 + c10*x + c00, c30 != 0
      std::vector<Term> terms;
      auto push = [&](std::initializer_list<std::uint32_t> e, long long v) {
        Monomial m;
        m.exps.assign(e);
        auto fv = FieldValue::from_integer(v, field);
        if (!fv.is_zero()) terms.push_back({std::move(m), std::move(fv)});
      };
      push({0, 2}, 1);
      push({1, 1}, c(rng));
      push({0, 1}, c(rng));
      long long c30 = 1 + c(rng) % (static_cast<long long>(p) - 1);
      push({3, 0}, c30);
      push({2, 0}, c(rng));
      push({1, 0}, c(rng));
      push({0, 0}, c(rng));
      CHECK_NOTHROW(make_curve(field, {"x", "y"}, {2, 3}, {Polynomial(ring, terms)}));

      // two-equation shape for weights (4,6,5)
      auto ring3 = make_ring(field, {"x", "y", "z"}, {4, 6, 5});
      auto rnd3 = [&](std::initializer_list<const char*> monos, const char* lead) {
        std::string text = lead;
        for (const char* m : monos) {
          long long v = c(rng);
          if (v != 0) text += " + " + std::to_string(v) + "*" + m;
        }
        long long v = c(rng);
        if (v != 0) text += " + " + std::to_string(v);
        return parse_poly(text, ring3);
      };
      auto f1 = rnd3({"x*y", "x*z", "x^2", "y", "z", "x"}, "z^2");  // Psi(z^2) = 10
      auto f2 = rnd3({"y*z", "x*y", "x*z", "x^2", "y", "z", "x"}, "y^2 - x^3");
      CHECK_NOTHROW(make_curve(field, {"x", "y", "z"}, {4, 6, 5}, {f1, f2}));
    }
  }
}

TEST_CASE("point ideals require the point to lie on the curve", "[curve]") {
  auto m = miura_gf5();
  auto J = point_ideal(m, coords(m, {2, 2, 0}));
  REQUIRE(J.gens().size() == 3);
  CHECK(J.gens()[0] == parse_poly("x - 2", m->ring));
  CHECK(J.gens()[1] == parse_poly("y - 2", m->ring));
  CHECK(J.gens()[2] == parse_poly("z", m->ring));
  CHECK(ideal_degree(J) == 1);

  try {
    point_ideal(m, coords(m, {1, 1, 1}));
    FAIL("expected PointNotOnCurve");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PointNotOnCurve);
  }

  auto e = elliptic_qq();
  auto O = point_ideal(e, coords(e, {0, 0}));
  REQUIRE(O.gens().size() == 2);
  CHECK(O.gens()[0] == parse_poly("x", e->ring));
  CHECK(O.gens()[1] == parse_poly("y", e->ring));
  CHECK(ideal_degree(O) == 1);
}

TEST_CASE("ideal degree counts standard monomials", "[curve]") {
  auto m = miura_gf5();
  auto I = IdealHandle(m, {parse_poly("x + 1", m->ring), parse_poly("y", m->ring)});
  CHECK(ideal_degree(I) == 2);  // standard monomials {1, z}

  CHECK(ideal_degree(IdealHandle::unit(m)) == 0);

  // the zero ideal of the coordinate ring is one-dimensional
  auto zero = IdealHandle(m, {});
  CHECK(zero.is_zero_class());
  CHECK_THROWS_AS(ideal_degree(zero), Error);
}

TEST_CASE("degree of a reduced genus-4 class by staircase enumeration", "[curve]") {
  auto m = miura_gf5();
  auto A = IdealHandle(m, {parse_poly("x^2 + y + z + 2*x", m->ring),
                           parse_poly("x*z - 2*y - 2*z + 2*x", m->ring),
                           parse_poly("x*y - y - z - x", m->ring),
                           parse_poly("y*z - 2*y - 2*z - x + 1", m->ring)});
  // independent staircase count over a box from the leading monomials
  std::vector<Monomial> lms;
  for (const auto& g : A.preimage().elems) lms.push_back(g.leading().mono);
  std::uint64_t count = 0;
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b)
      for (std::uint32_t c = 0; c < 4; ++c) {
        Monomial cand;
        cand.exps = {a, b, c};
        bool standard = true;
        for (const auto& lm : lms)
          if (mono_divides(lm, cand)) {
            standard = false;
            break;
          }
        if (standard) ++count;
      }
  CHECK(count == 4);
  CHECK(ideal_degree(A) == 4);
}

TEST_CASE("affine nonsingularity via the Jacobian criterion", "[curve]") {
  CHECK(is_nonsingular_affine(elliptic_qq()));  // 4a^3 + 27b^2 = 108 != 0
  CHECK(is_nonsingular_affine(miura_gf5()));

  auto cusp = make_curve(FieldSpec::rationals(), {"x", "y"}, {2, 3},
                         std::vector<std::string>{"y^2 - x^3"});
  CHECK_FALSE(is_nonsingular_affine(cusp));
}

TEST_CASE("derivatives satisfy the product rule", "[curve]") {
  auto ring = make_ring(FieldSpec::prime(7), {"x", "y"}, {2, 3});
  std::mt19937 rng(83);
  std::uniform_int_distribution<long long> c(0, 6);
  std::uniform_int_distribution<std::uint32_t> e(0, 3);
  auto random_poly = [&] {
    Polynomial p = Polynomial::zero(ring);
    for (int t = 0; t < 4; ++t) {
      Monomial m;
      m.exps = {e(rng), e(rng)};
      p = p + Polynomial::term(ring, std::move(m), FieldValue::from_integer(c(rng), ring->field));
    }
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_poly();
    auto g = random_poly();
    for (std::size_t v = 0; v < 2; ++v)
      CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
  }
}
