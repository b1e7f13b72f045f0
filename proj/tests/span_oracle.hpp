#pragma once

// Test-only membership oracle: row-reduces the span of all monomial
// multiples m*g_i with deg(m) bounded, entirely independent of the
// division/Buchberger path.  Sound for "yes" answers; complete whenever
// f = sum q_i g_i with deg q_i within the bound.

#include <map>
#include <optional>
#include <vector>

#include <miura/polynomial.hpp>

namespace miura_test {

class SpanOracle {
public:
  SpanOracle(const miura::RingPtr& ring, const std::vector<miura::Polynomial>& gens,
             std::uint32_t multiplier_deg) {
    std::uint32_t max_deg = multiplier_deg;
    for (const auto& g : gens)
      for (const auto& t : g.terms())
        max_deg = std::max(max_deg, total_degree(t.mono) + multiplier_deg);
    deg_cap_ = max_deg;
    std::vector<miura::Monomial> multipliers = monomials_up_to(ring, multiplier_deg);
    for (const auto& m : multipliers)
      for (const auto& g : gens)
        if (!g.is_zero()) insert(g.times_term(m, miura::FieldValue::one(ring->field)));
  }

  bool contains(const miura::Polynomial& f) {
    if (f.is_zero()) return true;
    auto vec = to_vector(f);
    if (!vec) return false;
    reduce(*vec);
    return vec->empty();
  }

private:
  static std::uint32_t total_degree(const miura::Monomial& m) {
    std::uint32_t d = 0;
    for (auto e : m.exps) d += e;
    return d;
  }

  static std::vector<miura::Monomial> monomials_up_to(const miura::RingPtr& ring,
                                                      std::uint32_t deg) {
    std::vector<miura::Monomial> out;
    miura::Monomial cur;
    cur.exps.assign(ring->arity(), 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t used) -> void {
      if (i == cur.exps.size()) {
        out.push_back(cur);
        return;
      }
      for (std::uint32_t e = 0; used + e <= deg; ++e) {
        cur.exps[i] = e;
        self(self, i + 1, used + e);
      }
      cur.exps[i] = 0;
    };
    rec(rec, 0, 0);
    return out;
  }

  using Row = std::map<std::vector<std::uint32_t>, miura::FieldValue>;

  std::optional<Row> to_vector(const miura::Polynomial& f) const {
    Row row;
    for (const auto& t : f.terms()) {
      if (total_degree(t.mono) > deg_cap_) return std::nullopt;
      row.emplace(t.mono.exps, t.coeff);
    }
    return row;
  }

  void reduce(Row& row) {
    while (!row.empty()) {
      auto pivot = row.rbegin()->first;
      auto it = rows_.find(pivot);
      if (it == rows_.end()) return;
      miura::FieldValue c = row.rbegin()->second;
      for (const auto& [mono, coeff] : it->second) {
        auto found = row.find(mono);
        if (found == row.end()) {
          row.emplace(mono, -(coeff * c));
        } else {
          found->second = found->second - coeff * c;
          if (found->second.is_zero()) row.erase(found);
        }
      }
    }
  }

  void insert(const miura::Polynomial& g) {
    auto vec = to_vector(g);
    if (!vec) return;  // multiple exceeds the window; harmless for soundness
    reduce(*vec);
    if (vec->empty()) return;
    miura::FieldValue lead = vec->rbegin()->second;
    Row normalized;
    for (auto& [mono, coeff] : *vec) normalized.emplace(mono, coeff / lead);
    rows_.emplace(vec->rbegin()->first, std::move(normalized));
  }

  std::uint32_t deg_cap_;
  std::map<std::vector<std::uint32_t>, Row> rows_;  // pivot monomial -> normalized row
};

}  // namespace miura_test
