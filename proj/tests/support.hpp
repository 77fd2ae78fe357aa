#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include "ctxlab/catalog.hpp"
#include "ctxlab/polytope.hpp"
#include "ctxlab/states.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace ctxlab::testing {

inline Logic catalog_logic(const std::string& name) { return *catalog_get(name).logic; }

inline std::string data_path(const std::string& file) { return std::string(CTXLAB_TEST_DATA_DIR) + "/" + file; }

// Reference probability formulas: atom -> set of lambda indices (1-based).
struct ReferenceFormulas {
  std::size_t state_count = 0;
  std::map<AtomId, std::set<std::size_t>> sets;
};

inline ReferenceFormulas read_formulas(const std::string& entry) {
  std::ifstream in(data_path("formulas_" + entry + ".txt"));
  if (!in) throw std::runtime_error("missing formula data for " + entry);
  ReferenceFormulas f;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "states") {
      ls >> f.state_count;
      continue;
    }
    std::string eq;
    ls >> eq;
    auto& s = f.sets[head];
    for (std::size_t k; ls >> k;) s.insert(k);
  }
  return f;
}

// Maps each reference lambda index to one enumerated state index by matching
// state bit columns. Empty when the column multisets differ.
inline std::map<std::size_t, std::size_t> lambda_mapping(const Logic& logic, const StateList& states,
                                                         const ReferenceFormulas& f) {
  std::map<std::vector<std::uint8_t>, std::vector<std::size_t>> ours;
  for (std::size_t s = 0; s < states.size(); ++s) ours[states[s].bits].push_back(s);
  std::map<std::size_t, std::size_t> mapping;
  for (std::size_t j = 1; j <= f.state_count; ++j) {
    std::vector<std::uint8_t> column(logic.atom_count(), 0);
    for (AtomIndex a = 0; a < logic.atom_count(); ++a) {
      auto it = f.sets.find(logic.atom(a));
      if (it != f.sets.end() && it->second.count(j)) column[a] = 1;
    }
    auto hit = ours.find(column);
    if (hit == ours.end() || hit->second.empty()) return {};
    mapping[j] = hit->second.back();
    hit->second.pop_back();
  }
  return mapping;
}

// Hull oracle: every hyperplane through affine_dim affinely independent
// vertices (within the affine hull), kept when valid on all vertices.
// Returns canonical facets over the same free coordinates facet_enumeration
// uses, so the two lists are directly comparable.
inline std::vector<Inequality> brute_force_facets(const std::vector<AtomId>& coords,
                                                  const std::vector<RationalVector>& vertices) {
  const auto hull = affine_hull(coords, vertices);
  const std::size_t r = hull.free_coordinates.size();
  std::vector<RationalVector> reduced;
  for (const auto& v : vertices) {
    RationalVector w;
    for (auto c : hull.free_coordinates) w.push_back(v[c]);
    reduced.push_back(std::move(w));
  }
  std::set<std::pair<RationalVector, Rational>> found;
  const std::size_t k = vertices.size();
  std::vector<std::size_t> pick(r);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) {
    if (depth == r) {
      // Solve for (a, b) with a . w_i = b on the picked vertices: a
      // nullspace of the r x (r+1) system [w_i, -1].
      std::vector<RationalVector> m;
      for (auto i : pick) {
        RationalVector row = reduced[i];
        row.push_back(-1);
        m.push_back(std::move(row));
      }
      // Gaussian elimination.
      std::vector<std::size_t> pivots;
      std::size_t row = 0;
      for (std::size_t c = 0; c <= r && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational lead = m[row][c];
        for (auto& x : m[row]) x /= lead;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (i != row && m[i][c] != 0) {
            Rational f = m[i][c];
            for (std::size_t j = 0; j <= r; ++j) m[i][j] -= f * m[row][j];
          }
        }
        pivots.push_back(c);
        ++row;
      }
      if (pivots.size() != r) return;  // not affinely independent
      std::size_t free_col = 0;
      while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
      RationalVector x(r + 1, Rational(0));
      x[free_col] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m[i][free_col];
      RationalVector a(x.begin(), x.begin() + static_cast<long>(r));
      if (std::all_of(a.begin(), a.end(), [](const Rational& z) { return z == 0; })) return;
      for (int sign : {1, -1}) {
        RationalVector s = a;
        Rational b = x[r] * sign;
        for (auto& z : s) z *= sign;
        bool valid = std::all_of(reduced.begin(), reduced.end(), [&](const RationalVector& w) { return dot(s, w) <= b; });
        if (!valid) continue;
        Inequality ineq{coords, RationalVector(coords.size(), Rational(0)), b};
        for (std::size_t j = 0; j < r; ++j) ineq.coeffs[hull.free_coordinates[j]] = s[j];
        auto c = canonicalize(std::move(ineq));
        found.emplace(c.coeffs, c.bound);
      }
      return;
    }
    for (std::size_t i = from; i < k; ++i) {
      pick[depth] = i;
      choose(depth + 1, i + 1);
    }
  };
  if (r > 0) choose(0, 0);
  std::vector<Inequality> out;
  for (const auto& [c, b] : found) out.push_back({coords, c, b});
  return out;
}

// Random rational weights with small denominators, summing to 1 exactly.
inline MixtureWeights random_weights(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, 12);
  RationalVector raw(n);
  Rational total = 0;
  for (auto& w : raw) {
    w = Rational(pick(rng), 1 + pick(rng));
    total += w;
  }
  if (total == 0) return MixtureWeights::uniform(n);
  for (auto& w : raw) w /= total;
  return MixtureWeights(std::move(raw));
}

}  // namespace ctxlab::testing
