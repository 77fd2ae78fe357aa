#include "ctxlab/polytope.hpp"

#include "ctxlab/linear_program.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>

namespace ctxlab {

namespace {

using Matrix = std::vector<RationalVector>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational lead = m[row][c];
    for (auto& x : m[row]) {
      if (x != 0) x /= lead;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < m[row].size(); ++j) {
        if (m[row][j] != 0) m[i][j] -= f * m[row][j];
      }
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::size_t rank_of(Matrix m, std::size_t cols) { return rref(m, cols).size(); }

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }
  friend Bitset operator&(const Bitset& a, const Bitset& b) {
    Bitset r = a;
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
    return r;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RationalVector h;
  Bitset zeros;
};

// Extreme rays of {h : h . g >= 0 for all generators}; the generators must
// span the whole space.
std::vector<RationalVector> dual_cone_rays(const Matrix& generators, std::size_t dim) {
  const std::size_t k = generators.size();
  // Initial full-rank subset, greedily in input order.
  std::vector<std::size_t> basis_rows;
  Matrix chosen;
  for (std::size_t i = 0; i < k && basis_rows.size() < dim; ++i) {
    chosen.push_back(generators[i]);
    if (rank_of(chosen, dim) == chosen.size()) {
      basis_rows.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  // Rays of the initial simplicial cone are the columns of the inverse.
  Matrix aug(dim, RationalVector(2 * dim, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) aug[i][j] = chosen[i][j];
    aug[i][dim + i] = 1;
  }
  rref(aug, dim);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    Ray r{RationalVector(dim), Bitset(k)};
    for (std::size_t i = 0; i < dim; ++i) r.h[i] = aug[i][dim + j];
    r.h = primitive_integer_vector(r.h);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i != j) r.zeros.set(basis_rows[i]);
    }
    rays.push_back(std::move(r));
  }

  std::vector<bool> is_basis(k, false);
  for (auto i : basis_rows) is_basis[i] = true;
  for (std::size_t g = 0; g < k; ++g) {
    if (is_basis[g]) continue;
    std::vector<Rational> vals;
    vals.reserve(rays.size());
    for (const auto& r : rays) vals.push_back(dot(r.h, generators[g]));
    std::vector<Ray> next;
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] > 0) {
        pos.push_back(i);
        next.push_back(rays[i]);
      } else if (vals[i] == 0) {
        next.push_back(rays[i]);
        next.back().zeros.set(g);
      } else {
        neg.push_back(i);
      }
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bitset common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t s = 0; s < rays.size() && adjacent; ++s) {
          if (s != p && s != q && common.subset_of(rays[s].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{RationalVector(dim), common};
        for (std::size_t i = 0; i < dim; ++i) r.h[i] = vals[p] * rays[q].h[i] - vals[q] * rays[p].h[i];
        r.h = primitive_integer_vector(r.h);
        r.zeros.set(g);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }
  std::vector<RationalVector> out;
  for (auto& r : rays) out.push_back(std::move(r.h));
  return out;
}

bool coeffs_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

VertexSet vertices_from_states(const Logic& logic, const StateList& states,
                               const std::optional<std::vector<AtomId>>& projection) {
  VertexSet out;
  std::vector<AtomIndex> picks;
  if (projection) {
    for (const auto& id : *projection) picks.push_back(logic.index_of(id));
    out.coordinates = *projection;
  } else {
    for (AtomIndex a = 0; a < logic.atom_count(); ++a) picks.push_back(a);
    out.coordinates = logic.atoms();
  }
  std::map<RationalVector, std::size_t> seen;
  for (std::size_t s = 0; s < states.size(); ++s) {
    RationalVector v;
    v.reserve(picks.size());
    for (auto a : picks) v.emplace_back(states[s].bits.at(a));
    auto [it, inserted] = seen.emplace(v, out.vertices.size());
    if (inserted) {
      out.vertices.push_back(std::move(v));
      out.sources.emplace_back();
    }
    out.sources[it->second].push_back(s);
  }
  return out;
}

Inequality canonicalize(Inequality ineq) {
  RationalVector all = ineq.coeffs;
  all.push_back(ineq.bound);
  all = primitive_integer_vector(all);
  ineq.bound = all.back();
  all.pop_back();
  ineq.coeffs = std::move(all);
  return ineq;
}

Equation canonicalize(Equation eq) {
  RationalVector all = eq.coeffs;
  all.push_back(eq.rhs);
  all = primitive_integer_vector(all);
  auto lead = std::find_if(all.begin(), all.end(), [](const Rational& x) { return x != 0; });
  if (lead != all.end() && *lead < 0) {
    for (auto& x : all) x = -x;
  }
  eq.rhs = all.back();
  all.pop_back();
  eq.coeffs = std::move(all);
  return eq;
}

namespace {

std::string linear_form(const std::vector<AtomId>& coordinates, const RationalVector& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Rational c = coeffs[i];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1) out += to_string(mag) + "*";
    out += coordinates[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const Inequality& ineq) {
  return linear_form(ineq.coordinates, ineq.coeffs) + " <= " + to_string(ineq.bound);
}

std::string to_string(const Equation& eq) {
  return linear_form(eq.coordinates, eq.coeffs) + " = " + to_string(eq.rhs);
}

Inequality parse_inequality(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorKind::Syntax, "cannot parse inequality '" + std::string(text) + "': " + why);
  };
  bool greater = false;
  auto rel = s.find("<=");
  if (rel == std::string::npos) {
    rel = s.find(">=");
    greater = true;
  }
  if (rel == std::string::npos) throw fail("expected '<=' or '>='");
  const std::string lhs = s.substr(0, rel);
  const std::string rhs = s.substr(rel + 2);
  Inequality out;
  out.bound = parse_rational(rhs);
  auto is_word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '/';
  };
  std::size_t i = 0;
  bool first = true;
  while (i < lhs.size()) {
    Rational sign = 1;
    if (lhs[i] == '+' || lhs[i] == '-') {
      sign = lhs[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    std::size_t start = i;
    while (i < lhs.size() && is_word(lhs[i])) ++i;
    std::string word = lhs.substr(start, i - start);
    Rational coeff = 1;
    if (i < lhs.size() && lhs[i] == '*') {
      coeff = parse_rational(word);
      ++i;
      start = i;
      while (i < lhs.size() && is_word(lhs[i])) ++i;
      word = lhs.substr(start, i - start);
    }
    if (!is_valid_atom_id(word)) throw fail("bad atom '" + word + "'");
    auto it = std::find(out.coordinates.begin(), out.coordinates.end(), word);
    if (it == out.coordinates.end()) {
      out.coordinates.push_back(word);
      out.coeffs.push_back(sign * coeff);
    } else {
      out.coeffs[static_cast<std::size_t>(it - out.coordinates.begin())] += sign * coeff;
    }
  }
  if (first) throw fail("empty left-hand side");
  if (greater) {
    for (auto& c : out.coeffs) c = -c;
    out.bound = -out.bound;
  }
  return out;
}

int affine_rank(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  const std::size_t n = points.front().size();
  Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalVector d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank_of(std::move(diffs), n));
}

AffineHull affine_hull(const std::vector<AtomId>& coordinates, const std::vector<RationalVector>& points) {
  AffineHull hull;
  if (points.empty()) return hull;
  const std::size_t n = coordinates.size();
  Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalVector d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  auto pivots = rref(diffs, n);
  hull.dimension = static_cast<int>(pivots.size());
  hull.free_coordinates = pivots;
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Equation eq{coordinates, RationalVector(n, Rational(0)), Rational(0)};
    eq.coeffs[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) eq.coeffs[pivots[r]] = -diffs[r][f];
    eq.rhs = dot(eq.coeffs, points[0]);
    hull.equations.push_back(canonicalize(std::move(eq)));
  }
  std::sort(hull.equations.begin(), hull.equations.end(), [](const Equation& a, const Equation& b) {
    if (a.coeffs != b.coeffs) return coeffs_less(a.coeffs, b.coeffs);
    return a.rhs < b.rhs;
  });
  return hull;
}

Polytope facet_enumeration(std::vector<AtomId> coordinates, std::vector<RationalVector> vertices) {
  if (vertices.empty()) throw Error(ErrorKind::InvalidArgument, "facet enumeration needs at least one vertex");
  for (const auto& v : vertices) {
    if (v.size() != coordinates.size()) throw Error(ErrorKind::DimensionMismatch, "vertex width differs from coordinates");
  }
  Polytope poly;
  auto hull = affine_hull(coordinates, vertices);
  poly.affine_dim = hull.dimension;
  poly.equations = hull.equations;
  const std::size_t r = hull.free_coordinates.size();
  if (r > 0) {
    // Homogenized reduced vertices (1, x_free).
    Matrix generators;
    for (const auto& v : vertices) {
      RationalVector g(r + 1);
      g[0] = 1;
      for (std::size_t j = 0; j < r; ++j) g[j + 1] = v[hull.free_coordinates[j]];
      generators.push_back(std::move(g));
    }
    for (const auto& h : dual_cone_rays(generators, r + 1)) {
      // h0 + a . x >= 0  <=>  -a . x <= h0
      Inequality f{coordinates, RationalVector(coordinates.size(), Rational(0)), h[0]};
      for (std::size_t j = 0; j < r; ++j) f.coeffs[hull.free_coordinates[j]] = -h[j + 1];
      poly.facets.push_back(canonicalize(std::move(f)));
    }
    std::sort(poly.facets.begin(), poly.facets.end(), [](const Inequality& a, const Inequality& b) {
      if (a.coeffs != b.coeffs) return coeffs_less(a.coeffs, b.coeffs);
      return a.bound < b.bound;
    });
  }
  poly.coordinates = std::move(coordinates);
  poly.vertices = std::move(vertices);
  return poly;
}

Polytope facet_enumeration(const VertexSet& vertices) {
  return facet_enumeration(vertices.coordinates, vertices.vertices);
}

Evaluation evaluate_inequality(const Inequality& ineq, const ProbabilityAssignment& p) {
  Evaluation e;
  e.exact = p.is_exact();
  Rational exact = 0;
  double approx = 0.0;
  for (std::size_t i = 0; i < ineq.coeffs.size(); ++i) {
    if (ineq.coeffs[i] == 0) continue;
    auto slot = p.find(ineq.coordinates[i]);
    if (!slot) throw Error(ErrorKind::MissingCoordinate, "no value for coordinate '" + ineq.coordinates[i] + "'");
    if (e.exact) {
      exact += ineq.coeffs[i] * p.exact_value(*slot);
    } else {
      approx += to_double(ineq.coeffs[i]) * p.value(*slot);
    }
  }
  if (e.exact) {
    e.exact_value = exact;
    e.value = to_double(exact);
    e.satisfied = exact <= ineq.bound;
  } else {
    e.value = approx;
    e.satisfied = approx <= to_double(ineq.bound) + kDefaultTolerance;
  }
  return e;
}

MembershipResult membership(const ProbabilityAssignment& point, const VertexSet& vs) {
  const std::size_t n = vs.coordinates.size();
  const std::size_t k = vs.vertices.size();
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "membership needs at least one vertex");
  RationalVector p(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto slot = point.find(vs.coordinates[j]);
    if (!slot) throw Error(ErrorKind::DimensionMismatch, "point has no coordinate '" + vs.coordinates[j] + "'");
    p[j] = point.is_exact() ? point.exact_value(*slot) : Rational(point.value(*slot));
  }

  // maximize t subject to p = sum w_i v_i, sum w_i = 1, w_i >= t >= 0.
  {
    LinearProgram lp(k + 1);
    lp.objective[k] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector row(k + 1, Rational(0));
      for (std::size_t i = 0; i < k; ++i) row[i] = vs.vertices[i][j];
      lp.add(std::move(row), Relation::Equal, p[j]);
    }
    RationalVector ones(k + 1, Rational(1));
    ones[k] = 0;
    lp.add(std::move(ones), Relation::Equal, Rational(1));
    for (std::size_t i = 0; i < k; ++i) {
      RationalVector row(k + 1, Rational(0));
      row[i] = 1;
      row[k] = -1;
      lp.add(std::move(row), Relation::GreaterEqual, Rational(0));
    }
    auto sol = solve(lp);
    if (sol.status == LpStatus::Optimal) {
      sol.x.pop_back();
      return Inside{MixtureWeights(std::move(sol.x))};
    }
  }

  // A strictly positive normal constant on the vertices and the point lets
  // the separator be taken non-negative.
  bool nonnegative = false;
  {
    LinearProgram lp(n + 1);
    lp.free_variables[n] = true;
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector row(n + 1, Rational(0));
      row[j] = 1;
      lp.add(std::move(row), Relation::GreaterEqual, Rational(1));
    }
    auto level_row = [&](const RationalVector& x) {
      RationalVector row(x.begin(), x.end());
      row.push_back(-1);
      return row;
    };
    for (const auto& v : vs.vertices) lp.add(level_row(v), Relation::Equal, Rational(0));
    lp.add(level_row(p), Relation::Equal, Rational(0));
    nonnegative = solve(lp).status == LpStatus::Optimal;
  }

  // maximize w . p - t subject to w . v_i <= t, w in [0,1]^n or [-1,1]^n.
  LinearProgram lp(n + 1);
  lp.free_variables[n] = true;
  for (std::size_t j = 0; j < n; ++j) {
    lp.objective[j] = p[j];
    lp.free_variables[j] = !nonnegative;
    RationalVector row(n + 1, Rational(0));
    row[j] = 1;
    lp.add(row, Relation::LessEqual, Rational(1));
    if (!nonnegative) lp.add(row, Relation::GreaterEqual, Rational(-1));
  }
  lp.objective[n] = -1;
  for (const auto& v : vs.vertices) {
    RationalVector row(v.begin(), v.end());
    row.push_back(-1);
    lp.add(std::move(row), Relation::LessEqual, Rational(0));
  }
  auto sol = solve(lp);
  if (sol.status != LpStatus::Optimal || sol.value <= 0) {
    throw Error(ErrorKind::InvalidArgument, "separator search failed for a point outside the hull");
  }
  Inequality sep{vs.coordinates, RationalVector(sol.x.begin(), sol.x.begin() + static_cast<long>(n)), sol.x[n]};
  sep = canonicalize(std::move(sep));
  Outside out{sep, dot(sep.coeffs, p), Rational(0)};
  bool first = true;
  for (const auto& v : vs.vertices) {
    auto val = dot(sep.coeffs, v);
    if (first || val > out.max_over_vertices) out.max_over_vertices = val;
    first = false;
  }
  out.separator.bound = out.max_over_vertices;
  return out;
}

std::vector<std::vector<AtomIndex>> orthogonal_cliques_outside_contexts(const Logic& logic) {
  const std::size_t n = logic.atom_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& c : logic.contexts()) {
    for (auto a : c.atoms) {
      for (auto b : c.atoms) {
        if (a != b) adj[a][b] = true;
      }
    }
  }
  std::vector<std::vector<AtomIndex>> cliques;
  // Bron-Kerbosch with pivoting; vertex sets are small.
  std::function<void(std::vector<AtomIndex>&, std::vector<AtomIndex>, std::vector<AtomIndex>)> expand =
      [&](std::vector<AtomIndex>& r, std::vector<AtomIndex> p, std::vector<AtomIndex> x) {
        if (p.empty() && x.empty()) {
          cliques.push_back(r);
          return;
        }
        AtomIndex pivot = p.empty() ? x.front() : p.front();
        std::vector<AtomIndex> candidates;
        for (auto v : p) {
          if (!adj[pivot][v]) candidates.push_back(v);
        }
        for (auto v : candidates) {
          std::vector<AtomIndex> np, nx;
          for (auto u : p) {
            if (adj[v][u]) np.push_back(u);
          }
          for (auto u : x) {
            if (adj[v][u]) nx.push_back(u);
          }
          r.push_back(v);
          expand(r, std::move(np), std::move(nx));
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<AtomIndex> r, all(n);
  for (AtomIndex a = 0; a < n; ++a) all[a] = a;
  expand(r, all, {});
  std::vector<std::vector<AtomIndex>> out;
  for (auto& clique : cliques) {
    std::sort(clique.begin(), clique.end());
    bool inside = false;
    for (const auto& c : logic.contexts()) {
      if (std::all_of(clique.begin(), clique.end(), [&](AtomIndex a) { return c.contains(a); })) inside = true;
    }
    if (!inside) out.push_back(std::move(clique));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool axiom_implied(const Logic& logic, const Inequality& ineq, AxiomRegion region) {
  const std::size_t n = logic.atom_count();
  LinearProgram lp(n);
  for (std::size_t i = 0; i < ineq.coordinates.size(); ++i) {
    lp.objective[logic.index_of(ineq.coordinates[i])] += ineq.coeffs[i];
  }
  for (const auto& c : logic.contexts()) {
    RationalVector row(n, Rational(0));
    for (auto a : c.atoms) row[a] = 1;
    lp.add(std::move(row), Relation::Equal, Rational(1));
  }
  if (region == AxiomRegion::OrthogonalClosure) {
    for (const auto& clique : orthogonal_cliques_outside_contexts(logic)) {
      RationalVector row(n, Rational(0));
      for (auto a : clique) row[a] = 1;
      lp.add(std::move(row), Relation::LessEqual, Rational(1));
    }
  }
  auto sol = solve(lp);
  switch (sol.status) {
    case LpStatus::Infeasible: return true;
    case LpStatus::Unbounded: return false;
    case LpStatus::Optimal: return sol.value <= ineq.bound;
  }
  return false;
}

std::string write_polytope_text(const Polytope& poly) {
  std::ostringstream out;
  out << "COORDINATES";
  for (const auto& c : poly.coordinates) out << " " << c;
  out << "\nAFFINE_DIM " << poly.affine_dim << "\n";
  out << "VERTICES " << poly.vertices.size() << "\n";
  for (const auto& v : poly.vertices) {
    for (std::size_t j = 0; j < v.size(); ++j) out << (j ? " " : "") << to_string(v[j]);
    out << "\n";
  }
  out << "FACETS " << poly.facets.size() << "\n";
  for (const auto& f : poly.facets) {
    for (const auto& c : f.coeffs) out << to_string(c) << " ";
    out << "<= " << to_string(f.bound) << "\n";
  }
  out << "EQUATIONS " << poly.equations.size() << "\n";
  for (const auto& e : poly.equations) {
    for (const auto& c : e.coeffs) out << to_string(c) << " ";
    out << "= " << to_string(e.rhs) << "\n";
  }
  return out.str();
}

Polytope read_polytope_text(std::string_view text) {
  Polytope poly;
  std::istringstream in{std::string(text)};
  std::string line;
  enum class Block { None, Vertices, Facets, Equations } block = Block::None;
  std::size_t line_no = 0;
  bool have_coordinates = false;
  auto fail = [&](const std::string& why) { return ParseError(ErrorKind::Syntax, line_no, 1, why); };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    const auto& head = tokens[0];
    if (head == "COORDINATES") {
      poly.coordinates.assign(tokens.begin() + 1, tokens.end());
      have_coordinates = true;
      continue;
    }
    if (head == "AFFINE_DIM") {
      if (tokens.size() != 2) throw fail("AFFINE_DIM takes one value");
      poly.affine_dim = std::stoi(tokens[1]);
      continue;
    }
    if (head == "VERTICES" || head == "FACETS" || head == "EQUATIONS") {
      if (!have_coordinates) throw fail("COORDINATES must come first");
      block = head == "VERTICES" ? Block::Vertices : head == "FACETS" ? Block::Facets : Block::Equations;
      continue;
    }
    const std::size_t n = poly.coordinates.size();
    try {
      if (block == Block::Vertices) {
        if (tokens.size() != n) throw fail("vertex row needs " + std::to_string(n) + " entries");
        RationalVector v;
        for (const auto& t : tokens) v.push_back(parse_rational(t));
        poly.vertices.push_back(std::move(v));
      } else if (block == Block::Facets || block == Block::Equations) {
        const std::string rel = block == Block::Facets ? "<=" : "=";
        if (tokens.size() != n + 2 || tokens[n] != rel) throw fail("expected " + std::to_string(n) + " coefficients, '" + rel + "', bound");
        RationalVector c;
        for (std::size_t j = 0; j < n; ++j) c.push_back(parse_rational(tokens[j]));
        auto bound = parse_rational(tokens[n + 1]);
        if (block == Block::Facets) {
          poly.facets.push_back({poly.coordinates, std::move(c), bound});
        } else {
          poly.equations.push_back({poly.coordinates, std::move(c), bound});
        }
      } else {
        throw fail("unexpected '" + head + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw fail(e.what());
    }
  }
  if (!have_coordinates) throw ParseError(ErrorKind::Syntax, line_no, 1, "missing COORDINATES");
  if (poly.affine_dim < 0 && !poly.vertices.empty()) poly.affine_dim = affine_rank(poly.vertices);
  return poly;
}

}  // namespace ctxlab
