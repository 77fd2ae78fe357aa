#include "ctxlab/realization.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace ctxlab {

namespace {

bool is_unit(const Vector& v, double tolerance) { return std::abs(v.norm() - 1.0) <= tolerance; }

Error syntax(std::string_view token, const std::string& why) {
  return Error(ErrorKind::Syntax, "bad vector component '" + std::string(token) + "': " + why);
}

// int | decimal | sqrt(int); consumes from the front of `s`.
double parse_magnitude(std::string_view& s, std::string_view token) {
  if (s.substr(0, 5) == "sqrt(") {
    auto close = s.find(')');
    if (close == std::string_view::npos) throw syntax(token, "unclosed sqrt(");
    auto inner = s.substr(5, close - 5);
    if (inner.empty() || !std::all_of(inner.begin(), inner.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw syntax(token, "sqrt takes a non-negative integer");
    }
    s.remove_prefix(close + 1);
    return std::sqrt(std::stod(std::string(inner)));
  }
  std::size_t n = 0;
  bool digits = false, dot = false;
  while (n < s.size()) {
    if (s[n] >= '0' && s[n] <= '9') {
      digits = true;
    } else if (s[n] == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
    ++n;
  }
  if (!digits) throw syntax(token, "expected a number");
  double value = std::stod(std::string(s.substr(0, n)));
  s.remove_prefix(n);
  return value;
}

double parse_real(std::string_view s, std::string_view token) {
  double sign = 1.0;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    sign = s.front() == '-' ? -1.0 : 1.0;
    s.remove_prefix(1);
  }
  double value = parse_magnitude(s, token);
  if (!s.empty() && s.front() == '/') {
    s.remove_prefix(1);
    double den = parse_magnitude(s, token);
    if (den == 0.0) throw syntax(token, "zero denominator");
    value /= den;
  }
  if (!s.empty()) throw syntax(token, "trailing '" + std::string(s) + "'");
  return sign * value;
}

std::string format_real(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

}  // namespace

const Vector* Realization::find(const AtomId& id) const {
  auto it = std::find(atoms.begin(), atoms.end(), id);
  return it == atoms.end() ? nullptr : &vectors[static_cast<std::size_t>(it - atoms.begin())];
}

const Vector& Realization::at(const AtomId& id) const {
  if (const auto* v = find(id)) return *v;
  throw Error(ErrorKind::MissingAtom, "no vector for atom '" + id + "'");
}

Complex parse_component(std::string_view token) {
  if (!token.empty() && token.front() == '(') {
    if (token.back() != ')') throw syntax(token, "unclosed complex component");
    auto inner = token.substr(1, token.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw syntax(token, "complex component needs 're,im'");
    return {parse_real(inner.substr(0, comma), token), parse_real(inner.substr(comma + 1), token)};
  }
  return {parse_real(token, token), 0.0};
}

Realization parse_vectors(std::string_view text, std::optional<int> dimension) {
  Realization r;
  std::optional<int> dim = dimension;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<std::pair<std::string, std::size_t>> tokens;  // token, column
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tokens.emplace_back(line.substr(start, i - start), start + 1);
    }
    if (tokens.empty()) continue;
    auto fail = [&](std::size_t col, const std::string& why) { return ParseError(ErrorKind::Syntax, line_no, col, why); };
    const auto& head = tokens[0].first;
    if (head == "dim") {
      if (tokens.size() != 2) throw fail(tokens[0].second, "'dim' takes one positive integer");
      int d = 0;
      const auto& t = tokens[1].first;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), d);
      if (ec != std::errc() || ptr != t.data() + t.size() || d <= 0) throw fail(tokens[1].second, "bad dimension '" + t + "'");
      if (dim && *dim != d) {
        throw ParseError(ErrorKind::DimensionMismatch, line_no, tokens[1].second,
                         "dimension " + t + " differs from " + std::to_string(*dim));
      }
      dim = d;
      continue;
    }
    if (head != "vec") throw fail(tokens[0].second, "expected 'vec' or 'dim', got '" + head + "'");
    if (tokens.size() < 3) throw fail(tokens[0].second, "'vec' needs an atom and components");
    const auto& id = tokens[1].first;
    if (!is_valid_atom_id(id)) throw fail(tokens[1].second, "bad atom id '" + id + "'");
    if (r.find(id)) throw fail(tokens[1].second, "atom '" + id + "' given twice");
    const int count = static_cast<int>(tokens.size()) - 2;
    if (!dim) dim = count;
    if (count != *dim) {
      throw ParseError(ErrorKind::DimensionMismatch, line_no, tokens[0].second,
                       "expected " + std::to_string(*dim) + " components, got " + std::to_string(count));
    }
    Vector v(count);
    for (int k = 0; k < count; ++k) {
      const auto& [tok, col] = tokens[static_cast<std::size_t>(k) + 2];
      try {
        v[k] = parse_component(tok);
      } catch (const Error& e) {
        throw fail(col, e.what());
      }
    }
    r.atoms.push_back(id);
    r.vectors.push_back(std::move(v));
  }
  r.dimension = dim.value_or(0);
  return r;
}

std::string serialize_vectors(const Realization& r) {
  std::ostringstream out;
  out << "dim " << r.dimension << "\n";
  for (std::size_t i = 0; i < r.atoms.size(); ++i) {
    out << "vec " << r.atoms[i];
    for (Eigen::Index k = 0; k < r.vectors[i].size(); ++k) {
      const Complex c = r.vectors[i][k];
      if (c.imag() == 0.0) {
        out << " " << format_real(c.real());
      } else {
        out << " (" << format_real(c.real()) << "," << format_real(c.imag()) << ")";
      }
    }
    out << "\n";
  }
  return out.str();
}

RealizationReport check_realization(const Logic& logic, const Realization& r, bool allow_partial) {
  RealizationReport report;
  std::vector<const Vector*> vec(logic.atom_count(), nullptr);
  for (AtomIndex a = 0; a < logic.atom_count(); ++a) {
    vec[a] = r.find(logic.atoms()[a]);
    if (!vec[a]) {
      if (!allow_partial) throw Error(ErrorKind::MissingAtom, "no vector for atom '" + logic.atoms()[a] + "'");
      report.unassigned_atoms.push_back(logic.atoms()[a]);
    } else if (vec[a]->size() != r.dimension) {
      throw Error(ErrorKind::DimensionMismatch, "vector for '" + logic.atoms()[a] + "' has the wrong dimension");
    }
  }
  for (std::size_t c = 0; c < logic.context_count(); ++c) {
    const auto& members = logic.contexts()[c].atoms;
    if (static_cast<int>(members.size()) < r.dimension) report.short_contexts.push_back(c);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Vector* u = vec[members[i]];
      if (!u) continue;
      const AtomId& ui = logic.atoms()[members[i]];
      if (!is_unit(*u, r.tolerance)) report.context_failures.push_back({c, ui, ui, u->norm()});
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const Vector* v = vec[members[j]];
        if (!v) continue;
        const double overlap = std::abs(u->dot(*v));
        if (overlap > r.tolerance) report.context_failures.push_back({c, ui, logic.atoms()[members[j]], overlap});
      }
    }
  }
  for (AtomIndex a = 0; a < logic.atom_count(); ++a) {
    if (!vec[a]) continue;
    for (AtomIndex b = a + 1; b < logic.atom_count(); ++b) {
      if (!vec[b]) continue;
      const double overlap = std::abs(vec[a]->dot(*vec[b]));
      const double norms = vec[a]->norm() * vec[b]->norm();
      if (norms > 0 && std::abs(overlap - norms) <= r.tolerance) {
        report.collinear_pairs.push_back({logic.atoms()[a], logic.atoms()[b], overlap});
      }
    }
  }
  return report;
}

namespace {

void require_state(const Realization& r, const Vector& psi) {
  if (psi.size() != r.dimension) {
    throw Error(ErrorKind::DimensionMismatch, "state has " + std::to_string(psi.size()) + " components, expected " +
                                                  std::to_string(r.dimension));
  }
  if (!is_unit(psi, r.tolerance)) throw Error(ErrorKind::NonUnitState, "state norm is " + format_real(psi.norm()));
}

ProbabilityAssignment born_over(const Realization& r, const Vector& psi, const std::vector<AtomId>& atoms) {
  require_state(r, psi);
  std::vector<double> values;
  values.reserve(atoms.size());
  for (const auto& id : atoms) values.push_back(std::norm(r.at(id).dot(psi)));
  return ProbabilityAssignment::floating(atoms, std::move(values));
}

}  // namespace

ProbabilityAssignment born_probabilities(const Logic& logic, const Realization& r, const Vector& psi) {
  return born_over(r, psi, logic.atoms());
}

ProbabilityAssignment born_probabilities(const Realization& r, const Vector& psi) { return born_over(r, psi, r.atoms); }

Operator projector(const Vector& v) {
  if (!is_unit(v, kDefaultTolerance)) throw Error(ErrorKind::NonUnitVector, "vector norm is " + format_real(v.norm()));
  return v * v.adjoint();
}

namespace {

void require_distinct(const std::vector<double>& eigenvalues) {
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j) {
      if (eigenvalues[i] == eigenvalues[j]) {
        throw Error(ErrorKind::RepeatedEigenvalue, "eigenvalue " + format_real(eigenvalues[i]) + " repeated");
      }
    }
  }
}

}  // namespace

Operator maximal_operator(const std::vector<Vector>& context, const std::vector<double>& eigenvalues) {
  if (context.size() != eigenvalues.size()) {
    throw Error(ErrorKind::InvalidArgument, "one eigenvalue per context vector is required");
  }
  if (context.empty()) throw Error(ErrorKind::NonOrthonormalContext, "empty context");
  require_distinct(eigenvalues);
  const auto d = context.front().size();
  if (static_cast<std::size_t>(d) != context.size()) {
    throw Error(ErrorKind::NonOrthonormalContext,
                "context has " + std::to_string(context.size()) + " vectors in dimension " + std::to_string(d));
  }
  Operator a = Operator::Zero(d, d);
  for (std::size_t i = 0; i < context.size(); ++i) {
    if (context[i].size() != d || !is_unit(context[i], kDefaultTolerance)) {
      throw Error(ErrorKind::NonOrthonormalContext, "context vector " + std::to_string(i + 1) + " is not a unit vector");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(context[j].dot(context[i])) > kDefaultTolerance) {
        throw Error(ErrorKind::NonOrthonormalContext,
                    "context vectors " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " are not orthogonal");
      }
    }
    a += eigenvalues[i] * (context[i] * context[i].adjoint());
  }
  return a;
}

std::vector<Operator> recover_projectors(const Operator& a, const std::vector<double>& eigenvalues) {
  require_distinct(eigenvalues);
  const auto d = a.rows();
  const Operator id = Operator::Identity(d, d);
  std::vector<Operator> out;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    Operator f = id;
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
      if (j == i) continue;
      f = f * (a - eigenvalues[j] * id) / (eigenvalues[i] - eigenvalues[j]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

double angle(const Vector& u, const Vector& v) {
  if (!is_unit(u, kDefaultTolerance) || !is_unit(v, kDefaultTolerance)) {
    throw Error(ErrorKind::NonUnitVector, "angle needs unit vectors");
  }
  if (u.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "vectors differ in dimension");
  return std::acos(std::clamp(std::abs(u.dot(v)), 0.0, 1.0));
}

BugPastingBounds bug_pasting_feasibility() {
  // A true-implies-false bug forces |<a|b>| <= 1/3; a true-implies-true bug
  // forces |<a|b>| >= sqrt(8)/3, i.e. an angle of at most arcsin(1/3).
  BugPastingBounds b{std::acos(1.0 / 3.0), std::asin(1.0 / 3.0), false};
  b.feasible = b.tifs_min_angle <= b.tits_max_angle;
  return b;
}

ViolationReport quantum_vs_classical(const Logic& logic, const Realization& r, const Vector& psi,
                                     const std::vector<Inequality>& inequalities) {
  std::vector<AtomId> covered;
  for (const auto& id : logic.atoms()) {
    if (r.find(id)) covered.push_back(id);
  }
  ViolationReport report{born_over(r, psi, covered), {}, {}};
  for (const auto& ineq : inequalities) {
    for (const auto& id : ineq.coordinates) logic.index_of(id);
    auto e = evaluate_inequality(ineq, report.assignment);
    if (!e.satisfied) report.violated.push_back(report.checks.size());
    report.checks.push_back({ineq, e.value, e.satisfied});
  }
  return report;
}

}  // namespace ctxlab
