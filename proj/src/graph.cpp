#include "gdc/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gdc/errors.hpp"

namespace gdc {

namespace {

std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void check_fk_size(const FiniteGraph& g) {
  g.validate();
  check_cap("FK_EDGES", 20, g.edges.size());
  check_cap("FK_VERTICES", 8, static_cast<std::size_t>(g.vertices));
}

constexpr double kCouplingTol = 1e-10;

CouplingReport compare(const std::string& model, const std::vector<double>& direct,
                       const std::vector<double>& two_j, const std::vector<double>& one_j) {
  CouplingReport report;
  report.model = model;
  for (std::size_t x = 0; x < direct.size(); ++x) {
    report.deviation_two_j = std::max(report.deviation_two_j, std::fabs(direct[x] - two_j[x]));
    report.deviation_one_j = std::max(report.deviation_one_j, std::fabs(direct[x] - one_j[x]));
  }
  const bool a = report.deviation_two_j <= kCouplingTol;
  const bool b = report.deviation_one_j <= kCouplingTol;
  report.matching = a && b ? "both" : a ? "1-exp(-2J)" : b ? "1-exp(-J)" : "none";
  return report;
}

}  // namespace

void FiniteGraph::validate() const {
  if (vertices < 1) throw DomainError("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw DomainError("edge endpoint outside the vertex set");
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw DomainError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
}

FiniteGraph FiniteGraph::parse(const std::string& text) {
  FiniteGraph g;
  std::istringstream in(text);
  std::string line;
  int declared = -1, top = -1;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "vertices") {
      if (!(fields >> declared)) throw DomainError("bad vertices line");
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw DomainError("bad edge line: " + line);
    }
    if (!(fields >> v)) throw DomainError("bad edge line: " + line);
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
    top = std::max({top, u, v});
  }
  g.vertices = declared >= 0 ? declared : top + 1;
  g.validate();
  return g;
}

std::string FiniteGraph::to_string() const {
  std::ostringstream out;
  out << "vertices " << vertices << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

FiniteGraph FiniteGraph::complete(int k) {
  FiniteGraph g{k, {}};
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) g.edges.emplace_back(u, v);
  }
  g.validate();
  return g;
}

FiniteGraph FiniteGraph::path(int k) {
  FiniteGraph g{k, {}};
  for (int u = 0; u + 1 < k; ++u) g.edges.emplace_back(u, u + 1);
  g.validate();
  return g;
}

FiniteGraph FiniteGraph::cycle(int k) {
  if (k < 3) throw DomainError("cycle needs at least 3 vertices");
  FiniteGraph g = path(k);
  g.edges.emplace_back(0, k - 1);
  return g;
}

FiniteGraph FiniteGraph::torus(int d, int side) {
  if (d < 1 || side < 2) throw DomainError("torus needs d >= 1 and side >= 2");
  long count = 1;
  for (int i = 0; i < d; ++i) count *= side;
  std::set<std::pair<int, int>> edges;
  long stride = 1;
  for (int axis = 0; axis < d; ++axis, stride *= side) {
    for (long x = 0; x < count; ++x) {
      const long coord = (x / stride) % side;
      const long y = x + (coord + 1 == side ? -(side - 1) * stride : stride);
      edges.insert({static_cast<int>(std::min(x, y)), static_cast<int>(std::max(x, y))});
    }
  }
  FiniteGraph g{static_cast<int>(count), {edges.begin(), edges.end()}};
  g.validate();
  return g;
}

std::vector<std::uint32_t> open_components(const FiniteGraph& g, std::uint64_t open_mask) {
  std::vector<std::uint32_t> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0u);
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    if (!(open_mask >> j & 1u)) continue;
    const auto a = find(parent, g.edges[j].first), b = find(parent, g.edges[j].second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::uint32_t> labels(g.vertices);
  for (int v = 0; v < g.vertices; ++v) labels[v] = find(parent, v);
  return labels;
}

RERMeasure fk_exact_rer(const FiniteGraph& g, const Rational& alpha, const Rational& q) {
  check_fk_size(g);
  if (alpha < 0 || alpha > 1) throw DomainError("alpha must lie in [0,1]");
  if (q <= 0) throw DomainError("q must be positive");
  const std::size_t m = g.edges.size();
  std::map<SetPartition, Rational> raw;
  Rational total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const unsigned open = static_cast<unsigned>(std::popcount(mask));
    Rational w = pow(alpha, open) * pow(Rational(1 - alpha), static_cast<unsigned>(m) - open);
    if (w == 0) continue;
    const SetPartition pi = SetPartition::from_labels(open_components(g, mask));
    w *= pow(q, static_cast<unsigned>(pi.block_count()));
    raw[pi] += w;
    total += w;
  }
  RERMeasure nu;
  nu.n = g.vertices;
  for (const auto& [pi, w] : raw) nu.add(pi, w / total);
  return nu;
}

FloatRER fk_float_rer(const FiniteGraph& g, double alpha, double q) {
  check_fk_size(g);
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0,1]");
  if (!(q > 0.0)) throw DomainError("q must be positive");
  const std::size_t m = g.edges.size();
  std::map<SetPartition, double> raw;
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int open = std::popcount(mask);
    double w = std::pow(alpha, open) * std::pow(1.0 - alpha, static_cast<int>(m) - open);
    if (w == 0.0) continue;
    const SetPartition pi = SetPartition::from_labels(open_components(g, mask));
    w *= std::pow(q, pi.block_count());
    raw[pi] += w;
    total += w;
  }
  FloatRER nu{g.vertices, {}};
  for (const auto& [pi, w] : raw) nu.weights.emplace_back(pi, w / total);
  return nu;
}

std::vector<double> apply_phi(const FloatRER& nu, double p) {
  if (nu.n > 20) throw SizeLimitError("colour law needs n <= 20");
  std::vector<double> out(std::size_t{1} << nu.n, 0.0);
  for (const auto& [pi, w] : nu.weights) {
    const auto blocks = pi.blocks();
    const int b = static_cast<int>(blocks.size());
    for (std::uint32_t colors = 0; colors < (1u << b); ++colors) {
      Config x = 0;
      const int ones = std::popcount(colors);
      for (int i = 0; i < b; ++i) {
        if (!(colors >> i & 1u)) continue;
        for (int v : blocks[i]) x |= Config{1} << v;
      }
      out[x] += w * std::pow(p, ones) * std::pow(1.0 - p, b - ones);
    }
  }
  return out;
}

std::vector<double> ising_exact_law(const FiniteGraph& g, double J) {
  g.validate();
  check_cap("SPIN_VERTICES", 8, static_cast<std::size_t>(g.vertices));
  std::vector<double> out(std::size_t{1} << g.vertices);
  double total = 0.0;
  for (Config x = 0; x < out.size(); ++x) {
    double e = 0.0;
    for (const auto& [u, v] : g.edges) e += ((x >> u & 1u) == (x >> v & 1u)) ? J : -J;
    // Shifted by the all-agree energy so weights stay in (0,1].
    out[x] = std::exp(e - J * static_cast<double>(g.edges.size()));
    total += out[x];
  }
  for (double& w : out) w /= total;
  return out;
}

std::vector<double> fuzzy_potts_exact_law(const FiniteGraph& g, double J, int q, int ell) {
  g.validate();
  check_cap("SPIN_VERTICES", 8, static_cast<std::size_t>(g.vertices));
  if (q < 2) throw DomainError("Potts model needs q >= 2");
  if (ell < 1 || ell >= q) throw DomainError("need 1 <= ell < q");
  std::vector<double> out(std::size_t{1} << g.vertices, 0.0);
  std::vector<int> state(g.vertices, 0);
  double total = 0.0;
  while (true) {
    int agree = 0;
    for (const auto& [u, v] : g.edges) agree += state[u] == state[v];
    const double w = std::exp(J * (agree - static_cast<double>(g.edges.size())));
    Config x = 0;
    for (int v = 0; v < g.vertices; ++v) {
      if (state[v] < ell) x |= Config{1} << v;
    }
    out[x] += w;
    total += w;
    int v = 0;
    while (v < g.vertices && ++state[v] == q) state[v++] = 0;
    if (v == g.vertices) break;
  }
  for (double& w : out) w /= total;
  return out;
}

double CouplingReport::deviation() const {
  if (matching == "1-exp(-J)") return deviation_one_j;
  if (matching == "1-exp(-2J)") return deviation_two_j;
  return std::min(deviation_two_j, deviation_one_j);
}

CouplingReport coupling_check_fk_ising(const FiniteGraph& g, double J) {
  if (J < 0) throw DomainError("coupling J must be non-negative");
  const auto direct = ising_exact_law(g, J);
  return compare("fk-ising", direct, apply_phi(fk_float_rer(g, -std::expm1(-2.0 * J), 2.0), 0.5),
                 apply_phi(fk_float_rer(g, -std::expm1(-J), 2.0), 0.5));
}

CouplingReport coupling_check_fuzzy_potts(const FiniteGraph& g, double J, int q, int ell) {
  if (J < 0) throw DomainError("coupling J must be non-negative");
  const auto direct = fuzzy_potts_exact_law(g, J, q, ell);
  const double p = static_cast<double>(ell) / q;
  return compare("fuzzy-potts", direct,
                 apply_phi(fk_float_rer(g, -std::expm1(-2.0 * J), q), p),
                 apply_phi(fk_float_rer(g, -std::expm1(-J), q), p));
}

}  // namespace gdc
