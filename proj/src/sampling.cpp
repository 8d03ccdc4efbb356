#include "gdc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "gdc/errors.hpp"
#include "gdc/rng.hpp"

namespace gdc {

namespace {

std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<std::uint32_t>& parent, std::uint32_t a, std::uint32_t b) {
  a = find(parent, a);
  b = find(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

struct Moments {
  double sum = 0.0, sum_sq = 0.0;
  std::size_t count = 0;

  void push(double x) {
    sum += x;
    sum_sq += x * x;
    ++count;
  }
  double mean() const { return count ? sum / count : 0.0; }
  double stderr_of_mean() const {
    if (count < 2) return 0.0;
    const double m = mean();
    const double var = std::max(0.0, (sum_sq - count * m * m) / (count - 1));
    return std::sqrt(var / count);
  }
};

void record(EstimatorReport& report, const std::string& key, const Moments& m) {
  report.estimates[key] = m.mean();
  report.stderr_[key] = m.stderr_of_mean();
}

long torus_sites(int d, int side) {
  if (d < 1 || side < 1) throw DomainError("torus needs d >= 1 and side >= 1");
  long count = 1;
  for (int i = 0; i < d; ++i) {
    count *= side;
    if (count > 100'000'000) throw SizeLimitError("torus too large");
  }
  check_cap("TORUS_SITES", 1'000'000, static_cast<std::size_t>(count));
  return count;
}

}  // namespace

std::vector<PartitionSample> fk_glauber_sampler(const FiniteGraph& g, double alpha, double q,
                                                long sweeps, long burn_in, std::uint64_t seed) {
  g.validate();
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0,1]");
  if (!(q >= 1.0)) throw DomainError("heat-bath sampler needs q >= 1");
  if (sweeps < 0 || burn_in < 0) throw DomainError("sweep counts must be non-negative");
  const std::size_t m = g.edges.size();
  std::vector<std::vector<std::pair<int, std::size_t>>> adjacent(g.vertices);
  for (std::size_t j = 0; j < m; ++j) {
    adjacent[g.edges[j].first].emplace_back(g.edges[j].second, j);
    adjacent[g.edges[j].second].emplace_back(g.edges[j].first, j);
  }
  std::vector<char> open(m, 0);
  std::vector<char> visited(g.vertices);
  std::vector<int> stack;
  // Whether u and v are joined by open edges other than `skip`.
  auto connected = [&](int u, int v, std::size_t skip) {
    std::fill(visited.begin(), visited.end(), 0);
    stack.assign(1, u);
    visited[u] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (x == v) return true;
      for (const auto& [y, j] : adjacent[x]) {
        if (j == skip || !open[j] || visited[y]) continue;
        visited[y] = 1;
        stack.push_back(y);
      }
    }
    return false;
  };
  const double open_if_split = alpha / (alpha + (1.0 - alpha) * q);
  Rng rng(seed, 0);
  std::vector<PartitionSample> out;
  out.reserve(static_cast<std::size_t>(sweeps));
  std::map<std::string, std::string> parameters = {
      {"alpha", std::to_string(alpha)}, {"q", std::to_string(q)},
      {"burn_in", std::to_string(burn_in)}};
  for (long sweep = 0; sweep < burn_in + sweeps; ++sweep) {
    for (std::size_t j = 0; j < m; ++j) {
      const double u = rng.uniform();
      const double chance =
          connected(g.edges[j].first, g.edges[j].second, j) ? alpha : open_if_split;
      open[j] = u < chance;
    }
    if (sweep < burn_in) continue;
    std::vector<std::uint32_t> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), 0u);
    for (std::size_t j = 0; j < m; ++j) {
      if (open[j]) unite(parent, g.edges[j].first, g.edges[j].second);
    }
    std::vector<std::uint32_t> labels(g.vertices);
    for (int v = 0; v < g.vertices; ++v) labels[v] = find(parent, v);
    out.push_back({SetPartition::from_labels(labels), "fk", parameters, seed, sweep + 1});
  }
  return out;
}

PartitionSample coalescing_rw_rer(int d, int side, double horizon, std::uint64_t seed,
                                  std::uint64_t stream) {
  const long sites = torus_sites(d, side);
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) {
    throw DomainError("time horizon must be finite and non-negative");
  }
  std::vector<long> stride(d, 1);
  for (int i = 1; i < d; ++i) stride[i] = stride[i - 1] * side;
  std::vector<std::uint32_t> position(sites), origin(sites), parent(sites);
  std::vector<std::int64_t> occupant(sites);
  std::iota(position.begin(), position.end(), 0u);
  std::iota(origin.begin(), origin.end(), 0u);
  std::iota(parent.begin(), parent.end(), 0u);
  std::iota(occupant.begin(), occupant.end(), std::int64_t{0});
  Rng rng(seed, stream);
  double t = 0.0;
  while (position.size() > 1) {
    const std::size_t walkers = position.size();
    t += rng.exponential() / static_cast<double>(walkers);
    if (t > horizon) break;
    const std::size_t i = rng.below(walkers);
    const std::uint64_t move = side > 1 ? rng.below(2 * static_cast<std::uint64_t>(d)) : 0;
    const long here = position[i];
    const int axis = static_cast<int>(move / 2);
    const long coord = (here / stride[axis]) % side;
    long target = here;
    if (side > 1) {
      if (move % 2 == 0) {
        target += coord + 1 == side ? -(side - 1) * stride[axis] : stride[axis];
      } else {
        target += coord == 0 ? (side - 1) * stride[axis] : -stride[axis];
      }
    }
    if (target == here) continue;
    occupant[here] = -1;
    const std::int64_t other = occupant[target];
    if (other >= 0) {
      unite(parent, origin[i], origin[other]);
      const std::size_t last = walkers - 1;
      if (i != last) {
        position[i] = position[last];
        origin[i] = origin[last];
        occupant[position[i]] = static_cast<std::int64_t>(i);
      }
      position.pop_back();
      origin.pop_back();
    } else {
      occupant[target] = static_cast<std::int64_t>(i);
      position[i] = static_cast<std::uint32_t>(target);
    }
  }
  std::vector<std::uint32_t> labels(sites);
  for (long x = 0; x < sites; ++x) labels[x] = find(parent, static_cast<std::uint32_t>(x));
  std::ostringstream h;
  h << horizon;
  return {SetPartition::from_labels(labels),
          "voter",
          {{"d", std::to_string(d)}, {"side", std::to_string(side)}, {"T", h.str()},
           {"walkers_left", std::to_string(position.size())}},
          seed,
          static_cast<long>(std::ceil(horizon))};
}

void StepLaw::validate() const {
  if (d < 1) throw DomainError("step law dimension must be positive");
  if (steps.empty() || steps.size() != probs.size()) throw DomainError("malformed step law");
  double total = 0.0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (static_cast<int>(steps[i].size()) != d) throw DomainError("step has wrong dimension");
    if (!(probs[i] >= 0.0)) throw DomainError("step probability is negative");
    total += probs[i];
  }
  if (std::fabs(total - 1.0) > 1e-9) throw DomainError("step probabilities must sum to 1");
}

StepLaw StepLaw::simple(int d) {
  StepLaw law{d, {}, {}};
  for (int axis = 0; axis < d; ++axis) {
    for (int sign : {1, -1}) {
      std::vector<int> step(d, 0);
      step[axis] = sign;
      law.steps.push_back(step);
      law.probs.push_back(1.0 / (2 * d));
    }
  }
  return law;
}

StepLaw StepLaw::constant(std::vector<int> step) {
  StepLaw law{static_cast<int>(step.size()), {std::move(step)}, {1.0}};
  law.validate();
  return law;
}

StepLaw StepLaw::parse(const std::string& text) {
  StepLaw law;
  law.d = 0;
  std::istringstream in(text);
  std::string entry;
  while (std::getline(in, entry, ';')) {
    if (entry.empty()) continue;
    const auto colon = entry.find(':');
    if (colon == std::string::npos) throw DomainError("step entry needs ':' : " + entry);
    std::vector<int> step;
    std::istringstream coords(entry.substr(0, colon));
    std::string c;
    try {
      while (std::getline(coords, c, ',')) step.push_back(std::stoi(c));
      law.probs.push_back(std::stod(entry.substr(colon + 1)));
    } catch (const std::exception&) {
      throw DomainError("bad step entry: " + entry);
    }
    if (law.d == 0) law.d = static_cast<int>(step.size());
    law.steps.push_back(step);
  }
  law.validate();
  return law;
}

PartitionSample rwrs_rer(const StepLaw& law, long n, std::uint64_t seed, std::uint64_t stream) {
  law.validate();
  if (n < 1) throw DomainError("walk length must be positive");
  const int bits = 64 / law.d;
  const std::int64_t bound = bits >= 63 ? INT64_MAX : (std::int64_t{1} << (bits - 1)) - 1;
  std::vector<double> cumulative(law.probs.size());
  std::partial_sum(law.probs.begin(), law.probs.end(), cumulative.begin());
  Rng rng(seed, stream);
  std::vector<std::int64_t> where(law.d, 0);
  std::unordered_map<std::uint64_t, std::uint32_t> first_visit;
  first_visit.reserve(static_cast<std::size_t>(std::min<long>(n, 1 << 22)));
  std::vector<std::uint32_t> labels(n);
  for (long t = 0; t < n; ++t) {
    if (t > 0) {
      const double u = rng.uniform() * cumulative.back();
      std::size_t k = std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
      k = std::min(k, law.steps.size() - 1);
      for (int i = 0; i < law.d; ++i) where[i] += law.steps[k][i];
    }
    std::uint64_t key = 0;
    for (int i = 0; i < law.d; ++i) {
      if (where[i] > bound || where[i] < -bound) throw SizeLimitError("walk left the packable range");
      const std::uint64_t part =
          bits >= 64 ? static_cast<std::uint64_t>(where[i])
                     : static_cast<std::uint64_t>(where[i]) & ((std::uint64_t{1} << bits) - 1);
      key = bits >= 64 ? part : (key << bits) | part;
    }
    labels[t] = first_visit.emplace(key, static_cast<std::uint32_t>(first_visit.size())).first->second;
  }
  return {SetPartition(std::move(labels)),
          "rwrs",
          {{"n", std::to_string(n)}, {"d", std::to_string(law.d)}},
          seed,
          n};
}

EstimatorReport range_estimator(const StepLaw& law, long n, int reps, std::uint64_t seed,
                                int jobs) {
  if (reps < 1) throw DomainError("need at least one replicate");
  std::vector<double> ratio(reps);
  parallel_blocks(static_cast<std::size_t>(reps), jobs, [&](std::size_t r) {
    const PartitionSample s = rwrs_rer(law, n, seed, r);
    ratio[r] = static_cast<double>(s.partition.block_count()) / static_cast<double>(n);
  });
  EstimatorReport report{"range", static_cast<std::size_t>(reps), seed, {}, {}, reps < 2};
  Moments m;
  for (double x : ratio) m.push(x);
  record(report, "R_n/n", m);
  return report;
}

std::vector<double> uniform_field(std::size_t sites, std::uint64_t seed, std::uint64_t stream) {
  Rng rng(seed, stream);
  std::vector<double> field(sites);
  for (double& u : field) u = rng.uniform();
  return field;
}

std::vector<std::uint8_t> color_sample(const SetPartition& pi, double p, std::uint64_t seed,
                                       std::uint64_t stream) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0,1]");
  const auto field = uniform_field(static_cast<std::size_t>(pi.size()), seed, stream);
  // RGS labels appear in order of their least element.
  std::vector<int> least(pi.block_count(), -1);
  std::vector<std::uint8_t> out(pi.size());
  for (int x = 0; x < pi.size(); ++x) {
    int& root = least[pi.label(x)];
    if (root < 0) root = x;
    out[x] = field[root] < p;
  }
  return out;
}

EstimatorReport pair_correlation_estimator(const ColorBatch& samples,
                                           const std::vector<std::pair<int, int>>& pairs) {
  if (samples.empty()) throw DomainError("no samples");
  EstimatorReport report{"pair_correlation", samples.size(), 0, {}, {}, samples.size() < 2};
  for (const auto& [u, v] : pairs) {
    const auto width = static_cast<int>(samples.front().size());
    if (u < 0 || v < 0 || u >= width || v >= width) throw DomainError("pair outside the sites");
    Moments joint, mu, mv;
    for (const auto& x : samples) {
      joint.push(x[u] && x[v]);
      mu.push(x[u]);
      mv.push(x[v]);
    }
    Moments centred;
    for (const auto& x : samples) centred.push((x[u] - mu.mean()) * (x[v] - mv.mean()));
    const std::string tag = "[" + std::to_string(u) + "," + std::to_string(v) + "]";
    record(report, "P11" + tag, joint);
    record(report, "cov" + tag, centred);
  }
  return report;
}

std::vector<std::size_t> torus_box(int d, int side, int n) {
  torus_sites(d, side);
  if (n < 0 || 2 * n + 1 > side) throw DomainError("box radius must satisfy 2n+1 <= side");
  std::vector<std::size_t> out;
  std::vector<int> offset(d, -n);
  while (true) {
    long index = 0, stride = 1;
    for (int i = 0; i < d; ++i, stride *= side) index += ((offset[i] + side) % side) * stride;
    out.push_back(static_cast<std::size_t>(index));
    int i = 0;
    while (i < d && ++offset[i] > n) offset[i++] = -n;
    if (i == d) break;
  }
  return out;
}

EstimatorReport ergodicity_diagnostic(const ColorBatch& samples, int d, int side, int n,
                                      double p) {
  if (samples.empty()) throw DomainError("no samples");
  const auto box = torus_box(d, side, n);
  EstimatorReport report{"ergodicity", samples.size(), 0, {}, {}, samples.size() < 2};
  Moments average;
  for (const auto& x : samples) {
    if (static_cast<long>(x.size()) != torus_sites(d, side)) throw DomainError("sample size mismatch");
    double hits = 0.0;
    for (std::size_t s : box) hits += x[0] && x[s];
    average.push(hits / static_cast<double>(box.size()));
  }
  record(report, "box_average", average);
  report.estimates["p_squared"] = p * p;
  report.stderr_["p_squared"] = 0.0;
  report.estimates["excess"] = average.mean() - p * p;
  report.stderr_["excess"] = average.stderr_of_mean();
  return report;
}

EstimatorReport cluster_density_estimator(const std::vector<SetPartition>& samples, int d,
                                          int side, const std::vector<int>& radii) {
  if (samples.empty()) throw DomainError("no samples");
  EstimatorReport report{"cluster_density", samples.size(), 0, {}, {}, samples.size() < 2};
  const long sites = torus_sites(d, side);
  for (int n : radii) {
    const auto box = torus_box(d, side, n);
    Moments density, clusters;
    for (const auto& pi : samples) {
      if (pi.size() != sites) throw DomainError("sample size mismatch");
      const auto origin = pi.label(0);
      std::vector<std::uint32_t> seen;
      double same = 0.0;
      for (std::size_t s : box) {
        same += pi.label(static_cast<int>(s)) == origin;
        seen.push_back(pi.label(static_cast<int>(s)));
      }
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      density.push(same / static_cast<double>(box.size()));
      clusters.push(static_cast<double>(seen.size()) / static_cast<double>(box.size()));
    }
    const std::string tag = "[" + std::to_string(n) + "]";
    record(report, "density" + tag, density);
    record(report, "clusters_per_site" + tag, clusters);
  }
  return report;
}

}  // namespace gdc
