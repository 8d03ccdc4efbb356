#include "gdc/measures.hpp"

#include <algorithm>
#include <bit>

#include "gdc/errors.hpp"

namespace gdc {

namespace {

constexpr std::size_t kColorCap = 20;

Rational factorial(int n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

// Number of set partitions of [n] with the given shape.
Rational shape_multiplicity(const IntegerPartition& shape) {
  Rational count = factorial(shape.total());
  std::map<int, int> repeats;
  for (int part : shape.parts) {
    count /= factorial(part);
    ++repeats[part];
  }
  for (auto [part, times] : repeats) count /= factorial(times);
  return count;
}

}  // namespace

std::string config_to_string(Config x, int n) {
  std::string out(n, '0');
  for (int i = 0; i < n; ++i) {
    if (x >> i & 1u) out[i] = '1';
  }
  return out;
}

Config parse_config(const std::string& bits) {
  if (bits.empty() || bits.size() > 31) throw DomainError("bad configuration length");
  Config x = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      x |= Config{1} << i;
    } else if (bits[i] != '0') {
      throw DomainError("configuration must be a bit string: " + bits);
    }
  }
  return x;
}

void check_probability(const Rational& p, bool allow_endpoints) {
  bool ok = allow_endpoints ? (p >= 0 && p <= 1) : (p > 0 && p < 1);
  if (!ok) {
    throw DomainError("probability " + to_string(p) +
                      (allow_endpoints ? " outside [0,1]" : " outside (0,1)"));
  }
}

void RERMeasure::validate() const {
  Rational total = 0;
  for (const auto& [pi, w] : weights) {
    if (pi.size() != n) throw DomainError("partition size does not match measure");
    if (w < 0) throw DomainError("negative weight in RER measure");
    total += w;
  }
  if (total != 1) throw DomainError("RER weights sum to " + to_string(total) + ", not 1");
}

Rational RERMeasure::mass(const SetPartition& pi) const {
  auto it = weights.find(pi);
  return it == weights.end() ? Rational(0) : it->second;
}

void RERMeasure::add(const SetPartition& pi, const Rational& w) {
  if (w == 0) return;
  auto& slot = weights[pi];
  slot += w;
  if (slot == 0) weights.erase(pi);
}

std::vector<SetPartition> RERMeasure::support() const {
  std::vector<SetPartition> out;
  for (const auto& [pi, w] : weights) {
    if (w != 0) out.push_back(pi);
  }
  return out;
}

RERMeasure RERMeasure::delta(const SetPartition& pi) {
  RERMeasure nu;
  nu.n = pi.size();
  nu.weights[pi] = 1;
  return nu;
}

void ExchRERMeasure::validate() const {
  Rational total = 0;
  for (const auto& [shape, w] : weights) {
    if (shape.total() != n) throw DomainError("shape does not partition n");
    if (w < 0) throw DomainError("negative weight in exchangeable measure");
    total += w;
  }
  if (total != 1) throw DomainError("exchangeable weights sum to " + to_string(total));
}

Rational ExchRERMeasure::mass(const IntegerPartition& shape) const {
  auto it = weights.find(shape);
  return it == weights.end() ? Rational(0) : it->second;
}

void ExchRERMeasure::add(const IntegerPartition& shape, const Rational& w) {
  if (w == 0) return;
  auto& slot = weights[shape];
  slot += w;
  if (slot == 0) weights.erase(shape);
}

ExchRERMeasure ExchRERMeasure::delta(const IntegerPartition& shape) {
  ExchRERMeasure nu;
  nu.n = shape.total();
  nu.weights[shape] = 1;
  return nu;
}

ColorMeasure::ColorMeasure(int size) : n(size) {
  if (size < 1) throw DomainError("color measure needs n >= 1");
  check_cap("COLOR_N", kColorCap, static_cast<std::size_t>(size));
  weights.assign(std::size_t{1} << size, Rational(0));
}

void ColorMeasure::validate() const {
  if (weights.size() != (std::size_t{1} << n)) throw DomainError("color measure size mismatch");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw DomainError("negative weight in color measure");
    total += w;
  }
  if (total != 1) throw DomainError("color weights sum to " + to_string(total));
}

RERMeasure mix(const Rational& a, const RERMeasure& first, const RERMeasure& second) {
  if (first.n != second.n) throw DomainError("mixing measures on different sets");
  RERMeasure out;
  out.n = first.n;
  for (const auto& [pi, w] : first.weights) out.add(pi, a * w);
  for (const auto& [pi, w] : second.weights) out.add(pi, (1 - a) * w);
  return out;
}

ColorMeasure mix(const Rational& a, const ColorMeasure& first, const ColorMeasure& second) {
  if (first.n != second.n) throw DomainError("mixing measures on different sets");
  ColorMeasure out(first.n);
  for (std::size_t x = 0; x < out.weights.size(); ++x) {
    out.weights[x] = a * first.weights[x] + (1 - a) * second.weights[x];
  }
  return out;
}

RERMeasure permute(const std::vector<int>& sigma, const RERMeasure& nu) {
  RERMeasure out;
  out.n = nu.n;
  for (const auto& [pi, w] : nu.weights) out.add(apply_permutation(sigma, pi), w);
  return out;
}

ColorMeasure permute(const std::vector<int>& sigma, const ColorMeasure& mu) {
  validate_permutation(sigma, mu.n);
  ColorMeasure out(mu.n);
  for (Config x = 0; x < mu.weights.size(); ++x) {
    Config y = 0;
    for (int i = 0; i < mu.n; ++i) {
      if (x >> i & 1u) y |= Config{1} << (sigma[i] - 1);
    }
    out.weights[y] += mu.weights[x];
  }
  return out;
}

RERMeasure restrict_to(const RERMeasure& nu, const std::vector<int>& subset) {
  RERMeasure out;
  out.n = static_cast<int>(subset.size());
  for (const auto& [pi, w] : nu.weights) out.add(induced_partition(pi, subset), w);
  return out;
}

ColorMeasure restrict_to(const ColorMeasure& mu, const std::vector<int>& subset) {
  ColorMeasure out(static_cast<int>(subset.size()));
  for (Config x = 0; x < mu.weights.size(); ++x) {
    Config y = 0;
    for (std::size_t j = 0; j < subset.size(); ++j) {
      if (x >> (subset[j] - 1) & 1u) y |= Config{1} << j;
    }
    out.weights[y] += mu.weights[x];
  }
  return out;
}

ExchRERMeasure symmetrize(const RERMeasure& nu) {
  ExchRERMeasure out;
  out.n = nu.n;
  for (const auto& [pi, w] : nu.weights) out.add(integer_shape(pi), w);
  return out;
}

RERMeasure expand(const ExchRERMeasure& nu) {
  RERMeasure out;
  out.n = nu.n;
  std::map<IntegerPartition, Rational> share;
  for (const auto& [shape, w] : nu.weights) share[shape] = w / shape_multiplicity(shape);
  for_each_set_partition(nu.n, [&](const SetPartition& pi) {
    auto it = share.find(integer_shape(pi));
    if (it != share.end()) out.add(pi, it->second);
  });
  return out;
}

RERMeasure extend_T(const RERMeasure& nu) {
  RERMeasure out;
  out.n = nu.n + 1;
  for (const auto& [pi, w] : nu.weights) {
    auto rgs = pi.rgs();
    rgs.push_back(static_cast<std::uint32_t>(pi.block_count()));
    out.add(SetPartition(std::move(rgs)), w);
  }
  return out;
}

ExchRERMeasure extend_S(const ExchRERMeasure& nu) {
  ExchRERMeasure out;
  out.n = nu.n + 1;
  for (const auto& [shape, w] : nu.weights) {
    auto parts = shape.parts;
    parts.push_back(1);
    out.add(IntegerPartition(std::move(parts)), w);
  }
  return out;
}

ColorMeasure product_measure(int n, const Rational& p) {
  ColorMeasure mu(n);
  for (Config x = 0; x < mu.weights.size(); ++x) {
    int ones = std::popcount(x);
    mu.weights[x] = pow(p, ones) * pow(1 - p, n - ones);
  }
  return mu;
}

OnesLaw ones_law(const ColorMeasure& mu) {
  OnesLaw law{mu.n, std::vector<Rational>(mu.n + 1, Rational(0))};
  for (Config x = 0; x < mu.weights.size(); ++x) law.weights[std::popcount(x)] += mu.weights[x];
  return law;
}

Rational event_probability(const ColorMeasure& mu, const std::vector<bool>& event) {
  Rational total = 0;
  for (Config x = 0; x < mu.weights.size(); ++x) {
    if (event[x]) total += mu.weights[x];
  }
  return total;
}

Rational pair_covariance(const ColorMeasure& mu, int u, int v) {
  Rational both = 0, first = 0, second = 0;
  for (Config x = 0; x < mu.weights.size(); ++x) {
    bool a = x >> u & 1u, b = x >> v & 1u;
    if (a) first += mu.weights[x];
    if (b) second += mu.weights[x];
    if (a && b) both += mu.weights[x];
  }
  return both - first * second;
}

bool is_01_symmetric(const ColorMeasure& mu) {
  Config all = static_cast<Config>(mu.weights.size() - 1);
  for (Config x = 0; x < mu.weights.size(); ++x) {
    if (mu.weights[x] != mu.weights[all ^ x]) return false;
  }
  return true;
}

}  // namespace gdc
