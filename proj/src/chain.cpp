#include "gdc/chain.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>

#include "gdc/errors.hpp"
#include "gdc/witnesses.hpp"

namespace gdc {

namespace {

void check_unit(const Rational& q, const char* name) {
  if (q < 0 || q > 1) throw DomainError(std::string(name) + " must lie in [0,1]");
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

// Spin value of state index 0/1.
constexpr std::array<double, 2> kSpin = {-1.0, 1.0};

}  // namespace

void MarkovSpec::validate() const {
  for (const Rational* q : {&p00, &p01, &p10, &p11}) check_unit(*q, "transition probability");
  if (p00 + p01 != 1 || p10 + p11 != 1) throw DomainError("transition rows must sum to 1");
}

MarkovSpec MarkovSpec::from_jumps(const Rational& p01, const Rational& p10) {
  MarkovSpec spec{1 - p01, p01, p10, 1 - p10};
  spec.validate();
  return spec;
}

std::pair<Rational, Rational> markov_to_color(const MarkovSpec& spec) {
  spec.validate();
  if (spec.p01 > spec.p11) {
    throw NotColorProcessError("p01 > p11: the chain is negatively correlated");
  }
  if (spec.p01 + spec.p10 == 0) throw DomainError("degenerate chain: p01 + p10 = 0");
  return {spec.p11 - spec.p01, spec.p01 / (spec.p01 + spec.p10)};
}

MarkovSpec color_to_markov(const Rational& s, const Rational& p) {
  check_unit(s, "s");
  check_unit(p, "p");
  const Rational p01 = p - p * s;
  const Rational p11 = s + p - p * s;
  return MarkovSpec{1 - p01, p01, 1 - p11, p11};
}

ColorMeasure markov_window_law(const MarkovSpec& spec, int n) {
  spec.validate();
  if (n < 1) throw DomainError("window length must be positive");
  if (spec.p01 + spec.p10 == 0) throw DomainError("degenerate chain: p01 + p10 = 0");
  const Rational one = spec.p01 / (spec.p01 + spec.p10);
  const Rational step[2][2] = {{spec.p00, spec.p01}, {spec.p10, spec.p11}};
  ColorMeasure mu(n);
  for (Config x = 0; x < mu.weights.size(); ++x) {
    Rational w = (x & 1u) ? one : Rational(1 - one);
    for (int i = 1; i < n && w != 0; ++i) w *= step[x >> (i - 1) & 1u][x >> i & 1u];
    mu.weights[x] = w;
  }
  return mu;
}

RERMeasure iid_edge_window_rer(const Rational& s, int n) {
  check_unit(s, "s");
  if (n < 1) throw DomainError("window length must be positive");
  check_cap("WINDOW_N", 12, static_cast<std::size_t>(n));
  RERMeasure nu;
  nu.n = n;
  const int edges = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << edges); ++mask) {
    std::vector<std::uint32_t> labels(n, 0);
    for (int i = 1; i < n; ++i) labels[i] = labels[i - 1] + ((mask >> (i - 1) & 1u) ? 0 : 1);
    const int open = std::popcount(mask);
    nu.add(SetPartition::from_labels(labels),
           pow(s, static_cast<unsigned>(open)) * pow(Rational(1 - s), static_cast<unsigned>(edges - open)));
  }
  return nu;
}

TailLaw iid_edge_cluster_count_law(const Rational& s, int n) {
  check_unit(s, "s");
  if (n < 0) throw DomainError("window radius must be non-negative");
  const unsigned edges = 2u * static_cast<unsigned>(n);
  TailLaw law;
  for (unsigned closed = 0; closed <= edges; ++closed) {
    const Rational w = binomial(edges, closed) * pow(Rational(1 - s), closed) * pow(s, edges - closed);
    if (w != 0) law.mass[1 + static_cast<long>(closed)] = w;
  }
  return law;
}

TailLaw iid_edge_origin_size_law(const Rational& s, int max_size) {
  check_unit(s, "s");
  if (max_size < 1) throw DomainError("max size must be positive");
  // Open runs to the left and right are independent geometric lengths.
  TailLaw law;
  const Rational gap = (1 - s) * (1 - s);
  for (int m = 1; m <= max_size; ++m) {
    const Rational w = m * pow(s, static_cast<unsigned>(m - 1)) * gap;
    if (w != 0) law.mass[m] = w;
  }
  return law;
}

IsingChain IsingEdgeSpec::chain() const {
  if (N < 1) throw DomainError("window radius N must be at least 1");
  if (J < 0) throw DomainError("coupling J must be non-negative");
  const std::size_t edges = 2 * static_cast<std::size_t>(N);
  IsingChain out{J, {}};
  if (h.size() == 1) {
    out.h.assign(edges, h[0]);
  } else if (h.size() == edges) {
    out.h = h;
  } else {
    throw DomainError("field needs one value per edge of the window");
  }
  return out;
}

std::string EdgeWindowLaw::config_string(std::uint32_t y) const {
  std::string out(m, '-');
  for (int j = 0; j < m; ++j) {
    if (y >> j & 1u) out[j] = '+';
  }
  return out;
}

EdgeWindowLaw ising_edge_window_law(const IsingChain& chain) {
  const int m = chain.edges();
  if (m < 1) throw DomainError("chain needs at least one edge");
  check_cap("ISING_EDGES", 20, static_cast<std::size_t>(m));
  EdgeWindowLaw law;
  law.m = m;
  law.weights.resize(std::size_t{1} << m);
  std::vector<double> energy(law.weights.size());
  double top = -HUGE_VAL;
  for (std::uint32_t y = 0; y < law.weights.size(); ++y) {
    double e = 0.0;
    for (int j = 0; j < m; ++j) {
      const double spin = kSpin[y >> j & 1u];
      e += chain.h[j] * spin;
      if (j + 1 < m) e += chain.J * spin * kSpin[y >> (j + 1) & 1u];
    }
    energy[y] = e;
    top = std::max(top, e);
  }
  double total = 0.0;
  for (std::size_t y = 0; y < energy.size(); ++y) {
    law.weights[y] = std::exp(energy[y] - top);
    total += law.weights[y];
  }
  for (double& w : law.weights) w /= total;
  return law;
}

EdgeWindowLaw ising_edge_window_law(const IsingEdgeSpec& spec) {
  return ising_edge_window_law(spec.chain());
}

double ising_plus_probability(const IsingChain& chain, int edge) {
  const int m = chain.edges();
  if (edge < 0 || edge >= m) throw DomainError("edge index outside the chain");
  // Factors rescaled by e^{-J} and e^{-|h|} to keep them in (0,1].
  auto couple = [&](int a, int b) { return a == b ? 1.0 : std::exp(-2.0 * chain.J); };
  auto field = [&](int j, int a) {
    return std::exp(chain.h[j] * kSpin[a] - std::fabs(chain.h[j]));
  };
  std::array<double, 2> forward = {field(0, 0), field(0, 1)};
  for (int j = 1; j <= edge; ++j) {
    std::array<double, 2> next{};
    for (int a = 0; a < 2; ++a) {
      next[a] = field(j, a) * (forward[0] * couple(0, a) + forward[1] * couple(1, a));
    }
    const double norm = next[0] + next[1];
    forward = {next[0] / norm, next[1] / norm};
  }
  std::array<double, 2> backward = {1.0, 1.0};
  for (int j = m - 2; j >= edge; --j) {
    std::array<double, 2> next{};
    for (int a = 0; a < 2; ++a) {
      next[a] = couple(a, 0) * field(j + 1, 0) * backward[0] +
                couple(a, 1) * field(j + 1, 1) * backward[1];
    }
    const double norm = next[0] + next[1];
    backward = {next[0] / norm, next[1] / norm};
  }
  const double plus = forward[1] * backward[1];
  return plus / (plus + forward[0] * backward[0]);
}

double field_shift_check(double J, const std::vector<double>& h, double p, int k, int l, int n) {
  if (n < 1) throw DomainError("window needs at least one edge");
  check_cap("FIELD_SHIFT_N", 10, static_cast<std::size_t>(n));
  if (k < 0 || k > l || l > n) throw DomainError("need 0 <= k <= l <= n");
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("p must lie in (0,1]");
  if (J < 0) throw DomainError("coupling J must be non-negative");
  IsingChain chain{J, {}};
  if (h.size() == 1) {
    chain.h.assign(n, h[0]);
  } else if (static_cast<int>(h.size()) == n) {
    chain.h = h;
  } else {
    throw DomainError("field needs one value per edge of the window");
  }
  const EdgeWindowLaw base = ising_edge_window_law(chain);
  std::vector<double> conditional(base.weights.size());
  double total = 0.0;
  for (std::uint32_t y = 0; y < base.weights.size(); ++y) {
    // Sites 0..n labelled by cluster; classes meeting [k,l] are the labels in that range.
    std::vector<int> label(n + 1, 0);
    for (int i = 1; i <= n; ++i) label[i] = label[i - 1] + ((y >> (i - 1) & 1u) ? 0 : 1);
    std::vector<int> seen(label.begin() + k, label.begin() + l + 1);
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    conditional[y] = base.weights[y] * std::pow(p, static_cast<double>(seen.size()));
    total += conditional[y];
  }
  IsingChain shifted = chain;
  for (int j = k; j < l; ++j) shifted.h[j] -= std::log(p) / 2.0;
  const EdgeWindowLaw target = ising_edge_window_law(shifted);
  double deviation = 0.0;
  for (std::size_t y = 0; y < conditional.size(); ++y) {
    deviation = std::max(deviation, std::fabs(conditional[y] / total - target.weights[y]));
  }
  return deviation;
}

RunConditional run_conditional_sequence(double J, double h, double p, int kmax, int N) {
  if (N < 1 || kmax < 1 || kmax > N) throw DomainError("need 1 <= kmax <= N");
  if (J < 0) throw DomainError("coupling J must be non-negative");
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("p must lie in (0,1]");
  RunConditional out{J, h, p, N, {}, 0.0, ""};
  const int origin_edge = N;  // e_{0,1}
  for (int k = 1; k <= kmax; ++k) {
    IsingChain chain{J, std::vector<double>(2 * static_cast<std::size_t>(N), h)};
    for (int i = 1; i < k; ++i) chain.h[origin_edge + i] -= std::log(p) / 2.0;
    out.a.push_back(p + (1.0 - p) * ising_plus_probability(chain, origin_edge));
  }
  double spread = 0.0;
  out.min_margin = HUGE_VAL;
  for (std::size_t i = 1; i < out.a.size(); ++i) {
    const double diff = out.a[i] - out.a[i - 1];
    out.min_margin = std::min(out.min_margin, diff);
    spread = std::max(spread, std::fabs(diff));
  }
  if (out.a.size() < 2) {
    out.min_margin = 0.0;
    out.verdict = "inconclusive";
  } else if (spread <= 1e-12) {
    out.verdict = "constant";
  } else if (out.min_margin > 1e-8) {
    out.verdict = "increasing";
  } else if (out.min_margin > -1e-8) {
    out.verdict = "inconclusive";
  } else {
    out.verdict = "not-increasing";
  }
  return out;
}

RERMeasure periodic_block_window(const RERMeasure& base, int window_m) {
  base.validate();
  if (window_m < 1) throw DomainError("window length must be positive");
  check_cap("WINDOW_N", 12, static_cast<std::size_t>(window_m));
  const int b = base.n;
  RERMeasure out;
  out.n = window_m;
  for (int offset = 0; offset < b; ++offset) {
    // Window sites grouped by the block they fall into, with 1-based positions inside it.
    std::vector<std::vector<int>> positions;
    int current = -1;
    for (int x = 0; x < window_m; ++x) {
      const int block = (x + offset) / b;
      if (block != current) {
        positions.emplace_back();
        current = block;
      }
      positions.back().push_back((x + offset) % b + 1);
    }
    std::vector<RERMeasure> pieces;
    for (const auto& pos : positions) pieces.push_back(restrict_to(base, pos));
    std::vector<std::uint32_t> labels;
    std::function<void(std::size_t, std::uint32_t, const Rational&)> recurse =
        [&](std::size_t piece, std::uint32_t next_label, const Rational& weight) {
          if (piece == pieces.size()) {
            out.add(SetPartition::from_labels(labels), weight / b);
            return;
          }
          for (const auto& [pi, w] : pieces[piece].weights) {
            const std::size_t mark = labels.size();
            for (int i = 0; i < pi.size(); ++i) labels.push_back(next_label + pi.label(i));
            recurse(piece + 1, next_label + static_cast<std::uint32_t>(pi.block_count()),
                    weight * w);
            labels.resize(mark);
          }
        };
    recurse(0, 0, Rational(1));
  }
  return out;
}

std::pair<RERMeasure, RERMeasure> differinf_window_measures() {
  return {periodic_block_window(witness::thm_a_nu1(), 6),
          periodic_block_window(witness::thm_a_nu2(), 6)};
}

}  // namespace gdc
