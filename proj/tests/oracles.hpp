// Brute-force reference computations used to cross-check the library.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "gdc/graph.hpp"
#include "gdc/measures.hpp"
#include "gdc/paintbox.hpp"
#include "gdc/partition.hpp"
#include "gdc/rng.hpp"

namespace oracle {

using gdc::ColorMeasure;
using gdc::Config;
using gdc::Rational;
using gdc::RERMeasure;
using gdc::SetPartition;

inline Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

// Bell numbers from the Stirling recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline std::uint64_t bell(int n) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  }
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) total += s[n][k];
  return total;
}

// Colour every class independently and accumulate the resulting configurations.
inline ColorMeasure phi(const RERMeasure& nu, const Rational& p) {
  ColorMeasure mu(nu.n);
  for (const auto& [pi, w] : nu.weights) {
    const auto blocks = pi.blocks();
    const std::size_t b = blocks.size();
    for (std::uint32_t colours = 0; colours < (1u << b); ++colours) {
      Rational prob = w;
      Config x = 0;
      for (std::size_t j = 0; j < b; ++j) {
        const bool one = colours >> j & 1u;
        prob *= one ? p : Rational(1 - p);
        if (one) {
          for (int e : blocks[j]) x |= Config{1} << e;
        }
      }
      mu[x] += prob;
    }
  }
  return mu;
}

inline bool is_up_set(const std::vector<bool>& event, int n) {
  for (Config x = 0; x < event.size(); ++x) {
    if (!event[x]) continue;
    for (int i = 0; i < n; ++i) {
      if (!event[x | (Config{1} << i)]) return false;
    }
  }
  return true;
}

// Strassen: lower <= upper iff every up-set has no more mass under lower. Scans all 2^(2^n) events.
inline bool dominates(const ColorMeasure& lower, const ColorMeasure& upper) {
  const std::size_t states = std::size_t{1} << lower.n;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << states); ++bits) {
    std::vector<bool> event(states);
    for (std::size_t x = 0; x < states; ++x) event[x] = bits >> x & 1u;
    if (!is_up_set(event, lower.n)) continue;
    Rational lo = 0, hi = 0;
    for (std::size_t x = 0; x < states; ++x) {
      if (event[x]) {
        lo += lower[x];
        hi += upper[x];
      }
    }
    if (lo > hi) return false;
  }
  return true;
}

// Paint-box law on [n]: every element picks a box or the dust; dust elements are singletons.
inline RERMeasure paintbox(const gdc::PaintBox& pb, int n) {
  const std::size_t k = pb.probs.size();
  const Rational dust = pb.deficit();
  RERMeasure nu;
  nu.n = n;
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    Rational w = 1;
    std::vector<std::uint32_t> labels(n);
    for (int i = 0; i < n; ++i) {
      if (choice[i] < k) {
        w *= pb.probs[choice[i]];
        labels[i] = static_cast<std::uint32_t>(choice[i]);
      } else {
        w *= dust;
        labels[i] = static_cast<std::uint32_t>(k + i);
      }
    }
    if (w != 0) nu.add(SetPartition::from_labels(labels), w);
    int i = 0;
    while (i < n && ++choice[i] == k + 1) choice[i++] = 0;
    if (i == n) break;
  }
  return nu;
}

// Ising law on a graph by summing over all spin assignments (bit i set = spin +1).
inline std::vector<double> ising(const gdc::FiniteGraph& g, double J) {
  const std::size_t states = std::size_t{1} << g.vertices;
  std::vector<double> law(states);
  double total = 0.0;
  for (std::size_t x = 0; x < states; ++x) {
    double e = 0.0;
    for (const auto& [u, v] : g.edges) e += ((x >> u & 1u) == (x >> v & 1u)) ? J : -J;
    law[x] = std::exp(e);
    total += law[x];
  }
  for (double& w : law) w /= total;
  return law;
}

// Random-cluster law by enumerating edge subsets; weight alpha^open (1-alpha)^closed q^components.
inline RERMeasure random_cluster(const gdc::FiniteGraph& g, const Rational& alpha, const Rational& q) {
  const int m = static_cast<int>(g.edges.size());
  RERMeasure nu;
  nu.n = g.vertices;
  Rational total = 0;
  std::map<SetPartition, Rational> raw;
  for (std::uint32_t open = 0; open < (1u << m); ++open) {
    std::vector<std::uint32_t> label(g.vertices);
    for (int v = 0; v < g.vertices; ++v) label[v] = v;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int e = 0; e < m; ++e) {
        if (!(open >> e & 1u)) continue;
        auto [u, v] = g.edges[e];
        const auto low = std::min(label[u], label[v]);
        if (label[u] != low || label[v] != low) {
          label[u] = label[v] = low;
          changed = true;
        }
      }
    }
    const SetPartition pi = SetPartition::from_labels(label);
    Rational w = 1;
    for (int e = 0; e < m; ++e) w *= (open >> e & 1u) ? alpha : Rational(1 - alpha);
    for (int c = 0; c < pi.block_count(); ++c) w *= q;
    raw[pi] += w;
    total += w;
  }
  for (const auto& [pi, w] : raw) nu.add(pi, w / total);
  return nu;
}

// Seeded generators for property tests.
inline Rational random_probability(gdc::Rng& rng, long den = 12) {
  return frac(static_cast<long>(rng.below(den - 1)) + 1, den);
}

inline RERMeasure random_rer(int n, gdc::Rng& rng) {
  const auto all = gdc::enumerate_set_partitions(n);
  RERMeasure nu;
  nu.n = n;
  Rational total = 0;
  std::vector<Rational> w(all.size());
  for (auto& x : w) {
    x = rng.below(3) == 0 ? Rational(0) : Rational(static_cast<long>(rng.below(9)) + 1);
    total += x;
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (w[i] != 0) nu.add(all[i], w[i] / total);
  }
  return nu;
}

inline ColorMeasure random_color(int n, gdc::Rng& rng) {
  ColorMeasure mu(n);
  Rational total = 0;
  for (auto& w : mu.weights) {
    w = static_cast<long>(rng.below(7));
    total += w;
  }
  if (total == 0) {
    mu.weights[0] = 1;
    total = 1;
  }
  for (auto& w : mu.weights) w /= total;
  return mu;
}

}  // namespace oracle
