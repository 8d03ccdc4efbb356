#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdc/paintbox.hpp"

namespace gdc {

// Law of an integer cluster statistic; missing mass sits at +infinity.
struct TailLaw {
  std::map<long, Rational> mass;

  void validate() const;
  Rational residual() const;
  Rational at_most(long k) const;
  Rational at_least(long k) const;
};

struct DominationReport {
  std::string quantity;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<Rational> exact;
  std::optional<double> approx;
  double tol = 1e-12;
  // Bound sides, natural logs kept so tiny values still compare.
  std::optional<double> lhs, rhs, log_lhs, log_rhs;
  // lhs <= rhs when sides are present.
  std::optional<bool> verdict;
  bool refuted() const { return verdict.has_value() && !*verdict; }
};

Rational d_paintbox(const PaintBox& pb, const Rational& p);
// Limit p -> 1.
Rational d_paintbox_limit(const PaintBox& pb);
Rational d_mixture(const PaintboxMixture& rho, const Rational& p);
Rational d_markov(const Rational& s, const Rational& p);
Rational d_markov_limit(const Rational& s);

// 1 - (sum_a w_a (1 - s_a)^n)^(1/n).
double finite_window_threshold(const AtomicXi& xi, int n);
// 1 - (1-p)^(1/M).
double bounded_cluster_bound(int m, const Rational& p);

// lhs = P(C_n <= k), rhs = (1-alpha)^((2n+1)^d) / (1-p)^k.
DominationReport cluster_count_inequality_check(const TailLaw& law, const Rational& p,
                                                const Rational& alpha, int n, int k, int d);

enum class ClusterVariant { one_dim_connected, zd_connected };
ClusterVariant parse_cluster_variant(const std::string& name);

// lhs = P(|pi(0)| >= n); rhs = (n+2)/(1-p) (1-alpha)^(2 floor(n/2)+1) or (7^d (1-alpha))^n / (1-p).
DominationReport cluster_size_inequality_check(const TailLaw& law, const Rational& p,
                                               const Rational& alpha, int n, int d,
                                               ClusterVariant variant);

// Window law of the block partition of Z into intervals of length block_n, uniformly offset.
RERMeasure nodomination_block_rer(int block_n, int window_m);

}  // namespace gdc
