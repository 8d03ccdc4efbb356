#include "gdc/domination.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gdc/chain.hpp"
#include "gdc/errors.hpp"

namespace gdc {

namespace {

// Natural log of a positive big integer without overflowing doubles.
double log_mpz(const mpz_class& z) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

double log_rational(const Rational& q) {
  if (sgn(q) <= 0) return -std::numeric_limits<double>::infinity();
  return log_mpz(q.get_num()) - log_mpz(q.get_den());
}

void check_unit(const Rational& q, const char* name) {
  if (q < 0 || q > 1) throw DomainError(std::string(name) + " must lie in [0,1]");
}

void finish(DominationReport& report, const Rational& lhs, double log_rhs) {
  report.exact = lhs;
  report.lhs = to_double(lhs);
  report.log_lhs = log_rational(lhs);
  report.log_rhs = log_rhs;
  report.rhs = std::exp(log_rhs);
  report.verdict = *report.log_lhs <= log_rhs;
}

}  // namespace

void TailLaw::validate() const {
  Rational total = 0;
  for (const auto& [k, w] : mass) {
    if (w < 0) throw DomainError("tail law has a negative mass");
    total += w;
  }
  if (total > 1) throw DomainError("tail law mass exceeds 1");
}

Rational TailLaw::residual() const {
  Rational total = 0;
  for (const auto& [k, w] : mass) total += w;
  return 1 - total;
}

Rational TailLaw::at_most(long k) const {
  Rational total = 0;
  for (const auto& [j, w] : mass) {
    if (j <= k) total += w;
  }
  return total;
}

Rational TailLaw::at_least(long k) const { return 1 - at_most(k - 1); }

Rational d_paintbox(const PaintBox& pb, const Rational& p) {
  check_probability(p);
  return p * pb.deficit();
}

Rational d_paintbox_limit(const PaintBox& pb) { return pb.deficit(); }

Rational d_mixture(const PaintboxMixture& rho, const Rational& p) {
  check_probability(p);
  if (rho.atoms.empty()) throw DomainError("empty paint-box mixture");
  std::optional<Rational> best;
  for (const auto& [pb, w] : rho.atoms) {
    if (w < 0) throw DomainError("mixture weight is negative");
    if (w == 0) continue;
    const Rational value = d_paintbox(pb, p);
    if (!best || value < *best) best = value;
  }
  if (!best) throw DomainError("paint-box mixture has no positive atom");
  return *best;
}

Rational d_markov(const Rational& s, const Rational& p) {
  check_unit(s, "s");
  check_probability(p);
  return p - p * s;
}

Rational d_markov_limit(const Rational& s) {
  check_unit(s, "s");
  return 1 - s;
}

double finite_window_threshold(const AtomicXi& xi, int n) {
  if (n < 1) throw DomainError("window length must be positive");
  xi.validate();
  Rational sum = 0;
  for (const auto& [s, w] : xi.atoms) sum += w * pow(Rational(1 - s), static_cast<unsigned>(n));
  if (sgn(sum) == 0) return 1.0;
  return -std::expm1(log_rational(sum) / n);
}

double bounded_cluster_bound(int m, const Rational& p) {
  if (m < 1) throw DomainError("cluster bound M must be positive");
  check_probability(p, true);
  if (p == 1) return 1.0;
  return -std::expm1(log_rational(Rational(1 - p)) / m);
}

DominationReport cluster_count_inequality_check(const TailLaw& law, const Rational& p,
                                                const Rational& alpha, int n, int k, int d) {
  law.validate();
  check_probability(p);
  check_unit(alpha, "alpha");
  if (n < 0 || k < 0 || d < 1) throw DomainError("need n >= 0, k >= 0, d >= 1");
  DominationReport report;
  report.quantity = "cluster_count";
  report.inputs = {{"p", to_string(p)},          {"alpha", to_string(alpha)},
                   {"n", std::to_string(n)},     {"k", std::to_string(k)},
                   {"d", std::to_string(d)}};
  const double volume = std::pow(2.0 * n + 1.0, d);
  const double log_rhs =
      (alpha == 1 ? -std::numeric_limits<double>::infinity()
                  : volume * log_rational(Rational(1 - alpha))) -
      k * log_rational(Rational(1 - p));
  finish(report, law.at_most(k), log_rhs);
  return report;
}

ClusterVariant parse_cluster_variant(const std::string& name) {
  if (name == "1d-connected") return ClusterVariant::one_dim_connected;
  if (name == "zd-connected") return ClusterVariant::zd_connected;
  throw DomainError("unknown cluster variant: " + name);
}

DominationReport cluster_size_inequality_check(const TailLaw& law, const Rational& p,
                                               const Rational& alpha, int n, int d,
                                               ClusterVariant variant) {
  law.validate();
  check_probability(p);
  check_unit(alpha, "alpha");
  if (n < 1 || d < 1) throw DomainError("need n >= 1 and d >= 1");
  DominationReport report;
  report.quantity = "cluster_size";
  const bool one_dim = variant == ClusterVariant::one_dim_connected;
  report.inputs = {{"p", to_string(p)},
                   {"alpha", to_string(alpha)},
                   {"n", std::to_string(n)},
                   {"d", std::to_string(d)},
                   {"variant", one_dim ? "1d-connected" : "zd-connected"}};
  const double log_gap = alpha == 1 ? -std::numeric_limits<double>::infinity()
                                    : log_rational(Rational(1 - alpha));
  const double log_q = log_rational(Rational(1 - p));
  double log_rhs;
  if (one_dim) {
    log_rhs = std::log(n + 2.0) - log_q + (2.0 * (n / 2) + 1.0) * log_gap;
  } else {
    log_rhs = n * (d * std::log(7.0) + log_gap) - log_q;
  }
  finish(report, law.at_least(n), log_rhs);
  return report;
}

RERMeasure nodomination_block_rer(int block_n, int window_m) {
  if (block_n < 1) throw DomainError("block length must be positive");
  return periodic_block_window(RERMeasure::delta(SetPartition::full(block_n)), window_m);
}

}  // namespace gdc
