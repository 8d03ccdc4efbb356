#include "gdc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "gdc/chain.hpp"
#include "gdc/domination.hpp"
#include "gdc/errors.hpp"
#include "gdc/graph.hpp"
#include "gdc/paintbox.hpp"
#include "gdc/phi.hpp"
#include "gdc/rng.hpp"
#include "gdc/sampling.hpp"
#include "gdc/threshold.hpp"
#include "gdc/witnesses.hpp"

namespace gdc {

namespace {

using Suite = std::function<void(SuiteReport&, std::uint64_t, int)>;

void expect(SuiteReport& r, std::string claim, bool pass, std::string detail = "") {
  r.checks.push_back({std::move(claim), pass, std::move(detail)});
}

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

Rational q(long a, long b = 1) { return ratio(a, b); }

Rational random_weight(Rng& rng, int top) { return Rational(static_cast<long>(rng.below(top)) + 1); }

ColorMeasure normalized(ColorMeasure mu) {
  Rational total = 0;
  for (const auto& w : mu.weights) total += w;
  for (auto& w : mu.weights) w /= total;
  return mu;
}

RERMeasure random_rer(int n, Rng& rng) {
  RERMeasure nu;
  nu.n = n;
  std::vector<std::pair<SetPartition, Rational>> raw;
  Rational total = 0;
  for (const auto& pi : enumerate_set_partitions(n)) {
    const Rational w(static_cast<long>(rng.below(10)));
    raw.emplace_back(pi, w);
    total += w;
  }
  if (total == 0) {
    raw.front().second = 1;
    total = 1;
  }
  for (const auto& [pi, w] : raw) nu.add(pi, w / total);
  return nu;
}

ColorMeasure random_symmetric(Rng& rng) {
  ColorMeasure mu(3);
  for (Config x = 0; x < 4; ++x) mu[x] = mu[7 - x] = random_weight(rng, 20);
  return normalized(mu);
}

bool nonneg_covariances(const ColorMeasure& mu) {
  for (int u = 0; u < mu.n; ++u) {
    for (int v = u + 1; v < mu.n; ++v) {
      if (pair_covariance(mu, u, v) < 0) return false;
    }
  }
  return true;
}

bool upset_oracle(const ColorMeasure& lower, const ColorMeasure& upper) {
  for (const auto& up : enumerate_up_sets(lower.n)) {
    if (event_probability(lower, up) > event_probability(upper, up)) return false;
  }
  return true;
}

ColorMeasure push_up(ColorMeasure mu, Rng& rng, int moves) {
  for (int m = 0; m < moves; ++m) {
    const Config x = static_cast<Config>(rng.below(mu.weights.size()));
    const int bit = static_cast<int>(rng.below(mu.n));
    const Config y = x | (Config{1} << bit);
    if (y == x || mu[x] == 0) continue;
    const Rational moved = mu[x] / 2;
    mu[x] -= moved;
    mu[y] += moved;
  }
  return mu;
}

ColorMeasure random_color(int n, Rng& rng) {
  ColorMeasure mu(n);
  for (auto& w : mu.weights) w = Rational(static_cast<long>(rng.below(6)));
  mu.weights[0] += 1;
  return normalized(mu);
}

void kernel_table(SuiteReport& r, std::uint64_t, int) {
  struct Row {
    int n;
    Rational p;
    Space space;
    std::size_t dim;
  };
  const Row rows[] = {{2, q(1, 3), Space::general, 0},      {2, q(1, 2), Space::general, 0},
                      {3, q(1, 2), Space::general, 1},      {3, q(1, 3), Space::general, 0},
                      {4, q(1, 2), Space::general, 7},      {4, q(1, 3), Space::general, 3},
                      {3, q(1, 2), Space::exchangeable, 1}, {4, q(1, 2), Space::exchangeable, 2},
                      {4, q(1, 3), Space::exchangeable, 1}, {5, q(1, 3), Space::exchangeable, 2}};
  for (const auto& row : rows) {
    const KernelBasis basis = kernel(row.n, row.p, row.space);
    expect(r,
           "kernel dimension " + to_string(row.space) + " n=" + std::to_string(row.n) +
               " p=" + to_string(row.p) + " is " + std::to_string(row.dim),
           basis.basis.size() == row.dim, "got " + std::to_string(basis.basis.size()));
  }
  const KernelBasis n3 = kernel(3, q(1, 2), Space::general);
  bool proportional = n3.basis.size() == 1;
  if (proportional) {
    // Reference order: singletons, {12|3}, {1|23}, {13|2}, one class.
    const std::vector<std::pair<std::string, long>> expected = {
        {"RGS:012", 2}, {"RGS:001", -1}, {"RGS:011", -1}, {"RGS:010", -1}, {"RGS:000", 1}};
    auto at = [&](const std::string& label) {
      for (std::size_t i = 0; i < n3.coordinates.size(); ++i) {
        if (n3.coordinates[i] == label) return n3.basis[0][i];
      }
      return Rational(0);
    };
    const Rational scale = at("RGS:012") / 2;
    for (const auto& [label, value] : expected) {
      proportional = proportional && scale != 0 && at(label) == scale * value;
    }
  }
  expect(r, "n=3, p=1/2 kernel is spanned by (2,-1,-1,-1,1)", proportional);
}

void witnesses(SuiteReport& r, std::uint64_t, int) {
  const auto a1 = witness::thm_a_nu1(), a2 = witness::thm_a_nu2();
  const ColorMeasure half = apply_phi(a1, q(1, 2));
  expect(r, "3-point pair has equal images at p=1/2", half == apply_phi(a2, q(1, 2)));
  expect(r, "3-point pair image at p=1/2 starts 1/4, 1/12 and ends 1/4",
         half[0] == q(1, 4) && half[1] == q(1, 12) && half[7] == q(1, 4));
  expect(r, "3-point pair has different images at p=1/3",
         apply_phi(a1, q(1, 3)) != apply_phi(a2, q(1, 3)));
  bool c_equal = true;
  for (long k = 1; k <= 5; ++k) {
    const Rational p = q(k, 6);
    c_equal = c_equal && phi_exch(witness::thm_c_nu1(), p) == phi_exch(witness::thm_c_nu2(p), p);
  }
  expect(r, "exchangeable 4-point pair matched to p has equal images at p=k/6, k=1..5", c_equal);
  expect(r, "rotation-invariant 4-point pair has equal images at n+1 points",
         all_p_equal(witness::thm_e_nu1(), witness::thm_e_nu2()));
  expect(r, "exchangeable 6-point pair has equal images at n+1 points",
         all_p_equal(witness::thm_f_nu1(), witness::thm_f_nu2()));
  expect(r, "rotation-invariant pair differs as measures", witness::thm_e_nu1() != witness::thm_e_nu2());
}

void n3_roundtrip(SuiteReport& r, std::uint64_t seed, int) {
  Rng rng(seed, 3);
  int round_trips = 0, refusals = 0;
  std::string first_failure;
  for (int i = 0; i < 1000; ++i) {
    ColorMeasure mu;
    if (i % 2 == 0) {
      mu = apply_phi(random_rer(3, rng), q(1, 2));
    } else {
      do {
        mu = random_symmetric(rng);
      } while (!nonneg_covariances(mu));
    }
    try {
      const auto rep = represent_n3_half(mu);
      rep.nu.validate();
      if (apply_phi(rep.nu, q(1, 2)) == mu) {
        ++round_trips;
      } else if (first_failure.empty()) {
        first_failure = "image mismatch at sample " + std::to_string(i);
      }
    } catch (const Error& e) {
      if (first_failure.empty()) first_failure = e.what();
    }
  }
  expect(r, "1000 symmetric measures with nonnegative covariances round-trip exactly",
         round_trips == 1000, std::to_string(round_trips) + "/1000 " + first_failure);
  for (int i = 0; i < 1000; ++i) {
    ColorMeasure mu;
    if (i % 2 == 0) {
      do {
        mu = random_symmetric(rng);
      } while (nonneg_covariances(mu));
    } else {
      do {
        mu = random_color(3, rng);
      } while (is_01_symmetric(mu));
    }
    bool refused = !cp_membership(mu, q(1, 2)).has_value();
    try {
      represent_n3_half(mu);
      refused = false;
    } catch (const NotColorProcessError&) {
    }
    refusals += refused;
  }
  expect(r, "1000 measures violating a hypothesis are refused", refusals == 1000,
         std::to_string(refusals) + "/1000");
}

void domination_oracle(SuiteReport& r, std::uint64_t seed, int) {
  Rng rng(seed, 4);
  for (int n = 2; n <= 4; ++n) {
    int agree = 0, positives = 0;
    for (int i = 0; i < 100; ++i) {
      const ColorMeasure lower = random_color(n, rng);
      const ColorMeasure upper =
          i % 2 == 0 ? push_up(lower, rng, 1 + static_cast<int>(rng.below(6))) : random_color(n, rng);
      const bool flow = dominates(lower, upper);
      agree += flow == upset_oracle(lower, upper);
      positives += flow;
    }
    expect(r, "max-flow domination agrees with up-set enumeration on 100 pairs, n=" + std::to_string(n),
           agree == 100, std::to_string(agree) + "/100, " + std::to_string(positives) + " dominated");
  }
}

void domination_formulas(SuiteReport& r, std::uint64_t, int) {
  const Rational grid[] = {q(1, 4), q(1, 2), q(3, 4)};
  int markov_ok = 0;
  for (const auto& s : grid) {
    for (const auto& p : grid) {
      const ColorMeasure window = markov_window_law(color_to_markov(s, p), 8);
      markov_ok += dominates(product_measure(8, d_markov(s, p)), window);
    }
  }
  expect(r, "product measure at p(1-s) is dominated by the Markov window law, n=8, 9 grid points",
         markov_ok == 9, std::to_string(markov_ok) + "/9");
  int box_ok = 0;
  const PaintBox boxes[] = {PaintBox({q(1, 2)}), PaintBox({q(1, 2), q(1, 4)})};
  const Rational ps[] = {q(1, 3), q(1, 2), q(2, 3)};
  for (const auto& pb : boxes) {
    for (const auto& p : ps) {
      box_ok += dominates(product_measure(8, d_paintbox(pb, p)), marginal_color_measure(pb, p, 8));
    }
  }
  expect(r, "product measure at p times deficit is dominated by the paint-box window, n=8",
         box_ok == 6, std::to_string(box_ok) + "/6");
  const AtomicXi xi = xi_distribution(PaintBox({q(1, 2), q(1, 4)}), q(1, 2));
  bool monotone = true;
  double previous = finite_window_threshold(xi, 1);
  for (int n = 2; n <= 64; ++n) {
    const double value = finite_window_threshold(xi, n);
    monotone = monotone && value <= previous + 1e-15;
    previous = value;
  }
  expect(r, "finite-window threshold is non-increasing in n up to 64", monotone);
  expect(r, "finite-window threshold at n=64 is within 0.02 of the limit 1/8",
         std::fabs(previous - 0.125) < 0.02, fmt(previous));
}

void couplings(SuiteReport& r, std::uint64_t, int) {
  for (const auto& [name, g] : {std::pair{"K3", FiniteGraph::complete(3)},
                                std::pair{"P4", FiniteGraph::path(4)}}) {
    for (double J : {0.2, 0.5, 1.0}) {
      const CouplingReport c = coupling_check_fk_ising(g, J);
      expect(r, std::string("FK-Ising coupling on ") + name + " at J=" + fmt(J),
             c.deviation_two_j <= 1e-10,
             "deviation " + fmt(c.deviation_two_j) + ", matching " + c.matching);
    }
  }
  for (int ell : {1, 2}) {
    for (double J : {0.2, 0.5, 1.0}) {
      const CouplingReport c = coupling_check_fuzzy_potts(FiniteGraph::complete(3), J, 3, ell);
      expect(r, "fuzzy Potts coupling on the triangle, q=3, l=" + std::to_string(ell) + ", J=" + fmt(J),
             c.deviation() <= 1e-10, "deviation " + fmt(c.deviation()) + ", matching " + c.matching);
    }
  }
}

void chains(SuiteReport& r, std::uint64_t, int) {
  const Rational grid[] = {q(1, 4), q(1, 2), q(3, 4)};
  int equal = 0, total = 0;
  for (const auto& s : grid) {
    for (const auto& p : grid) {
      for (int n = 1; n <= 10; ++n) {
        ++total;
        equal += apply_phi(iid_edge_window_rer(s, n), p) == markov_window_law(color_to_markov(s, p), n);
      }
    }
  }
  expect(r, "i.i.d.-edge colour window equals the Markov window law, n<=10, 3x3 grid",
         equal == total, std::to_string(equal) + "/" + std::to_string(total));
  double worst = 0.0;
  for (double J : {0.0, 0.5, 1.0}) {
    for (double p : {0.25, 0.5, 0.75}) {
      for (int n = 1; n <= 8; ++n) {
        std::vector<double> h(n);
        for (int j = 0; j < n; ++j) h[j] = 0.1 * (j % 3) - 0.1;
        for (int k = 0; k <= n; ++k) {
          for (int l = k; l <= n; ++l) worst = std::max(worst, field_shift_check(J, h, p, k, l, n));
        }
      }
    }
  }
  expect(r, "field-shift identity within 1e-10 over J, p grid and n<=8", worst <= 1e-10,
         "max deviation " + fmt(worst));
  const RunConditional run = run_conditional_sequence(0.5, 0.0, 0.5, 6, 12);
  expect(r, "run conditionals strictly increasing for J=1/2, h=0, p=1/2", run.strictly_increasing(),
         "min margin " + fmt(run.min_margin));
  const RunConditional flat = run_conditional_sequence(0.0, 0.0, 0.5, 6, 12);
  double spread = 0.0;
  for (double a : flat.a) spread = std::max(spread, std::fabs(a - flat.a.front()));
  expect(r, "run conditionals constant within 1e-12 for J=0", spread <= 1e-12, fmt(spread));
  const RunConditional wide = run_conditional_sequence(0.5, 0.0, 0.5, 6, 16);
  double drift = 0.0;
  for (std::size_t i = 0; i < run.a.size(); ++i) drift = std::max(drift, std::fabs(run.a[i] - wide.a[i]));
  expect(r, "window N=12 and N=16 agree within 1e-9", drift < 1e-9, fmt(drift));
}

void exchangeable(SuiteReport& r, std::uint64_t seed, int) {
  Rng rng(seed, 8);
  int split_ok = 0;
  for (int i = 0; i < 50; ++i) {
    // p1 >= p2 > 0 with p1 + p2 <= 1.
    const long den = 2 + static_cast<long>(rng.below(30));
    const long b = 1 + static_cast<long>(rng.below(den / 2));
    const long a = b + static_cast<long>(rng.below(den - 2 * b + 1));
    split_ok += split_identity_check(q(a, den), q(b, den), 6);
  }
  expect(r, "split identity holds for 50 random paint-box pairs at n=6", split_ok == 50,
         std::to_string(split_ok) + "/50");
  const AtomicXi xi = xi_distribution(PaintBox({q(1, 2), q(1, 4)}), q(1, 2));
  const AtomicXi expected{{{q(1, 8), q(1, 4)}, {q(3, 8), q(1, 4)}, {q(5, 8), q(1, 4)}, {q(7, 8), q(1, 4)}}};
  expect(r, "mixing law of (1/2,1/4) at p=1/2 is uniform on 1/8,3/8,5/8,7/8", xi == expected);
  const SimpleMixture mixture = mainp12_decompose(xi);
  expect(r, "symmetric mixing law decomposes into one-box paint-boxes and reproduces its marginal",
         marginal_color_measure(mixture, q(1, 2), 6) == marginal_color_measure(xi, 6));
  const auto [rho, rho_prime] = unprop_witness(q(1, 4), q(3, 4));
  expect(r, "two-point mixture witness is equal at p=1/2, n=6",
         marginal_color_measure(rho, q(1, 2), 6) == marginal_color_measure(rho_prime, q(1, 2), 6));
  expect(r, "two-point mixture witness differs at p=1/3, n=6",
         marginal_color_measure(rho, q(1, 3), 6) != marginal_color_measure(rho_prime, q(1, 3), 6));
  for (const PaintBox& target :
       {PaintBox({q(1, 2)}), PaintBox({q(1, 2), q(1, 4)}), PaintBox({q(1, 4), q(1, 4), q(1, 4)})}) {
    const UniquenessAudit audit = uniqueness_audit(target, q(2, 3));
    expect(r, "paint-box " + target.to_string() + " is unique at p=2/3", audit.unique,
           "family " + audit.family + ", " + std::to_string(audit.candidates.size()) + " candidates");
  }
}

void counterexamples(SuiteReport& r, std::uint64_t, int) {
  const ColorMeasure mu = apply_phi(witness::posass4(), q(1, 2));
  std::vector<bool> a(16), b(16), both(16);
  for (Config x = 0; x < 16; ++x) {
    a[x] = (x & 3u) == 3u;
    b[x] = (x & 12u) == 12u;
    both[x] = a[x] && b[x];
  }
  expect(r, "4-point example has P(A)=P(B)=3/8 and P(A and B)=1/8",
         event_probability(mu, a) == q(3, 8) && event_probability(mu, b) == q(3, 8) &&
             event_probability(mu, both) == q(1, 8));
  expect(r, "4-point example is not positively associated", !positive_association_check(mu).associated);
  for (int n = 4; n <= 6; ++n) {
    const ColorMeasure level = witness::level_measure(n);
    expect(r, "level measure covariance is 1/4 - 1/n at n=" + std::to_string(n),
           pair_covariance(level, 0, 1) == q(1, 4) - q(1, n));
  }
  expect(r, "level measure at n=4 is not a colour process at p=1/2",
         !cp_membership(witness::level_measure(4), q(1, 2)).has_value());
  const auto [nu3, nu4] = differinf_window_measures();
  expect(r, "block-window pair is equal at p=1/2", apply_phi(nu3, q(1, 2)) == apply_phi(nu4, q(1, 2)));
  expect(r, "block-window pair differs at p=1/3", apply_phi(nu3, q(1, 3)) != apply_phi(nu4, q(1, 3)));
}

void samplers(SuiteReport& r, std::uint64_t seed, int jobs) {
  auto draws = gaussian_xi_sampler(0.5, 0.0, 100000, seed, jobs);
  std::sort(draws.begin(), draws.end());
  double ks = 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const double n = static_cast<double>(draws.size());
    ks = std::max({ks, std::fabs((i + 1) / n - draws[i]), std::fabs(draws[i] - i / n)});
  }
  expect(r, "Gaussian threshold mixing law is uniform: KS < 0.01 at 1e5 draws", ks < 0.01, fmt(ks));

  const auto configs = gaussian_threshold_sampler(0.5, 0.0, 4, 100000, seed + 1, jobs);
  std::vector<double> empirical(16, 0.0);
  for (Config x : configs) empirical[x] += 1.0 / static_cast<double>(configs.size());
  const ColorMeasure dyadic = marginal_color_measure(PaintBox::dyadic(20), q(1, 2), 4);
  double tv = 0.0;
  for (Config x = 0; x < 16; ++x) tv += std::fabs(empirical[x] - to_double(dyadic[x])) / 2.0;
  expect(r, "Gaussian threshold n=4 marginal within 0.01 TV of the dyadic paint-box", tv < 0.01,
         fmt(tv));

  const FiniteGraph g = FiniteGraph::parse("0 1\n1 2\n2 3\n3 0\n0 2\n");
  const long sweeps = 100000, batches = 100;
  const auto samples = fk_glauber_sampler(g, 0.5, 2.0, sweeps, 1000, seed + 2);
  const RERMeasure exact = fk_exact_rer(g, q(1, 2), q(2));
  int within = 0;
  for (const auto& [pi, w] : exact.weights) {
    // Batch means absorb the autocorrelation of the chain.
    std::vector<double> means(batches, 0.0);
    for (long i = 0; i < sweeps; ++i) means[i * batches / sweeps] += (samples[i].partition == pi);
    double mean = 0.0;
    for (double& m : means) mean += (m /= static_cast<double>(sweeps / batches)) / batches;
    double var = 0.0;
    for (double m : means) var += (m - mean) * (m - mean) / (batches - 1);
    const double se = std::sqrt(var / batches);
    within += std::fabs(mean - to_double(w)) <= 3.0 * se + 1e-12;
  }
  expect(r, "FK heat-bath partition frequencies within 3 SE of the exact law at 1e5 sweeps",
         within == static_cast<int>(exact.weights.size()),
         std::to_string(within) + "/" + std::to_string(exact.weights.size()));

  const EstimatorReport range = range_estimator(StepLaw::simple(1), 1000000, 1, seed + 3, jobs);
  expect(r, "simple walk range ratio below 0.01 at n=1e6", range.estimates.at("R_n/n") < 0.01,
         fmt(range.estimates.at("R_n/n")));

  const int reps = 16;
  std::vector<SetPartition> voter(reps);
  parallel_blocks(reps, jobs, [&](std::size_t i) {
    voter[i] = coalescing_rw_rer(3, 20, 1000.0, seed + 4, i).partition;
  });
  const EstimatorReport density = cluster_density_estimator(voter, 3, 20, {2, 4, 6});
  const auto& e = density.estimates;
  expect(r, "voter clusters per site decrease over n=2,4,6 in d=3",
         e.at("clusters_per_site[2]") > e.at("clusters_per_site[4]") &&
             e.at("clusters_per_site[4]") > e.at("clusters_per_site[6]"),
         fmt(e.at("clusters_per_site[2]")) + " " + fmt(e.at("clusters_per_site[4]")) + " " +
             fmt(e.at("clusters_per_site[6]")));
  expect(r, "voter origin-cluster density decreases over n=2,4,6 in d=3",
         e.at("density[2]") > e.at("density[4]") && e.at("density[4]") > e.at("density[6]"),
         fmt(e.at("density[2]")) + " " + fmt(e.at("density[4]")) + " " + fmt(e.at("density[6]")));
  std::vector<double> largest;
  for (double horizon : {10.0, 100.0, 1000.0}) {
    const SetPartition pi = coalescing_rw_rer(1, 1000, horizon, seed + 5).partition;
    const auto sizes = pi.block_sizes();
    largest.push_back(*std::max_element(sizes.begin(), sizes.end()) / 1000.0);
  }
  expect(r, "d=1 largest class fraction grows with T in 10,100,1000",
         largest[0] < largest[1] && largest[1] < largest[2],
         fmt(largest[0]) + " " + fmt(largest[1]) + " " + fmt(largest[2]));
}

void trivial_iid(SuiteReport& r, std::uint64_t, int) {
  for (int n = 1; n <= 5; ++n) {
    for (const Rational& p : {q(1, 3), q(1, 2), q(3, 4)}) {
      expect(r, "singletons give the product measure, n=" + std::to_string(n) + " p=" + to_string(p),
             apply_phi(RERMeasure::delta(SetPartition::singletons(n)), p) == product_measure(n, p));
    }
  }
  const ColorMeasure full = apply_phi(RERMeasure::delta(SetPartition::full(4)), q(1, 3));
  expect(r, "one class gives the two constant configurations",
         full[0] == q(2, 3) && full[15] == q(1, 3));
  expect(r, "i.i.d. paint-box dominance value equals p", d_paintbox(PaintBox(), q(7, 10)) == q(7, 10));
}

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> table = {
      {"kernel-table", kernel_table},
      {"witnesses", witnesses},
      {"n3-roundtrip", n3_roundtrip},
      {"domination-oracle", domination_oracle},
      {"domination-formulas", domination_formulas},
      {"couplings", couplings},
      {"chains", chains},
      {"exchangeable", exchangeable},
      {"counterexamples", counterexamples},
      {"samplers", samplers},
      {"trivial-iid", trivial_iid}};
  return table;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, suite] : suites()) out.push_back(name);
  out.push_back("all");
  return out;
}

bool is_suite(const std::string& name) {
  const auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed, int jobs) {
  if (!is_suite(name)) throw DomainError("unknown suite: " + name);
  std::vector<SuiteReport> out;
  for (const auto& [suite_name, suite] : suites()) {
    if (name != "all" && name != suite_name) continue;
    SuiteReport report{suite_name, {}};
    try {
      suite(report, seed, jobs);
    } catch (const Error& e) {
      expect(report, "suite ran without error", false, e.what());
    }
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace gdc
