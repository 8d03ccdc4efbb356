#include "doctest.h"

#include <cmath>
#include <set>

#include "gdc/errors.hpp"
#include "gdc/io.hpp"
#include "gdc/sampling.hpp"
#include "gdc/verify.hpp"
#include "gdc/witnesses.hpp"
#include "oracles.hpp"

using namespace gdc;
using oracle::frac;

TEST_CASE("seed derivation separates streams") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(5, 9) == derive_seed(5, 9));
  Rng a(3, 4), b(3, 4);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng r(1, 0);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform_open();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    CHECK(r.below(7) < 7u);
  }
}

TEST_CASE("parallel blocks visit every block once") {
  std::vector<int> hits(37, 0);
  parallel_blocks(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("random-cluster sampler") {
  const FiniteGraph g = FiniteGraph::path(3);
  const auto open = fk_glauber_sampler(g, 1.0, 2.0, 5, 0, 1);
  for (const auto& s : open) CHECK(s.partition == SetPartition::full(3));
  const auto closed = fk_glauber_sampler(g, 0.0, 2.0, 5, 0, 1);
  for (const auto& s : closed) CHECK(s.partition == SetPartition::singletons(3));

  const FiniteGraph edge = FiniteGraph::path(2);
  const auto iid = fk_glauber_sampler(edge, 0.3, 1.0, 20000, 10, 77);
  double together = 0;
  for (const auto& s : iid) together += s.partition.block_count() == 1;
  const double mean = together / iid.size();
  CHECK(std::fabs(mean - 0.3) < 3 * std::sqrt(0.3 * 0.7 / iid.size()) + 1e-3);
  CHECK(fk_glauber_sampler(edge, 0.3, 1.0, 50, 10, 5)[7].partition ==
        fk_glauber_sampler(edge, 0.3, 1.0, 50, 10, 5)[7].partition);
  CHECK_THROWS_AS(fk_glauber_sampler(edge, 0.3, 0.5, 5, 0, 1), DomainError);
}

TEST_CASE("coalescing random walks") {
  const auto start = coalescing_rw_rer(2, 6, 0.0, 1);
  CHECK(start.partition == SetPartition::singletons(36));
  const auto a = coalescing_rw_rer(1, 50, 30.0, 9);
  const auto b = coalescing_rw_rer(1, 50, 30.0, 9);
  CHECK(a.partition == b.partition);
  CHECK(a.partition.block_count() < 50);
  const auto later = coalescing_rw_rer(1, 50, 3000.0, 9);
  CHECK(later.partition.block_count() <= 3);
}

TEST_CASE("random walk range partitions") {
  const auto forward = rwrs_rer(StepLaw::constant({1}), 100, 3);
  CHECK(forward.partition == SetPartition::singletons(100));
  const auto still = rwrs_rer(StepLaw::constant({0}), 100, 3);
  CHECK(still.partition == SetPartition::full(100));
  const auto simple = rwrs_rer(StepLaw::parse("1:0.5;-1:0.5"), 1000, 42);
  for (int t = 1; t < 1000; ++t) CHECK(simple.partition.label(t) <= static_cast<std::uint32_t>(t));
  CHECK(simple.partition.block_count() < 200);
  CHECK(StepLaw::parse("1,0:0.25;-1,0:0.25;0,1:0.25;0,-1:0.25").d == 2);
  CHECK_THROWS_AS(StepLaw::parse("1:0.5;-1:0.4"), DomainError);
  const auto report = range_estimator(StepLaw::simple(1), 10000, 4, 11, 2);
  CHECK(report.estimates.at("R_n/n") < 0.05);
  CHECK(report.n_samples == 4);
}

TEST_CASE("colouring samples") {
  const auto all = color_sample(SetPartition::full(50), 0.5, 1, 0);
  for (auto bit : all) CHECK(bit == all[0]);
  const SetPartition two = SetPartition::from_blocks(2, {{1}, {2}});
  double equal = 0;
  const int reps = 20000;
  for (int i = 0; i < reps; ++i) {
    const auto x = color_sample(two, 0.3, 5, i);
    equal += x[0] == x[1];
  }
  const double target = 0.3 * 0.3 + 0.7 * 0.7;
  CHECK(std::fabs(equal / reps - target) < 3 * std::sqrt(target * (1 - target) / reps));
}

TEST_CASE("pair correlation and ergodicity diagnostics") {
  const int d = 1, side = 40, reps = 400;
  ColorBatch iid, frozen;
  for (int i = 0; i < reps; ++i) {
    iid.push_back(color_sample(SetPartition::singletons(side), 0.5, 2, i));
    frozen.push_back(color_sample(SetPartition::full(side), 0.5, 3, i));
  }
  const auto pairs = pair_correlation_estimator(iid, {{0, 1}, {0, 7}});
  CHECK(std::fabs(pairs.estimates.at("P11[0,1]") - 0.25) < 4 * pairs.stderr_.at("P11[0,1]") + 1e-3);
  const auto mixing = ergodicity_diagnostic(iid, d, side, 5, 0.5);
  CHECK(std::fabs(mixing.estimates.at("excess")) < 0.05);
  const auto stuck = ergodicity_diagnostic(frozen, d, side, 5, 0.5);
  CHECK(stuck.estimates.at("excess") > 0.15);
  CHECK(torus_box(2, 5, 1).size() == 9);
  CHECK_THROWS_AS(torus_box(1, 4, 2), DomainError);
}

TEST_CASE("JSON round trips") {
  const RERMeasure nu = witness::thm_a_nu1();
  CHECK(io::rer_from_json(io::to_json(nu)) == nu);
  const ExchRERMeasure ex = witness::thm_f_nu2();
  CHECK(io::exch_from_json(io::to_json(ex)) == ex);
  const ColorMeasure mu = apply_phi(nu, frac(1, 3));
  CHECK(io::color_from_json(io::to_json(mu)) == mu);
  const PaintBox pb = PaintBox::make({frac(1, 2), frac(1, 4)});
  CHECK(io::paintbox_from_json(io::to_json(pb)) == pb);
  const AtomicXi xi = xi_distribution(pb, frac(1, 2));
  CHECK(io::xi_from_json(io::to_json(xi)) == xi);
  PaintboxMixture rho;
  rho.atoms[pb] = frac(1, 3);
  rho.atoms[PaintBox()] = frac(2, 3);
  CHECK(io::mixture_from_json(io::to_json(rho)) == rho);
  TailLaw law;
  law.mass[1] = frac(1, 4);
  law.mass[3] = frac(1, 2);
  const TailLaw back = io::tail_law_from_json(io::to_json(law));
  CHECK(back.mass == law.mass);
  CHECK(io::to_json(frac(3, 8)) == "3/8");
  CHECK(io::to_json(Rational(0)) == "0/1");
  CHECK_THROWS_AS(io::rer_from_json(io::Json::parse(R"({"kind":"color","n":2,"weights":{}})")), DomainError);
  CHECK_THROWS_AS(io::rational_from_json(io::Json(0.5)), DomainError);
}

TEST_CASE("CSV writers") {
  const EdgeWindowLaw law = ising_edge_window_law(IsingChain{0.0, {0.0}});
  CHECK(io::edge_law_csv(law).rfind("config,probability\n", 0) == 0);
  const std::string csv = io::colors_csv({{1, 0, 1}}, "seed=1");
  CHECK(csv == "# seed=1\nconfig\n101\n");
}

TEST_CASE("verification suites are registered") {
  const auto names = suite_names();
  const std::set<std::string> set(names.begin(), names.end());
  for (const char* name : {"kernel-table", "witnesses", "n3-roundtrip", "domination-oracle",
                           "domination-formulas", "couplings", "chains", "exchangeable",
                           "counterexamples", "samplers", "trivial-iid"}) {
    CHECK(set.count(name) == 1);
  }
  CHECK(is_suite("all"));
  CHECK_FALSE(is_suite("nope"));
  const auto trivial = run_suite("trivial-iid");
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].passed());
}
