// Acceptance runner: one PASS/FAIL line per criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gdc/graph.hpp"
#include "gdc/phi.hpp"
#include "gdc/verify.hpp"
#include "gdc/witnesses.hpp"
#include "oracles.hpp"

using namespace gdc;
using oracle::frac;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

void suite(Outcome& out, const std::string& name) {
  for (const auto& report : run_suite(name)) {
    for (const auto& check : report.checks) {
      out.require(check.pass, name + ": " + check.claim + (check.detail.empty() ? "" : " (" + check.detail + ")"));
    }
  }
}

// Kernel vectors must annihilate the brute-force colouring map column by column.
bool in_kernel(const KernelBasis& basis, int n, const Rational& p) {
  const PartitionIndex index(n);
  for (const auto& v : basis.basis) {
    ColorMeasure total(n);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      const ColorMeasure column = oracle::phi(RERMeasure::delta(index.at(i)), p);
      for (Config x = 0; x < total.weights.size(); ++x) total[x] += v[i] * column[x];
    }
    for (const auto& w : total.weights) {
      if (w != 0) return false;
    }
  }
  return true;
}

Outcome kernel_table() {
  Outcome out;
  suite(out, "kernel-table");
  for (const auto& [n, p] : std::vector<std::pair<int, Rational>>{{3, frac(1, 2)}, {4, frac(1, 2)}, {4, frac(1, 3)}}) {
    out.require(in_kernel(kernel(n, p, Space::general), n, p), "brute-force kernel check n=" + std::to_string(n));
  }
  return out;
}

Outcome witness_equalities() {
  Outcome out;
  suite(out, "witnesses");
  const ColorMeasure a1 = oracle::phi(witness::thm_a_nu1(), frac(1, 2));
  out.require(a1 == oracle::phi(witness::thm_a_nu2(), frac(1, 2)), "brute-force 3-point equality");
  out.require(a1[7] == frac(1, 4) && a1[0] == frac(1, 4) && a1[1] == frac(1, 12), "value vector");
  out.require(oracle::phi(witness::thm_a_nu1(), frac(1, 3)) != oracle::phi(witness::thm_a_nu2(), frac(1, 3)),
              "brute-force 3-point inequality at 1/3");
  for (long k = 1; k <= 6; ++k) {
    const Rational p = frac(k, 7);
    out.require(oracle::phi(witness::thm_e_nu1(), p) == oracle::phi(witness::thm_e_nu2(), p),
                "brute-force rotation pair at p=" + to_string(p));
  }
  return out;
}

Outcome n3_roundtrip() {
  Outcome out;
  suite(out, "n3-roundtrip");
  return out;
}

Outcome domination_oracle() {
  Outcome out;
  suite(out, "domination-oracle");
  Rng rng(4, 4);
  for (int i = 0; i < 30; ++i) {
    const ColorMeasure a = oracle::random_color(2, rng), b = oracle::random_color(2, rng);
    out.require(dominates(a, b) == oracle::dominates(a, b), "exhaustive event scan at n=2");
  }
  return out;
}

Outcome domination_formulas() {
  Outcome out;
  suite(out, "domination-formulas");
  return out;
}

Outcome couplings() {
  Outcome out;
  suite(out, "couplings");
  for (double J : {0.2, 0.5, 1.0}) {
    for (const FiniteGraph& g : {FiniteGraph::complete(3), FiniteGraph::path(4)}) {
      const auto direct = oracle::ising(g, J);
      const auto law = ising_exact_law(g, J);
      double gap = 0.0;
      for (std::size_t x = 0; x < law.size(); ++x) gap = std::max(gap, std::fabs(law[x] - direct[x]));
      out.require(gap < 1e-12, "spin enumeration cross-check");
    }
  }
  return out;
}

Outcome chains() {
  Outcome out;
  suite(out, "chains");
  return out;
}

Outcome exchangeable() {
  Outcome out;
  suite(out, "exchangeable");
  const PaintBox pb = PaintBox::make({frac(1, 2), frac(1, 4)});
  out.require(paintbox_rer_on_n(pb, 5) == oracle::paintbox(pb, 5), "box-assignment enumeration at n=5");
  return out;
}

Outcome counterexamples() {
  Outcome out;
  suite(out, "counterexamples");
  return out;
}

Outcome samplers() {
  Outcome out;
  suite(out, "samplers");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"kernel dimension table", kernel_table},
      {"witness equalities", witness_equalities},
      {"n=3 characterization round-trip", n3_roundtrip},
      {"domination oracle soundness", domination_oracle},
      {"domination formulas", domination_formulas},
      {"coupling identities", couplings},
      {"chain identities", chains},
      {"exchangeable identities", exchangeable},
      {"counterexample fixtures", counterexamples},
      {"sampler statistics", samplers},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !outcome.pass;
    std::printf("%s criterion %zu: %s (%.2fs)%s%s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), seconds, outcome.pass ? "" : " -- ", outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
