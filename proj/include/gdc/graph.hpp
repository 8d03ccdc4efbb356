#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gdc/measures.hpp"

namespace gdc {

struct FiniteGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based, stored with first < second

  void validate() const;
  // One "u v" pair per line; '#' starts a comment; vertex count is max label + 1
  // unless a line "vertices K" is present.
  static FiniteGraph parse(const std::string& text);
  std::string to_string() const;

  static FiniteGraph complete(int k);
  static FiniteGraph path(int k);
  static FiniteGraph cycle(int k);
  static FiniteGraph torus(int d, int side);
};

// Component labels of the open-edge subgraph; bit j of open_mask opens edge j.
std::vector<std::uint32_t> open_components(const FiniteGraph& g, std::uint64_t open_mask);

// Cluster law of the random-cluster model, weights alpha^open (1-alpha)^closed q^components.
RERMeasure fk_exact_rer(const FiniteGraph& g, const Rational& alpha, const Rational& q);

// Floating twins used against floating spin laws.
struct FloatRER {
  int n = 0;
  std::vector<std::pair<SetPartition, double>> weights;
};
FloatRER fk_float_rer(const FiniteGraph& g, double alpha, double q);
std::vector<double> apply_phi(const FloatRER& nu, double p);

// Index = Config with bit v set when vertex v is +1 (Ising) or in the first ell states (Potts).
std::vector<double> ising_exact_law(const FiniteGraph& g, double J);
std::vector<double> fuzzy_potts_exact_law(const FiniteGraph& g, double J, int q, int ell);

struct CouplingReport {
  std::string model;
  // Sup-norm deviations for edge parameter 1 - e^{-2J} and 1 - e^{-J}.
  double deviation_two_j = 0.0;
  double deviation_one_j = 0.0;
  // "1-exp(-2J)", "1-exp(-J)", "both" or "none" at tolerance 1e-10.
  std::string matching;
  double deviation() const;
};

CouplingReport coupling_check_fk_ising(const FiniteGraph& g, double J);
CouplingReport coupling_check_fuzzy_potts(const FiniteGraph& g, double J, int q, int ell);

}  // namespace gdc
