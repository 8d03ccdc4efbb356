#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdc/domination.hpp"
#include "gdc/measures.hpp"

namespace gdc {

struct MarkovSpec {
  Rational p00, p01, p10, p11;

  void validate() const;
  static MarkovSpec from_jumps(const Rational& p01, const Rational& p10);
};

// (s, p) with s = p11 - p01 and p = p01 / (p01 + p10).
std::pair<Rational, Rational> markov_to_color(const MarkovSpec& spec);
MarkovSpec color_to_markov(const Rational& s, const Rational& p);
// Stationary chain on n consecutive sites.
ColorMeasure markov_window_law(const MarkovSpec& spec, int n);

// Edges between consecutive sites open independently with probability s.
RERMeasure iid_edge_window_rer(const Rational& s, int n);
// Number of classes meeting [-n, n].
TailLaw iid_edge_cluster_count_law(const Rational& s, int n);
// Size of the class of the origin, truncated at max_size (rest in the residual).
TailLaw iid_edge_origin_size_law(const Rational& s, int max_size);

// Nearest-neighbour Ising chain on edge spins; h has one entry per edge.
struct IsingChain {
  double J = 0.0;
  std::vector<double> h;
  int edges() const { return static_cast<int>(h.size()); }
};

// Window [-N, N]: edges e_{i,i+1} for i = -N..N-1 stored at index i + N.
struct IsingEdgeSpec {
  double J = 0.0;
  std::vector<double> h;  // one entry per edge, or a single constant
  int N = 1;
  IsingChain chain() const;
};

// Index bit j set means edge j is +1.
struct EdgeWindowLaw {
  int m = 0;
  std::vector<double> weights;
  std::string config_string(std::uint32_t y) const;  // '+'/'-'
};

EdgeWindowLaw ising_edge_window_law(const IsingChain& chain);
EdgeWindowLaw ising_edge_window_law(const IsingEdgeSpec& spec);
// P(Y(edge) = +1) by transfer matrices; any chain length.
double ising_plus_probability(const IsingChain& chain, int edge);

// Conditional edge law given X(k) = ... = X(l) = 1 versus the field-shifted law;
// window sites 0..n, one field value per edge.
double field_shift_check(double J, const std::vector<double>& h, double p, int k, int l, int n);

struct RunConditional {
  double J = 0.0, h = 0.0, p = 0.0;
  int N = 0;
  std::vector<double> a;
  double min_margin = 0.0;
  // "increasing" (margins above 1e-8), "constant" (within 1e-12), "inconclusive"
  // or "not-increasing".
  std::string verdict;
  bool strictly_increasing() const { return verdict == "increasing"; }
};

// a_k = P(X(0) = 1 | X(1) = ... = X(k) = 1), k = 1..kmax, on the window [-N, N].
RunConditional run_conditional_sequence(double J, double h, double p, int kmax, int N);

// Window law of m consecutive sites when Z is cut into length-b blocks with uniform
// offset and each block carries an independent copy of base.
RERMeasure periodic_block_window(const RERMeasure& base, int window_m);

std::pair<RERMeasure, RERMeasure> differinf_window_measures();

}  // namespace gdc
