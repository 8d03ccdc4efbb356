#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gdc/graph.hpp"

namespace gdc {

struct PartitionSample {
  SetPartition partition;
  std::string model;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  long step = 0;  // sweep count or time horizon
};

struct EstimatorReport {
  std::string name;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> estimates;
  std::map<std::string, double> stderr_;
  // Set when fewer than two samples make standard errors meaningless.
  bool insufficient = false;
};

// Random-scan single-edge heat bath for the random-cluster model; one sample per sweep
// (|E| updates) after burn_in sweeps.
std::vector<PartitionSample> fk_glauber_sampler(const FiniteGraph& g, double alpha, double q,
                                                long sweeps, long burn_in, std::uint64_t seed);

// Rate-1 coalescing walkers on the torus (Z/side)^d run to time horizon; sites start
// one walker each and share a class when their walkers have merged.
PartitionSample coalescing_rw_rer(int d, int side, double horizon, std::uint64_t seed,
                                  std::uint64_t stream = 0);

struct StepLaw {
  int d = 1;
  std::vector<std::vector<int>> steps;
  std::vector<double> probs;

  void validate() const;
  static StepLaw simple(int d);
  static StepLaw constant(std::vector<int> step);
  // "dx[,dy..]:prob;..." e.g. "1:0.5;-1:0.5".
  static StepLaw parse(const std::string& text);
};

// Times 0..n-1 share a class when the walk visits the same site.
PartitionSample rwrs_rer(const StepLaw& law, long n, std::uint64_t seed, std::uint64_t stream = 0);
// Mean of R_n / n over replicates.
EstimatorReport range_estimator(const StepLaw& law, long n, int reps, std::uint64_t seed,
                                int jobs = 1);

// Colours each site by an i.i.d. uniform at the least element of its class, thresholded at p.
std::vector<std::uint8_t> color_sample(const SetPartition& pi, double p, std::uint64_t seed,
                                       std::uint64_t stream = 0);
// Uniform field used by color_sample.
std::vector<double> uniform_field(std::size_t sites, std::uint64_t seed, std::uint64_t stream);

using ColorBatch = std::vector<std::vector<std::uint8_t>>;

EstimatorReport pair_correlation_estimator(const ColorBatch& samples,
                                           const std::vector<std::pair<int, int>>& pairs);
// Box average of X(0) X(x) over x in [-n,n]^d on the torus, against p^2.
EstimatorReport ergodicity_diagnostic(const ColorBatch& samples, int d, int side, int n,
                                      double p);
// |pi(0) cap B_n| / |B_n| and C_n / |B_n| for each radius.
EstimatorReport cluster_density_estimator(const std::vector<SetPartition>& samples, int d,
                                          int side, const std::vector<int>& radii);

// Sites of [-n,n]^d around the origin on the torus, row-major indices.
std::vector<std::size_t> torus_box(int d, int side, int n);

}  // namespace gdc
