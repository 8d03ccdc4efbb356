#pragma once

#include <cstdint>
#include <vector>

#include "gdc/measures.hpp"

namespace gdc {

double normal_cdf(double x);
// Wichura's AS241 (PPND16), relative accuracy about 1e-16.
double normal_quantile(double p);

// CDF of the random density xi of the threshold process 1{sqrt(r) W + sqrt(1-r) U_i >= h}.
double gaussian_xi_cdf(double r, double h, double t);

// Draws of xi itself: 1 - Phi((h - sqrt(r) W) / sqrt(1-r)).
std::vector<double> gaussian_xi_sampler(double r, double h, std::size_t count, std::uint64_t seed,
                                        int jobs = 1);

std::vector<Config> gaussian_threshold_sampler(double r, double h, int n, std::size_t count,
                                               std::uint64_t seed, int jobs = 1);

// Symmetric alpha-stable with characteristic function exp(-|t|^alpha), Chambers-Mallows-Stuck.
class Rng;
double stable_variate(double alpha, Rng& rng);

// X_i = a W + b U_i with b = (1 - a^alpha)^(1/alpha), thresholded at h.
std::vector<Config> stable_threshold_sampler(double alpha, double a, double h, int n,
                                             std::size_t count, std::uint64_t seed, int jobs = 1);

// Samples per independent stream.
inline constexpr std::size_t kSampleBlock = 4096;

}  // namespace gdc
