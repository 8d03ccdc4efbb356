#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gdc/partition.hpp"
#include "gdc/rational.hpp"

namespace gdc {

// Configurations of {0,1}^n are bit masks: bit i holds element i+1.
using Config = std::uint32_t;

std::string config_to_string(Config x, int n);  // element 1 leftmost
Config parse_config(const std::string& bits);

struct RERMeasure {
  int n = 0;
  std::map<SetPartition, Rational> weights;

  void validate() const;
  Rational mass(const SetPartition& pi) const;
  void add(const SetPartition& pi, const Rational& w);
  std::vector<SetPartition> support() const;

  static RERMeasure delta(const SetPartition& pi);
  friend bool operator==(const RERMeasure&, const RERMeasure&) = default;
};

struct ExchRERMeasure {
  int n = 0;
  std::map<IntegerPartition, Rational> weights;

  void validate() const;
  Rational mass(const IntegerPartition& shape) const;
  void add(const IntegerPartition& shape, const Rational& w);

  static ExchRERMeasure delta(const IntegerPartition& shape);
  friend bool operator==(const ExchRERMeasure&, const ExchRERMeasure&) = default;
};

struct ColorMeasure {
  int n = 0;
  std::vector<Rational> weights;  // indexed by Config, size 2^n

  ColorMeasure() = default;
  explicit ColorMeasure(int n);

  void validate() const;
  const Rational& operator[](Config x) const { return weights[x]; }
  Rational& operator[](Config x) { return weights[x]; }
  friend bool operator==(const ColorMeasure&, const ColorMeasure&) = default;
};

struct OnesLaw {
  int n = 0;
  std::vector<Rational> weights;  // probability of exactly k ones

  friend bool operator==(const OnesLaw&, const OnesLaw&) = default;
};

using SignedVector = std::vector<Rational>;

void check_probability(const Rational& p, bool allow_endpoints = false);

// Mixtures and transports.
RERMeasure mix(const Rational& a, const RERMeasure& first, const RERMeasure& second);
ColorMeasure mix(const Rational& a, const ColorMeasure& first, const ColorMeasure& second);
RERMeasure permute(const std::vector<int>& sigma, const RERMeasure& nu);
ColorMeasure permute(const std::vector<int>& sigma, const ColorMeasure& mu);
RERMeasure restrict_to(const RERMeasure& nu, const std::vector<int>& subset);
ColorMeasure restrict_to(const ColorMeasure& mu, const std::vector<int>& subset);

// Shape law of nu.
ExchRERMeasure symmetrize(const RERMeasure& nu);
// Spreads each shape uniformly over the set partitions with that shape.
RERMeasure expand(const ExchRERMeasure& nu);

// n+1 joins as a singleton.
RERMeasure extend_T(const RERMeasure& nu);
// Each shape gains a part of size 1.
ExchRERMeasure extend_S(const ExchRERMeasure& nu);

ColorMeasure product_measure(int n, const Rational& p);
OnesLaw ones_law(const ColorMeasure& mu);
Rational event_probability(const ColorMeasure& mu, const std::vector<bool>& event);
// P(X_u = X_v = 1) - P(X_u = 1) P(X_v = 1), 0-based coordinates.
Rational pair_covariance(const ColorMeasure& mu, int u, int v);
bool is_01_symmetric(const ColorMeasure& mu);

}  // namespace gdc
