#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gdc/exact.hpp"
#include "gdc/measures.hpp"

namespace gdc {

// Rows are configurations (Config order), columns are partitions in RGS order.
RationalMatrix phi_matrix(int n, const Rational& p);
// Rows are counts of ones 0..n, columns are integer partitions in reverse-lex order.
RationalMatrix phi_exch_matrix(int n, const Rational& p);

ColorMeasure apply_phi(const RERMeasure& nu, const Rational& p);
OnesLaw phi_exch(const ExchRERMeasure& nu, const Rational& p);

enum class Space { general, exchangeable };
Space parse_space(const std::string& name);
std::string to_string(Space space);

struct KernelBasis {
  Space space = Space::general;
  int n = 0;
  Rational p;
  std::vector<std::string> coordinates;  // RGS or shape labels
  std::vector<SignedVector> basis;
};

KernelBasis kernel(int n, const Rational& p, Space space);

// Evaluation points k/(n+2), k = 1..n+1.
std::vector<Rational> certification_points(int n);
bool all_p_equal(const RERMeasure& first, const RERMeasure& second);
bool all_p_equal(const ExchRERMeasure& first, const ExchRERMeasure& second);

// Coefficients of E[p^N], N = number of classes of the partition induced on subset.
Polynomial fingerprint_class_count_pgf(const RERMeasure& nu, const std::vector<int>& subset);
// Expected number of classes of size exactly t.
Rational fingerprint_size_mean(const RERMeasure& nu, int t);
// Probability that the 1-based subset is exactly one class.
Rational fingerprint_class_prob(const RERMeasure& nu, const std::vector<int>& subset);

struct UniquenessCertificate {
  bool unique = false;
  // "support-kernel", "lp-optimum-one" or "lp-optimum-zero".
  std::string method;
  std::vector<std::string> coordinates;
  // Kernel direction nu + eps * witness stays a probability measure.
  std::optional<SignedVector> witness;
  std::size_t kernel_dimension = 0;
};

UniquenessCertificate is_unique(const RERMeasure& nu, const Rational& p, Space relative_to);
UniquenessCertificate is_unique(const ExchRERMeasure& nu, const Rational& p);

std::optional<RERMeasure> cp_membership(const ColorMeasure& mu, const Rational& p);

struct TwoPointRepresentation {
  RERMeasure nu;
  Rational p;
};
TwoPointRepresentation represent_n2(const ColorMeasure& mu);

struct ThreePointRepresentation {
  RERMeasure nu;
  // Element (1-based) that plays the separated role of element 3 in the formula.
  int separated = 3;
  // One-line relabeling applied before the formula.
  std::vector<int> relabeling;
};
ThreePointRepresentation represent_n3_half(const ColorMeasure& mu);

bool dominates(const ColorMeasure& lower, const ColorMeasure& upper);

struct AssociationReport {
  bool associated = true;
  // Violating pair of increasing events as config membership masks.
  std::vector<bool> first_event;
  std::vector<bool> second_event;
  Rational p_first, p_second, p_both;
};

// Enumerates every pair of up-sets; n <= 4.
AssociationReport positive_association_check(const ColorMeasure& mu);
bool fkg_lattice_check(const ColorMeasure& mu);

// All up-sets of {0,1}^n as config membership masks, n <= 4.
std::vector<std::vector<bool>> enumerate_up_sets(int n);

}  // namespace gdc
