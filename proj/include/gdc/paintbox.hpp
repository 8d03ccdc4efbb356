#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdc/exact.hpp"
#include "gdc/measures.hpp"

namespace gdc {

struct PaintBox {
  std::vector<Rational> probs;  // non-increasing, positive

  PaintBox() = default;
  // Validates; use make() to sort and drop zero boxes first.
  explicit PaintBox(std::vector<Rational> probs);
  static PaintBox make(std::vector<Rational> probs);
  // (1/2, 1/4, ..., 1/2^k); truncation moves xi by at most 2^-k in Kolmogorov distance.
  static PaintBox dyadic(int k);

  Rational deficit() const;
  Rational total() const;
  std::size_t boxes() const { return probs.size(); }
  std::string to_string() const;  // "(1/2,1/4)"

  friend bool operator==(const PaintBox&, const PaintBox&) = default;
  friend bool operator<(const PaintBox& a, const PaintBox& b) { return a.probs < b.probs; }
};

struct AtomicXi {
  std::map<Rational, Rational> atoms;  // value -> weight

  void validate() const;
  Rational min_atom() const;
  Rational max_atom() const;
  Rational mean() const;
  friend bool operator==(const AtomicXi&, const AtomicXi&) = default;
};

// Atom s stands for the one-box paint-box (s).
struct SimpleMixture {
  std::map<Rational, Rational> atoms;
  friend bool operator==(const SimpleMixture&, const SimpleMixture&) = default;
};

struct PaintboxMixture {
  std::map<PaintBox, Rational> atoms;
  friend bool operator==(const PaintboxMixture&, const PaintboxMixture&) = default;
};

AtomicXi xi_distribution(const PaintBox& pb, const Rational& p);
AtomicXi xi_distribution(const PaintboxMixture& rho, const Rational& p);
// E[xi^m] for m = 0..order, by exact moment convolution over boxes.
std::vector<Rational> xi_moments(const PaintBox& pb, const Rational& p, int order);

RERMeasure paintbox_rer_on_n(const PaintBox& pb, int n);

ColorMeasure marginal_color_measure(const AtomicXi& xi, int n);
ColorMeasure marginal_color_measure(const PaintBox& pb, const Rational& p, int n);
ColorMeasure marginal_color_measure(const SimpleMixture& mixture, const Rational& p, int n);
ColorMeasure marginal_color_measure(const PaintboxMixture& mixture, const Rational& p, int n);

bool split_identity_check(const Rational& p1, const Rational& p2, int n,
                          const Rational& p = Rational(1, 2));

SimpleMixture mainp12_decompose(const AtomicXi& xi);

std::pair<PaintboxMixture, PaintboxMixture> unprop_witness(const Rational& a, const Rational& b);

bool support_subset(const PaintBox& inner, const PaintBox& outer, const Rational& p);

struct UniquenessAudit {
  bool unique = false;
  std::string family;  // "S1", "S2" or "S3"
  std::vector<Rational> target_support;
  std::vector<PaintBox> candidates;
  // Mixing system: rows indexed by target_support, columns by candidates.
  RationalMatrix system;
  std::vector<Rational> target_weights;
  // Largest total weight off the target among solutions of the mixing system.
  Rational max_off_target;
  std::optional<PaintboxMixture> counterexample;
};

UniquenessAudit uniqueness_audit(const PaintBox& target, const Rational& p);

}  // namespace gdc
