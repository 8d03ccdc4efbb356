#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "gdc/errors.hpp"
#include "gdc/phi.hpp"
#include "gdc/threshold.hpp"
#include "oracles.hpp"

using namespace gdc;
using oracle::frac;

namespace {

PaintBox box(std::initializer_list<Rational> probs) { return PaintBox::make(std::vector<Rational>(probs)); }

// Law of one uniform class colour plus i.i.d. dust, written out from the two-atom mixing law.
ColorMeasure one_box_marginal(const Rational& s, const Rational& p, int n) {
  return mix(p, product_measure(n, s + (1 - s) * p), product_measure(n, (1 - s) * p));
}

}  // namespace

TEST_CASE("paint-box construction") {
  CHECK(box({frac(1, 4), frac(1, 2)}).probs == std::vector<Rational>{frac(1, 2), frac(1, 4)});
  CHECK(box({frac(1, 2), frac(1, 4)}).deficit() == frac(1, 4));
  CHECK(box({frac(1, 2), frac(1, 4)}).to_string() == "(1/2,1/4)");
  CHECK_THROWS_AS(box({frac(3, 4), frac(1, 2)}), DomainError);
  CHECK(box({Rational(0), frac(1, 3)}).boxes() == 1);
  CHECK_THROWS_AS(box({frac(-1, 3)}), DomainError);
  CHECK(PaintBox::dyadic(3).probs == std::vector<Rational>{frac(1, 2), frac(1, 4), frac(1, 8)});
}

TEST_CASE("mixing law of a paint-box") {
  const AtomicXi one = xi_distribution(box({frac(1, 3)}), frac(1, 4));
  CHECK(one.atoms.size() == 2);
  CHECK(one.atoms.at(frac(1, 4) + frac(1, 3) * frac(3, 4)) == frac(1, 4));
  CHECK(one.atoms.at(frac(1, 4) - frac(1, 3) * frac(1, 4)) == frac(3, 4));

  const AtomicXi two = xi_distribution(box({frac(1, 2), frac(1, 4)}), frac(1, 2));
  REQUIRE(two.atoms.size() == 4);
  for (long k : {1, 3, 5, 7}) CHECK(two.atoms.at(frac(k, 8)) == frac(1, 4));

  const AtomicXi empty = xi_distribution(PaintBox(), frac(2, 3));
  REQUIRE(empty.atoms.size() == 1);
  CHECK(empty.atoms.begin()->first == frac(2, 3));
  CHECK(two.mean() == frac(1, 2));
}

TEST_CASE("paint-box partition law matches box-assignment enumeration") {
  CHECK(paintbox_rer_on_n(PaintBox(), 3) == RERMeasure::delta(SetPartition::singletons(3)));
  CHECK(paintbox_rer_on_n(box({1}), 3) == RERMeasure::delta(SetPartition::full(3)));
  const RERMeasure half = paintbox_rer_on_n(box({frac(1, 2)}), 2);
  CHECK(half.mass(SetPartition::full(2)) == frac(1, 4));
  CHECK(half.mass(SetPartition::singletons(2)) == frac(3, 4));
  for (const PaintBox& pb : {box({frac(1, 2), frac(1, 4)}), box({frac(1, 3), frac(1, 3), frac(1, 6)}),
                             box({frac(2, 3)})}) {
    for (int n = 1; n <= 5; ++n) CHECK(paintbox_rer_on_n(pb, n) == oracle::paintbox(pb, n));
  }
}

TEST_CASE("marginal colour laws") {
  const Rational p = frac(1, 3);
  const PaintBox pb = box({frac(1, 2), frac(1, 4)});
  CHECK(marginal_color_measure(pb, p, 4) == apply_phi(paintbox_rer_on_n(pb, 4), p));
  CHECK(marginal_color_measure(xi_distribution(pb, p), 4) == marginal_color_measure(pb, p, 4));
  for (const Rational& s : {frac(1, 5), frac(1, 2)}) {
    CHECK(marginal_color_measure(box({s}), p, 3) == one_box_marginal(s, p, 3));
  }
  SimpleMixture zero;
  zero.atoms[Rational(0)] = 1;
  CHECK(marginal_color_measure(zero, p, 3) == product_measure(3, p));
  PaintboxMixture rho;
  rho.atoms[pb] = frac(1, 2);
  rho.atoms[PaintBox()] = frac(1, 2);
  CHECK(marginal_color_measure(rho, p, 3) ==
        mix(frac(1, 2), marginal_color_measure(pb, p, 3), product_measure(3, p)));
}

TEST_CASE("moment route agrees with atom enumeration") {
  const PaintBox pb = box({frac(1, 3), frac(1, 4), frac(1, 6)});
  const Rational p = frac(2, 5);
  const AtomicXi xi = xi_distribution(pb, p);
  const auto moments = xi_moments(pb, p, 5);
  for (int k = 0; k <= 5; ++k) {
    Rational direct = 0;
    for (const auto& [s, w] : xi.atoms) direct += w * pow(s, k);
    CHECK(moments[k] == direct);
  }
}

TEST_CASE("splitting identity") {
  CHECK(split_identity_check(frac(1, 2), frac(1, 4), 5));
  CHECK(split_identity_check(frac(1, 3), frac(1, 3), 5));
  CHECK_FALSE(split_identity_check(frac(1, 2), frac(1, 4), 5, frac(1, 3)));
  Rng rng(8, 0);
  for (int i = 0; i < 10; ++i) {
    const long den = 24;
    const long a = 1 + static_cast<long>(rng.below(11));
    const long b = 1 + static_cast<long>(rng.below(a));
    CHECK(split_identity_check(frac(a, den), frac(b, den), 6));
  }
}

TEST_CASE("one-box decomposition of symmetric mixing laws") {
  AtomicXi point;
  point.atoms[frac(1, 2)] = 1;
  const SimpleMixture a = mainp12_decompose(point);
  REQUIRE(a.atoms.size() == 1);
  CHECK(a.atoms.at(Rational(0)) == 1);

  AtomicXi w;
  w.atoms[Rational(1)] = frac(3, 8);
  w.atoms[Rational(0)] = frac(3, 8);
  w.atoms[frac(1, 2)] = frac(1, 4);
  const SimpleMixture b = mainp12_decompose(w);
  CHECK(b.atoms.at(Rational(1)) == frac(3, 4));
  CHECK(b.atoms.at(Rational(0)) == frac(1, 4));
  CHECK(marginal_color_measure(b, frac(1, 2), 4) == marginal_color_measure(w, 4));

  AtomicXi fold;
  fold.atoms[frac(3, 4)] = frac(1, 2);
  fold.atoms[frac(1, 4)] = frac(1, 2);
  const SimpleMixture c = mainp12_decompose(fold);
  REQUIRE(c.atoms.size() == 1);
  CHECK(c.atoms.at(frac(1, 2)) == 1);

  AtomicXi skew;
  skew.atoms[frac(3, 4)] = 1;
  CHECK_THROWS_AS(mainp12_decompose(skew), DomainError);

  Rng rng(21, 0);
  for (int i = 0; i < 10; ++i) {
    AtomicXi random;
    for (int j = 0; j < 3; ++j) {
      const Rational s = oracle::random_probability(rng, 16);
      const Rational weight(static_cast<long>(rng.below(4)) + 1);
      random.atoms[s] += weight;
      random.atoms[1 - s] += weight;
    }
    Rational total = 0;
    for (const auto& [s, wt] : random.atoms) total += wt;
    for (auto& [s, wt] : random.atoms) wt /= total;
    const SimpleMixture d = mainp12_decompose(random);
    CHECK(marginal_color_measure(d, frac(1, 2), 5) == marginal_color_measure(random, 5));
  }
}

TEST_CASE("non-unique mixtures at p=1/2") {
  const auto [first, second] = unprop_witness(frac(1, 4), frac(3, 4));
  REQUIRE(second.atoms.size() == 1);
  CHECK(second.atoms.begin()->first == box({frac(1, 2), frac(1, 4)}));
  CHECK(marginal_color_measure(first, frac(1, 2), 6) == marginal_color_measure(second, frac(1, 2), 6));
  CHECK(marginal_color_measure(first, frac(1, 3), 6) != marginal_color_measure(second, frac(1, 3), 6));
  const auto [third, fourth] = unprop_witness(Rational(0), frac(1, 2));
  CHECK(fourth.atoms.begin()->first == box({frac(1, 4), frac(1, 4)}));
  CHECK(marginal_color_measure(third, frac(1, 2), 6) == marginal_color_measure(fourth, frac(1, 2), 6));
}

TEST_CASE("support inclusion between mixing laws") {
  CHECK(support_subset(PaintBox(), box({frac(2, 5), frac(1, 5)}), frac(2, 3)));
  CHECK(support_subset(box({frac(3, 4)}), box({frac(1, 2), frac(1, 4)}), frac(2, 7)));
  CHECK_FALSE(support_subset(box({frac(1, 3)}), box({frac(1, 2), frac(1, 10)}), frac(1, 3)));
}

TEST_CASE("uniqueness audits at p=2/3") {
  const Rational p = frac(2, 3);
  const auto one = uniqueness_audit(box({frac(1, 2)}), p);
  CHECK(one.unique);
  CHECK(one.family == "S1");
  CHECK(one.candidates.size() == 1);
  const auto two = uniqueness_audit(box({frac(1, 2), frac(1, 4)}), p);
  CHECK(two.unique);
  CHECK(two.family == "S2");
  std::vector<PaintBox> expected = {PaintBox(), box({frac(3, 4)}), box({frac(1, 2), frac(1, 4)}),
                                    box({frac(1, 4), frac(1, 4), frac(1, 4)})};
  std::vector<PaintBox> got = two.candidates;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
  const auto three = uniqueness_audit(box({frac(1, 4), frac(1, 4), frac(1, 4)}), p);
  CHECK(three.unique);
  CHECK(three.family == "S3");
}

TEST_CASE("Gaussian threshold mixing law") {
  CHECK(gaussian_xi_cdf(0.5, 0.0, 0.3) == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(gaussian_xi_cdf(0.5, 0.0, 0.77) == doctest::Approx(0.77).epsilon(1e-9));
  for (double r : {0.2, 0.7}) {
    for (double t : {0.1, 0.35}) {
      CHECK(gaussian_xi_cdf(r, 0.0, t) + gaussian_xi_cdf(r, 0.0, 1 - t) == doctest::Approx(1.0));
    }
  }
  CHECK(normal_quantile(normal_cdf(1.3)) == doctest::Approx(1.3).epsilon(1e-9));
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
}

TEST_CASE("threshold samplers are reproducible and seed-sensitive") {
  const auto a = gaussian_threshold_sampler(0.5, 0.0, 4, 5000, 99);
  const auto b = gaussian_threshold_sampler(0.5, 0.0, 4, 5000, 99, 3);
  const auto c = gaussian_threshold_sampler(0.5, 0.0, 4, 5000, 100);
  CHECK(a == b);
  CHECK(a != c);
  const auto independent = gaussian_threshold_sampler(0.0, 0.0, 3, 40000, 7);
  double ones = 0;
  for (Config x : independent) ones += std::popcount(x);
  CHECK(ones / (3.0 * 40000) == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("stable threshold at index 2 matches the Gaussian case") {
  const int n = 3;
  const std::size_t count = 40000;
  const auto g = gaussian_threshold_sampler(0.5, 0.0, n, count, 3);
  const auto s = stable_threshold_sampler(2.0, std::sqrt(0.5), 0.0, n, count, 4);
  std::vector<double> fg(8, 0.0), fs(8, 0.0);
  for (Config x : g) fg[x] += 1.0 / count;
  for (Config x : s) fs[x] += 1.0 / count;
  double tv = 0;
  for (int x = 0; x < 8; ++x) tv += std::fabs(fg[x] - fs[x]) / 2;
  CHECK(tv < 0.02);
}
