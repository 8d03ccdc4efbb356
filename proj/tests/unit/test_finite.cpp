#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gdc/errors.hpp"
#include "gdc/exact.hpp"
#include "gdc/phi.hpp"
#include "gdc/witnesses.hpp"
#include "oracles.hpp"

using namespace gdc;
using oracle::frac;

namespace {

RERMeasure delta_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  return RERMeasure::delta(SetPartition::from_blocks(n, blocks));
}

Rational cov_sum(const ColorMeasure& mu) {
  Rational total = 0;
  for (int u = 0; u < mu.n; ++u) {
    for (int v = u + 1; v < mu.n; ++v) total += pair_covariance(mu, u, v);
  }
  return total;
}

}  // namespace

TEST_CASE("set partitions enumerate in RGS order with Bell counts") {
  CHECK(enumerate_set_partitions(1).size() == 1);
  CHECK(enumerate_set_partitions(3).size() == 5);
  CHECK(enumerate_set_partitions(4).size() == 15);
  for (int n = 1; n <= 9; ++n) {
    CHECK(bell_number(n) == oracle::bell(n));
    CHECK(enumerate_set_partitions(n).size() == oracle::bell(n));
  }
  const auto all = enumerate_set_partitions(5);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
  CHECK(all.front() == SetPartition::full(5));
  CHECK(all.back() == SetPartition::singletons(5));
}

TEST_CASE("set partition parsing and printing round-trip") {
  const SetPartition pi = SetPartition::from_blocks(4, {{1, 3}, {2, 4}});
  CHECK(pi.to_string() == "RGS:0101");
  CHECK(SetPartition::parse(pi.to_string()) == pi);
  CHECK(SetPartition::parse("0120") == SetPartition::from_blocks(4, {{1, 4}, {2}, {3}}));
  CHECK_THROWS_AS(SetPartition::parse("1"), DomainError);
  CHECK_THROWS_AS(SetPartition::parse("02"), DomainError);
  const SetPartition wide = SetPartition::singletons(12);
  CHECK(SetPartition::parse(wide.to_string()) == wide);
}

TEST_CASE("induced partitions relabel to canonical form") {
  const SetPartition a = SetPartition::from_blocks(3, {{1, 2}, {3}});
  CHECK(induced_partition(a, {1, 3}) == SetPartition::singletons(2));
  CHECK(induced_partition(SetPartition::full(3), {2, 3}) == SetPartition::full(2));
  CHECK(induced_partition(SetPartition::singletons(4), {2, 4}) == SetPartition::singletons(2));
}

TEST_CASE("permutations act on partitions") {
  const SetPartition a = SetPartition::from_blocks(3, {{1, 2}, {3}});
  CHECK(apply_permutation({1, 2, 3}, a) == a);
  CHECK(apply_permutation({2, 1, 3}, a) == a);
  CHECK(apply_permutation({3, 2, 1}, a) == SetPartition::from_blocks(3, {{2, 3}, {1}}));
  CHECK_THROWS_AS(validate_permutation({1, 1, 3}, 3), DomainError);
}

TEST_CASE("integer shapes and integer partitions") {
  CHECK(integer_shape(SetPartition::from_blocks(3, {{1, 2}, {3}})).parts == std::vector<int>{2, 1});
  CHECK(integer_shape(SetPartition::singletons(5)).parts == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(integer_shape(SetPartition::from_blocks(4, {{1, 3}, {2, 4}})).parts == std::vector<int>{2, 2});
  CHECK(enumerate_integer_partitions(1).size() == 1);
  CHECK(enumerate_integer_partitions(4).size() == 5);
  CHECK(enumerate_integer_partitions(6).size() == 11);
  CHECK(enumerate_integer_partitions(4).front().to_string() == "4");
  CHECK(enumerate_integer_partitions(4).back().to_string() == "1-1-1-1");
  CHECK(IntegerPartition::parse("3-2-1").total() == 6);
}

TEST_CASE("extension maps add a singleton") {
  const RERMeasure two = RERMeasure::delta(SetPartition::singletons(2));
  CHECK(extend_T(two) == RERMeasure::delta(SetPartition::singletons(3)));
  CHECK(extend_T(RERMeasure::delta(SetPartition::full(2))) == delta_blocks(3, {{1, 2}, {3}}));
  const RERMeasure a = extend_T(witness::thm_a_nu1());
  CHECK(a.n == 4);
  for (const auto& [pi, w] : a.weights) CHECK(pi.label(3) == static_cast<std::uint32_t>(pi.block_count() - 1));
  CHECK(extend_S(ExchRERMeasure::delta(IntegerPartition({2}))) == ExchRERMeasure::delta(IntegerPartition({2, 1})));
  CHECK(extend_S(ExchRERMeasure::delta(IntegerPartition({1, 1}))) ==
        ExchRERMeasure::delta(IntegerPartition({1, 1, 1})));
  const ExchRERMeasure f = extend_S(witness::thm_f_nu1());
  CHECK(f.n == 7);
}

TEST_CASE("measures reject invalid input") {
  RERMeasure nu;
  nu.n = 2;
  nu.add(SetPartition::full(2), frac(1, 2));
  CHECK_THROWS_AS(nu.validate(), DomainError);
  nu.add(SetPartition::singletons(2), frac(1, 2));
  CHECK_NOTHROW(nu.validate());
  CHECK_THROWS_AS(check_probability(frac(3, 2)), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK(parse_rational("0.375") == frac(3, 8));
  CHECK(parse_rational("010/08") == frac(5, 4));
  CHECK(parse_rational("-2.50") == frac(-5, 2));
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(to_string(frac(6, 16)) == "3/8");
}

TEST_CASE("null space of a small matrix") {
  RationalMatrix rows = {{1, 1, 1}, {1, -1, 0}};
  const auto basis = null_space(rows, 3);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] * 2 == basis[0][2] * -1);
  CHECK(rank(rows, 3) == 2);
}

TEST_CASE("exact simplex solves textbook programs") {
  LinearProgram lp;
  lp.variables = 2;
  lp.objective = {3, 5};
  lp.add_row({1, 0}, Relation::less_equal, 4);
  lp.add_row({0, 2}, Relation::less_equal, 12);
  lp.add_row({3, 2}, Relation::less_equal, 18);
  const auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.value == 36);
  CHECK(sol.x[0] == 2);
  CHECK(sol.x[1] == 6);

  LinearProgram infeasible;
  infeasible.variables = 1;
  infeasible.objective = {1};
  infeasible.add_row({1}, Relation::greater_equal, 2);
  infeasible.add_row({1}, Relation::less_equal, 1);
  CHECK(solve_lp(infeasible).status == LpStatus::infeasible);
}

TEST_CASE("max flow on a diamond") {
  MaxFlow flow(4);
  flow.add_edge(0, 1, 3);
  flow.add_edge(0, 2, 2);
  flow.add_edge(1, 2, 1);
  flow.add_edge(1, 3, 2);
  flow.add_edge(2, 3, 3);
  CHECK(flow.run(0, 3) == 5);
}

TEST_CASE("colouring map on fixed inputs") {
  const Rational p = frac(1, 3);
  const ColorMeasure full = apply_phi(RERMeasure::delta(SetPartition::full(2)), p);
  CHECK(full[parse_config("11")] == p);
  CHECK(full[parse_config("00")] == 1 - p);
  CHECK(full[parse_config("10")] == 0);
  CHECK(apply_phi(RERMeasure::delta(SetPartition::singletons(4)), p) == product_measure(4, p));

  const ColorMeasure a = apply_phi(witness::thm_a_nu1(), frac(1, 2));
  CHECK(a[parse_config("111")] == frac(1, 4));
  CHECK(a[parse_config("000")] == frac(1, 4));
  for (const char* x : {"110", "101", "011", "100", "010", "001"}) CHECK(a[parse_config(x)] == frac(1, 12));
  CHECK(apply_phi(witness::thm_a_nu2(), frac(1, 2)) == a);
}

TEST_CASE("colouring map matrix at n=3, p=1/2") {
  const auto m = phi_matrix(3, frac(1, 2));
  const PartitionIndex index(3);
  const auto col = [&](const char* rgs) { return index.position(SetPartition::parse(rgs)); };
  const Config c111 = parse_config("111"), c110 = parse_config("110");
  CHECK(m[c111][col("012")] == frac(1, 8));
  CHECK(m[c111][col("001")] == frac(1, 4));
  CHECK(m[c111][col("000")] == frac(1, 2));
  CHECK(m[c110][col("012")] == frac(1, 8));
  CHECK(m[c110][col("001")] == frac(1, 4));
  CHECK(m[c110][col("010")] == 0);
}

TEST_CASE("colouring map properties on random measures") {
  Rng rng(11, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const Rational p = oracle::random_probability(rng);
    const RERMeasure a = oracle::random_rer(n, rng), b = oracle::random_rer(n, rng);
    const ColorMeasure pa = apply_phi(a, p);
    CHECK(pa == oracle::phi(a, p));
    const Rational t = oracle::random_probability(rng);
    CHECK(apply_phi(mix(t, a, b), p) == mix(t, pa, apply_phi(b, p)));
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(sigma[i], sigma[rng.below(i + 1)]);
    CHECK(apply_phi(permute(sigma, a), p) == permute(sigma, pa));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) CHECK(pair_covariance(pa, u, v) >= 0);
    }
    CHECK(is_01_symmetric(apply_phi(a, frac(1, 2))));
    CHECK(phi_exch(symmetrize(a), p) == ones_law(pa));
    CHECK(cp_membership(pa, p).has_value());
  }
}

TEST_CASE("kernel dimensions and coordinate sums") {
  CHECK(kernel(2, frac(1, 2), Space::general).basis.empty());
  CHECK(kernel(3, frac(1, 2), Space::general).basis.size() == 1);
  CHECK(kernel(3, frac(1, 3), Space::general).basis.empty());
  CHECK(kernel(4, frac(1, 2), Space::general).basis.size() == 7);
  CHECK(kernel(4, frac(1, 3), Space::general).basis.size() == 3);
  CHECK(kernel(4, frac(1, 3), Space::exchangeable).basis.size() == 1);
  CHECK(kernel(5, frac(1, 3), Space::exchangeable).basis.size() == 2);
  for (const auto& v : kernel(4, frac(1, 2), Space::general).basis) {
    Rational sum = 0;
    for (const auto& x : v) sum += x;
    CHECK(sum == 0);
  }
  CHECK_THROWS_AS(kernel(11, frac(1, 2), Space::general), SizeLimitError);
}

TEST_CASE("all-p equality of witness pairs") {
  CHECK(all_p_equal(witness::thm_e_nu1(), witness::thm_e_nu2()));
  CHECK(all_p_equal(witness::thm_f_nu1(), witness::thm_f_nu2()));
  CHECK_FALSE(all_p_equal(witness::thm_a_nu1(), witness::thm_a_nu2()));
  const Rational half = frac(1, 2);
  CHECK(witness::thm_c_nu2(half).mass(IntegerPartition({4})) == frac(9, 40));
  for (long k = 1; k < 8; ++k) {
    const Rational p = frac(k, 8);
    CHECK(phi_exch(witness::thm_c_nu1(), p) == phi_exch(witness::thm_c_nu2(p), p));
  }
}

TEST_CASE("fingerprints") {
  const Rational three(3);
  const RERMeasure full = RERMeasure::delta(SetPartition::full(3));
  const RERMeasure single = RERMeasure::delta(SetPartition::singletons(3));
  const Polynomial pf = fingerprint_class_count_pgf(full, {1, 2, 3});
  const Polynomial ps = fingerprint_class_count_pgf(single, {1, 2, 3});
  CHECK(evaluate(pf, frac(1, 3)) == frac(1, 3));
  CHECK(evaluate(ps, frac(1, 3)) == frac(1, 27));
  CHECK(fingerprint_size_mean(RERMeasure::delta(SetPartition::singletons(4)), 1) == 4);
  CHECK(fingerprint_class_prob(witness::thm_a_nu1(), {1, 2, 3}) == frac(1, 3));
  for (int t = 1; t <= 6; ++t) {
    const auto a = expand(witness::thm_f_nu1()), b = expand(witness::thm_f_nu2());
    CHECK(fingerprint_size_mean(a, t) == fingerprint_size_mean(b, t));
  }
  const auto fa = expand(witness::thm_f_nu1()), fb = expand(witness::thm_f_nu2());
  CHECK(fingerprint_class_count_pgf(fa, {1, 2, 3, 4, 5, 6}) ==
        fingerprint_class_count_pgf(fb, {1, 2, 3, 4, 5, 6}));
}

TEST_CASE("uniqueness certificates at n=3, p=1/2") {
  const Rational half = frac(1, 2);
  CHECK(is_unique(RERMeasure::delta(SetPartition::full(3)), half, Space::general).unique);
  CHECK_FALSE(is_unique(witness::thm_a_nu1(), half, Space::general).unique);
  CHECK_FALSE(is_unique(witness::thm_a_nu2(), half, Space::general).unique);
  const auto cert = is_unique(witness::thm_a_nu1(), frac(1, 3), Space::general);
  CHECK(cert.unique);
}

TEST_CASE("two-point representation") {
  const auto a = represent_n2(product_measure(2, frac(1, 2)));
  CHECK(a.p == frac(1, 2));
  CHECK(a.nu.mass(SetPartition::singletons(2)) == 1);
  ColorMeasure b(2);
  b[parse_config("11")] = b[parse_config("00")] = frac(1, 2);
  CHECK(represent_n2(b).nu.mass(SetPartition::singletons(2)) == 0);
  ColorMeasure c(2);
  c[parse_config("11")] = c[parse_config("00")] = frac(3, 8);
  c[parse_config("10")] = c[parse_config("01")] = frac(1, 8);
  const auto rc = represent_n2(c);
  CHECK(rc.p == frac(1, 2));
  CHECK(rc.nu.mass(SetPartition::singletons(2)) == frac(1, 2));
  CHECK(apply_phi(rc.nu, rc.p) == c);
}

TEST_CASE("three-point representation at p=1/2") {
  ColorMeasure iid = product_measure(3, frac(1, 2));
  CHECK(represent_n3_half(iid).nu.mass(SetPartition::singletons(3)) == 1);
  ColorMeasure two(3);
  two[parse_config("111")] = two[parse_config("000")] = frac(1, 2);
  CHECK(represent_n3_half(two).nu.mass(SetPartition::full(3)) == 1);
  const ColorMeasure a = apply_phi(witness::thm_a_nu1(), frac(1, 2));
  const auto rep = represent_n3_half(a);
  CHECK(rep.nu.mass(SetPartition::full(3)) == frac(1, 3));
  CHECK(rep.nu.mass(SetPartition::singletons(3)) == frac(2, 3));
  CHECK(apply_phi(rep.nu, frac(1, 2)) == a);
  ColorMeasure anti(3);
  for (Config x = 1; x < 7; ++x) anti[x] = frac(1, 6);
  CHECK(cov_sum(anti) < 0);
  CHECK_THROWS_AS(represent_n3_half(anti), NotColorProcessError);
}

TEST_CASE("membership") {
  CHECK(cp_membership(product_measure(3, frac(1, 3)), frac(1, 3)).has_value());
  CHECK_FALSE(cp_membership(witness::level_measure(4), frac(1, 2)).has_value());
  ColorMeasure lopsided(2);
  lopsided[parse_config("10")] = 1;
  CHECK_FALSE(cp_membership(lopsided, frac(1, 2)).has_value());
}

TEST_CASE("level measures have covariance 1/4 - 1/n") {
  for (int n = 4; n <= 6; ++n) {
    const ColorMeasure mu = witness::level_measure(n);
    CHECK(pair_covariance(mu, 0, 1) == frac(1, 4) - frac(1, n));
  }
}

TEST_CASE("domination on fixed pairs") {
  CHECK(dominates(product_measure(3, frac(1, 4)), product_measure(3, frac(1, 2))));
  CHECK_FALSE(dominates(product_measure(3, frac(1, 2)), product_measure(3, frac(1, 4))));
  const ColorMeasure mu = apply_phi(witness::thm_a_nu1(), frac(1, 2));
  CHECK(dominates(mu, mu));
  ColorMeasure sticky(2);
  sticky[parse_config("11")] = sticky[parse_config("00")] = frac(1, 2);
  CHECK(dominates(product_measure(2, frac(1, 4)), sticky));
  CHECK_FALSE(dominates(product_measure(2, frac(1, 3)), sticky));
}

TEST_CASE("domination agrees with exhaustive up-set enumeration") {
  Rng rng(5, 1);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      const ColorMeasure a = oracle::random_color(n, rng);
      const ColorMeasure b = trial % 2 ? oracle::random_color(n, rng)
                                       : apply_phi(oracle::random_rer(n, rng), oracle::random_probability(rng));
      CHECK(dominates(a, b) == oracle::dominates(a, b));
      CHECK(dominates(product_measure(n, frac(1, 5)), b) ==
            oracle::dominates(product_measure(n, frac(1, 5)), b));
    }
  }
}

TEST_CASE("up-set enumeration counts Dedekind numbers") {
  CHECK(enumerate_up_sets(1).size() == 3);
  CHECK(enumerate_up_sets(2).size() == 6);
  CHECK(enumerate_up_sets(3).size() == 20);
  CHECK(enumerate_up_sets(4).size() == 168);
}

TEST_CASE("association fixtures") {
  const ColorMeasure mu = apply_phi(witness::posass4(), frac(1, 2));
  const auto report = positive_association_check(mu);
  CHECK_FALSE(report.associated);
  std::vector<bool> a(16), b(16);
  for (Config x = 0; x < 16; ++x) {
    a[x] = (x & 3u) == 3u;
    b[x] = (x & 12u) == 12u;
  }
  std::vector<bool> both(16);
  for (Config x = 0; x < 16; ++x) both[x] = a[x] && b[x];
  CHECK(event_probability(mu, a) == frac(3, 8));
  CHECK(event_probability(mu, b) == frac(3, 8));
  CHECK(event_probability(mu, both) == frac(1, 8));
  CHECK(positive_association_check(product_measure(3, frac(1, 3))).associated);
  CHECK(fkg_lattice_check(witness::fkg_example()));
}

TEST_CASE("size caps honour environment overrides") {
  CHECK(size_cap("NO_SUCH_CAP_FOR_TESTS", 7) == 7);
  CHECK_THROWS_AS(check_cap("NO_SUCH_CAP_FOR_TESTS", 7, 8), SizeLimitError);
  CHECK_NOTHROW(check_cap("NO_SUCH_CAP_FOR_TESTS", 7, 7));
}
