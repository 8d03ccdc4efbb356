#include "gdc/witnesses.hpp"

#include <bit>

#include "gdc/errors.hpp"

namespace gdc::witness {

namespace {

RERMeasure build(int n, const std::vector<std::pair<std::vector<std::vector<int>>, Rational>>& rows) {
  RERMeasure nu;
  nu.n = n;
  for (const auto& [blocks, w] : rows) nu.add(SetPartition::from_blocks(n, blocks), w);
  nu.validate();
  return nu;
}

ExchRERMeasure build_exch(int n, const std::vector<std::pair<std::vector<int>, Rational>>& rows) {
  ExchRERMeasure nu;
  nu.n = n;
  for (const auto& [parts, w] : rows) nu.add(IntegerPartition(parts), w);
  nu.validate();
  return nu;
}

Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

RERMeasure thm_a_nu1() {
  return build(3, {{{{1}, {2}, {3}}, q(2, 3)}, {{{1, 2, 3}}, q(1, 3)}});
}

RERMeasure thm_a_nu2() {
  return build(3, {{{{1, 2}, {3}}, q(1, 3)}, {{{1}, {2, 3}}, q(1, 3)}, {{{1, 3}, {2}}, q(1, 3)}});
}

ExchRERMeasure thm_c_nu1() {
  return build_exch(4, {{{4}, q(1, 5)},
                        {{3, 1}, q(1, 5)},
                        {{2, 2}, q(1, 5)},
                        {{2, 1, 1}, q(1, 5)},
                        {{1, 1, 1, 1}, q(1, 5)}});
}

ExchRERMeasure thm_c_nu2(const Rational& p) {
  check_probability(p, true);
  Rational g = p * (1 - p);
  return build_exch(4, {{{4}, q(1, 5) + g / 10},
                        {{3, 1}, q(1, 5) - 2 * g / 5},
                        {{2, 2}, q(1, 10) + 3 * g / 10},
                        {{2, 1, 1}, q(2, 5)},
                        {{1, 1, 1, 1}, q(1, 10)}});
}

RERMeasure thm_e_nu1() {
  return build(4, {{{{1, 3}, {2}, {4}}, q(1, 3)},
                   {{{1}, {3}, {2, 4}}, q(1, 3)},
                   {{{1, 2}, {3, 4}}, q(1, 6)},
                   {{{1, 4}, {2, 3}}, q(1, 6)}});
}

RERMeasure thm_e_nu2() {
  return build(4, {{{{1, 2}, {3}, {4}}, q(1, 6)},
                   {{{1}, {2, 3}, {4}}, q(1, 6)},
                   {{{1}, {2}, {3, 4}}, q(1, 6)},
                   {{{1, 4}, {2}, {3}}, q(1, 6)},
                   {{{1, 3}, {2, 4}}, q(1, 3)}});
}

ExchRERMeasure thm_f_nu1() {
  return build_exch(6, {{{4, 2}, q(1, 3)}, {{3, 2, 1}, q(2, 3)}});
}

ExchRERMeasure thm_f_nu2() {
  return build_exch(6, {{{4, 1, 1}, q(1, 3)}, {{3, 3}, q(1, 3)}, {{2, 2, 2}, q(1, 3)}});
}

RERMeasure posass4() {
  return build(4, {{{{1, 2}, {3}, {4}}, q(1, 2)}, {{{1}, {2}, {3, 4}}, q(1, 2)}});
}

ColorMeasure level_measure(int n) {
  if (n < 3) throw DomainError("level measure needs n >= 3");
  ColorMeasure mu(n);
  Rational w(1, 2 * n);
  w.canonicalize();
  for (Config x = 0; x < mu.weights.size(); ++x) {
    int ones = std::popcount(x);
    if (ones == 1 || ones == n - 1) mu[x] = w;
  }
  return mu;
}

ColorMeasure fkg_example() {
  return mix(q(1, 9), product_measure(3, q(9, 10)), product_measure(3, q(9, 20)));
}

std::map<std::string, Entry> catalog(const Rational& p) {
  std::map<std::string, Entry> out;
  out.emplace("thmA_nu1", thm_a_nu1());
  out.emplace("thmA_nu2", thm_a_nu2());
  out.emplace("thmC_nu1", thm_c_nu1());
  out.emplace("thmC_nu2", thm_c_nu2(p));
  out.emplace("thmE_nu1", thm_e_nu1());
  out.emplace("thmE_nu2", thm_e_nu2());
  out.emplace("thmF_nu1", thm_f_nu1());
  out.emplace("thmF_nu2", thm_f_nu2());
  out.emplace("posass4", posass4());
  for (int n = 4; n <= 6; ++n) out.emplace("levels_" + std::to_string(n), level_measure(n));
  out.emplace("fkg_example", fkg_example());
  return out;
}

}  // namespace gdc::witness
