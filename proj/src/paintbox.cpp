#include "gdc/paintbox.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "gdc/errors.hpp"

namespace gdc {

namespace {

constexpr std::size_t kPaintboxRerCap = 8;
constexpr std::size_t kMarginalCap = 12;
constexpr std::size_t kXiBoxCap = 24;
constexpr std::size_t kAtomRouteBoxes = 12;

Rational binomial(int n, int k) {
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(c);
}

// Fills a color measure from per-level probabilities (depends only on the number of ones).
ColorMeasure from_levels(const std::vector<Rational>& level, int n) {
  ColorMeasure mu(n);
  for (Config x = 0; x < mu.weights.size(); ++x) mu[x] = level[std::popcount(x)];
  return mu;
}

// Per-configuration probability at each level from the moments of xi.
std::vector<Rational> levels_from_moments(const std::vector<Rational>& moments, int n) {
  std::vector<Rational> level(n + 1, Rational(0));
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n - j; ++i) {
      Rational term = binomial(n - j, i) * moments[j + i];
      level[j] += (i % 2 == 0) ? term : Rational(-term);
    }
  }
  return level;
}

std::vector<Rational> levels_from_atoms(const AtomicXi& xi, int n) {
  std::vector<Rational> level(n + 1, Rational(0));
  for (const auto& [s, w] : xi.atoms) {
    for (int j = 0; j <= n; ++j) level[j] += w * pow(s, j) * pow(1 - s, n - j);
  }
  return level;
}

void check_marginal_n(int n) {
  if (n < 1) throw DomainError("n must be positive");
  check_cap("MARGINAL_N", kMarginalCap, static_cast<std::size_t>(n));
}

std::vector<Rational> support_of(const AtomicXi& xi) {
  std::vector<Rational> out;
  for (const auto& [z, w] : xi.atoms) out.push_back(z);
  return out;
}

bool contains(const std::vector<Rational>& sorted, const Rational& z) {
  return std::binary_search(sorted.begin(), sorted.end(), z);
}

}  // namespace

PaintBox::PaintBox(std::vector<Rational> p) : probs(std::move(p)) {
  Rational sum = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0) throw DomainError("paint-box entries must be positive");
    if (i > 0 && probs[i] > probs[i - 1]) throw DomainError("paint-box must be non-increasing");
    sum += probs[i];
  }
  if (sum > 1) throw DomainError("paint-box entries sum above 1");
}

PaintBox PaintBox::make(std::vector<Rational> p) {
  p.erase(std::remove(p.begin(), p.end(), Rational(0)), p.end());
  std::sort(p.begin(), p.end(), std::greater<Rational>());
  return PaintBox(std::move(p));
}

PaintBox PaintBox::dyadic(int k) {
  std::vector<Rational> p;
  Rational v(1, 2);
  for (int i = 0; i < k; ++i) {
    p.push_back(v);
    v /= 2;
  }
  return PaintBox(std::move(p));
}

Rational PaintBox::total() const {
  Rational sum = 0;
  for (const auto& v : probs) sum += v;
  return sum;
}

Rational PaintBox::deficit() const { return 1 - total(); }

std::string PaintBox::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (i) out += ",";
    out += gdc::to_string(probs[i]);
  }
  return out + ")";
}

void AtomicXi::validate() const {
  if (atoms.empty()) throw DomainError("xi law has no atoms");
  Rational total = 0;
  for (const auto& [z, w] : atoms) {
    if (z < 0 || z > 1) throw DomainError("xi atom outside [0,1]");
    if (w <= 0) throw DomainError("xi atom weights must be positive");
    total += w;
  }
  if (total != 1) throw DomainError("xi weights sum to " + to_string(total));
}

Rational AtomicXi::min_atom() const { return atoms.begin()->first; }
Rational AtomicXi::max_atom() const { return atoms.rbegin()->first; }

Rational AtomicXi::mean() const {
  Rational m = 0;
  for (const auto& [z, w] : atoms) m += z * w;
  return m;
}

AtomicXi xi_distribution(const PaintBox& pb, const Rational& p) {
  check_probability(p, true);
  check_cap("XI_BOXES", kXiBoxCap, pb.boxes());
  // Box i joins the coloured mass with probability p; equal atoms merge as we go.
  std::map<Rational, Rational> atoms{{pb.deficit() * p, Rational(1)}};
  for (const auto& box : pb.probs) {
    std::map<Rational, Rational> next;
    for (const auto& [z, w] : atoms) {
      if (p != 0) next[z + box] += w * p;
      if (p != 1) next[z] += w * (1 - p);
    }
    atoms = std::move(next);
  }
  return AtomicXi{std::move(atoms)};
}

AtomicXi xi_distribution(const PaintboxMixture& rho, const Rational& p) {
  AtomicXi out;
  for (const auto& [pb, w] : rho.atoms) {
    for (const auto& [z, v] : xi_distribution(pb, p).atoms) out.atoms[z] += w * v;
  }
  return out;
}

std::vector<Rational> xi_moments(const PaintBox& pb, const Rational& p, int order) {
  std::vector<Rational> m(order + 1);
  Rational base = pb.deficit() * p;
  for (int k = 0; k <= order; ++k) m[k] = pow(base, k);
  for (const auto& c : pb.probs) {
    // E[(S + c B)^k] with B ~ Bernoulli(p): E[B^0] = 1, E[B^r] = p.
    std::vector<Rational> next(order + 1);
    for (int k = 0; k <= order; ++k) {
      Rational acc = m[k];
      for (int j = 0; j < k; ++j) acc += binomial(k, j) * m[j] * pow(c, k - j) * p;
      next[k] = acc;
    }
    m = std::move(next);
  }
  return m;
}

RERMeasure paintbox_rer_on_n(const PaintBox& pb, int n) {
  if (n < 1) throw DomainError("n must be positive");
  check_cap("PAINTBOX_RER_N", kPaintboxRerCap, static_cast<std::size_t>(n));
  const Rational deficit = pb.deficit();
  RERMeasure nu;
  nu.n = n;
  for_each_set_partition(n, [&](const SetPartition& pi) {
    auto sizes = pi.block_sizes();
    const int b = static_cast<int>(sizes.size());
    // dp[mask]: blocks in mask already own distinct boxes among those processed.
    std::vector<Rational> dp(std::size_t{1} << b, Rational(0));
    dp[0] = 1;
    for (const auto& box : pb.probs) {
      std::vector<Rational> next = dp;
      for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask] == 0) continue;
        for (int j = 0; j < b; ++j) {
          if (mask >> j & 1u) continue;
          next[mask | (std::size_t{1} << j)] += dp[mask] * pow(box, sizes[j]);
        }
      }
      dp = std::move(next);
    }
    Rational total = 0;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
      if (dp[mask] == 0) continue;
      Rational term = dp[mask];
      for (int j = 0; j < b && term != 0; ++j) {
        if (mask >> j & 1u) continue;
        term *= sizes[j] == 1 ? deficit : Rational(0);
      }
      total += term;
    }
    nu.add(pi, total);
  });
  return nu;
}

ColorMeasure marginal_color_measure(const AtomicXi& xi, int n) {
  check_marginal_n(n);
  xi.validate();
  return from_levels(levels_from_atoms(xi, n), n);
}

ColorMeasure marginal_color_measure(const PaintBox& pb, const Rational& p, int n) {
  check_marginal_n(n);
  if (pb.boxes() <= kAtomRouteBoxes) return marginal_color_measure(xi_distribution(pb, p), n);
  // Many boxes: same mixture of products, evaluated through the moments of xi.
  return from_levels(levels_from_moments(xi_moments(pb, p, n), n), n);
}

ColorMeasure marginal_color_measure(const SimpleMixture& mixture, const Rational& p, int n) {
  PaintboxMixture rho;
  for (const auto& [s, w] : mixture.atoms) rho.atoms[PaintBox::make({s})] += w;
  return marginal_color_measure(rho, p, n);
}

ColorMeasure marginal_color_measure(const PaintboxMixture& mixture, const Rational& p, int n) {
  check_marginal_n(n);
  if (mixture.atoms.empty()) throw DomainError("empty paint-box mixture");
  std::vector<Rational> level(n + 1, Rational(0));
  for (const auto& [pb, w] : mixture.atoms) {
    auto part = pb.boxes() <= kAtomRouteBoxes ? levels_from_atoms(xi_distribution(pb, p), n)
                                               : levels_from_moments(xi_moments(pb, p, n), n);
    for (int j = 0; j <= n; ++j) level[j] += w * part[j];
  }
  return from_levels(level, n);
}

bool split_identity_check(const Rational& p1, const Rational& p2, int n, const Rational& p) {
  if (!(p1 >= p2 && p2 > 0 && p1 + p2 <= 1)) {
    throw DomainError("split identity needs p1 >= p2 > 0 and p1 + p2 <= 1");
  }
  check_probability(p);
  auto joint = marginal_color_measure(PaintBox::make({p1, p2}), p, n);
  auto wide = marginal_color_measure(PaintBox::make({p1 + p2}), p, n);
  auto narrow = marginal_color_measure(PaintBox::make({p1 - p2}), p, n);
  return joint == mix(Rational(1, 2), wide, narrow);
}

SimpleMixture mainp12_decompose(const AtomicXi& xi) {
  xi.validate();
  const Rational half(1, 2);
  SimpleMixture out;
  for (const auto& [z, w] : xi.atoms) {
    Rational mirror = 1 - z;
    auto it = xi.atoms.find(mirror);
    if (it == xi.atoms.end() || it->second != w) {
      throw DomainError("xi law is not symmetric about 1/2");
    }
    if (z == half) {
      out.atoms[Rational(0)] += w;
    } else if (z > half) {
      out.atoms[2 * (z - half)] += 2 * w;
    }
  }
  return out;
}

std::pair<PaintboxMixture, PaintboxMixture> unprop_witness(const Rational& a, const Rational& b) {
  if (!(a >= 0 && a < b && b <= 1)) throw DomainError("unprop witness needs 0 <= a < b <= 1");
  PaintboxMixture rho, rho_prime;
  rho.atoms[PaintBox::make({a})] += Rational(1, 2);
  rho.atoms[PaintBox::make({b})] += Rational(1, 2);
  rho_prime.atoms[PaintBox::make({(a + b) / 2, (b - a) / 2})] = 1;
  return {rho, rho_prime};
}

bool support_subset(const PaintBox& inner, const PaintBox& outer, const Rational& p) {
  auto outer_support = support_of(xi_distribution(outer, p));
  for (const auto& [z, w] : xi_distribution(inner, p).atoms) {
    if (!contains(outer_support, z)) return false;
  }
  return true;
}

UniquenessAudit uniqueness_audit(const PaintBox& target, const Rational& p) {
  check_probability(p);
  if (p == Rational(1, 2)) {
    throw DomainError("uniqueness audit is undefined at p = 1/2, where uniqueness fails");
  }
  UniquenessAudit audit;
  if (target.boxes() == 1) {
    audit.family = "S1";
  } else if (target.boxes() == 2) {
    audit.family = "S2";
  } else if (target.boxes() == 3 && target.probs[0] == target.probs[2]) {
    audit.family = "S3";
  } else {
    throw DomainError("uniqueness audit supports (s), (p1,p2) and (t,t,t) targets only");
  }

  const AtomicXi target_xi = xi_distribution(target, p);
  const auto z = support_of(target_xi);
  audit.target_support = z;

  // A candidate with k boxes has at least k+1 distinct atoms, all inside z. Its
  // extreme atoms fix the total mass: max = p + (1-p) S, min = p (1-S).
  std::set<PaintBox> found;
  if (contains(z, p)) found.insert(PaintBox());
  for (const auto& hi : z) {
    if (hi <= p) continue;
    Rational sum = (hi - p) / (1 - p);
    if (sum <= 0 || sum > 1) continue;
    Rational lo = p * (1 - sum);
    if (!contains(z, lo)) continue;
    std::vector<Rational> gaps;
    for (const auto& v : z) {
      if (v > lo) gaps.push_back(v - lo);
    }
    std::sort(gaps.begin(), gaps.end(), std::greater<Rational>());
    std::vector<Rational> current;
    std::function<void(std::size_t, const Rational&, std::size_t)> extend =
        [&](std::size_t slots, const Rational& remaining, std::size_t from) {
          if (slots == 0) {
            if (remaining != 0) return;
            PaintBox pb(current);
            if (support_subset(pb, target, p)) found.insert(pb);
            return;
          }
          for (std::size_t i = from; i < gaps.size(); ++i) {
            if (gaps[i] > remaining) continue;
            current.push_back(gaps[i]);
            extend(slots - 1, remaining - gaps[i], i);
            current.pop_back();
          }
        };
    for (std::size_t k = 1; k < z.size(); ++k) extend(k, sum, 0);
  }
  audit.candidates.assign(found.begin(), found.end());

  // Mixture weights w_c >= 0 reproducing the target xi law atom by atom.
  const std::size_t m = audit.candidates.size();
  audit.system.assign(z.size(), std::vector<Rational>(m, Rational(0)));
  for (std::size_t c = 0; c < m; ++c) {
    for (const auto& [atom, w] : xi_distribution(audit.candidates[c], p).atoms) {
      auto pos = std::lower_bound(z.begin(), z.end(), atom) - z.begin();
      audit.system[static_cast<std::size_t>(pos)][c] = w;
    }
  }
  for (const auto& atom : z) audit.target_weights.push_back(target_xi.atoms.at(atom));
  LinearProgram lp;
  lp.variables = m;
  lp.objective.assign(m, Rational(0));
  for (std::size_t c = 0; c < m; ++c) {
    if (!(audit.candidates[c] == target)) lp.objective[c] = 1;
  }
  for (std::size_t r = 0; r < z.size(); ++r) {
    lp.add_row(audit.system[r], Relation::equal, audit.target_weights[r]);
  }
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) throw Error("mixing system did not reach an optimum");
  audit.max_off_target = sol.value;
  audit.unique = sol.value == 0;
  if (!audit.unique) {
    PaintboxMixture rho;
    for (std::size_t c = 0; c < m; ++c) {
      if (sol.x[c] > 0) rho.atoms[audit.candidates[c]] = sol.x[c];
    }
    audit.counterexample = std::move(rho);
  }
  return audit;
}

}  // namespace gdc
