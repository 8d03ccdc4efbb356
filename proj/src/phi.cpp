#include "gdc/phi.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "gdc/errors.hpp"

namespace gdc {

namespace {

constexpr std::size_t kPhiMatrixCap = 10;
constexpr std::size_t kMembershipCap = 6;
constexpr std::size_t kDominatesCap = 12;
constexpr std::size_t kAssociationCap = 4;

std::vector<Rational> powers(const Rational& base, int top) {
  std::vector<Rational> out(top + 1);
  out[0] = 1;
  for (int i = 1; i <= top; ++i) out[i] = out[i - 1] * base;
  return out;
}

// Adds weight * column(pi) into out.
void accumulate_column(const SetPartition& pi, const Rational& weight,
                       const std::vector<Rational>& p_pow, const std::vector<Rational>& q_pow,
                       std::vector<Rational>& out) {
  auto blocks = pi.blocks();
  const int b = static_cast<int>(blocks.size());
  std::vector<Config> block_mask(b, 0);
  for (int k = 0; k < b; ++k) {
    for (int e : blocks[k]) block_mask[k] |= Config{1} << e;
  }
  for (std::uint32_t colors = 0; colors < (1u << b); ++colors) {
    Config x = 0;
    for (int k = 0; k < b; ++k) {
      if (colors >> k & 1u) x |= block_mask[k];
    }
    int ones = std::popcount(colors);
    out[x] += weight * p_pow[ones] * q_pow[b - ones];
  }
}

Polynomial ones_polynomial(const IntegerPartition& shape, const Rational& p) {
  Polynomial poly{Rational(1)};
  for (int part : shape.parts) {
    Polynomial factor(part + 1, Rational(0));
    factor[0] = 1 - p;
    factor[part] += p;
    poly = multiply(poly, factor);
  }
  poly.resize(shape.total() + 1, Rational(0));
  return poly;
}

std::vector<std::string> rgs_labels(const std::vector<SetPartition>& parts) {
  std::vector<std::string> out;
  out.reserve(parts.size());
  for (const auto& pi : parts) out.push_back(pi.to_string());
  return out;
}

std::vector<std::string> shape_labels(const std::vector<IntegerPartition>& shapes) {
  std::vector<std::string> out;
  out.reserve(shapes.size());
  for (const auto& s : shapes) out.push_back(s.to_string());
  return out;
}

// Shared two-step uniqueness decision over a column space.
UniquenessCertificate decide_uniqueness(const RationalMatrix& matrix, std::size_t columns,
                                        const std::vector<bool>& in_support,
                                        std::vector<std::string> labels) {
  UniquenessCertificate cert;
  cert.coordinates = std::move(labels);

  std::vector<std::size_t> supp;
  for (std::size_t j = 0; j < columns; ++j) {
    if (in_support[j]) supp.push_back(j);
  }
  RationalMatrix restricted(matrix.size(), std::vector<Rational>(supp.size()));
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t k = 0; k < supp.size(); ++k) restricted[i][k] = matrix[i][supp[k]];
  }
  auto inside = null_space(restricted, supp.size());
  auto basis = null_space(matrix, columns);
  cert.kernel_dimension = basis.size();
  if (!inside.empty()) {
    SignedVector v(columns, Rational(0));
    for (std::size_t k = 0; k < supp.size(); ++k) v[supp[k]] = inside.front()[k];
    cert.unique = false;
    cert.method = "support-kernel";
    cert.witness = std::move(v);
    return cert;
  }
  if (basis.empty()) {
    cert.unique = true;
    cert.method = "trivial-kernel";
    return cert;
  }

  // Variables: c+_j, c-_j for each basis vector; v = sum (c+ - c-) b_j.
  const std::size_t d = basis.size();
  LinearProgram lp;
  lp.variables = 2 * d;
  lp.objective.assign(2 * d, Rational(0));
  std::vector<Rational> total(2 * d, Rational(0));
  for (std::size_t i = 0; i < columns; ++i) {
    if (in_support[i]) continue;
    std::vector<Rational> row(2 * d);
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = basis[j][i];
      row[d + j] = -basis[j][i];
      total[j] += basis[j][i];
      total[d + j] -= basis[j][i];
    }
    lp.add_row(std::move(row), Relation::greater_equal, Rational(0));
  }
  lp.objective = total;
  lp.add_row(total, Relation::less_equal, Rational(1));
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) throw Error("uniqueness LP did not reach an optimum");
  if (sol.value == 0) {
    cert.unique = true;
    cert.method = "lp-optimum-zero";
    return cert;
  }
  if (sol.value != 1) throw Error("uniqueness LP optimum is neither 0 nor 1");
  SignedVector v(columns, Rational(0));
  for (std::size_t j = 0; j < d; ++j) {
    Rational c = sol.x[j] - sol.x[d + j];
    if (c == 0) continue;
    for (std::size_t i = 0; i < columns; ++i) v[i] += c * basis[j][i];
  }
  cert.unique = false;
  cert.method = "lp-optimum-one";
  cert.witness = std::move(v);
  return cert;
}

Rational common_denominator(const ColorMeasure& a, const ColorMeasure& b) {
  BigInt scale = 1;
  for (const auto* m : {&a, &b}) {
    for (const auto& w : m->weights) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), w.get_den_mpz_t());
    }
  }
  return Rational(scale);
}

}  // namespace

RationalMatrix phi_matrix(int n, const Rational& p) {
  check_probability(p);
  if (n < 1) throw DomainError("n must be positive");
  check_cap("PHI_MATRIX_N", kPhiMatrixCap, static_cast<std::size_t>(n));
  auto parts = enumerate_set_partitions(n);
  auto p_pow = powers(p, n);
  auto q_pow = powers(1 - p, n);
  RationalMatrix m(std::size_t{1} << n, std::vector<Rational>(parts.size(), Rational(0)));
  std::vector<Rational> col(std::size_t{1} << n);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    std::fill(col.begin(), col.end(), Rational(0));
    accumulate_column(parts[j], Rational(1), p_pow, q_pow, col);
    for (std::size_t x = 0; x < col.size(); ++x) m[x][j] = col[x];
  }
  return m;
}

RationalMatrix phi_exch_matrix(int n, const Rational& p) {
  check_probability(p);
  auto shapes = enumerate_integer_partitions(n);
  RationalMatrix m(n + 1, std::vector<Rational>(shapes.size(), Rational(0)));
  for (std::size_t j = 0; j < shapes.size(); ++j) {
    auto poly = ones_polynomial(shapes[j], p);
    for (int k = 0; k <= n; ++k) m[k][j] = poly[k];
  }
  return m;
}

ColorMeasure apply_phi(const RERMeasure& nu, const Rational& p) {
  check_probability(p);
  ColorMeasure out(nu.n);
  auto p_pow = powers(p, nu.n);
  auto q_pow = powers(1 - p, nu.n);
  for (const auto& [pi, w] : nu.weights) {
    if (pi.size() != nu.n) throw DomainError("partition size does not match measure");
    accumulate_column(pi, w, p_pow, q_pow, out.weights);
  }
  return out;
}

OnesLaw phi_exch(const ExchRERMeasure& nu, const Rational& p) {
  check_probability(p);
  OnesLaw law{nu.n, std::vector<Rational>(nu.n + 1, Rational(0))};
  for (const auto& [shape, w] : nu.weights) {
    auto poly = ones_polynomial(shape, p);
    for (int k = 0; k <= nu.n; ++k) law.weights[k] += w * poly[k];
  }
  return law;
}

Space parse_space(const std::string& name) {
  if (name == "general") return Space::general;
  if (name == "exchangeable") return Space::exchangeable;
  throw DomainError("space must be general or exchangeable");
}

std::string to_string(Space space) {
  return space == Space::general ? "general" : "exchangeable";
}

KernelBasis kernel(int n, const Rational& p, Space space) {
  KernelBasis out;
  out.space = space;
  out.n = n;
  out.p = p;
  if (space == Space::general) {
    auto m = phi_matrix(n, p);
    out.coordinates = rgs_labels(enumerate_set_partitions(n));
    out.basis = null_space(m, out.coordinates.size());
  } else {
    auto m = phi_exch_matrix(n, p);
    out.coordinates = shape_labels(enumerate_integer_partitions(n));
    out.basis = null_space(m, out.coordinates.size());
  }
  return out;
}

std::vector<Rational> certification_points(int n) {
  std::vector<Rational> out;
  for (int k = 1; k <= n + 1; ++k) out.emplace_back(k, n + 2);
  for (auto& q : out) q.canonicalize();
  return out;
}

bool all_p_equal(const RERMeasure& first, const RERMeasure& second) {
  if (first.n != second.n) throw DomainError("measures live on different ground sets");
  for (const auto& p : certification_points(first.n)) {
    if (apply_phi(first, p) != apply_phi(second, p)) return false;
  }
  return true;
}

bool all_p_equal(const ExchRERMeasure& first, const ExchRERMeasure& second) {
  if (first.n != second.n) throw DomainError("measures live on different ground sets");
  for (const auto& p : certification_points(first.n)) {
    if (phi_exch(first, p) != phi_exch(second, p)) return false;
  }
  return true;
}

Polynomial fingerprint_class_count_pgf(const RERMeasure& nu, const std::vector<int>& subset) {
  Polynomial out(subset.size() + 1, Rational(0));
  for (const auto& [pi, w] : nu.weights) {
    out[induced_partition(pi, subset).block_count()] += w;
  }
  return out;
}

Rational fingerprint_size_mean(const RERMeasure& nu, int t) {
  Rational total = 0;
  for (const auto& [pi, w] : nu.weights) {
    for (int size : pi.block_sizes()) {
      if (size == t) total += w;
    }
  }
  return total;
}

Rational fingerprint_class_prob(const RERMeasure& nu, const std::vector<int>& subset) {
  if (subset.empty()) throw DomainError("class probability needs a non-empty subset");
  Rational total = 0;
  for (const auto& [pi, w] : nu.weights) {
    std::uint32_t label = pi.label(subset.front() - 1);
    int count = 0;
    bool inside = true;
    for (int e : subset) {
      if (e < 1 || e > nu.n) throw DomainError("subset element outside the ground set");
      if (pi.label(e - 1) != label) inside = false;
    }
    for (auto l : pi.rgs()) {
      if (l == label) ++count;
    }
    if (inside && count == static_cast<int>(subset.size())) total += w;
  }
  return total;
}

UniquenessCertificate is_unique(const RERMeasure& nu, const Rational& p, Space relative_to) {
  nu.validate();
  if (relative_to == Space::exchangeable) return is_unique(symmetrize(nu), p);
  auto parts = enumerate_set_partitions(nu.n);
  auto m = phi_matrix(nu.n, p);
  std::vector<bool> in_support(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) in_support[j] = nu.mass(parts[j]) > 0;
  return decide_uniqueness(m, parts.size(), in_support, rgs_labels(parts));
}

UniquenessCertificate is_unique(const ExchRERMeasure& nu, const Rational& p) {
  nu.validate();
  auto shapes = enumerate_integer_partitions(nu.n);
  auto m = phi_exch_matrix(nu.n, p);
  std::vector<bool> in_support(shapes.size());
  for (std::size_t j = 0; j < shapes.size(); ++j) in_support[j] = nu.mass(shapes[j]) > 0;
  return decide_uniqueness(m, shapes.size(), in_support, shape_labels(shapes));
}

std::optional<RERMeasure> cp_membership(const ColorMeasure& mu, const Rational& p) {
  check_probability(p);
  check_cap("MEMBERSHIP_N", kMembershipCap, static_cast<std::size_t>(mu.n));
  auto parts = enumerate_set_partitions(mu.n);
  auto m = phi_matrix(mu.n, p);
  LinearProgram lp;
  lp.variables = parts.size();
  lp.objective.assign(parts.size(), Rational(0));
  for (std::size_t x = 0; x < m.size(); ++x) lp.add_row(m[x], Relation::equal, mu.weights[x]);
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) return std::nullopt;
  RERMeasure nu;
  nu.n = mu.n;
  for (std::size_t j = 0; j < parts.size(); ++j) nu.add(parts[j], sol.x[j]);
  return nu;
}

TwoPointRepresentation represent_n2(const ColorMeasure& mu) {
  if (mu.n != 2) throw DomainError("represent_n2 needs a measure on [2]");
  mu.validate();
  const Rational& m11 = mu[parse_config("11")];
  const Rational& m10 = mu[parse_config("10")];
  const Rational& m01 = mu[parse_config("01")];
  const Rational& m00 = mu[parse_config("00")];
  if (m10 != m01) throw NotColorProcessError("mu(10) != mu(01)");
  if (m11 * m00 < m10 * m01) throw NotColorProcessError("negative pairwise correlation");
  Rational p = m11 + m01;
  if (p == 0 || p == 1) throw DomainError("degenerate measure: p is 0 or 1");
  Rational apart = m01 / ((m11 + m01) * (m01 + m00));
  RERMeasure nu;
  nu.n = 2;
  nu.add(SetPartition::singletons(2), apart);
  nu.add(SetPartition::full(2), 1 - apart);
  if (apply_phi(nu, p) != mu) throw Error("represent_n2 round-trip failed");
  return {nu, p};
}

ThreePointRepresentation represent_n3_half(const ColorMeasure& mu) {
  if (mu.n != 3) throw DomainError("represent_n3_half needs a measure on [3]");
  mu.validate();
  if (!is_01_symmetric(mu)) throw NotColorProcessError("measure is not 0-1-symmetric");
  for (int u = 0; u < 3; ++u) {
    for (int v = u + 1; v < 3; ++v) {
      if (pair_covariance(mu, u, v) < 0) {
        throw NotColorProcessError("negative pairwise covariance");
      }
    }
  }
  // sep_mass[c]: mass of the configuration with only element c+1 at 0.
  std::array<Rational, 3> sep_mass;
  for (int c = 0; c < 3; ++c) sep_mass[c] = mu[Config{7} ^ (Config{1} << c)];
  int c = 2;
  for (int k = 1; k >= 0; --k) {
    if (sep_mass[k] < sep_mass[c]) c = k;
  }
  const Rational& all_ones = mu[Config{7}];
  std::vector<int> others;
  for (int k = 0; k < 3; ++k) {
    if (k != c) others.push_back(k);
  }
  const int a = others[0], b = others[1];
  RERMeasure nu;
  nu.n = 3;
  nu.add(SetPartition::full(3), 2 * (all_ones + sep_mass[c] - sep_mass[a] - sep_mass[b]));
  // Partition separating a from the pair {b, c} has weight 4(sep_mass[a] - sep_mass[c]).
  nu.add(SetPartition::from_blocks(3, {{a + 1}, {b + 1, c + 1}}), 4 * (sep_mass[a] - sep_mass[c]));
  nu.add(SetPartition::from_blocks(3, {{b + 1}, {a + 1, c + 1}}), 4 * (sep_mass[b] - sep_mass[c]));
  nu.add(SetPartition::singletons(3), 8 * sep_mass[c]);
  nu.validate();
  if (apply_phi(nu, Rational(1, 2)) != mu) throw Error("represent_n3_half round-trip failed");
  ThreePointRepresentation out;
  out.nu = std::move(nu);
  out.separated = c + 1;
  out.relabeling = {a + 1, b + 1, c + 1};
  return out;
}

bool dominates(const ColorMeasure& lower, const ColorMeasure& upper) {
  if (lower.n != upper.n) throw DomainError("measures live on different ground sets");
  check_cap("DOMINATES_N", kDominatesCap, static_cast<std::size_t>(lower.n));
  lower.validate();
  upper.validate();
  const int n = lower.n;
  const Config configs = Config{1} << n;
  const int source = static_cast<int>(configs), sink = source + 1;
  Rational scale = common_denominator(lower, upper);
  BigInt total = 0;
  MaxFlow flow(static_cast<int>(configs) + 2);
  BigInt unlimited = scale.get_num() + 1;
  for (Config x = 0; x < configs; ++x) {
    Rational supply = lower[x] * scale;
    Rational demand = upper[x] * scale;
    if (supply > 0) {
      flow.add_edge(source, static_cast<int>(x), supply.get_num());
      total += supply.get_num();
    }
    if (demand > 0) flow.add_edge(static_cast<int>(x), sink, demand.get_num());
    // Monotone moves along the cube's cover relations.
    for (int i = 0; i < n; ++i) {
      if (!(x >> i & 1u)) flow.add_edge(static_cast<int>(x), static_cast<int>(x | (1u << i)), unlimited);
    }
  }
  return flow.run(source, sink) == total;
}

std::vector<std::vector<bool>> enumerate_up_sets(int n) {
  check_cap("POSITIVE_ASSOCIATION_N", kAssociationCap, static_cast<std::size_t>(n));
  const Config configs = Config{1} << n;
  std::vector<std::vector<bool>> out;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << configs); ++set) {
    bool closed = true;
    for (Config x = 0; x < configs && closed; ++x) {
      if (!(set >> x & 1u)) continue;
      for (int i = 0; i < n; ++i) {
        if (!(set >> (x | (1u << i)) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<bool> event(configs);
    for (Config x = 0; x < configs; ++x) event[x] = set >> x & 1u;
    out.push_back(std::move(event));
  }
  return out;
}

AssociationReport positive_association_check(const ColorMeasure& mu) {
  auto ups = enumerate_up_sets(mu.n);
  const Config configs = Config{1} << mu.n;
  std::vector<std::uint32_t> masks;
  for (const auto& e : ups) {
    std::uint32_t m = 0;
    for (Config x = 0; x < configs; ++x) {
      if (e[x]) m |= 1u << x;
    }
    masks.push_back(m);
  }
  std::unordered_map<std::uint32_t, Rational> memo;
  auto prob = [&](std::uint32_t m) -> const Rational& {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    Rational total = 0;
    for (Config x = 0; x < configs; ++x) {
      if (m >> x & 1u) total += mu[x];
    }
    return memo.emplace(m, total).first->second;
  };
  AssociationReport report;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i; j < masks.size(); ++j) {
      Rational both = prob(masks[i] & masks[j]);
      Rational a = prob(masks[i]), b = prob(masks[j]);
      if (both < a * b) {
        report.associated = false;
        report.first_event = ups[i];
        report.second_event = ups[j];
        report.p_first = a;
        report.p_second = b;
        report.p_both = both;
        return report;
      }
    }
  }
  return report;
}

bool fkg_lattice_check(const ColorMeasure& mu) {
  for (const auto& w : mu.weights) {
    if (w <= 0) throw DomainError("FKG lattice check needs full support");
  }
  const Config configs = Config{1} << mu.n;
  for (int i = 0; i < mu.n; ++i) {
    for (int j = i + 1; j < mu.n; ++j) {
      const Config bi = Config{1} << i, bj = Config{1} << j;
      for (Config x = 0; x < configs; ++x) {
        if (x & (bi | bj)) continue;
        if (mu[x | bi | bj] * mu[x] < mu[x | bi] * mu[x | bj]) return false;
      }
    }
  }
  return true;
}

}  // namespace gdc
