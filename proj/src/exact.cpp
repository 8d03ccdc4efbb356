#include "gdc/exact.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "gdc/errors.hpp"

namespace gdc {

namespace {

using IntRow = std::vector<BigInt>;

IntRow to_integer_row(const std::vector<Rational>& row, std::size_t columns) {
  if (row.size() != columns) throw DomainError("matrix row has wrong length");
  BigInt scale = 1;
  for (const auto& q : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  IntRow out(columns);
  for (std::size_t j = 0; j < columns; ++j) {
    out[j] = row[j].get_num() * (scale / row[j].get_den());
  }
  return out;
}

void reduce_by_content(IntRow& row) {
  BigInt g = 0;
  for (const auto& v : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

struct Echelon {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivots;  // pivot column of row r
};

Echelon gauss_jordan(const RationalMatrix& input, std::size_t columns) {
  Echelon e;
  e.rows.reserve(input.size());
  for (const auto& row : input) {
    e.rows.push_back(to_integer_row(row, columns));
    reduce_by_content(e.rows.back());
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < e.rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < e.rows.size() && e.rows[pivot][c] == 0) ++pivot;
    if (pivot == e.rows.size()) continue;
    std::swap(e.rows[r], e.rows[pivot]);
    if (e.rows[r][c] < 0) {
      for (auto& v : e.rows[r]) v = -v;
    }
    const IntRow& prow = e.rows[r];
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      if (i == r || e.rows[i][c] == 0) continue;
      BigInt factor = e.rows[i][c];
      IntRow& row = e.rows[i];
      for (std::size_t j = 0; j < columns; ++j) row[j] = prow[c] * row[j] - factor * prow[j];
      reduce_by_content(row);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rows.resize(r);
  return e;
}

}  // namespace

std::vector<std::vector<Rational>> null_space(const RationalMatrix& rows, std::size_t columns) {
  Echelon e = gauss_jordan(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      std::size_t c = e.pivots[r];
      v[c] = ratio(-e.rows[r][f], e.rows[r][c]);
    }
    BigInt scale = 1, content = 0;
    for (const auto& q : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    for (auto& q : v) {
      q *= scale;
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), q.get_num_mpz_t());
    }
    for (auto& q : v) q /= content;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& rows, std::size_t columns) {
  return gauss_jordan(rows, columns).pivots.size();
}

void LinearProgram::add_row(std::vector<Rational> row, Relation rel, Rational value) {
  if (row.size() != variables) throw DomainError("LP row has wrong length");
  rows.push_back(std::move(row));
  relations.push_back(rel);
  rhs.push_back(std::move(value));
}

namespace {

class Tableau {
 public:
  std::vector<std::vector<Rational>> t;  // rows x (cols + 1)
  std::vector<std::size_t> basis;
  std::size_t cols = 0;
  std::size_t pivots = 0;

  void pivot(std::size_t row, std::size_t col) {
    ++pivots;
    auto& prow = t[row];
    Rational inv = 1 / prow[col];
    for (auto& v : prow) {
      if (v != 0) v *= inv;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rational factor = t[i][col];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (prow[j] != 0) t[i][j] -= factor * prow[j];
      }
    }
    basis[row] = col;
  }

  // Maximizes cost . x over columns flagged in allowed. Returns false if unbounded.
  bool maximize(const std::vector<Rational>& cost, const std::vector<bool>& allowed,
                Rational& value) {
    std::vector<Rational> reduced(cols + 1, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) reduced[j] = -cost[j];
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[i][j] != 0) reduced[j] += cb * t[i][j];
      }
    }
    while (true) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (allowed[j] && reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols) {
        value = reduced[cols];
        return true;
      }
      std::size_t leave = t.size();
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][cols] / t[i][enter];
        if (leave == t.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t.size()) return false;
      pivot(leave, enter);
      Rational factor = reduced[enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[leave][j] != 0) reduced[j] -= factor * t[leave][j];
      }
    }
  }
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.rows.size();
  const std::size_t n = lp.variables;
  if (lp.objective.size() != n) throw DomainError("LP objective has wrong length");

  std::vector<std::vector<Rational>> rows = lp.rows;
  std::vector<Rational> rhs = lp.rhs;
  std::vector<Relation> rel = lp.relations;
  for (std::size_t i = 0; i < m; ++i) {
    if (rhs[i] < 0) {
      for (auto& v : rows[i]) v = -v;
      rhs[i] = -rhs[i];
      if (rel[i] == Relation::less_equal) {
        rel[i] = Relation::greater_equal;
      } else if (rel[i] == Relation::greater_equal) {
        rel[i] = Relation::less_equal;
      }
    }
  }

  std::size_t slack_count = 0, artificial_count = 0;
  for (auto r : rel) {
    if (r != Relation::equal) ++slack_count;
    if (r != Relation::less_equal) ++artificial_count;
  }
  const std::size_t first_slack = n;
  const std::size_t first_artificial = n + slack_count;
  Tableau tab;
  tab.cols = n + slack_count + artificial_count;
  tab.t.assign(m, std::vector<Rational>(tab.cols + 1, Rational(0)));
  tab.basis.assign(m, 0);
  std::size_t s = first_slack, a = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = rows[i][j];
    tab.t[i][tab.cols] = rhs[i];
    if (rel[i] == Relation::less_equal) {
      tab.t[i][s] = 1;
      tab.basis[i] = s++;
    } else {
      if (rel[i] == Relation::greater_equal) tab.t[i][s++] = -1;
      tab.t[i][a] = 1;
      tab.basis[i] = a++;
    }
  }

  LpSolution out;
  std::vector<bool> allowed(tab.cols, true);
  if (artificial_count > 0) {
    std::vector<Rational> phase1(tab.cols, Rational(0));
    for (std::size_t j = first_artificial; j < tab.cols; ++j) phase1[j] = -1;
    Rational value;
    tab.maximize(phase1, allowed, value);
    if (value < 0) {
      out.status = LpStatus::infeasible;
      out.pivots = tab.pivots;
      return out;
    }
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.t.size();) {
      if (tab.basis[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (tab.t[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == first_artificial) {
        tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
        tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        tab.pivot(i, col);
        ++i;
      }
    }
    for (std::size_t j = first_artificial; j < tab.cols; ++j) allowed[j] = false;
  }

  std::vector<Rational> cost(tab.cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.objective[j];
  Rational value;
  bool bounded = tab.maximize(cost, allowed, value);
  out.pivots = tab.pivots;
  if (!bounded) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.value = value;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.t.size(); ++i) {
    if (tab.basis[i] < n) out.x[tab.basis[i]] = tab.t[i][tab.cols];
  }
  return out;
}

MaxFlow::MaxFlow(int nodes) : nodes_(nodes), adjacent_(nodes), level_(nodes), cursor_(nodes) {}

void MaxFlow::add_edge(int from, int to, const BigInt& capacity) {
  adjacent_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, capacity});
  adjacent_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, BigInt(0)});
}

bool MaxFlow::levels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int id : adjacent_[u]) {
      const Arc& arc = arcs_[id];
      if (arc.cap > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[u] + 1;
        queue.push(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

BigInt MaxFlow::push(int node, int sink, const BigInt& limit) {
  if (node == sink) return limit;
  for (auto& i = cursor_[node]; i < adjacent_[node].size(); ++i) {
    int id = adjacent_[node][i];
    Arc& arc = arcs_[id];
    if (arc.cap <= 0 || level_[arc.to] != level_[node] + 1) continue;
    BigInt pushed = push(arc.to, sink, limit < arc.cap ? limit : arc.cap);
    if (pushed > 0) {
      arc.cap -= pushed;
      arcs_[id ^ 1].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

BigInt MaxFlow::run(int source, int sink) {
  BigInt total = 0;
  BigInt unlimited = 0;
  for (const auto& arc : arcs_) unlimited += arc.cap;
  unlimited += 1;
  while (levels(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (true) {
      BigInt pushed = push(source, sink, unlimited);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

}  // namespace gdc
