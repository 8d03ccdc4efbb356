#pragma once

#include <cstddef>
#include <vector>

#include "gdc/rational.hpp"

namespace gdc {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Null space basis by fraction-free Gauss-Jordan elimination. Each vector is a
// primitive integer vector with a positive entry at its free column.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& rows, std::size_t columns);
std::size_t rank(const RationalMatrix& rows, std::size_t columns);

enum class Relation { less_equal, equal, greater_equal };

// maximize objective . x subject to rows x (relation) rhs, x >= 0.
struct LinearProgram {
  std::size_t variables = 0;
  RationalMatrix rows;
  std::vector<Relation> relations;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;

  void add_row(std::vector<Rational> row, Relation rel, Rational value);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

// Two-phase tableau simplex with Bland's rule.
LpSolution solve_lp(const LinearProgram& lp);

// Dinic max-flow on big-integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes);
  void add_edge(int from, int to, const BigInt& capacity);
  BigInt run(int source, int sink);

 private:
  struct Arc {
    int to;
    BigInt cap;
  };
  bool levels(int source, int sink);
  BigInt push(int node, int sink, const BigInt& limit);

  int nodes_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacent_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace gdc
