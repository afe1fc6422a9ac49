#ifndef TRIPACK_LP_H_
#define TRIPACK_LP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "tripack/rational.h"

// Small dense revised simplex for the 0/1 linear programs that arise from
// triangle packings:
//
//   maximise  c.x   subject to  A_i.x <= b_i  or  A_i.x = b_i,  x >= 0,
//
// with A a 0/1 matrix and b >= 0. The float path finds a basis quickly; the
// exact path rationalises that basis's primal and dual values and checks
// them in rational arithmetic, falling back to an exact simplex (Bland's
// rule) started from the float basis when the check fails.
namespace tripack::lp {

enum class RowSense : std::uint8_t { LessEqual, Equal };

struct Problem {
  int num_rows = 0;
  std::vector<RowSense> sense;
  std::vector<Rational> rhs;
  // Column j has coefficient 1 in each listed row and 0 elsewhere.
  std::vector<std::vector<int>> columns;
  std::vector<Rational> objective;

  int num_columns() const { return static_cast<int>(columns.size()); }
  int add_row(RowSense s, Rational b);
  int add_column(std::vector<int> rows, Rational cost);
};

enum class Status { Optimal, Infeasible };

struct FloatSolution {
  Status status = Status::Optimal;
  std::vector<double> x;
  // Optimal: dual values. Infeasible: phase-one duals (a Farkas ray).
  std::vector<double> duals;
  double objective = 0;
  // Column ids in [0, columns) are structural; columns + i is the slack or
  // artificial column of row i.
  std::vector<int> basis;
  int pivots = 0;
  bool warm_started = false;
};

struct ExactSolution {
  Status status = Status::Optimal;
  std::vector<Rational> x;
  // Optimal: a dual solution with b.y = c.x. Infeasible: z with z.A_j >= 0
  // for every column, z_i >= 0 on inequality rows, and b.z < 0.
  std::vector<Rational> duals;
  Rational objective;
  bool exact_simplex_ran = false;
  int float_pivots = 0;
  int exact_pivots = 0;
};

struct SolveOptions {
  // Feasible point used to build the starting basis (one entry per column).
  const std::vector<double>* warm_x = nullptr;
  ApproximationOptions rounding;
  // Skip the float path and run the exact simplex from the slack basis.
  bool exact_only = false;
};

FloatSolution solve_float(const Problem& p, const SolveOptions& options = {});
ExactSolution solve_exact(const Problem& p, const SolveOptions& options = {});

bool is_primal_feasible(const Problem& p, const std::vector<Rational>& x);
bool is_dual_feasible(const Problem& p, const std::vector<Rational>& y);
bool is_farkas_ray(const Problem& p, const std::vector<Rational>& z);
Rational objective_value(const Problem& p, const std::vector<Rational>& x);
Rational dual_value(const Problem& p, const std::vector<Rational>& y);

}  // namespace tripack::lp

#endif  // TRIPACK_LP_H_
