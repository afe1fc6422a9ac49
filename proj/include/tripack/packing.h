#ifndef TRIPACK_PACKING_H_
#define TRIPACK_PACKING_H_

#include <map>
#include <optional>
#include <vector>

#include "tripack/graph.h"
#include "tripack/lp.h"
#include "tripack/rational.h"

namespace tripack {

// Triangle weights in [0, 1] with every edge load at most 1. Only non-zero
// weights are stored. Packings of uncoloured simple graphs use Red.
struct FractionalPacking {
  EdgeColor color = EdgeColor::Red;
  std::map<Triangle, Rational> weights;

  // Sum of triangle weights (nu-star scaling).
  Rational value() const;
  // Sum of edge loads, i.e. 3 * value().
  Rational size() const { return 3 * value(); }
  Rational load(const Edge& e) const;
  std::map<Edge, Rational> loads() const;

  bool operator==(const FractionalPacking&) const = default;
};

// Non-negative edge weights covering every monochromatic triangle of `color`.
struct FractionalCover {
  EdgeColor color = EdgeColor::Red;
  std::map<Edge, Rational> edge_weights;

  Rational value() const;
  bool operator==(const FractionalCover&) const = default;
};

enum class SolveStatus { Optimal, LowerBoundOnly };

struct SolveResult {
  FractionalPacking packing;
  FractionalCover cover;
  Rational primal_value;
  Rational dual_value;
  SolveStatus status = SolveStatus::Optimal;
  bool warm_started = false;
  bool exact_simplex_ran = false;
};

struct PackValue {
  Rational value;  // 3 * (nu*_R + nu*_B)
  SolveResult red;
  SolveResult blue;
};

enum class SolveMode {
  // Certified optimum: rationalised float basis checked exactly, exact
  // simplex when that check fails.
  Exact,
  // Float simplex, rationalised and repaired; Optimal only when the
  // repaired primal and dual values coincide.
  Float,
};

struct PackingOptions {
  SolveMode mode = SolveMode::Exact;
  ApproximationOptions rounding;
};

// Maximum fractional packing of the colour-c triangles of g. Triangles with
// an Unassigned edge are ignored. `warm`, when given, must be feasible for g.
SolveResult nu_star(const ColoredGraph& g, EdgeColor c, const FractionalPacking* warm = nullptr,
                    const PackingOptions& options = {});

// Requires a complete colouring.
PackValue pack(const ColoredGraph& g, const PackingOptions& options = {});

// Throws UsageError naming the first violation; used for warm starts and
// certificate replay alike.
void check_feasible(const FractionalPacking& w, const ColoredGraph& g);
bool is_feasible(const FractionalPacking& w, const ColoredGraph& g);
bool covers_all(const FractionalCover& y, const ColoredGraph& g);

// Rounds float weights to rationals by continued fractions, then clamps to
// [0, 1] and scales down the triangles through each over-full edge.
FractionalPacking rationalize(const std::map<Triangle, double>& float_weights, const ColoredGraph& g,
                              EdgeColor c, const ApproximationOptions& options = {});

struct ExceedCertificate {
  FractionalPacking red;
  FractionalPacking blue;
  Rational value;  // 3 * (red.value() + blue.value())
};

struct ExceedOptions {
  // When the quick float bounds are inconclusive, settle the question with
  // exact solves. Without it, a missing certificate only means "not shown".
  bool exact_fallback = true;
  ApproximationOptions rounding;
};

// A pair of feasible packings with combined size strictly above `threshold`,
// or nothing. Never returns a certificate that does not verify.
std::optional<ExceedCertificate> certified_exceeds(const ColoredGraph& g, const Rational& threshold,
                                                   const ExceedOptions& options = {});

struct DecompositionResult {
  // Present iff feasible; every prescribed load is met with equality.
  std::optional<FractionalPacking> packing;
  // When infeasible: z with sum_{e in T} z_e >= 0 for every triangle and
  // sum_e demand(e) z_e < 0.
  std::map<Edge, Rational> farkas;
};

// Fractional triangle decomposition: every edge of g has load exactly 1.
DecompositionResult frac_decomposition(const SimpleGraph& g);

// Packing in K_n with load(e) = demand(e) for every edge (missing keys mean
// 0). Throws InputError for demands outside [0, 1] or n < 3.
DecompositionResult prescribed_packing(int n, const std::map<Edge, Rational>& demand);

// Checks a Farkas certificate against the prescribed-load system on K_n
// restricted to `support` (edges with positive demand plus edges of the host).
bool verify_farkas(const std::vector<Triangle>& triangles, const std::map<Edge, Rational>& demand,
                   const std::map<Edge, Rational>& farkas);

// Maximum number of edge-disjoint triangles; exhaustive, n <= 9.
int integer_nu(const SimpleGraph& g);

}  // namespace tripack

#endif  // TRIPACK_PACKING_H_
