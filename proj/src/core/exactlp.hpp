#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "complex.hpp"
#include "rational.hpp"

namespace fillprobe {

using SparseVector = std::map<std::size_t, Rational>;

// minimize c.x  subject to  A x = b,  x >= 0
struct LinearProgram {
  std::vector<Rational> objective;
  SparseMatrix constraints;
  std::vector<Rational> rhs;

  std::size_t variable_count() const { return objective.size(); }
  std::size_t constraint_count() const { return rhs.size(); }
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

struct LPResult {
  LPStatus status = LPStatus::kInfeasible;
  Rational value;        // valid when optimal
  SparseVector witness;  // valid when optimal; omitted entries are zero
  // One multiplier per constraint row (optimal LPs only): c - A^T y >= 0
  // holds at optimality and y.b equals the value.
  std::vector<Rational> duals;
  std::size_t pivots = 0;
};

enum class PivotRule {
  kBland,
  // Most negative reduced cost; falls back to Bland after a run of
  // degenerate pivots.
  kLargestCoefficient,
};

struct SolveOptions {
  PivotRule rule = PivotRule::kBland;
  bool verify = true;
};

// Two-phase primal simplex over exact rationals. Throws Error(kInvalidArgument)
// on dimension mismatch and Error(kInternal) if verification fails.
LPResult solve_lp(const LinearProgram& lp, SolveOptions options = {});

struct IlpOptions {
  std::size_t node_budget = 100000;
  SolveOptions lp;
};

// Branch and bound on the variables flagged in `integral`: most fractional
// variable first, floor branch before ceiling branch. Throws ResourceError
// carrying the best bounds when the node budget runs out.
LPResult solve_ilp(const LinearProgram& lp, const std::vector<bool>& integral, IlpOptions options = {});

// min t subject to A x = b and |x_i| <= t. Variables flagged in free_vars
// are unrestricted in sign, the rest are nonnegative. The witness holds x
// (signed); value is t.
LPResult solve_minmax(const SparseMatrix& a, const std::vector<Rational>& b, const std::vector<bool>& free_vars,
                      SolveOptions options = {});

// Exact feasibility and objective check of an optimal result.
bool verify_witness(const LinearProgram& lp, const LPResult& result);

struct VerificationStats {
  std::size_t verified = 0;
  std::size_t failed = 0;
};
// Process-wide counters of witness checks performed by the solvers.
VerificationStats verification_stats();

}  // namespace fillprobe
