#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "filling.hpp"

namespace fillprobe {

enum class SamplingMode { kExhaustive, kSampled };

struct FVRow {
  unsigned k = 0;
  Rational value;  // max rational filling norm over boundaries with |b|_1 <= k
  Word witness;    // loop attaining it, empty when value is 0
  Rational witness_length;
  unsigned radius = 0;  // radius of the witness certificate
  bool stabilized = false;
};

struct FVEstimate {
  std::vector<FVRow> table;  // one row per k = 1..k_max
  SamplingMode mode = SamplingMode::kExhaustive;
  std::string presentation_id;
  std::size_t max_relator_length = 0;  // bounds |d2 a|_1 <= M |a|_1; reported only
  std::size_t boundaries = 0;          // distinct loops filled
  std::size_t unfilled = 0;            // loops with no filling inside the ball
  unsigned enumeration_radius = 0;
  unsigned complex_radius = 0;
  // Set when a cap cut the search short; the table is then a lower estimate.
  bool capped = false;
  std::string cap_reason;
};

struct ProbeBudget {
  unsigned k_max = 12;
  // Exhaustive up to this k_max, sampled beyond it, unless mode is forced.
  unsigned exhaustive_limit = 12;
  std::optional<SamplingMode> mode;
  std::uint64_t seed = 0;
  std::size_t samples = 256;
  unsigned radius_cap = 64;
  BallLimits ball;
  CircuitLimits circuits;
  FillOptions fill;
  unsigned workers = 1;
  std::string cache_dir;
};

// Requires a confluent system and k_max >= 3. Resource caps mark the
// estimate as capped rather than throwing.
FVEstimate estimate_fv(const GroupPresentation& p, const RewritingSystem& rws, const ProbeBudget& budget = {});

enum class GrowthClass { kLinear, kQuadratic, kSuperquadratic };

struct GrowthFit {
  GrowthClass growth = GrowthClass::kLinear;
  Rational K;         // least K with value(k) <= K k on every row
  Rational residual;  // |relative drift| of the chosen trend
  std::size_t rows_used = 0;
  Rational drift_tolerance{1, 10};
};

// Over the upper half of the nonzero rows, measures the relative drift of
// value/k, value/k^2 and value/k^3 between the first and last row used.
// Linear when value/k drifts up by at most the tolerance; otherwise the
// flatter of the quadratic and cubic trends, ties toward quadratic.
GrowthFit fit_growth(const std::vector<std::pair<unsigned, Rational>>& table,
                     const Rational& drift_tolerance = Rational(1, 10));
GrowthFit fit_growth(const FVEstimate& estimate, const Rational& drift_tolerance = Rational(1, 10));

enum class HyperbolicityVerdict { kConsistentWithHyperbolic, kNonHyperbolicEvidence, kInconclusive };

struct HyperbolicityReport {
  HyperbolicityVerdict verdict = HyperbolicityVerdict::kInconclusive;
  FVEstimate estimate;
  GrowthFit fit;
  std::optional<FVRow> witness;  // attached to non-hyperbolic evidence
  std::string note;
};

// Finite-scale evidence only: a linear table is consistent with a linear
// isoperimetric inequality, never a proof of one.
HyperbolicityReport probe_hyperbolicity(const GroupPresentation& p, const RewritingSystem& rws,
                                        const ProbeBudget& budget = {});

enum class FlowVerdict { kBoundedFlow, kGrowingFlow, kInconclusive };

struct FlowRow {
  unsigned radius = 0;
  bool solved = false;
  Rational t;  // min over 1-chains c with (d1 c)(v) = 1 at depth < radius of max |c_e|
  Chain witness{1};
  std::size_t interior_vertices = 0;
  std::size_t edges = 0;
  std::string error;
};

struct AmenabilityProbe {
  std::vector<FlowRow> table;
  FlowVerdict verdict = FlowVerdict::kInconclusive;
  std::string note;
};

struct FlowOptions {
  BallLimits ball;
  SolveOptions lp;
  unsigned workers = 1;
  std::string cache_dir;
};

// Each radius must be at least 1. Rows are sorted by radius.
AmenabilityProbe probe_amenability(const GroupPresentation& p, const RewritingSystem& rws,
                                   std::vector<unsigned> radii, const FlowOptions& options = {});

// Trend rule over the trailing window of max(3, n/2 + 1) solved rows:
// non-increasing t, or increments that at least halve each step, is a
// bounded flow; strictly increasing t without that contraction is growing.
FlowVerdict classify_flow(const std::vector<Rational>& t);

std::string to_string(SamplingMode m);
std::string to_string(GrowthClass g);
std::string to_string(HyperbolicityVerdict v);
std::string to_string(FlowVerdict v);

}  // namespace fillprobe
