#pragma once

#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "exactlp.hpp"

namespace fillprobe {

enum class Ring { kRational, kIntegral };
enum class FillStatus { kExactWithinBall, kUpperBound };

struct FillingCertificate {
  Rational value;
  Chain witness{2};
  Ring ring = Ring::kRational;
  unsigned radius = 0;
  FillStatus status = FillStatus::kUpperBound;
  // Set by norm_with_escalation when two consecutive radii agreed. This is
  // evidence about the infinite complex, not a proof.
  bool stabilized = false;
  // (radius, value) for every radius tried that admitted a filling.
  std::vector<std::pair<unsigned, Rational>> history;
  // Number of 2-cells the final LP was restricted to.
  std::size_t cells_used = 0;
};

struct FillOptions {
  SolveOptions lp;
  std::size_t node_budget = 100000;
};

Rational l1_norm(const Chain& c);

struct BoundaryCheck {
  bool fillable = false;  // false means no filling inside this ball only
  Chain witness{2};
};

// Throws Error(kInvalidArgument) unless b is a 1-cycle of x.
BoundaryCheck is_boundary(const Chain& b, const TwoComplex& x, const FillOptions& options = {});

// min |a|_1 over rational 2-chains a in x with d2 a = b. Throws
// Error(kNoFilling) when b bounds nothing inside the ball.
FillingCertificate filling_norm_q(const Chain& b, const TwoComplex& x, const FillOptions& options = {});

// Same over integral 2-chains; b must be integral. Budget exhaustion throws
// ResourceError with (lower, upper) bounds.
FillingCertificate filling_norm_z(const Chain& b, const TwoComplex& x, const FillOptions& options = {});

// (|b|_1 / 2) + 1 + longest relator, the first radius tried by default.
unsigned default_initial_radius(std::size_t boundary_length, std::size_t max_relator_length);

struct EscalationOptions {
  FillOptions fill;
  BallLimits ball;
  Ring ring = Ring::kRational;
  std::string cache_dir;  // empty disables the on-disk complex cache
};

// Fills the loop read from the identity at radii r0, r0+1, ..., r_max (r_max
// clamped to the vertex cap) and stops once two consecutive radii agree.
// Radii whose ball cannot hold the loop or its filling are skipped. Throws
// Error(kNoFilling) when no radius admits a filling.
FillingCertificate norm_with_escalation(const Word& loop, const GroupPresentation& p, const RewritingSystem& rws,
                                        unsigned r0, unsigned r_max, const EscalationOptions& options = {});

// As above on a prebuilt complex whose radius bounds r_max.
FillingCertificate norm_with_escalation(const Word& loop, const TwoComplex& largest, unsigned r0, unsigned r_max,
                                        const EscalationOptions& options = {});

}  // namespace fillprobe
