#include "probes.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cache.hpp"
#include "error.hpp"
#include "pool.hpp"

namespace fillprobe {

namespace {

void require_confluent(const RewritingSystem& rws) {
  if (!rws.confluent())
    throw Error(ErrorCode::kIncompleteRewriting, "probes need a confluent rewriting system");
}

// Least rotation of w or of its inverse. Rotations are translates of the
// same loop, so they share a filling norm.
Word cyclic_representative(const Word& w) {
  Word best = w;
  for (const Word& v : {w, inverse(w)}) {
    Word rotated = v;
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      if (shortlex_less(rotated, best)) best = rotated;
    }
  }
  return best;
}

std::vector<Word> exhaustive_loops(const CayleyBall& ball, unsigned k_max, const CircuitLimits& limits) {
  std::vector<Word> out;
  for (auto& c : enumerate_circuits(ball, k_max, limits)) out.push_back(std::move(c.word));
  return out;
}

// Non-backtracking outward walk of half the target length, closed by a
// geodesic back to the identity along decreasing BFS depth.
std::vector<Word> sampled_loops(const CayleyBall& ball, unsigned k_max, std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  const Letter gens = static_cast<Letter>(ball.generator_count);
  std::vector<Word> out;
  if (gens == 0) return out;
  for (std::size_t s = 0; s < samples; ++s) {
    unsigned target = 3 + static_cast<unsigned>(rng() % (k_max - 2));
    std::size_t v = 0;
    Word w;
    Letter last = 0;
    for (unsigned i = 0; i < target / 2; ++i) {
      std::vector<Letter> options;
      for (Letter g = 1; g <= gens; ++g)
        for (Letter x : {g, static_cast<Letter>(-g)})
          if (x != -last && ball.step(v, x) != CayleyBall::kOutside) options.push_back(x);
      if (options.empty()) break;
      last = options[rng() % options.size()];
      w.push_back(last);
      v = static_cast<std::size_t>(ball.step(v, last));
    }
    while (v != 0) {
      for (Letter g = 1; g <= gens; ++g) {
        bool moved = false;
        for (Letter x : {g, static_cast<Letter>(-g)}) {
          auto t = ball.step(v, x);
          if (t != CayleyBall::kOutside && ball.depth[static_cast<std::size_t>(t)] + 1 == ball.depth[v]) {
            w.push_back(x);
            v = static_cast<std::size_t>(t);
            moved = true;
            break;
          }
        }
        if (moved) break;
      }
    }
    w = free_reduce(w);
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

struct LoopResult {
  Word loop;
  Rational length;
  std::optional<FillingCertificate> cert;
  bool unfilled = false;
  std::string resource;
};

Rational trend_drift(const std::vector<std::pair<unsigned, Rational>>& rows, int power) {
  auto trend = [&](const std::pair<unsigned, Rational>& row) {
    Rational d = 1;
    for (int i = 0; i < power; ++i) d *= row.first;
    return Rational(row.second / d);
  };
  Rational first = trend(rows.front());
  Rational last = trend(rows.back());
  Rational scale = std::max(abs_value(first), abs_value(last));
  if (scale == 0) return 0;
  return (last - first) / scale;
}

}  // namespace

FVEstimate estimate_fv(const GroupPresentation& p, const RewritingSystem& rws, const ProbeBudget& budget) {
  require_confluent(rws);
  if (budget.k_max < 3) throw Error(ErrorCode::kInvalidArgument, "k_max must be at least 3");
  FVEstimate est;
  est.mode = budget.mode.value_or(budget.k_max <= budget.exhaustive_limit ? SamplingMode::kExhaustive
                                                                           : SamplingMode::kSampled);
  est.presentation_id = presentation_id(p);
  est.max_relator_length = p.max_relator_length();
  const std::size_t m = est.max_relator_length;

  unsigned wanted = std::min(budget.radius_cap, default_initial_radius(budget.k_max, m) + 1);
  unsigned top = clamp_radius(p, rws, wanted, budget.ball);
  TwoComplex largest = load_or_build_complex(p, rws, top, budget.ball, budget.cache_dir);
  est.complex_radius = top;
  est.enumeration_radius = (budget.k_max + 1) / 2;
  if (est.enumeration_radius > top) {
    est.capped = true;
    est.cap_reason = "ball radius " + std::to_string(top) + " cannot hold every loop of length " +
                     std::to_string(budget.k_max);
    est.enumeration_radius = top;
  }
  CayleyBall enumeration_ball = truncate_ball(largest.ball, est.enumeration_radius);

  std::vector<Word> loops;
  try {
    loops = est.mode == SamplingMode::kExhaustive
                ? exhaustive_loops(enumeration_ball, budget.k_max, budget.circuits)
                : sampled_loops(enumeration_ball, budget.k_max, budget.seed, budget.samples);
  } catch (const ResourceError& e) {
    est.capped = true;
    est.cap_reason = e.what();
  }

  std::map<Word, bool, bool (*)(const Word&, const Word&)> distinct(
      [](const Word& a, const Word& b) { return shortlex_less(a, b); });
  for (const Word& w : loops) distinct.emplace(cyclic_representative(cyclic_reduce(w)), true);
  std::vector<LoopResult> results;
  for (const auto& [w, unused] : distinct) results.push_back({w, 0, std::nullopt, false, {}});
  est.boundaries = results.size();

  EscalationOptions esc;
  esc.fill = budget.fill;
  esc.ball = budget.ball;
  parallel_for(results.size(), budget.workers, [&](std::size_t i) {
    LoopResult& r = results[i];
    auto chain = word_to_chain(largest.ball, r.loop);
    // Only a capped ball is too small for a rotated loop.
    if (!chain) {
      r.resource = "ball radius " + std::to_string(top) + " cannot hold a rotation of a loop";
      return;
    }
    r.length = l1_norm(*chain);
    if (chain->empty()) return;
    unsigned r0 = default_initial_radius(static_cast<std::size_t>(r.length.get_num().get_ui()), m);
    unsigned hi = std::min(r0 + 1, top);
    unsigned lo = std::min(r0, hi > 0 ? hi - 1 : 0u);
    try {
      r.cert = norm_with_escalation(r.loop, largest, lo, hi, esc);
    } catch (const ResourceError& e) {
      r.resource = e.what();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoFilling) throw;
      r.unfilled = true;
    }
  });

  std::stable_sort(results.begin(), results.end(),
                   [](const LoopResult& a, const LoopResult& b) { return a.length < b.length; });
  for (const auto& r : results) {
    if (r.unfilled) ++est.unfilled;
    if (!r.resource.empty() && !est.capped) {
      est.capped = true;
      est.cap_reason = r.resource;
    }
  }
  std::size_t next = 0;
  FVRow best;
  for (unsigned k = 1; k <= budget.k_max; ++k) {
    for (; next < results.size() && results[next].length <= k; ++next) {
      const auto& r = results[next];
      if (!r.cert || r.cert->value <= best.value) continue;
      best.value = r.cert->value;
      best.witness = r.loop;
      best.witness_length = r.length;
      best.radius = r.cert->radius;
      best.stabilized = r.cert->stabilized;
    }
    best.k = k;
    est.table.push_back(best);
  }
  return est;
}

GrowthFit fit_growth(const std::vector<std::pair<unsigned, Rational>>& table, const Rational& drift_tolerance) {
  if (table.empty()) throw Error(ErrorCode::kInvalidArgument, "growth fit needs a nonempty table");
  GrowthFit fit;
  fit.drift_tolerance = drift_tolerance;
  std::vector<std::pair<unsigned, Rational>> rows;
  for (const auto& row : table) {
    if (row.first == 0) throw Error(ErrorCode::kInvalidArgument, "table rows need k >= 1");
    fit.K = std::max(fit.K, Rational(row.second / row.first));
    if (row.second != 0) rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end());
  if (rows.size() < 2) {
    fit.rows_used = rows.size();
    return fit;
  }
  std::size_t used = std::max<std::size_t>(2, (rows.size() + 1) / 2);
  rows.erase(rows.begin(), rows.end() - static_cast<std::ptrdiff_t>(used));
  fit.rows_used = used;
  Rational linear = trend_drift(rows, 1);
  if (linear <= drift_tolerance) {
    fit.residual = abs_value(linear);
    return fit;
  }
  Rational quadratic = abs_value(trend_drift(rows, 2));
  Rational cubic = abs_value(trend_drift(rows, 3));
  if (quadratic <= cubic) {
    fit.growth = GrowthClass::kQuadratic;
    fit.residual = quadratic;
  } else {
    fit.growth = GrowthClass::kSuperquadratic;
    fit.residual = cubic;
  }
  return fit;
}

GrowthFit fit_growth(const FVEstimate& estimate, const Rational& drift_tolerance) {
  std::vector<std::pair<unsigned, Rational>> table;
  for (const auto& row : estimate.table) table.emplace_back(row.k, row.value);
  return fit_growth(table, drift_tolerance);
}

HyperbolicityReport probe_hyperbolicity(const GroupPresentation& p, const RewritingSystem& rws,
                                        const ProbeBudget& budget) {
  HyperbolicityReport report;
  report.estimate = estimate_fv(p, rws, budget);
  report.fit = fit_growth(report.estimate);
  const std::string scope = "finite-scale evidence from boundaries of length <= " + std::to_string(budget.k_max) +
                            " (" + to_string(report.estimate.mode) + "); not a proof";
  if (report.estimate.capped) {
    report.verdict = HyperbolicityVerdict::kInconclusive;
    report.note = "cap reached: " + report.estimate.cap_reason + "; " + scope;
  } else if (report.fit.growth == GrowthClass::kLinear) {
    report.verdict = HyperbolicityVerdict::kConsistentWithHyperbolic;
    report.note = "filling values stay below " + to_fraction_string(report.fit.K) + " * k; " + scope;
  } else {
    report.verdict = HyperbolicityVerdict::kNonHyperbolicEvidence;
    report.witness = report.estimate.table.back();
    report.note = "filling values grow like k^" +
                  std::string(report.fit.growth == GrowthClass::kQuadratic ? "2" : "3") + "; " + scope;
  }
  return report;
}

FlowVerdict classify_flow(const std::vector<Rational>& t) {
  const std::size_t n = t.size();
  if (n < 3) return FlowVerdict::kInconclusive;
  const std::size_t w = std::min(n, std::max<std::size_t>(3, n / 2 + 1));
  const std::size_t start = n - w;
  bool nonincreasing = true, increasing = true;
  for (std::size_t i = start + 1; i < n; ++i) {
    nonincreasing &= t[i] <= t[i - 1];
    increasing &= t[i] > t[i - 1];
  }
  if (nonincreasing) return FlowVerdict::kBoundedFlow;
  if (!increasing) return FlowVerdict::kInconclusive;
  for (std::size_t i = start + 2; i < n; ++i)
    if (2 * (t[i] - t[i - 1]) > t[i - 1] - t[i - 2]) return FlowVerdict::kGrowingFlow;
  return FlowVerdict::kBoundedFlow;
}

AmenabilityProbe probe_amenability(const GroupPresentation& p, const RewritingSystem& rws,
                                   std::vector<unsigned> radii, const FlowOptions& options) {
  require_confluent(rws);
  if (radii.empty()) throw Error(ErrorCode::kInvalidArgument, "radius list is empty");
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  if (radii.front() < 1) throw Error(ErrorCode::kInvalidArgument, "flow radii must be at least 1");

  AmenabilityProbe probe;
  unsigned top = clamp_radius(p, rws, radii.back(), options.ball);
  TwoComplex largest = load_or_build_complex(p, rws, top, options.ball, options.cache_dir);
  probe.table.resize(radii.size());
  parallel_for(radii.size(), options.workers, [&](std::size_t i) {
    FlowRow& row = probe.table[i];
    row.radius = radii[i];
    if (row.radius > top) {
      row.error = "ball of radius " + std::to_string(row.radius) + " exceeds the vertex cap";
      return;
    }
    CayleyBall ball = truncate_ball(largest.ball, row.radius);
    std::vector<std::size_t> row_of(ball.vertex_count(), SIZE_MAX);
    for (std::size_t v = 0; v < ball.vertex_count(); ++v)
      if (ball.depth[v] < row.radius) row_of[v] = row.interior_vertices++;
    std::vector<std::size_t> edge_ids;
    for (std::size_t e = 0; e < ball.edge_count(); ++e)
      if (row_of[ball.edges[e].source] != SIZE_MAX || row_of[ball.edges[e].target] != SIZE_MAX) edge_ids.push_back(e);
    row.edges = edge_ids.size();
    SparseMatrix a(row.interior_vertices, 0);
    for (std::size_t e : edge_ids) {
      std::map<std::size_t, Rational> col;
      const Edge& edge = ball.edges[e];
      if (row_of[edge.target] != SIZE_MAX) col[row_of[edge.target]] += 1;
      if (row_of[edge.source] != SIZE_MAX) col[row_of[edge.source]] -= 1;
      a.append_column(col);
    }
    std::vector<Rational> demand(row.interior_vertices, Rational(1));
    LPResult res;
    try {
      res = solve_minmax(a, demand, std::vector<bool>(edge_ids.size(), true), options.lp);
    } catch (const ResourceError& e) {
      row.error = e.what();
      return;
    }
    if (res.status != LPStatus::kOptimal) {
      row.error = "flow LP is infeasible";
      return;
    }
    for (const auto& [j, q] : res.witness) row.witness.add(edge_ids[j], q);
    // demands met exactly at every interior vertex
    std::vector<Rational> net(ball.vertex_count(), Rational(0));
    for (const auto& [e, q] : row.witness.entries()) {
      net[ball.edges[e].target] += q;
      net[ball.edges[e].source] -= q;
    }
    for (std::size_t v = 0; v < ball.vertex_count(); ++v)
      if (row_of[v] != SIZE_MAX && net[v] != 1) throw Error(ErrorCode::kInternal, "flow witness misses a demand");
    row.t = res.value;
    row.solved = true;
  });

  std::vector<Rational> t;
  bool complete = true;
  for (const auto& row : probe.table) {
    if (row.solved)
      t.push_back(row.t);
    else
      complete = false;
  }
  if (!complete) {
    probe.verdict = FlowVerdict::kInconclusive;
    probe.note = "some radii could not be solved";
  } else {
    probe.verdict = classify_flow(t);
    probe.note = probe.verdict == FlowVerdict::kInconclusive && t.size() < 3
                     ? "at least three radii are needed for a trend"
                     : "trend over the trailing radii; finite-scale evidence only";
  }
  return probe;
}

std::string to_string(SamplingMode m) { return m == SamplingMode::kExhaustive ? "exhaustive" : "sampled"; }

std::string to_string(GrowthClass g) {
  switch (g) {
    case GrowthClass::kLinear: return "linear";
    case GrowthClass::kQuadratic: return "quadratic";
    case GrowthClass::kSuperquadratic: return "superquadratic";
  }
  return "";
}

std::string to_string(HyperbolicityVerdict v) {
  switch (v) {
    case HyperbolicityVerdict::kConsistentWithHyperbolic: return "consistent-with-hyperbolic";
    case HyperbolicityVerdict::kNonHyperbolicEvidence: return "non-hyperbolic-evidence";
    case HyperbolicityVerdict::kInconclusive: return "inconclusive";
  }
  return "";
}

std::string to_string(FlowVerdict v) {
  switch (v) {
    case FlowVerdict::kBoundedFlow: return "BoundedFlow";
    case FlowVerdict::kGrowingFlow: return "GrowingFlow";
    case FlowVerdict::kInconclusive: return "Inconclusive";
  }
  return "";
}

}  // namespace fillprobe
