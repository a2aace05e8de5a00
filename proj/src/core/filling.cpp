#include "filling.hpp"

#include <algorithm>
#include <set>

#include "cache.hpp"
#include "error.hpp"

namespace fillprobe {

Rational l1_norm(const Chain& c) {
  Rational total = 0;
  for (const auto& [i, q] : c.entries()) total += abs_value(q);
  return total;
}

unsigned default_initial_radius(std::size_t boundary_length, std::size_t max_relator_length) {
  return static_cast<unsigned>(boundary_length / 2 + 1 + max_relator_length);
}

namespace {

void require_cycle(const Chain& b, const TwoComplex& x) {
  if (b.dimension() != 1) throw Error(ErrorCode::kInvalidArgument, "boundary must be a 1-chain");
  for (const auto& [e, q] : b.entries())
    if (e >= x.ball.edge_count()) throw Error(ErrorCode::kInvalidArgument, "boundary uses an edge outside the ball");
  if (!apply(x.d1, b, 0).empty()) throw Error(ErrorCode::kInvalidArgument, "chain is not a cycle");
}

// Cells that can carry weight in some filling of b, listed per edge. A cell
// alone on an edge where b vanishes must have coefficient zero, so such
// cells are peeled repeatedly; cells not linked to supp(b) through shared
// edges only meet homogeneous rows and are dropped as well.
struct Support {
  std::vector<std::vector<std::size_t>> cells_on_edge;
  std::size_t alive = 0;
};

Support reduce_support(const Chain& b, const TwoComplex& x) {
  const std::size_t ne = x.ball.edge_count(), nc = x.d2.cols();
  std::vector<std::vector<std::size_t>> on_edge(ne);
  for (std::size_t c = 0; c < nc; ++c)
    for (const auto& [e, q] : x.d2.column(c)) on_edge[e].push_back(c);
  std::vector<bool> alive(nc, true);
  std::vector<std::size_t> count(ne);
  std::vector<std::size_t> queue;
  for (std::size_t e = 0; e < ne; ++e) {
    count[e] = on_edge[e].size();
    if (count[e] == 1 && b.coefficient(e) == 0) queue.push_back(e);
  }
  while (!queue.empty()) {
    std::size_t e = queue.back();
    queue.pop_back();
    if (count[e] != 1) continue;
    for (std::size_t c : on_edge[e]) {
      if (!alive[c]) continue;
      alive[c] = false;
      for (const auto& [f, q] : x.d2.column(c))
        if (--count[f] == 1 && b.coefficient(f) == 0) queue.push_back(f);
    }
  }
  std::vector<bool> reached(nc, false);
  std::vector<bool> edge_seen(ne, false);
  std::vector<std::size_t> edges;
  for (const auto& [e, q] : b.entries()) {
    edge_seen[e] = true;
    edges.push_back(e);
  }
  while (!edges.empty()) {
    std::size_t e = edges.back();
    edges.pop_back();
    for (std::size_t c : on_edge[e]) {
      if (!alive[c] || reached[c]) continue;
      reached[c] = true;
      for (const auto& [f, q] : x.d2.column(c))
        if (!edge_seen[f]) {
          edge_seen[f] = true;
          edges.push_back(f);
        }
    }
  }
  Support out;
  out.cells_on_edge.resize(ne);
  for (std::size_t e = 0; e < ne; ++e)
    for (std::size_t c : on_edge[e])
      if (reached[c]) out.cells_on_edge[e].push_back(c);
  out.alive = static_cast<std::size_t>(std::count(reached.begin(), reached.end(), true));
  return out;
}

struct RestrictedProblem {
  std::vector<std::size_t> cells;
  std::vector<std::size_t> edges;  // row r constrains edge edges[r]
  LinearProgram lp;
};

// Variables: a+ for each restricted cell, then a- in the same order.
RestrictedProblem restrict_to(const Chain& b, const TwoComplex& x, const std::set<std::size_t>& cells) {
  RestrictedProblem out;
  out.cells.assign(cells.begin(), cells.end());
  std::set<std::size_t> edges;
  for (const auto& [e, q] : b.entries()) edges.insert(e);
  for (std::size_t c : out.cells)
    for (const auto& [e, q] : x.d2.column(c)) edges.insert(e);
  out.edges.assign(edges.begin(), edges.end());
  std::map<std::size_t, std::size_t> row_of;
  for (std::size_t r = 0; r < out.edges.size(); ++r) row_of[out.edges[r]] = r;
  const std::size_t k = out.cells.size();
  out.lp.objective.assign(2 * k, Rational(1));
  out.lp.constraints = SparseMatrix(out.edges.size(), 0);
  out.lp.rhs.assign(out.edges.size(), Rational(0));
  for (const auto& [e, q] : b.entries()) out.lp.rhs[row_of[e]] = q;
  for (int sign : {1, -1}) {
    for (std::size_t c : out.cells) {
      std::map<std::size_t, Rational> col;
      for (const auto& [e, q] : x.d2.column(c)) col[row_of[e]] = sign * q;
      out.lp.constraints.append_column(col);
    }
  }
  return out;
}

Chain witness_chain(const RestrictedProblem& rp, const SparseVector& solution) {
  Chain a(2);
  const std::size_t k = rp.cells.size();
  for (const auto& [j, q] : solution) a.add(rp.cells[j % k], j < k ? q : Rational(-q));
  return a;
}

// Adds every cell sharing an edge with the current set. False if nothing new.
bool grow(std::set<std::size_t>& cells, const Chain& b, const TwoComplex& x, const Support& support) {
  std::set<std::size_t> edges;
  for (const auto& [e, q] : b.entries()) edges.insert(e);
  for (std::size_t c : cells)
    for (const auto& [e, q] : x.d2.column(c)) edges.insert(e);
  bool grew = false;
  for (std::size_t e : edges)
    for (std::size_t c : support.cells_on_edge[e]) grew |= cells.insert(c).second;
  return grew;
}

struct RationalSolve {
  RestrictedProblem problem;
  LPResult result;
};

// Exact column generation: a restricted optimum is accepted once its duals
// satisfy |y . d2(c)| <= 1 for every surviving cell c.
std::optional<RationalSolve> solve_rational(const Chain& b, const TwoComplex& x, const FillOptions& options,
                                            const Support& support) {
  std::set<std::size_t> cells;
  for (const auto& [e, q] : b.entries())
    for (std::size_t c : support.cells_on_edge[e]) cells.insert(c);
  std::vector<bool> candidate(x.d2.cols(), false);
  for (const auto& list : support.cells_on_edge)
    for (std::size_t c : list) candidate[c] = true;
  for (;;) {
    if (cells.empty() && !grow(cells, b, x, support)) return std::nullopt;
    RestrictedProblem rp = restrict_to(b, x, cells);
    LPResult res = solve_lp(rp.lp, options.lp);
    if (res.status == LPStatus::kUnbounded) throw Error(ErrorCode::kInternal, "filling LP cannot be unbounded");
    if (res.status == LPStatus::kInfeasible) {
      if (!grow(cells, b, x, support)) return std::nullopt;
      continue;
    }
    std::vector<Rational> y(x.ball.edge_count(), Rational(0));
    for (std::size_t r = 0; r < rp.edges.size(); ++r) y[rp.edges[r]] = res.duals[r];
    bool added = false;
    for (std::size_t c = 0; c < x.d2.cols(); ++c) {
      if (!candidate[c] || cells.count(c)) continue;
      Rational dot = 0;
      for (const auto& [e, q] : x.d2.column(c)) dot += q * y[e];
      if (abs_value(dot) > 1) added |= cells.insert(c).second;
    }
    if (!added) return RationalSolve{std::move(rp), std::move(res)};
  }
}

void check_certificate(const FillingCertificate& cert, const Chain& b, const TwoComplex& x) {
  bool ok = apply(x.d2, cert.witness, 1) == b && l1_norm(cert.witness) == cert.value;
  if (cert.ring == Ring::kIntegral && !cert.witness.is_integral()) ok = false;
  if (!ok) throw Error(ErrorCode::kInternal, "filling certificate failed exact verification");
}

[[noreturn]] void no_filling(const TwoComplex& x) {
  throw Error(ErrorCode::kNoFilling,
              "boundary has no filling inside the ball of radius " + std::to_string(x.ball.radius));
}

}  // namespace

BoundaryCheck is_boundary(const Chain& b, const TwoComplex& x, const FillOptions& options) {
  require_cycle(b, x);
  BoundaryCheck out;
  if (b.empty()) {
    out.fillable = true;
    return out;
  }
  auto solved = solve_rational(b, x, options, reduce_support(b, x));
  if (!solved) return out;
  out.fillable = true;
  out.witness = witness_chain(solved->problem, solved->result.witness);
  return out;
}

FillingCertificate filling_norm_q(const Chain& b, const TwoComplex& x, const FillOptions& options) {
  require_cycle(b, x);
  FillingCertificate cert;
  cert.ring = Ring::kRational;
  cert.radius = x.ball.radius;
  if (b.empty()) return cert;
  auto solved = solve_rational(b, x, options, reduce_support(b, x));
  if (!solved) no_filling(x);
  cert.value = solved->result.value;
  cert.witness = witness_chain(solved->problem, solved->result.witness);
  cert.cells_used = solved->problem.cells.size();
  check_certificate(cert, b, x);
  return cert;
}

FillingCertificate filling_norm_z(const Chain& b, const TwoComplex& x, const FillOptions& options) {
  require_cycle(b, x);
  if (!b.is_integral()) throw Error(ErrorCode::kInvalidArgument, "integral filling needs an integral boundary");
  FillingCertificate cert;
  cert.ring = Ring::kIntegral;
  cert.radius = x.ball.radius;
  if (b.empty()) return cert;
  Support support = reduce_support(b, x);
  auto solved = solve_rational(b, x, options, support);
  if (!solved) no_filling(x);
  // An integral filling has integral l1-norm, so ceil(LP) is a lower bound
  // that certifies any restricted integral optimum reaching it.
  const Rational lower(ceil_of(solved->result.value));
  Chain relaxed = witness_chain(solved->problem, solved->result.witness);
  if (relaxed.is_integral()) {
    cert.value = solved->result.value;
    cert.witness = std::move(relaxed);
    cert.cells_used = solved->problem.cells.size();
    check_certificate(cert, b, x);
    return cert;
  }
  std::set<std::size_t> cells(solved->problem.cells.begin(), solved->problem.cells.end());
  IlpOptions ilp;
  ilp.node_budget = options.node_budget;
  ilp.lp = options.lp;
  for (;;) {
    RestrictedProblem rp = restrict_to(b, x, cells);
    std::vector<bool> mask(rp.lp.variable_count(), true);
    LPResult res;
    try {
      res = solve_ilp(rp.lp, mask, ilp);
    } catch (const ResourceError& e) {
      throw ResourceError(e.what(), solved->result.value, e.upper_bound());
    }
    bool exhausted = cells.size() == support.alive;
    if (res.status == LPStatus::kOptimal && (res.value == lower || exhausted)) {
      cert.value = res.value;
      cert.witness = witness_chain(rp, res.witness);
      cert.cells_used = rp.cells.size();
      check_certificate(cert, b, x);
      return cert;
    }
    if (exhausted) no_filling(x);
    if (!grow(cells, b, x, support)) throw Error(ErrorCode::kInternal, "integral search stalled before using all cells");
  }
}

FillingCertificate norm_with_escalation(const Word& loop, const TwoComplex& largest, unsigned r0, unsigned r_max,
                                        const EscalationOptions& options) {
  if (r0 > r_max) throw Error(ErrorCode::kInvalidArgument, "initial radius exceeds the maximum radius");
  r_max = std::min(r_max, largest.ball.radius);
  r0 = std::min(r0, r_max);
  std::optional<FillingCertificate> best;
  std::optional<unsigned> last_feasible;
  std::vector<std::pair<unsigned, Rational>> history;
  for (unsigned r = r0; r <= r_max; ++r) {
    TwoComplex x = truncate(largest, r);
    auto chain = word_to_chain(x.ball, loop);
    if (!chain) continue;
    if (!apply(x.d1, *chain, 0).empty()) throw Error(ErrorCode::kNotClosed, "word does not describe a closed loop");
    FillingCertificate cert;
    try {
      cert = options.ring == Ring::kRational ? filling_norm_q(*chain, x, options.fill)
                                             : filling_norm_z(*chain, x, options.fill);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoFilling) throw;
      continue;
    }
    history.emplace_back(r, cert.value);
    bool agrees = best && last_feasible && *last_feasible + 1 == r && best->value == cert.value;
    best = std::move(cert);
    last_feasible = r;
    if (agrees) {
      best->stabilized = true;
      best->status = FillStatus::kExactWithinBall;
      break;
    }
  }
  if (!best)
    throw Error(ErrorCode::kNoFilling, "loop has no filling within radius " + std::to_string(r_max));
  best->history = std::move(history);
  return *best;
}

FillingCertificate norm_with_escalation(const Word& loop, const GroupPresentation& p, const RewritingSystem& rws,
                                        unsigned r0, unsigned r_max, const EscalationOptions& options) {
  if (r0 > r_max) throw Error(ErrorCode::kInvalidArgument, "initial radius exceeds the maximum radius");
  if (!normal_form(loop, rws).empty()) throw Error(ErrorCode::kNotClosed, "word does not describe a closed loop");
  unsigned top = clamp_radius(p, rws, r_max, options.ball);
  TwoComplex largest = load_or_build_complex(p, rws, top, options.ball, options.cache_dir);
  return norm_with_escalation(loop, largest, std::min(r0, top), top, options);
}

}  // namespace fillprobe
