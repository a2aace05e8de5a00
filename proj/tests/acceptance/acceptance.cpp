// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact rational equalities or inequalities.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cache.hpp"
#include "catalog.hpp"
#include "cochains.hpp"
#include "error.hpp"
#include "exactlp.hpp"
#include "filling.hpp"
#include "probes.hpp"

using namespace fillprobe;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every complex the suite touches goes through here.
struct ComplexLedger {
  std::size_t checked = 0;
  std::size_t broken = 0;
  void record(const TwoComplex& x) {
    ++checked;
    if (!(x.d1 * x.d2).is_zero()) ++broken;
  }
} complexes;

TwoComplex tracked_complex(const LoadedGroup& g, unsigned radius) {
  TwoComplex x = attach_cells(build_ball(g.presentation, g.rws, radius), g.presentation);
  complexes.record(x);
  return x;
}

Chain loop_chain(const TwoComplex& x, const Word& w) {
  auto c = word_to_chain(x.ball, w);
  if (!c) throw Error(ErrorCode::kInternal, "loop leaves the ball");
  return *c;
}

Word grid_square(int n) {
  Word w;
  for (Letter x : {1, 2, -1, -2})
    for (int i = 0; i < n; ++i) w.push_back(x);
  return w;
}

// ---- independent planar grid model --------------------------------------

using Point = std::pair<int, int>;

struct GridModel {
  std::map<Point, std::size_t> horizontal, vertical;  // edge leaving the point in +x / +y
  std::vector<Point> squares;                         // lower-left corners
  std::size_t edge_count = 0;

  explicit GridModel(int radius) {
    auto inside = [&](int x, int y) { return std::abs(x) + std::abs(y) <= radius; };
    for (int x = -radius; x <= radius; ++x)
      for (int y = -radius; y <= radius; ++y) {
        if (!inside(x, y)) continue;
        if (inside(x + 1, y)) horizontal[{x, y}] = edge_count++;
        if (inside(x, y + 1)) vertical[{x, y}] = edge_count++;
        if (inside(x + 1, y) && inside(x, y + 1) && inside(x + 1, y + 1)) squares.push_back({x, y});
      }
  }

  std::vector<Rational> boundary_of_walk(const Word& w) const {
    std::vector<Rational> b(edge_count, Rational(0));
    int x = 0, y = 0;
    for (Letter l : w) {
      if (l == 1) b[horizontal.at({x, y})] += 1, ++x;
      if (l == -1) --x, b[horizontal.at({x, y})] -= 1;
      if (l == 2) b[vertical.at({x, y})] += 1, ++y;
      if (l == -2) --y, b[vertical.at({x, y})] -= 1;
    }
    return b;
  }

  // Dense boundary matrix, edges x squares, counterclockwise orientation.
  std::vector<std::vector<Rational>> d2() const {
    std::vector<std::vector<Rational>> m(edge_count, std::vector<Rational>(squares.size(), Rational(0)));
    for (std::size_t c = 0; c < squares.size(); ++c) {
      auto [x, y] = squares[c];
      m[horizontal.at({x, y})][c] += 1;
      m[vertical.at({x + 1, y})][c] += 1;
      m[horizontal.at({x, y + 1})][c] -= 1;
      m[vertical.at({x, y})][c] -= 1;
    }
    return m;
  }
};

struct UniqueSolution {
  bool consistent = false;
  bool unique = false;
  std::vector<Rational> x;
};

// Gauss-Jordan elimination over Q on [m | b].
UniqueSolution solve_exactly(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  UniqueSolution out;
  out.consistent = true;
  for (std::size_t i = r; i < rows; ++i) out.consistent = out.consistent && b[i] == 0;
  out.unique = r == cols;
  out.x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.x[pivot_col[i]] = b[i];
  return out;
}

// Sum of |winding number| over unit squares: the l1 norm of the unique
// planar filling of a closed lattice walk.
Rational winding_norm(const Word& w) {
  std::map<Point, int> winding;
  int x = 0, y = 0;
  for (Letter l : w) {
    if (l == 1) {
      for (int j = -16; j < y; ++j) winding[{x, j}] -= 1;
      ++x;
    } else if (l == -1) {
      --x;
      for (int j = -16; j < y; ++j) winding[{x, j}] += 1;
    } else if (l == 2) {
      ++y;
    } else {
      --y;
    }
  }
  Rational total = 0;
  for (const auto& [cell, n] : winding) total += std::abs(n);
  return total;
}

Rational walk_l1(const Word& w) {
  std::map<std::pair<Point, int>, int> edges;
  int x = 0, y = 0;
  for (Letter l : w) {
    if (l == 1) edges[{{x, y}, 0}] += 1, ++x;
    if (l == -1) --x, edges[{{x, y}, 0}] -= 1;
    if (l == 2) edges[{{x, y}, 1}] += 1, ++y;
    if (l == -2) --y, edges[{{x, y}, 1}] -= 1;
  }
  Rational total = 0;
  for (const auto& [e, n] : edges) total += std::abs(n);
  return total;
}

void closed_walks(std::size_t max_len, Word& w, int x, int y, const std::function<void(const Word&)>& visit) {
  if (!w.empty() && x == 0 && y == 0) visit(w);
  if (w.size() == max_len) return;
  const std::size_t left = max_len - w.size();
  for (Letter l : {1, -1, 2, -2}) {
    int nx = x + (l == 1) - (l == -1), ny = y + (l == 2) - (l == -2);
    if (static_cast<std::size_t>(std::abs(nx) + std::abs(ny)) > left - 1) continue;
    w.push_back(l);
    closed_walks(max_len, w, nx, ny, visit);
    w.pop_back();
  }
}

// ---- criteria ------------------------------------------------------------

struct Instance {
  std::string group;
  Chain b{1};
  Rational q;
  bool grid = false;
};
std::vector<Instance> ring_instances;

Outcome grid_isoperimetry() {
  Outcome o;
  LoadedGroup z2 = load_catalog_group("Z2");
  std::ostringstream d;
  for (int n = 1; n <= 3; ++n) {
    Word loop = grid_square(n);
    unsigned r0 = default_initial_radius(loop.size(), 4);
    FillingCertificate q = norm_with_escalation(loop, z2.presentation, z2.rws, r0, r0 + 1);

    GridModel model(2 * n);
    UniqueSolution s = solve_exactly(model.d2(), model.boundary_of_walk(loop));
    Rational oracle = 0;
    for (const auto& v : s.x) oracle += abs_value(v);
    bool ok = s.consistent && s.unique && oracle == n * n && q.value == oracle;
    o.pass = o.pass && ok;
    d << " n=" << n << ":" << to_fraction_string(q.value) << (ok ? "" : "(oracle " + to_fraction_string(oracle) + ")");

    TwoComplex x = tracked_complex(z2, q.radius);
    ring_instances.push_back({"Z2 square", loop_chain(x, loop), q.value, true});
  }
  o.detail = "Q-norm of n x n square equals n^2, unique planar filling oracle;" + d.str();
  return o;
}

Outcome scaling_law() {
  Outcome o;
  std::mt19937_64 rng(0);
  const std::vector<Rational> factors = {Rational(2), Rational(-3), Rational(5, 7)};
  std::size_t checked = 0;
  for (const auto& [name, radius, base_depth] :
       std::vector<std::tuple<std::string, unsigned, unsigned>>{{"Z2", 4, 2}, {"genus2", 5, 1}}) {
    LoadedGroup g = load_catalog_group(name);
    TwoComplex x = tracked_complex(g, radius);
    std::vector<std::size_t> near;
    for (std::size_t c = 0; c < x.cells.size(); ++c)
      if (x.ball.depth[x.cells[c].base] <= base_depth) near.push_back(c);
    for (int instance = 0; instance < 10; ++instance) {
      Chain a(2);
      const int cells = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < cells; ++i) {
        long coeff = static_cast<long>(rng() % 2) + 1;
        if (rng() % 2) coeff = -coeff;
        a.add(near[rng() % near.size()], Rational(coeff));
      }
      Chain b = apply(x.d2, a, 1);
      if (b.empty()) {
        --instance;
        continue;
      }
      Rational base = filling_norm_q(b, x).value;
      for (const auto& r : factors) {
        Rational scaled = filling_norm_q(b.scaled(r), x).value;
        if (scaled != abs_value(r) * base) {
          o.pass = false;
          o.detail += " mismatch in " + name + " at r=" + to_fraction_string(r) + ";";
        }
        ++checked;
      }
      ring_instances.push_back({name, b, base, false});
    }
  }
  o.detail = "|r| scaling exact on " + std::to_string(checked) + " (boundary, r) pairs, 20 boundaries" + o.detail;
  return o;
}

Outcome ring_inequality() {
  Outcome o;
  std::size_t compared = 0, equal = 0;
  std::map<std::string, TwoComplex> balls;
  LoadedGroup z2 = load_catalog_group("Z2"), genus = load_catalog_group("genus2");
  balls.emplace("Z2", tracked_complex(z2, 4));
  balls.emplace("genus2", tracked_complex(genus, 5));
  balls.emplace("Z2 square", tracked_complex(z2, 9));
  for (const auto& inst : ring_instances) {
    const TwoComplex& x = balls.at(inst.group);
    for (const auto& m : {Rational(1), Rational(2), Rational(-3)}) {
      Chain b = inst.b.scaled(m);
      Rational q = filling_norm_q(b, x).value;
      Rational z = filling_norm_z(b, x).value;
      ++compared;
      if (z == q) ++equal;
      if (z < q || (inst.grid && z != q)) {
        o.pass = false;
        o.detail += " violated on " + inst.group + ";";
      }
    }
  }
  o.detail = "Z-norm >= Q-norm on " + std::to_string(compared) + " integral instances, equal on " +
             std::to_string(equal) + " (every grid square equal)" + o.detail;
  return o;
}

Outcome probe_classification() {
  Outcome o;
  std::ostringstream d;
  auto run = [&](const std::string& name, unsigned k_max, HyperbolicityVerdict want) {
    LoadedGroup g = load_catalog_group(name);
    ProbeBudget budget;
    budget.k_max = k_max;
    budget.seed = 0;
    HyperbolicityReport r = probe_hyperbolicity(g.presentation, g.rws, budget);
    tracked_complex(g, r.estimate.complex_radius);
    bool ok = r.verdict == want;
    d << " " << name << "(k<=" << k_max << "):" << to_string(r.verdict);
    if (want == HyperbolicityVerdict::kNonHyperbolicEvidence) {
      ok = ok && r.witness && r.witness->k == k_max;
      if (r.witness) {
        Rational ratio = r.witness->value / r.witness->witness_length;
        ok = ok && ratio > Rational(1, 4);
        d << " witness ratio " << to_fraction_string(ratio);
      }
    } else {
      d << " K=" << to_fraction_string(r.fit.K);
    }
    o.pass = o.pass && ok;
  };
  run("F2", 12, HyperbolicityVerdict::kConsistentWithHyperbolic);
  run("genus2", 12, HyperbolicityVerdict::kConsistentWithHyperbolic);
  run("Z2", 8, HyperbolicityVerdict::kNonHyperbolicEvidence);
  o.detail = "seed 0;" + d.str();
  return o;
}

Outcome fv_table() {
  Outcome o;
  LoadedGroup z2 = load_catalog_group("Z2");
  ProbeBudget budget;
  budget.k_max = 8;
  budget.mode = SamplingMode::kExhaustive;
  FVEstimate est = estimate_fv(z2.presentation, z2.rws, budget);
  tracked_complex(z2, est.complex_radius);

  std::vector<Rational> oracle(9, Rational(0));
  Word w;
  std::size_t walks = 0;
  closed_walks(8, w, 0, 0, [&](const Word& walk) {
    ++walks;
    Rational len = walk_l1(walk), area = winding_norm(walk);
    for (std::size_t k = 1; k <= 8; ++k)
      if (len <= k && area > oracle[k]) oracle[k] = area;
  });
  std::ostringstream d;
  for (const auto& row : est.table) {
    if (row.value != oracle[row.k]) {
      o.pass = false;
      d << " k=" << row.k << " got " << to_fraction_string(row.value) << " want " << to_fraction_string(oracle[row.k]);
    }
  }
  Rational fv4 = est.table.at(3).value, fv8 = est.table.at(7).value;
  o.pass = o.pass && !est.capped && fv4 == 1 && fv8 == 4;
  o.detail = "Z2 exhaustive FV(4)=" + to_fraction_string(fv4) + " FV(8)=" + to_fraction_string(fv8) +
             ", full table matches winding-number areas of " + std::to_string(walks) + " closed lattice walks" +
             d.str();
  return o;
}

// Symmetric flow on the 4-regular tree: the root sends 1/4 down each edge and
// a vertex at depth d forwards (1 + inflow) / 3 to each child.
Rational tree_flow(unsigned radius) {
  Rational f(1, 4);
  for (unsigned d = 1; d < radius; ++d) f = (1 + f) / 3;
  return f;
}

bool flow_witness_holds(const TwoComplex& x, const FlowRow& row) {
  std::vector<Rational> net(x.ball.vertex_count(), Rational(0));
  Rational peak = 0;
  for (const auto& [e, c] : row.witness.entries()) {
    const Edge& edge = x.ball.edges.at(e);
    if (x.ball.depth[edge.source] >= row.radius && x.ball.depth[edge.target] >= row.radius) return false;
    net[edge.target] += c;
    net[edge.source] -= c;
    peak = std::max(peak, abs_value(c));
  }
  for (std::size_t v = 0; v < net.size(); ++v)
    if (x.ball.depth[v] < row.radius && abs_value(net[v]) != 1) return false;
  return peak == row.t;
}

Outcome amenability() {
  Outcome o;
  std::ostringstream d;
  auto run = [&](const std::string& name, std::vector<unsigned> radii, FlowVerdict want, bool tree) {
    LoadedGroup g = load_catalog_group(name);
    AmenabilityProbe probe = probe_amenability(g.presentation, g.rws, radii);
    TwoComplex x = tracked_complex(g, radii.back());
    bool ok = probe.verdict == want;
    d << " " << name << ":" << to_string(probe.verdict) << " t=";
    for (std::size_t i = 0; i < probe.table.size(); ++i) {
      const FlowRow& row = probe.table[i];
      d << (i ? "," : "") << (row.solved ? to_fraction_string(row.t) : "failed");
      ok = ok && row.solved && flow_witness_holds(truncate(x, row.radius), row);
      if (tree) ok = ok && row.t == tree_flow(row.radius) && row.t <= Rational(1, 2);
      if (!tree && i > 0) ok = ok && row.t > probe.table[i - 1].t;
    }
    o.pass = o.pass && ok;
  };
  run("F2", {2, 3, 4, 5}, FlowVerdict::kBoundedFlow, true);
  run("Z2", {2, 3, 4, 5, 6}, FlowVerdict::kGrowingFlow, false);
  o.detail = "F2 matches the symmetric tree flow;" + d.str();
  return o;
}

Representation sign_rep(const FiniteGroupTable& g, const std::function<bool(std::size_t)>& odd) {
  Representation rho;
  rho.dimension = 1;
  for (std::size_t h = 0; h < g.order(); ++h) rho.matrices.push_back({{Rational(odd(h) ? -1 : 1)}});
  check_representation(g, rho);
  return rho;
}

// Z/3 acting on Q^2 by powers of [[0, -1], [1, -1]].
Representation rotation_rep(const FiniteGroupTable& g) {
  Matrix id = {{1, 0}, {0, 1}}, r = {{0, -1}, {1, -1}}, r2 = {{-1, 1}, {-1, 0}};
  Representation rho;
  rho.dimension = 2;
  rho.matrices = {id, r, r2};
  check_representation(g, rho);
  return rho;
}

struct CochainCounter {
  std::size_t checks = 0, failures = 0;
  void expect(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }
};

void check_pair(CochainCounter& k, const FiniteGroupTable& g, const Representation& rho, const PlainCochain& theta,
                const EquivariantCochain& f) {
  EquivariantCochain lifted = psi(theta, g, rho);
  k.expect(is_equivariant(lifted, g, rho));
  k.expect(phi(lifted, g) == theta);
  k.expect(psi(phi(f, g), g, rho) == f);
  k.expect(sup_norm(phi(lifted, g)) == sup_norm(theta));
  k.expect(coboundary(lifted, g) == psi(coboundary(theta, g), g, rho));
  k.expect(phi(coboundary(f, g), g) == coboundary(phi(f, g), g));
}

Outcome cochain_suite() {
  Outcome o;
  CochainCounter k;
  auto exhaustive = [&](const FiniteGroupTable& g, const Representation& rho) {
    const std::size_t n = g.order(), m = rho.dimension;
    for (std::size_t degree = 0; degree <= 2; ++degree) {
      const std::size_t cells = cell_count(n, degree), based = cell_count(n, degree) / n;
      // Linear maps: checking every basis cochain covers all cochains.
      for (std::size_t cell = 0; cell < cells; ++cell)
        for (std::size_t i = 0; i < m; ++i) {
          PlainCochain theta = zero_plain(g, degree, m);
          theta.values[cell][i] = 1;
          std::vector<std::vector<Vector>> basis(based, std::vector<Vector>(n, Vector(m, Rational(0))));
          basis[cell % based][cell % n][i] = 1;
          check_pair(k, g, rho, theta, extend_equivariant(degree, basis, g, rho));
        }
    }
  };
  FiniteGroupTable z2 = cyclic_group(2), z3 = cyclic_group(3);
  exhaustive(z2, trivial_representation(z2, 1));
  exhaustive(z2, sign_rep(z2, [](std::size_t h) { return h == 1; }));
  exhaustive(z3, trivial_representation(z3, 1));
  exhaustive(z3, rotation_rep(z3));
  const std::size_t exhaustive_checks = k.checks;

  FiniteGroupTable s3 = symmetric_group_3();
  std::vector<std::size_t> odd;
  for (std::size_t h = 0; h < s3.order(); ++h) {
    // Transpositions are the non-identity involutions.
    if (h != s3.identity() && s3.multiply(h, h) == s3.identity()) odd.push_back(h);
  }
  Representation sign = sign_rep(s3, [&](std::size_t h) { return std::find(odd.begin(), odd.end(), h) != odd.end(); });
  std::mt19937_64 rng(0);
  auto random_value = [&] {
    Rational q(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
    q.canonicalize();
    return q;
  };
  for (int trial = 0; trial < 20; ++trial) {
    for (const Representation& rho : {trivial_representation(s3, 1), sign}) {
      std::size_t degree = trial % 3;
      PlainCochain theta = zero_plain(s3, degree, 1);
      for (auto& v : theta.values) v[0] = random_value();
      std::size_t based = cell_count(6, degree) / 6;
      std::vector<std::vector<Vector>> basis(based, std::vector<Vector>(6, Vector(1, Rational(0))));
      for (auto& row : basis)
        for (auto& v : row) v[0] = random_value();
      check_pair(k, s3, rho, theta, extend_equivariant(degree, basis, s3, rho));
    }
  }
  o.pass = k.failures == 0;
  o.detail = std::to_string(k.checks) + " checks (" + std::to_string(exhaustive_checks) +
             " exhaustive over Z/2, Z/3 in degrees <= 2, rest random over S3), " + std::to_string(k.failures) +
             " failures";
  return o;
}

Outcome solver_soundness() {
  Outcome o;
  std::mt19937_64 rng(0);
  const Rational lambda(3, 2);
  std::size_t optimal = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 2 + rng() % 4, cols = rows + 2 + rng() % 4;
    LinearProgram lp;
    lp.constraints = SparseMatrix(rows, 0);
    for (std::size_t j = 0; j < cols; ++j) {
      std::map<std::size_t, Rational> column;
      for (std::size_t i = 0; i < rows; ++i)
        if (rng() % 3) column[i] = Rational(static_cast<long>(rng() % 9) - 4);
      lp.constraints.append_column(column);
      lp.objective.push_back(Rational(static_cast<long>(rng() % 6)));
    }
    std::vector<Rational> x0(cols);
    for (auto& v : x0) v = Rational(static_cast<long>(rng() % 4));
    lp.rhs.assign(rows, Rational(0));
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& [i, a] : lp.constraints.column(j)) lp.rhs[i] += a * x0[j];
    LPResult base = solve_lp(lp);
    LinearProgram scaled = lp;
    for (auto& v : scaled.rhs) v *= lambda;
    LPResult grown = solve_lp(scaled);
    bool ok = base.status == LPStatus::kOptimal && grown.status == LPStatus::kOptimal &&
              grown.value == lambda * base.value && verify_witness(lp, base) && verify_witness(scaled, grown);
    if (ok) ++optimal;
    o.pass = o.pass && ok;
  }
  VerificationStats stats = verification_stats();
  o.pass = o.pass && stats.failed == 0 && stats.verified > 0;
  o.detail = "homogeneity under rhs * 3/2 on " + std::to_string(optimal) + "/50 instances; " +
             std::to_string(stats.verified) + " solver results verified over the whole suite, " +
             std::to_string(stats.failed) + " failed";
  return o;
}

Outcome chain_sanity() {
  Outcome o;
  std::ostringstream d;
  LoadedGroup f2 = load_catalog_group("F2"), z2 = load_catalog_group("Z2");
  for (unsigned r = 0; r <= 5; ++r) {
    std::size_t tree = 1, power = 1;
    for (unsigned k = 1; k <= r; ++k) tree += 4 * power, power *= 3;
    std::size_t grid = 2 * r * r + 2 * r + 1;
    std::size_t got_tree = tracked_complex(f2, r).ball.vertex_count();
    std::size_t got_grid = tracked_complex(z2, r).ball.vertex_count();
    if (got_tree != tree || got_grid != grid) {
      o.pass = false;
      d << " R=" << r << " F2 " << got_tree << "/" << tree << " Z2 " << got_grid << "/" << grid;
    }
  }
  o.pass = o.pass && complexes.broken == 0;
  o.detail = "d1*d2 = 0 on " + std::to_string(complexes.checked - complexes.broken) + "/" +
             std::to_string(complexes.checked) + " complexes; F2 and Z2 ball sizes match closed forms for R <= 5" +
             d.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
    double budget_seconds;
  };
  const Criterion criteria[] = {
      {1, "grid isoperimetry", grid_isoperimetry, 60},
      {2, "scaling law", scaling_law, 120},
      {3, "ring inequality", ring_inequality, 120},
      {4, "hyperbolicity probe", probe_classification, 300},
      {5, "filling table", fv_table, 300},
      {6, "amenability probe", amenability, 300},
      {7, "cochain maps", cochain_suite, 30},
      {8, "solver soundness", solver_soundness, 60},
      {9, "chain complex sanity", chain_sanity, 60},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= c.budget_seconds;
    bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s %d %-21s %7.2fs/%3.0fs  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
