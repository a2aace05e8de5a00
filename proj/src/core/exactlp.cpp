#include "exactlp.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>

#include "error.hpp"

namespace fillprobe {

namespace {

std::atomic<std::size_t> g_verified{0};
std::atomic<std::size_t> g_failed{0};

constexpr std::size_t kDegenerateRunLimit = 50;

// Dense-by-row simplex tableau with sparse rows. Columns [0, n) are the
// structural variables, [n, n + artificials) the phase-one artificials.
class Tableau {
 public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;

  Tableau(const LinearProgram& lp, PivotRule rule) : rule_(rule) { build(lp); }

  LPResult solve(const LinearProgram& lp) {
    LPResult result;
    if (infeasible_) {
      result.status = LPStatus::kInfeasible;
      return result;
    }
    if (artificial_count_ > 0) {
      load_phase_one_costs();
      if (!iterate(/*allow_artificials=*/true)) throw Error(ErrorCode::kInternal, "phase one cannot be unbounded");
      if (objective_value_ != 0) {
        result.status = LPStatus::kInfeasible;
        result.pivots = pivots_;
        return result;
      }
      drive_out_artificials();
    }
    load_phase_two_costs(lp);
    if (!iterate(/*allow_artificials=*/false)) {
      result.status = LPStatus::kUnbounded;
      result.pivots = pivots_;
      return result;
    }
    result.status = LPStatus::kOptimal;
    result.pivots = pivots_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!active_[i]) continue;
      std::size_t j = basis_[i];
      if (j < structural_ && rhs_[i] != 0) result.witness[j] = rhs_[i];
    }
    result.value = 0;
    for (const auto& [j, q] : result.witness) result.value += lp.objective[j] * q;
    result.duals.assign(original_rows_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::size_t col = initial_column_[i];
      Rational cost = col < structural_ ? lp.objective[col] : Rational(0);
      result.duals[row_origin_[i]] = (cost - reduced_[col]) * row_scale_[i];
    }
    return result;
  }

 private:
  void build(const LinearProgram& lp) {
    structural_ = lp.variable_count();
    original_rows_ = lp.constraint_count();
    // transpose into rows
    std::vector<Row> rows(original_rows_);
    std::vector<std::size_t> column_nnz(structural_, 0);
    for (std::size_t j = 0; j < structural_; ++j) {
      for (const auto& [i, q] : lp.constraints.column(j)) {
        rows[i].emplace_back(j, q);
        ++column_nnz[j];
      }
    }
    std::vector<bool> column_used(structural_, false);
    std::size_t next_artificial = structural_;
    std::vector<std::size_t> artificial_rows;
    for (std::size_t i = 0; i < original_rows_; ++i) {
      const Rational& b = lp.rhs[i];
      if (rows[i].empty()) {
        if (b != 0) infeasible_ = true;
        continue;  // dual stays zero
      }
      // look for a column that appears only in this row and can start basic
      std::optional<std::size_t> crash;
      Rational sigma = b > 0 ? 1 : (b < 0 ? -1 : 0);
      for (const auto& [j, q] : rows[i]) {
        if (column_nnz[j] != 1 || column_used[j]) continue;
        Rational s = sigma == 0 ? Rational(q > 0 ? 1 : -1) : sigma;
        if (s * q > 0) {
          crash = j;
          sigma = s;
          break;
        }
      }
      if (sigma == 0) sigma = 1;
      Rational scale = sigma;
      std::size_t init_col;
      if (crash) {
        column_used[*crash] = true;
        Rational alpha;
        for (const auto& [j, q] : rows[i])
          if (j == *crash) alpha = sigma * q;
        scale = sigma / alpha;
        init_col = *crash;
      } else {
        init_col = next_artificial++;
        artificial_rows.push_back(rows_.size());
      }
      Row row;
      row.reserve(rows[i].size() + 1);
      for (const auto& [j, q] : rows[i]) row.emplace_back(j, q * scale);
      if (!crash) row.emplace_back(init_col, Rational(1));
      rows_.push_back(std::move(row));
      rhs_.push_back(b * scale);
      basis_.push_back(init_col);
      initial_column_.push_back(init_col);
      row_scale_.push_back(scale);
      row_origin_.push_back(i);
      active_.push_back(true);
    }
    artificial_count_ = next_artificial - structural_;
    total_columns_ = next_artificial;
    reduced_.assign(total_columns_, Rational(0));
  }

  bool is_artificial(std::size_t j) const { return j >= structural_; }

  static const Rational* find(const Row& row, std::size_t j) {
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == row.end() || it->first != j) return nullptr;
    return &it->second;
  }

  void load_phase_one_costs() {
    std::fill(reduced_.begin(), reduced_.end(), Rational(0));
    objective_value_ = 0;
    for (std::size_t j = structural_; j < total_columns_; ++j) reduced_[j] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (const auto& [j, q] : rows_[i]) reduced_[j] -= q;
      objective_value_ += rhs_[i];
    }
  }

  void load_phase_two_costs(const LinearProgram& lp) {
    std::fill(reduced_.begin(), reduced_.end(), Rational(0));
    for (std::size_t j = 0; j < structural_; ++j) reduced_[j] = lp.objective[j];
    objective_value_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!active_[i]) continue;
      std::size_t b = basis_[i];
      if (is_artificial(b)) continue;
      const Rational& cb = lp.objective[b];
      if (cb == 0) continue;
      for (const auto& [j, q] : rows_[i]) reduced_[j] -= cb * q;
      objective_value_ += cb * rhs_[i];
    }
  }

  std::optional<std::size_t> entering(bool allow_artificials, bool bland) const {
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < total_columns_; ++j) {
      if (!allow_artificials && is_artificial(j)) continue;
      if (reduced_[j] >= 0) continue;
      if (bland) return j;
      if (!best || reduced_[j] < reduced_[*best]) best = j;
    }
    return best;
  }

  std::optional<std::size_t> leaving(std::size_t col) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!active_[i]) continue;
      const Rational* a = find(rows_[i], col);
      if (!a || *a <= 0) continue;
      Rational ratio = rhs_[i] / *a;
      if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  // row_i -= f * row_p
  void eliminate(Row& target, const Row& pivot, const Rational& f) {
    scratch_.clear();
    scratch_.reserve(target.size() + pivot.size());
    auto a = target.begin();
    auto b = pivot.begin();
    while (a != target.end() || b != pivot.end()) {
      if (b == pivot.end() || (a != target.end() && a->first < b->first)) {
        scratch_.push_back(std::move(*a++));
      } else if (a == target.end() || b->first < a->first) {
        scratch_.emplace_back(b->first, -f * b->second);
        ++b;
      } else {
        a->second -= f * b->second;
        if (a->second != 0) scratch_.push_back(std::move(*a));
        ++a;
        ++b;
      }
    }
    target.swap(scratch_);
  }

  void pivot(std::size_t p, std::size_t col) {
    Row& prow = rows_[p];
    Rational inv = 1 / *find(prow, col);
    for (auto& [j, q] : prow) q *= inv;
    rhs_[p] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == p || !active_[i]) continue;
      const Rational* a = find(rows_[i], col);
      if (!a) continue;
      Rational f = *a;
      eliminate(rows_[i], prow, f);
      rhs_[i] -= f * rhs_[p];
    }
    Rational f = reduced_[col];
    if (f != 0) {
      for (const auto& [j, q] : prow) reduced_[j] -= f * q;
      objective_value_ += f * rhs_[p];
    }
    basis_[p] = col;
    ++pivots_;
  }

  // Returns false on unboundedness.
  bool iterate(bool allow_artificials) {
    bool bland = rule_ == PivotRule::kBland;
    std::size_t degenerate_run = 0;
    for (;;) {
      auto col = entering(allow_artificials, bland);
      if (!col) return true;
      auto row = leaving(*col);
      if (!row) return false;
      if (rhs_[*row] == 0) {
        if (++degenerate_run > kDegenerateRunLimit) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(*row, *col);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!active_[i] || !is_artificial(basis_[i])) continue;
      std::optional<std::size_t> col;
      for (const auto& [j, q] : rows_[i]) {
        if (!is_artificial(j)) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(i, *col);
      } else {
        active_[i] = false;  // redundant constraint
      }
    }
  }

  PivotRule rule_;
  bool infeasible_ = false;
  std::size_t structural_ = 0;
  std::size_t original_rows_ = 0;
  std::size_t artificial_count_ = 0;
  std::size_t total_columns_ = 0;
  std::vector<Row> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> initial_column_;
  std::vector<Rational> row_scale_;
  std::vector<std::size_t> row_origin_;
  std::vector<bool> active_;
  std::vector<Rational> reduced_;
  Rational objective_value_;
  std::size_t pivots_ = 0;
  Row scratch_;
};

void check_dimensions(const LinearProgram& lp) {
  if (lp.constraints.cols() != lp.variable_count())
    throw Error(ErrorCode::kInvalidArgument, "constraint matrix has " + std::to_string(lp.constraints.cols()) +
                                                 " columns but the objective has " +
                                                 std::to_string(lp.variable_count()) + " entries");
  if (lp.constraints.rows() != lp.constraint_count())
    throw Error(ErrorCode::kInvalidArgument, "constraint matrix has " + std::to_string(lp.constraints.rows()) +
                                                 " rows but the right-hand side has " +
                                                 std::to_string(lp.constraint_count()) + " entries");
}

// Dual feasibility and zero duality gap, the optimality certificate.
bool verify_duals(const LinearProgram& lp, const LPResult& r) {
  if (r.duals.size() != lp.constraint_count()) return false;
  Rational yb = 0;
  for (std::size_t i = 0; i < r.duals.size(); ++i) yb += r.duals[i] * lp.rhs[i];
  if (yb != r.value) return false;
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    Rational reduced = lp.objective[j];
    for (const auto& [i, a] : lp.constraints.column(j)) reduced -= a * r.duals[i];
    if (reduced < 0) return false;
  }
  return true;
}

}  // namespace

bool verify_witness(const LinearProgram& lp, const LPResult& result) {
  if (result.status != LPStatus::kOptimal) return true;
  std::vector<Rational> lhs(lp.constraint_count(), Rational(0));
  Rational value = 0;
  for (const auto& [j, q] : result.witness) {
    if (j >= lp.variable_count() || q < 0) return false;
    value += lp.objective[j] * q;
    for (const auto& [i, a] : lp.constraints.column(j)) lhs[i] += a * q;
  }
  if (value != result.value) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] != lp.rhs[i]) return false;
  return true;
}

VerificationStats verification_stats() { return {g_verified.load(), g_failed.load()}; }

LPResult solve_lp(const LinearProgram& lp, SolveOptions options) {
  check_dimensions(lp);
  Tableau tableau(lp, options.rule);
  LPResult result = tableau.solve(lp);
  if (options.verify && result.status == LPStatus::kOptimal) {
    bool ok = verify_witness(lp, result) && verify_duals(lp, result);
    (ok ? g_verified : g_failed).fetch_add(1);
    if (!ok) throw Error(ErrorCode::kInternal, "simplex result failed exact verification");
  }
  return result;
}

namespace {

struct Bound {
  std::size_t variable;
  bool upper;  // x <= value when true, x >= value otherwise
  mpz_class value;
};

LinearProgram with_bounds(const LinearProgram& lp, const std::vector<Bound>& bounds) {
  if (bounds.empty()) return lp;
  const std::size_t n = lp.variable_count();
  const std::size_t m = lp.constraint_count();
  LinearProgram out;
  out.objective = lp.objective;
  out.objective.resize(n + bounds.size(), Rational(0));
  out.rhs = lp.rhs;
  out.constraints = SparseMatrix(m + bounds.size(), 0);
  std::vector<std::map<std::size_t, Rational>> extra(n);
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    extra[bounds[k].variable][m + k] = 1;
    out.rhs.push_back(Rational(bounds[k].value));
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::map<std::size_t, Rational> col(extra[j]);
    for (const auto& [i, q] : lp.constraints.column(j)) col[i] = q;
    out.constraints.append_column(col);
  }
  for (std::size_t k = 0; k < bounds.size(); ++k)
    out.constraints.append_column({{m + k, Rational(bounds[k].upper ? 1 : -1)}});
  return out;
}

struct OpenNode {
  std::vector<Bound> bounds;
  Rational parent_bound;
};

}  // namespace

LPResult solve_ilp(const LinearProgram& lp, const std::vector<bool>& integral, IlpOptions options) {
  check_dimensions(lp);
  if (integral.size() != lp.variable_count())
    throw Error(ErrorCode::kInvalidArgument, "integrality mask has the wrong length");
  const std::size_t n = lp.variable_count();
  std::optional<LPResult> incumbent;
  std::optional<Rational> root_bound;
  std::vector<OpenNode> stack;
  stack.push_back({{}, Rational(0)});
  std::size_t nodes = 0;
  bool root = true;
  while (!stack.empty()) {
    if (nodes >= options.node_budget) {
      std::optional<Rational> lower = incumbent ? std::optional<Rational>(incumbent->value) : std::nullopt;
      for (const auto& open : stack)
        if (!lower || open.parent_bound < *lower) lower = open.parent_bound;
      if (root_bound && lower && *lower < *root_bound) lower = root_bound;
      throw ResourceError("branch and bound exhausted its budget of " + std::to_string(options.node_budget) + " nodes",
                          lower, incumbent ? std::optional<Rational>(incumbent->value) : std::nullopt);
    }
    OpenNode node = std::move(stack.back());
    stack.pop_back();
    ++nodes;
    LPResult relax = solve_lp(with_bounds(lp, node.bounds), options.lp);
    if (relax.status == LPStatus::kUnbounded) {
      if (root) throw Error(ErrorCode::kInvalidArgument, "integer program has an unbounded relaxation");
      continue;
    }
    root = false;
    if (relax.status != LPStatus::kOptimal) continue;
    if (!root_bound) root_bound = relax.value;
    if (incumbent && relax.value >= incumbent->value) continue;
    // most fractional variable, ties to the smallest index
    std::optional<std::size_t> branch;
    Rational best_distance;
    for (const auto& [j, q] : relax.witness) {
      if (j >= n || !integral[j] || is_integer(q)) continue;
      Rational frac = q - Rational(floor_of(q));
      Rational distance = abs_value(frac - Rational(1, 2));
      if (!branch || distance < best_distance) {
        branch = j;
        best_distance = distance;
      }
    }
    if (!branch) {
      LPResult candidate;
      candidate.status = LPStatus::kOptimal;
      candidate.value = relax.value;
      for (const auto& [j, q] : relax.witness)
        if (j < n) candidate.witness.emplace(j, q);
      candidate.pivots = relax.pivots;
      incumbent = std::move(candidate);
      continue;
    }
    const Rational& q = relax.witness.at(*branch);
    OpenNode up{node.bounds, relax.value};
    up.bounds.push_back({*branch, false, ceil_of(q)});
    OpenNode down{std::move(node.bounds), relax.value};
    down.bounds.push_back({*branch, true, floor_of(q)});
    stack.push_back(std::move(up));
    stack.push_back(std::move(down));  // floor branch explored first
  }
  if (!incumbent) return LPResult{};  // infeasible
  if (options.lp.verify) {
    bool ok = verify_witness(lp, *incumbent);
    for (const auto& [j, q] : incumbent->witness)
      if (integral[j] && !is_integer(q)) ok = false;
    (ok ? g_verified : g_failed).fetch_add(1);
    if (!ok) throw Error(ErrorCode::kInternal, "branch and bound result failed exact verification");
  }
  return *incumbent;
}

LPResult solve_minmax(const SparseMatrix& a, const std::vector<Rational>& b, const std::vector<bool>& free_vars,
                      SolveOptions options) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  if (b.size() != m || free_vars.size() != n)
    throw Error(ErrorCode::kInvalidArgument, "min-max problem dimensions do not match");
  // columns: p_i, then n_i for free i, then s_i, then t
  std::vector<std::size_t> neg_col(n, SIZE_MAX);
  std::size_t col = n;
  for (std::size_t i = 0; i < n; ++i)
    if (free_vars[i]) neg_col[i] = col++;
  const std::size_t slack0 = col;
  const std::size_t t_col = slack0 + n;
  LinearProgram lp;
  lp.objective.assign(t_col + 1, Rational(0));
  lp.objective[t_col] = 1;
  lp.rhs = b;
  lp.rhs.resize(m + n, Rational(0));
  lp.constraints = SparseMatrix(m + n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::size_t, Rational> c;
    for (const auto& [r, q] : a.column(i)) c[r] = q;
    c[m + i] = 1;
    lp.constraints.append_column(c);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!free_vars[i]) continue;
    std::map<std::size_t, Rational> c;
    for (const auto& [r, q] : a.column(i)) c[r] = -q;
    c[m + i] = 1;
    lp.constraints.append_column(c);
  }
  for (std::size_t i = 0; i < n; ++i) lp.constraints.append_column({{m + i, Rational(1)}});
  {
    std::map<std::size_t, Rational> c;
    for (std::size_t i = 0; i < n; ++i) c[m + i] = -1;
    lp.constraints.append_column(c);
  }
  LPResult inner = solve_lp(lp, options);
  if (inner.status != LPStatus::kOptimal) return inner;
  LPResult out;
  out.status = LPStatus::kOptimal;
  out.value = inner.value;
  out.pivots = inner.pivots;
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = 0;
    if (auto it = inner.witness.find(i); it != inner.witness.end()) x += it->second;
    if (neg_col[i] != SIZE_MAX)
      if (auto it = inner.witness.find(neg_col[i]); it != inner.witness.end()) x -= it->second;
    if (x != 0) out.witness.emplace(i, x);
  }
  out.duals.assign(inner.duals.begin(), inner.duals.begin() + static_cast<std::ptrdiff_t>(m));
  if (options.verify) {
    bool ok = true;
    std::vector<Rational> lhs(m, Rational(0));
    for (const auto& [i, x] : out.witness) {
      if (abs_value(x) > out.value || (!free_vars[i] && x < 0)) ok = false;
      for (const auto& [r, q] : a.column(i)) lhs[r] += q * x;
    }
    for (std::size_t r = 0; r < m; ++r)
      if (lhs[r] != b[r]) ok = false;
    (ok ? g_verified : g_failed).fetch_add(1);
    if (!ok) throw Error(ErrorCode::kInternal, "min-max result failed exact verification");
  }
  return out;
}

}  // namespace fillprobe
