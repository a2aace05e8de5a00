#include "complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "error.hpp"

namespace fillprobe {

// ---------------------------------------------------------------- matrices

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseMatrix::set_column(std::size_t j, const std::map<std::size_t, Rational>& entries) {
  auto& col = columns_.at(j);
  col.clear();
  for (const auto& [row, q] : entries) {
    if (q == 0) continue;
    if (row >= rows_) throw Error(ErrorCode::kInvalidArgument, "matrix row index out of range");
    col.emplace_back(row, q);
  }
}

void SparseMatrix::append_column(const std::map<std::size_t, Rational>& entries) {
  columns_.emplace_back();
  set_column(columns_.size() - 1, entries);
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols() != rhs.rows()) throw Error(ErrorCode::kInvalidArgument, "matrix dimension mismatch");
  SparseMatrix out(rows_, rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, b] : rhs.column(j))
      for (const auto& [i, a] : columns_[k]) acc[i] += a * b;
    out.set_column(j, acc);
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

// ---------------------------------------------------------------- chains

Rational Chain::coefficient(std::size_t cell) const {
  auto it = entries_.find(cell);
  return it == entries_.end() ? Rational(0) : it->second;
}

void Chain::add(std::size_t cell, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = entries_.try_emplace(cell, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) entries_.erase(it);
  }
}

Chain Chain::scaled(const Rational& r) const {
  Chain out(dimension_);
  if (r == 0) return out;
  for (const auto& [i, q] : entries_) out.entries_.emplace(i, q * r);
  return out;
}

bool Chain::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return is_integer(e.second); });
}

Chain apply(const SparseMatrix& m, const Chain& c, int result_dimension) {
  Chain out(result_dimension);
  for (const auto& [j, q] : c.entries()) {
    if (j >= m.cols()) throw Error(ErrorCode::kInvalidArgument, "chain index outside the complex");
    for (const auto& [i, a] : m.column(j)) out.add(i, a * q);
  }
  return out;
}

// ---------------------------------------------------------------- ball

std::optional<std::size_t> CayleyBall::find(const Word& normal_form) const {
  auto it = lookup_.find(normal_form);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::pair<std::size_t, int> CayleyBall::step_edge(std::size_t v, Letter x) const {
  return {step_edges_[slot(v, x)], x > 0 ? 1 : -1};
}

void CayleyBall::index(const Rewriter& rewriter) {
  lookup_.clear();
  for (std::size_t v = 0; v < vertices.size(); ++v) lookup_.emplace(vertices[v], v);
  const std::size_t letters = 2 * generator_count;
  targets_.assign(vertices.size() * letters, kOutside);
  step_edges_.assign(vertices.size() * letters, 0);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (std::size_t g = 1; g <= generator_count; ++g) {
      for (Letter x : {static_cast<Letter>(g), -static_cast<Letter>(g)}) {
        auto w = find(rewriter.append(vertices[v], x));
        if (w) targets_[slot(v, x)] = static_cast<std::int64_t>(*w);
      }
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    Letter x = static_cast<Letter>(edge.generator + 1);
    step_edges_[slot(edge.source, x)] = e;
    step_edges_[slot(edge.target, -x)] = e;
  }
}

namespace {

// Edges sorted so that the edges of every smaller ball form a prefix.
void sort_edges(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::make_tuple(std::max(a.source, a.target), a.source, a.generator) <
           std::make_tuple(std::max(b.source, b.target), b.source, b.generator);
  });
}

}  // namespace

CayleyBall build_ball(const GroupPresentation& p, const RewritingSystem& rws, unsigned radius, BallLimits limits) {
  if (!rws.confluent())
    throw Error(ErrorCode::kIncompleteRewriting, "refusing to build a ball without a confluent rewriting system");
  if (rws.generator_count != p.generator_count())
    throw Error(ErrorCode::kInvalidArgument, "rewriting system and presentation disagree on generators");
  Rewriter rewriter(rws);
  CayleyBall ball;
  ball.radius = radius;
  ball.generator_count = p.generator_count();
  ball.vertices.push_back({});
  ball.depth.push_back(0);
  ball.lookup_.emplace(Word{}, 0);
  std::size_t layer_begin = 0;
  for (unsigned d = 0; d < radius; ++d) {
    std::size_t layer_end = ball.vertices.size();
    for (std::size_t v = layer_begin; v < layer_end; ++v) {
      for (std::size_t g = 1; g <= ball.generator_count; ++g) {
        for (Letter x : {static_cast<Letter>(g), -static_cast<Letter>(g)}) {
          Word w = rewriter.append(ball.vertices[v], x);
          if (ball.lookup_.count(w)) continue;
          if (ball.vertices.size() >= limits.vertex_cap)
            throw ResourceError("ball of radius " + std::to_string(radius) + " exceeds the vertex cap of " +
                                std::to_string(limits.vertex_cap));
          ball.lookup_.emplace(w, ball.vertices.size());
          ball.vertices.push_back(std::move(w));
          ball.depth.push_back(d + 1);
        }
      }
    }
    if (layer_end == ball.vertices.size()) break;  // finite group exhausted
    layer_begin = layer_end;
  }
  ball.index(rewriter);
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    for (std::size_t g = 0; g < ball.generator_count; ++g) {
      auto t = ball.step(v, static_cast<Letter>(g + 1));
      if (t != CayleyBall::kOutside) ball.edges.push_back({v, g, static_cast<std::size_t>(t)});
    }
  }
  sort_edges(ball.edges);
  ball.index(rewriter);
  return ball;
}

unsigned clamp_radius(const GroupPresentation& p, const RewritingSystem& rws, unsigned wanted, BallLimits limits) {
  if (!rws.confluent())
    throw Error(ErrorCode::kIncompleteRewriting, "refusing to build a ball without a confluent rewriting system");
  Rewriter rewriter(rws);
  std::unordered_map<Word, unsigned, WordHash> seen{{Word{}, 0}};
  std::vector<Word> layer{Word{}};
  for (unsigned d = 0; d < wanted; ++d) {
    std::vector<Word> next;
    for (const auto& v : layer) {
      for (std::size_t g = 1; g <= p.generator_count(); ++g) {
        for (Letter x : {static_cast<Letter>(g), -static_cast<Letter>(g)}) {
          Word w = rewriter.append(v, x);
          if (seen.count(w)) continue;
          if (seen.size() >= limits.vertex_cap) return d;
          seen.emplace(w, d + 1);
          next.push_back(std::move(w));
        }
      }
    }
    if (next.empty()) return wanted;
    layer = std::move(next);
  }
  return wanted;
}

CayleyBall truncate_ball(const CayleyBall& ball, unsigned r) {
  if (r >= ball.radius) return ball;
  std::size_t nv = 0;
  while (nv < ball.vertices.size() && ball.depth[nv] <= r) ++nv;
  CayleyBall out;
  out.radius = r;
  out.generator_count = ball.generator_count;
  out.vertices.assign(ball.vertices.begin(), ball.vertices.begin() + static_cast<std::ptrdiff_t>(nv));
  out.depth.assign(ball.depth.begin(), ball.depth.begin() + static_cast<std::ptrdiff_t>(nv));
  std::size_t ne = 0;
  while (ne < ball.edges.size() && std::max(ball.edges[ne].source, ball.edges[ne].target) < nv) ++ne;
  out.edges.assign(ball.edges.begin(), ball.edges.begin() + static_cast<std::ptrdiff_t>(ne));
  for (std::size_t v = 0; v < nv; ++v) out.lookup_.emplace(out.vertices[v], v);
  const std::size_t letters = 2 * ball.generator_count;
  out.targets_.assign(ball.targets_.begin(), ball.targets_.begin() + static_cast<std::ptrdiff_t>(nv * letters));
  out.step_edges_.assign(ball.step_edges_.begin(), ball.step_edges_.begin() + static_cast<std::ptrdiff_t>(nv * letters));
  for (auto& t : out.targets_)
    if (t != CayleyBall::kOutside && static_cast<std::size_t>(t) >= nv) t = CayleyBall::kOutside;
  return out;
}

// ---------------------------------------------------------------- cells

namespace {

struct Candidate {
  Cell cell;
  std::map<std::size_t, Rational> column;
};

std::map<std::size_t, Rational> negated(const std::map<std::size_t, Rational>& col) {
  std::map<std::size_t, Rational> out;
  for (const auto& [i, q] : col) out.emplace(i, -q);
  return out;
}

SparseMatrix build_d1(const CayleyBall& ball) {
  SparseMatrix d1(ball.vertex_count(), 0);
  for (const auto& e : ball.edges) {
    std::map<std::size_t, Rational> col;
    col[e.target] += 1;
    col[e.source] -= 1;
    d1.append_column(col);
  }
  return d1;
}

}  // namespace

TwoComplex attach_cells(CayleyBall ball, const GroupPresentation& p) {
  TwoComplex x;
  x.max_relator_length = p.max_relator_length();
  std::vector<Candidate> candidates;
  for (std::size_t v = 0; v < ball.vertex_count(); ++v) {
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      const Word& rel = p.relators[r];
      Candidate c{{v, r, v}, {}};
      std::size_t at = v;
      bool inside = true;
      for (Letter letter : rel) {
        auto next = ball.step(at, letter);
        if (next == CayleyBall::kOutside) {
          inside = false;
          break;
        }
        auto [edge, sign] = ball.step_edge(at, letter);
        c.column[edge] += sign;
        at = static_cast<std::size_t>(next);
        c.cell.max_vertex = std::max(c.cell.max_vertex, at);
      }
      if (!inside) continue;
      if (at != v) throw Error(ErrorCode::kInternal, "relator loop does not close; rewriting system is inconsistent");
      std::erase_if(c.column, [](const auto& e) { return e.second == 0; });
      if (c.column.empty()) continue;
      candidates.push_back(std::move(c));
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return std::make_tuple(a.cell.max_vertex, a.cell.base, a.cell.relator) <
           std::make_tuple(b.cell.max_vertex, b.cell.base, b.cell.relator);
  });
  std::set<std::map<std::size_t, Rational>, std::less<>> seen;
  x.d2 = SparseMatrix(ball.edge_count(), 0);
  for (auto& c : candidates) {
    if (seen.count(c.column) || seen.count(negated(c.column))) continue;
    seen.insert(c.column);
    x.d2.append_column(c.column);
    x.cells.push_back(c.cell);
  }
  x.d1 = build_d1(ball);
  x.ball = std::move(ball);
  return x;
}

std::pair<SparseMatrix, SparseMatrix> boundary_matrices(const TwoComplex& x) { return {x.d1, x.d2}; }

TwoComplex truncate(const TwoComplex& x, unsigned r) {
  if (r >= x.ball.radius) return x;
  TwoComplex out;
  out.max_relator_length = x.max_relator_length;
  out.ball = truncate_ball(x.ball, r);
  const std::size_t nv = out.ball.vertex_count();
  const std::size_t ne = out.ball.edge_count();
  out.d1 = SparseMatrix(nv, 0);
  for (std::size_t e = 0; e < ne; ++e) {
    std::map<std::size_t, Rational> col;
    for (const auto& [i, q] : x.d1.column(e)) col.emplace(i, q);
    out.d1.append_column(col);
  }
  out.d2 = SparseMatrix(ne, 0);
  for (std::size_t c = 0; c < x.cells.size() && x.cells[c].max_vertex < nv; ++c) {
    std::map<std::size_t, Rational> col;
    for (const auto& [i, q] : x.d2.column(c)) col.emplace(i, q);
    out.d2.append_column(col);
    out.cells.push_back(x.cells[c]);
  }
  return out;
}

// ---------------------------------------------------------------- circuits

std::optional<Chain> word_to_chain(const CayleyBall& ball, const Word& w) {
  Chain c(1);
  std::size_t at = 0;
  for (Letter x : w) {
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) > ball.generator_count)
      throw Error(ErrorCode::kInvalidArgument, "letter outside the generating set");
    auto next = ball.step(at, x);
    if (next == CayleyBall::kOutside) return std::nullopt;
    auto [edge, sign] = ball.step_edge(at, x);
    c.add(edge, sign);
    at = static_cast<std::size_t>(next);
  }
  return c;
}

namespace {

class CircuitSearch {
 public:
  CircuitSearch(const CayleyBall& ball, std::size_t max_len, CircuitLimits limits)
      : ball_(ball), max_len_(max_len), limits_(limits), on_path_(ball.vertex_count(), false) {}

  std::vector<Circuit> run() {
    on_path_[0] = true;
    dfs(0);
    std::vector<Circuit> out;
    for (auto& [key, circuit] : found_) out.push_back(std::move(circuit));
    return out;
  }

 private:
  void dfs(std::size_t at) {
    for (std::size_t g = 1; g <= ball_.generator_count; ++g) {
      for (Letter x : {static_cast<Letter>(g), -static_cast<Letter>(g)}) {
        auto next = ball_.step(at, x);
        if (next == CayleyBall::kOutside) continue;
        auto w = static_cast<std::size_t>(next);
        auto [edge, sign] = ball_.step_edge(at, x);
        if (!edges_.empty() && edges_.back() == edge) continue;  // backtrack
        std::size_t len = word_.size() + 1;
        if (w == 0) {
          record(x, edge, sign);
          continue;
        }
        if (on_path_[w] || len >= max_len_) continue;
        if (ball_.depth[w] > max_len_ - len) continue;  // cannot get home in time
        if (++explored_ > limits_.walk_cap)
          throw ResourceError("circuit enumeration explored more than " + std::to_string(limits_.walk_cap) + " walks");
        on_path_[w] = true;
        word_.push_back(x);
        edges_.push_back(edge);
        signs_.push_back(sign);
        dfs(w);
        signs_.pop_back();
        edges_.pop_back();
        word_.pop_back();
        on_path_[w] = false;
      }
    }
  }

  void record(Letter last, std::size_t edge, int sign) {
    Chain c(1);
    for (std::size_t i = 0; i < edges_.size(); ++i) c.add(edges_[i], signs_[i]);
    c.add(edge, sign);
    if (c.empty()) return;
    Word word = word_;
    word.push_back(last);
    // orientation: first (lowest) edge carries a positive coefficient
    if (c.entries().begin()->second < 0) {
      c = c.scaled(-1);
      word = inverse(word);
    }
    std::pair<std::size_t, Chain> key{word.size(), c};
    found_.try_emplace(std::move(key), Circuit{std::move(word), c});
  }

  const CayleyBall& ball_;
  std::size_t max_len_;
  CircuitLimits limits_;
  std::vector<bool> on_path_;
  Word word_;
  std::vector<std::size_t> edges_;
  std::vector<int> signs_;
  std::size_t explored_ = 0;
  std::map<std::pair<std::size_t, Chain>, Circuit> found_;
};

}  // namespace

std::vector<Circuit> enumerate_circuits(const CayleyBall& ball, std::size_t max_len, CircuitLimits limits) {
  if (max_len < 3) throw Error(ErrorCode::kInvalidArgument, "circuit length bound must be at least 3");
  return CircuitSearch(ball, max_len, limits).run();
}

// ---------------------------------------------------------------- json

namespace {

nlohmann::json matrix_to_json(const SparseMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, q] : m.column(j))
      entries.push_back({i, j, q.get_num().get_str(), q.get_den().get_str()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

SparseMatrix matrix_from_json(const nlohmann::json& j) {
  SparseMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  std::vector<std::map<std::size_t, Rational>> cols(m.cols());
  for (const auto& e : j.at("entries")) {
    Rational q(mpz_class(e.at(2).get<std::string>()), mpz_class(e.at(3).get<std::string>()));
    q.canonicalize();
    cols.at(e.at(1).get<std::size_t>())[e.at(0).get<std::size_t>()] += q;
  }
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

}  // namespace

nlohmann::json complex_to_json(const TwoComplex& x, const GroupPresentation& p) {
  nlohmann::json j;
  j["radius"] = x.ball.radius;
  j["generators"] = p.generators;
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& w : x.ball.vertices) vertices.push_back(format_word(w, p.generators));
  j["vertices"] = vertices;
  j["depth"] = x.ball.depth;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : x.ball.edges) edges.push_back({e.source, e.generator, e.target});
  j["edges"] = edges;
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : x.cells) cells.push_back({c.base, c.relator});
  j["cells"] = cells;
  j["cell_max_vertex"] = nlohmann::json::array();
  for (const auto& c : x.cells) j["cell_max_vertex"].push_back(c.max_vertex);
  j["d1"] = matrix_to_json(x.d1);
  j["d2"] = matrix_to_json(x.d2);
  return j;
}

TwoComplex complex_from_json(const nlohmann::json& j, const GroupPresentation& p, const RewritingSystem& rws) {
  TwoComplex x;
  try {
    x.max_relator_length = p.max_relator_length();
    x.ball.radius = j.at("radius").get<unsigned>();
    x.ball.generator_count = p.generator_count();
    for (const auto& s : j.at("vertices")) x.ball.vertices.push_back(parse_word(s.get<std::string>(), p.generators));
    x.ball.depth = j.at("depth").get<std::vector<unsigned>>();
    for (const auto& e : j.at("edges"))
      x.ball.edges.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), e.at(2).get<std::size_t>()});
    const auto& maxv = j.at("cell_max_vertex");
    std::size_t i = 0;
    for (const auto& c : j.at("cells"))
      x.cells.push_back({c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>(), maxv.at(i++).get<std::size_t>()});
    x.d1 = matrix_from_json(j.at("d1"));
    x.d2 = matrix_from_json(j.at("d2"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kIo, std::string("malformed complex JSON: ") + e.what());
  }
  if (x.ball.depth.size() != x.ball.vertices.size() || x.d1.cols() != x.ball.edge_count() ||
      x.d2.cols() != x.cells.size() || x.d2.rows() != x.ball.edge_count())
    throw Error(ErrorCode::kIo, "complex JSON has inconsistent sizes");
  x.ball.index(Rewriter(rws));
  return x;
}

}  // namespace fillprobe
