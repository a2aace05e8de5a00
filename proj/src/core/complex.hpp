#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "presentation.hpp"
#include "rational.hpp"
#include "rewriting.hpp"

namespace fillprobe {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Letter x : w) {
      h ^= static_cast<std::uint64_t>(static_cast<std::int64_t>(x));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Compressed sparse columns, rows sorted within each column, no stored zeros.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<Entry>& column(std::size_t j) const { return columns_.at(j); }
  std::size_t nonzeros() const;

  // Column entries are accumulated; zero sums are removed.
  void set_column(std::size_t j, const std::map<std::size_t, Rational>& entries);
  void append_column(const std::map<std::size_t, Rational>& entries);
  void resize_rows(std::size_t rows) { rows_ = rows; }

  SparseMatrix operator*(const SparseMatrix& rhs) const;
  bool is_zero() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

// A sparse exact chain on the cells of one dimension.
class Chain {
 public:
  explicit Chain(int dimension = 1) : dimension_(dimension) {}

  int dimension() const { return dimension_; }
  const std::map<std::size_t, Rational>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  Rational coefficient(std::size_t cell) const;

  void add(std::size_t cell, const Rational& q);
  Chain scaled(const Rational& r) const;
  bool is_integral() const;

  friend bool operator==(const Chain&, const Chain&) = default;
  friend bool operator<(const Chain& a, const Chain& b) { return a.entries_ < b.entries_; }

 private:
  int dimension_;
  std::map<std::size_t, Rational> entries_;
};

// M * c where the columns of M are indexed like the cells of c.
Chain apply(const SparseMatrix& m, const Chain& c, int result_dimension);

struct Edge {
  std::size_t source = 0;
  std::size_t generator = 0;  // 0-based
  std::size_t target = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct BallLimits {
  std::size_t vertex_cap = 200000;
};

class CayleyBall {
 public:
  static constexpr std::int64_t kOutside = -1;

  unsigned radius = 0;
  std::size_t generator_count = 0;
  std::vector<Word> vertices;  // vertex 0 is the identity
  std::vector<unsigned> depth;
  std::vector<Edge> edges;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::optional<std::size_t> find(const Word& normal_form) const;

  // Target of walking from v along a letter, or kOutside.
  std::int64_t step(std::size_t v, Letter x) const { return targets_[slot(v, x)]; }
  // Edge used by that step and the orientation (+1 along, -1 against).
  std::pair<std::size_t, int> step_edge(std::size_t v, Letter x) const;

  // Rebuilds lookup and step tables from vertices/edges; used after loading.
  void index(const Rewriter& rewriter);

 private:
  friend CayleyBall build_ball(const GroupPresentation&, const RewritingSystem&, unsigned, BallLimits);
  friend CayleyBall truncate_ball(const CayleyBall&, unsigned);
  std::size_t slot(std::size_t v, Letter x) const {
    return v * 2 * generator_count + 2 * static_cast<std::size_t>(std::abs(x) - 1) + (x < 0 ? 1 : 0);
  }

  std::unordered_map<Word, std::size_t, WordHash> lookup_;
  std::vector<std::int64_t> targets_;
  std::vector<std::size_t> step_edges_;
};

struct Cell {
  std::size_t base = 0;      // vertex where the relator loop starts
  std::size_t relator = 0;
  std::size_t max_vertex = 0;  // largest vertex index on the loop
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct TwoComplex {
  CayleyBall ball;
  std::vector<Cell> cells;
  SparseMatrix d1;  // vertices x edges
  SparseMatrix d2;  // edges x cells
  std::size_t max_relator_length = 0;
};

// BFS ball of the given radius. Throws Error(kIncompleteRewriting) for a
// non-confluent system and ResourceError past the vertex cap.
CayleyBall build_ball(const GroupPresentation& p, const RewritingSystem& rws, unsigned radius,
                      BallLimits limits = {});

// Largest radius <= wanted whose ball stays under the vertex cap (at least 0).
unsigned clamp_radius(const GroupPresentation& p, const RewritingSystem& rws, unsigned wanted,
                      BallLimits limits = {});

TwoComplex attach_cells(CayleyBall ball, const GroupPresentation& p);

std::pair<SparseMatrix, SparseMatrix> boundary_matrices(const TwoComplex& x);

// Sub-complex of radius r <= x.ball.radius. Indices are prefixes of x's.
TwoComplex truncate(const TwoComplex& x, unsigned r);
CayleyBall truncate_ball(const CayleyBall& ball, unsigned r);

struct Circuit {
  Word word;  // letters read along the loop from the identity
  Chain chain;
};

struct CircuitLimits {
  std::size_t walk_cap = 1000000;
};

// Simple circuits through the identity of length <= max_len, one per
// unoriented circuit, ordered by length then chain. Throws ResourceError
// once more than walk_cap partial walks have been explored.
std::vector<Circuit> enumerate_circuits(const CayleyBall& ball, std::size_t max_len, CircuitLimits limits = {});

// The 1-chain traced by reading w from the identity, if it stays in the ball.
std::optional<Chain> word_to_chain(const CayleyBall& ball, const Word& w);

nlohmann::json complex_to_json(const TwoComplex& x, const GroupPresentation& p);
TwoComplex complex_from_json(const nlohmann::json& j, const GroupPresentation& p, const RewritingSystem& rws);

}  // namespace fillprobe
