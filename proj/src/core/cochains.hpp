#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "rational.hpp"

namespace fillprobe {

class FiniteGroupTable {
 public:
  // table[a][b] is the index of a*b. Throws Error(kInvalidArgument) unless
  // the table has an identity and inverses, and (for order <= 64) is
  // associative.
  explicit FiniteGroupTable(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {});

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> names_;
  std::size_t identity_ = 0;
};

// {"order": n, "table": [n*n entries, row-major], "names": [...] optional}
FiniteGroupTable group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroupTable& g);

FiniteGroupTable cyclic_group(std::size_t n);
FiniteGroupTable symmetric_group_3();
// "Z/2", "Z/3", "Z/6" or "S3".
FiniteGroupTable catalog_group(const std::string& name);
std::vector<std::string> catalog_group_names();

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

// A linear action of the group on Q^dimension, one matrix per element.
struct Representation {
  std::size_t dimension = 1;
  std::vector<Matrix> matrices;
  Vector apply(std::size_t g, const Vector& v) const;
};

Representation trivial_representation(const FiniteGroupTable& g, std::size_t dimension);
// Throws Error(kInvalidArgument) unless rho(e) = 1 and rho(ab) = rho(a)rho(b).
void check_representation(const FiniteGroupTable& g, const Representation& rho);

// Cells of degree d are (d+1)-tuples of group elements, stored by their
// base-n expansion (first entry most significant). The group acts on the
// left in every coordinate.
std::size_t cell_count(std::size_t order, std::size_t degree);
std::vector<std::size_t> decode_cell(std::size_t index, std::size_t order, std::size_t degree);
std::size_t encode_cell(const std::vector<std::size_t>& tuple, std::size_t order);
std::size_t translate_cell(const FiniteGroupTable& g, std::size_t h, std::size_t cell, std::size_t degree);

// theta(x) in V for every cell x.
struct PlainCochain {
  std::size_t degree = 0;
  std::size_t dimension = 1;
  std::vector<Vector> values;
  friend bool operator==(const PlainCochain&, const PlainCochain&) = default;
};

// f(x) in l-infinity(G, V) for every cell x, stored as f(x)(g) = values[x][g].
struct EquivariantCochain {
  std::size_t degree = 0;
  std::size_t dimension = 1;
  std::vector<std::vector<Vector>> values;
  friend bool operator==(const EquivariantCochain&, const EquivariantCochain&) = default;
};

PlainCochain zero_plain(const FiniteGroupTable& g, std::size_t degree, std::size_t dimension);
EquivariantCochain zero_equivariant(const FiniteGroupTable& g, std::size_t degree, std::size_t dimension);

Rational sup_norm(const PlainCochain& c);

// f(x) = x -> f(x)(e)
PlainCochain phi(const EquivariantCochain& f, const FiniteGroupTable& g);
// theta -> (x -> (h -> rho(h) theta(h^-1 x)))
EquivariantCochain psi(const PlainCochain& theta, const FiniteGroupTable& g, const Representation& rho);

// f(h x) = h . f(x) for all h and x, where (h . u)(k) = rho(h) u(h^-1 k).
bool is_equivariant(const EquivariantCochain& f, const FiniteGroupTable& g, const Representation& rho);

// The equivariant cochain that takes the given values on cells whose first
// entry is the identity (n^degree of them, in cell order).
EquivariantCochain extend_equivariant(std::size_t degree, const std::vector<std::vector<Vector>>& basis_values,
                                      const FiniteGroupTable& g, const Representation& rho);

// (delta c)(x_0..x_{d+1}) = sum_i (-1)^i c(x_0..omit x_i..x_{d+1}). Throws
// Error(kInvalidArgument) when degree + 1 exceeds max_degree.
PlainCochain coboundary(const PlainCochain& c, const FiniteGroupTable& g, std::size_t max_degree = 3);
EquivariantCochain coboundary(const EquivariantCochain& c, const FiniteGroupTable& g, std::size_t max_degree = 3);

}  // namespace fillprobe
