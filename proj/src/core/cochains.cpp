#include "cochains.hpp"

#include <algorithm>

#include "error.hpp"

namespace fillprobe {

namespace {

constexpr std::size_t kAssociativityLimit = 64;
constexpr std::size_t kEntryLimit = 20000000;

void invalid(const std::string& what) { throw Error(ErrorCode::kInvalidArgument, what); }

void check_size(std::size_t cells, std::size_t per_cell) {
  if (per_cell != 0 && cells > kEntryLimit / per_cell)
    throw ResourceError("cochain would hold more than " + std::to_string(kEntryLimit) + " entries");
}

Vector zero_vector(std::size_t m) { return Vector(m, Rational(0)); }

}  // namespace

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const std::size_t n = table_.size();
  if (n == 0) invalid("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) invalid("group table is not square");
    for (std::size_t v : row)
      if (v >= n) invalid("group table entry out of range");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) invalid("group table has no identity");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    if (inverse_[a] == n) invalid("element " + std::to_string(a) + " has no inverse");
  }
  if (n <= kAssociativityLimit)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            invalid("group table is not associative at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                    std::to_string(c) + ")");
  if (names_.empty()) {
    for (std::size_t a = 0; a < n; ++a) names_.push_back("g" + std::to_string(a));
  } else if (names_.size() != n) {
    invalid("expected one name per element");
  }
}

FiniteGroupTable group_from_json(const nlohmann::json& j) {
  try {
    std::size_t n = j.at("order").get<std::size_t>();
    auto flat = j.at("table").get<std::vector<std::size_t>>();
    if (flat.size() != n * n) invalid("table must hold order^2 entries");
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table[a][b] = flat[a * n + b];
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return FiniteGroupTable(std::move(table), std::move(names));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed group table: ") + e.what());
  }
}

nlohmann::json group_to_json(const FiniteGroupTable& g) {
  std::vector<std::size_t> flat;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) flat.push_back(g.multiply(a, b));
  return {{"order", g.order()}, {"table", flat}, {"names", g.names()}};
}

FiniteGroupTable cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroupTable(std::move(table), std::move(names));
}

FiniteGroupTable symmetric_group_3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(perms[a][0] + 1) + std::to_string(perms[a][1] + 1) +
                    std::to_string(perms[a][2] + 1));
    for (std::size_t b = 0; b < n; ++b) {
      // (a*b)(i) = a(b(i))
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroupTable(std::move(table), std::move(names));
}

FiniteGroupTable catalog_group(const std::string& name) {
  if (name == "Z/2") return cyclic_group(2);
  if (name == "Z/3") return cyclic_group(3);
  if (name == "Z/6") return cyclic_group(6);
  if (name == "S3") return symmetric_group_3();
  invalid("unknown finite group '" + name + "'");
  return cyclic_group(1);
}

std::vector<std::string> catalog_group_names() { return {"Z/2", "Z/3", "Z/6", "S3"}; }

Vector Representation::apply(std::size_t g, const Vector& v) const {
  const Matrix& m = matrices[g];
  Vector out = zero_vector(dimension);
  for (std::size_t i = 0; i < dimension; ++i)
    for (std::size_t j = 0; j < dimension; ++j)
      if (m[i][j] != 0) out[i] += m[i][j] * v[j];
  return out;
}

Representation trivial_representation(const FiniteGroupTable& g, std::size_t dimension) {
  Matrix id(dimension, zero_vector(dimension));
  for (std::size_t i = 0; i < dimension; ++i) id[i][i] = 1;
  return {dimension, std::vector<Matrix>(g.order(), id)};
}

void check_representation(const FiniteGroupTable& g, const Representation& rho) {
  const std::size_t m = rho.dimension;
  if (rho.matrices.size() != g.order()) invalid("representation needs one matrix per element");
  for (const auto& mat : rho.matrices) {
    if (mat.size() != m) invalid("representation matrix has the wrong size");
    for (const auto& row : mat)
      if (row.size() != m) invalid("representation matrix has the wrong size");
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (rho.matrices[g.identity()][i][j] != (i == j ? 1 : 0)) invalid("identity must act trivially");
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const Matrix& ab = rho.matrices[g.multiply(a, b)];
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          Rational s = 0;
          for (std::size_t k = 0; k < m; ++k) s += rho.matrices[a][i][k] * rho.matrices[b][k][j];
          if (s != ab[i][j]) invalid("representation is not multiplicative");
        }
    }
}

std::size_t cell_count(std::size_t order, std::size_t degree) {
  std::size_t count = 1;
  for (std::size_t i = 0; i <= degree; ++i) {
    if (count > kEntryLimit / order) throw ResourceError("too many cells in this degree");
    count *= order;
  }
  return count;
}

std::vector<std::size_t> decode_cell(std::size_t index, std::size_t order, std::size_t degree) {
  std::vector<std::size_t> tuple(degree + 1);
  for (std::size_t i = degree + 1; i-- > 0;) {
    tuple[i] = index % order;
    index /= order;
  }
  return tuple;
}

std::size_t encode_cell(const std::vector<std::size_t>& tuple, std::size_t order) {
  std::size_t index = 0;
  for (std::size_t x : tuple) index = index * order + x;
  return index;
}

std::size_t translate_cell(const FiniteGroupTable& g, std::size_t h, std::size_t cell, std::size_t degree) {
  auto tuple = decode_cell(cell, g.order(), degree);
  for (auto& x : tuple) x = g.multiply(h, x);
  return encode_cell(tuple, g.order());
}

PlainCochain zero_plain(const FiniteGroupTable& g, std::size_t degree, std::size_t dimension) {
  std::size_t cells = cell_count(g.order(), degree);
  check_size(cells, dimension);
  return {degree, dimension, std::vector<Vector>(cells, zero_vector(dimension))};
}

EquivariantCochain zero_equivariant(const FiniteGroupTable& g, std::size_t degree, std::size_t dimension) {
  std::size_t cells = cell_count(g.order(), degree);
  check_size(cells, g.order() * dimension);
  return {degree, dimension,
          std::vector<std::vector<Vector>>(cells, std::vector<Vector>(g.order(), zero_vector(dimension)))};
}

Rational sup_norm(const PlainCochain& c) {
  Rational best = 0;
  for (const auto& v : c.values)
    for (const auto& q : v) best = std::max(best, abs_value(q));
  return best;
}

PlainCochain phi(const EquivariantCochain& f, const FiniteGroupTable& g) {
  PlainCochain out{f.degree, f.dimension, {}};
  out.values.reserve(f.values.size());
  for (const auto& fx : f.values) out.values.push_back(fx[g.identity()]);
  return out;
}

EquivariantCochain psi(const PlainCochain& theta, const FiniteGroupTable& g, const Representation& rho) {
  if (rho.dimension != theta.dimension) invalid("representation and cochain dimensions differ");
  EquivariantCochain out = zero_equivariant(g, theta.degree, theta.dimension);
  for (std::size_t x = 0; x < out.values.size(); ++x)
    for (std::size_t h = 0; h < g.order(); ++h)
      out.values[x][h] = rho.apply(h, theta.values[translate_cell(g, g.inverse(h), x, theta.degree)]);
  return out;
}

bool is_equivariant(const EquivariantCochain& f, const FiniteGroupTable& g, const Representation& rho) {
  for (std::size_t x = 0; x < f.values.size(); ++x)
    for (std::size_t h = 0; h < g.order(); ++h) {
      const auto& moved = f.values[translate_cell(g, h, x, f.degree)];
      for (std::size_t k = 0; k < g.order(); ++k)
        if (moved[k] != rho.apply(h, f.values[x][g.multiply(g.inverse(h), k)])) return false;
    }
  return true;
}

EquivariantCochain extend_equivariant(std::size_t degree, const std::vector<std::vector<Vector>>& basis_values,
                                      const FiniteGroupTable& g, const Representation& rho) {
  const std::size_t n = g.order();
  std::size_t basis = cell_count(n, degree) / n;
  if (basis_values.size() != basis) invalid("expected one value function per basis cell");
  EquivariantCochain out = zero_equivariant(g, degree, rho.dimension);
  for (std::size_t b = 0; b < basis; ++b) {
    // basis cell b has first entry e; its tail is the base-n expansion of b
    auto tuple = decode_cell(b, n, degree);
    tuple[0] = g.identity();
    std::size_t cell = encode_cell(tuple, n);
    if (basis_values[b].size() != n) invalid("value functions must be total on the group");
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t target = translate_cell(g, h, cell, degree);
      for (std::size_t k = 0; k < n; ++k)
        out.values[target][k] = rho.apply(h, basis_values[b][g.multiply(g.inverse(h), k)]);
    }
  }
  return out;
}

namespace {

template <class Value, class Combine>
std::vector<Value> alternating_faces(const std::vector<Value>& values, std::size_t order, std::size_t degree,
                                     std::size_t cells, Combine combine) {
  std::vector<Value> out(cells);
  std::vector<std::size_t> face(degree + 1);
  for (std::size_t x = 0; x < cells; ++x) {
    auto tuple = decode_cell(x, order, degree + 1);
    for (std::size_t omit = 0; omit <= degree + 1; ++omit) {
      std::size_t j = 0;
      for (std::size_t i = 0; i <= degree + 1; ++i)
        if (i != omit) face[j++] = tuple[i];
      combine(out[x], values[encode_cell(face, order)], omit % 2 == 0 ? 1 : -1);
    }
  }
  return out;
}

void check_degree(std::size_t degree, std::size_t max_degree) {
  if (degree + 1 > max_degree)
    invalid("coboundary would reach degree " + std::to_string(degree + 1) + " beyond the maximum " +
            std::to_string(max_degree));
}

void add_scaled(Vector& into, const Vector& v, int sign, std::size_t m) {
  if (into.empty()) into = zero_vector(m);
  for (std::size_t i = 0; i < m; ++i) into[i] += sign * v[i];
}

}  // namespace

PlainCochain coboundary(const PlainCochain& c, const FiniteGroupTable& g, std::size_t max_degree) {
  check_degree(c.degree, max_degree);
  std::size_t cells = cell_count(g.order(), c.degree + 1);
  check_size(cells, c.dimension);
  const std::size_t m = c.dimension;
  return {c.degree + 1, m,
          alternating_faces(c.values, g.order(), c.degree, cells,
                            [m](Vector& into, const Vector& v, int sign) { add_scaled(into, v, sign, m); })};
}

EquivariantCochain coboundary(const EquivariantCochain& c, const FiniteGroupTable& g, std::size_t max_degree) {
  check_degree(c.degree, max_degree);
  std::size_t cells = cell_count(g.order(), c.degree + 1);
  check_size(cells, g.order() * c.dimension);
  const std::size_t m = c.dimension, n = g.order();
  return {c.degree + 1, m,
          alternating_faces(c.values, n, c.degree, cells,
                            [m, n](std::vector<Vector>& into, const std::vector<Vector>& v, int sign) {
                              if (into.empty()) into.resize(n);
                              for (std::size_t k = 0; k < n; ++k) add_scaled(into[k], v[k], sign, m);
                            })};
}

}  // namespace fillprobe
