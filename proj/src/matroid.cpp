#include "pmat/matroid.hpp"

#include <algorithm>
#include <numeric>

namespace pmat {

namespace {

// Fresh union-find per independence test; path halving plus union by size.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false if x and y were already connected.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (size_[rx] < size_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    size_[rx] += size_[ry];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// Rank of an exact rational matrix by Gaussian elimination.
int rational_rank(MatrixXr m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / m(row, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
    }
    ++row;
  }
  return static_cast<int>(row);
}

}  // namespace

Matroid::Matroid(std::shared_ptr<const Description> desc)
    : desc_(std::move(desc)),
      oracle_calls_(std::make_shared<std::uint64_t>(0)) {
  int m = 0;
  switch (desc_->kind) {
    case Kind::graphic:
      m = static_cast<int>(desc_->edges.size());
      break;
    case Kind::uniform:
      m = desc_->num_nodes;  // reused as element count for uniform
      break;
    case Kind::linear:
      m = static_cast<int>(desc_->columns.cols());
      break;
  }
  deleted_.assign(m, false);
}

Matroid Matroid::graphic(int num_nodes, std::vector<std::pair<int, int>> edges) {
  if (num_nodes <= 0) throw InputError("graphic matroid needs at least one node");
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes)
      throw InputError("edge endpoint out of range");
  auto desc = std::make_shared<Description>();
  desc->kind = Kind::graphic;
  desc->num_nodes = num_nodes;
  desc->edges = std::move(edges);
  return Matroid(std::move(desc));
}

Matroid Matroid::uniform(int k, int m) {
  if (k < 0 || m < 0) throw InputError("uniform matroid needs k, m >= 0");
  auto desc = std::make_shared<Description>();
  desc->kind = Kind::uniform;
  desc->rank_cap = k;
  desc->num_nodes = m;
  return Matroid(std::move(desc));
}

Matroid Matroid::linear(MatrixXr columns) {
  auto desc = std::make_shared<Description>();
  desc->kind = Kind::linear;
  desc->columns = std::move(columns);
  return Matroid(std::move(desc));
}

bool Matroid::is_deleted(int e) const {
  if (e < 0 || e >= num_elements()) throw InputError("unknown element id");
  return deleted_[e];
}

std::vector<int> Matroid::active_elements() const {
  std::vector<int> out;
  out.reserve(deleted_.size());
  for (int e = 0; e < num_elements(); ++e)
    if (!deleted_[e]) out.push_back(e);
  return out;
}

int Matroid::num_active() const {
  return static_cast<int>(std::count(deleted_.begin(), deleted_.end(), false));
}

void Matroid::check_subset(std::span<const int> subset) const {
  for (int e : subset) {
    if (e < 0 || e >= num_elements()) throw InputError("unknown element id");
    if (deleted_[e]) throw InputError("element is deleted");
  }
}

bool Matroid::is_independent(std::span<const int> subset) const {
  check_subset(subset);
  ++*oracle_calls_;
  return independent_impl(subset);
}

bool Matroid::independent_impl(std::span<const int> subset) const {
  switch (desc_->kind) {
    case Kind::graphic: {
      UnionFind uf(desc_->num_nodes);
      for (int e : subset) {
        const auto& [u, v] = desc_->edges[e];
        if (u == v || !uf.unite(u, v)) return false;
      }
      return true;
    }
    case Kind::uniform:
      return static_cast<int>(subset.size()) <= desc_->rank_cap;
    case Kind::linear: {
      MatrixXr sub(desc_->columns.rows(), static_cast<Eigen::Index>(subset.size()));
      for (Eigen::Index j = 0; j < sub.cols(); ++j)
        sub.col(j) = desc_->columns.col(subset[j]);
      return rational_rank(std::move(sub)) == static_cast<int>(subset.size());
    }
  }
  return false;
}

int Matroid::rank() const {
  std::vector<int> current;
  for (int e : active_elements()) {
    current.push_back(e);
    if (!is_independent(std::span<const int>(current))) current.pop_back();
  }
  return static_cast<int>(current.size());
}

Matroid Matroid::deleted(int e) const {
  if (e < 0 || e >= num_elements()) throw InputError("unknown element id");
  if (deleted_[e]) throw InputError("element already deleted");
  Matroid minor = *this;
  minor.deleted_[e] = true;
  minor.oracle_calls_ = std::make_shared<std::uint64_t>(*oracle_calls_);
  return minor;
}

int Matroid::graphic_num_nodes() const { return desc_->num_nodes; }

const std::vector<std::pair<int, int>>& Matroid::graphic_edges() const {
  return desc_->edges;
}

int Matroid::uniform_rank_cap() const { return desc_->rank_cap; }

const MatrixXr& Matroid::linear_columns() const { return desc_->columns; }

}  // namespace pmat
