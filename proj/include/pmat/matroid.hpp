#ifndef PMAT_MATROID_HPP
#define PMAT_MATROID_HPP

#include "pmat/rational.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pmat {

/// A basis is kept as a sorted vector of element ids.
using Basis = std::vector<int>;

/// Matroid ground set with an independence oracle. Three concrete families
/// are supported: graphic (independent = acyclic edge set), uniform
/// (independent = cardinality at most k) and linear (independent = linearly
/// independent rational columns).
///
/// Elements carry dense ids 0..m-1 that stay stable across deletions;
/// deletion is a mask on top of a shared immutable description, so taking a
/// minor is cheap and never invalidates ids.
class Matroid {
 public:
  enum class Kind { graphic, uniform, linear };

  /// Graphic matroid of a connected multigraph. `edges[i]` are the endpoints
  /// of element i; parallel edges and self-loops are allowed.
  static Matroid graphic(int num_nodes, std::vector<std::pair<int, int>> edges);

  /// Uniform matroid U(k, m).
  static Matroid uniform(int k, int m);

  /// Linear matroid of the columns of an exact rational matrix.
  static Matroid linear(MatrixXr columns);

  Kind kind() const { return desc_->kind; }

  /// Total number of elements including deleted ones (ids run 0..m-1).
  int num_elements() const { return static_cast<int>(deleted_.size()); }

  bool is_deleted(int e) const;
  std::vector<int> active_elements() const;
  int num_active() const;

  /// Independence test; one oracle call. Ids outside the active ground set
  /// raise InputError.
  bool is_independent(std::span<const int> subset) const;
  bool is_independent(const Basis& subset) const {
    return is_independent(std::span<const int>(subset));
  }

  /// Rank of the current (post-deletion) instance, computed by greedy
  /// augmentation; costs at most num_active() oracle calls.
  int rank() const;

  /// Deletion minor M - e; the receiver is left unchanged.
  Matroid deleted(int e) const;

  /// Number of independence tests issued through this instance so far.
  std::uint64_t oracle_calls() const { return *oracle_calls_; }

  // Description accessors (used for I/O round-trips).
  int graphic_num_nodes() const;
  const std::vector<std::pair<int, int>>& graphic_edges() const;
  int uniform_rank_cap() const;
  const MatrixXr& linear_columns() const;

 private:
  struct Description {
    Kind kind;
    // graphic
    int num_nodes = 0;
    std::vector<std::pair<int, int>> edges;
    // uniform
    int rank_cap = 0;
    // linear
    MatrixXr columns;
  };

  explicit Matroid(std::shared_ptr<const Description> desc);

  void check_subset(std::span<const int> subset) const;
  bool independent_impl(std::span<const int> subset) const;

  std::shared_ptr<const Description> desc_;
  std::vector<bool> deleted_;
  // Call accounting is observational state; copies keep their own tally.
  std::shared_ptr<std::uint64_t> oracle_calls_;
};

}  // namespace pmat

#endif  // PMAT_MATROID_HPP
