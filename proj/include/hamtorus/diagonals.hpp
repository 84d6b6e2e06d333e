#pragma once

#include <cstdint>
#include <vector>

#include "hamtorus/surface.hpp"

namespace hamtorus {

/// Number of a diagonal's cells on each boundary half.
struct BoundaryProfile {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  BoundaryProfile& operator+=(const BoundaryProfile& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    d += o.d;
    return *this;
  }
  friend bool operator==(const BoundaryProfile&, const BoundaryProfile&) = default;
};

/// One orbit of diag_successor. `cells` starts at the orbit's row-major
/// minimum and follows successor order.
struct Diagonal {
  int id = 0;
  std::vector<Cell> cells;
  BoundaryProfile profile;
  int group_id = 0;
};

/// Partition of the grid into diagonals, plus the parallel classes.
///
/// Diagonal ids follow the row-major order of each diagonal's first cell.
/// Groups are connected components of the parallel relation (x ~ x' when
/// r^i maps the cells of x onto the cells of x' for some 1 <= i <= 2m);
/// group ids follow the smallest diagonal id in each group.
class DiagonalDecomposition {
 public:
  explicit DiagonalDecomposition(const GridParams& grid);

  const GridParams& grid() const { return grid_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }
  const std::vector<std::vector<int>>& groups() const { return groups_; }
  std::size_t size() const { return diagonals_.size(); }

  int diagonal_of(const Cell& cell) const;

  // Flat per-cell label table, indexed by cell_index().
  const std::vector<int>& labels() const { return label_; }

  // Successor tables by cell_index() for the up and right edges.
  const std::vector<std::int64_t>& up_next() const { return up_next_; }
  const std::vector<std::int64_t>& right_next() const { return right_next_; }

 private:
  void find_groups();

  GridParams grid_;
  std::vector<Diagonal> diagonals_;
  std::vector<std::vector<int>> groups_;
  std::vector<int> label_;
  std::vector<std::int64_t> up_next_;
  std::vector<std::int64_t> right_next_;
};

DiagonalDecomposition decompose(const GridParams& grid);

/// Orbit count of diag_successor, without materializing the decomposition.
std::int64_t diag_count_naive(std::int64_t n, std::int64_t m);

BoundaryProfile profile(const GridParams& grid, const Diagonal& d);

/// Checks the block structure of parallel groups: for every quadrant, the
/// 1 x g block at its top-left corner meets g distinct diagonals, all in
/// one group, with r carrying each diagonal onto the next one to the right.
bool block_groups_consistent(const DiagonalDecomposition& dec);

}  // namespace hamtorus
