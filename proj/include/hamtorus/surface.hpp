#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace hamtorus {

/// Quadrant heights/widths of the 2n x 2m grid folded onto a two-holed torus.
///
/// Rows are numbered from the top, columns from the left. Leaving the top
/// row wraps to the bottom row shifted by m columns; leaving the right
/// column wraps to the left column shifted by n rows.
class GridParams {
 public:
  GridParams(std::int64_t n, std::int64_t m);

  std::int64_t n() const { return n_; }
  std::int64_t m() const { return m_; }
  std::int64_t g() const { return g_; }
  std::int64_t rows() const { return 2 * n_; }
  std::int64_t cols() const { return 2 * m_; }
  std::int64_t cell_count() const { return 4 * n_ * m_; }

  friend bool operator==(const GridParams&, const GridParams&) = default;

 private:
  std::int64_t n_;
  std::int64_t m_;
  std::int64_t g_;
};

struct Cell {
  std::int64_t row = 0;
  std::int64_t col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

enum class Move { Up, Right, UpInv, RightInv };

enum class Quadrant { TL = 0, TR = 1, BL = 2, BR = 3 };

std::string to_string(Quadrant q);

/// Which of the boundary halves A, B (top row), C, D (right column) a cell
/// sits on, and its quadrant.
struct BoundaryClass {
  bool on_a = false;
  bool on_b = false;
  bool on_c = false;
  bool on_d = false;
  Quadrant quadrant = Quadrant::TL;

  friend bool operator==(const BoundaryClass&, const BoundaryClass&) = default;
};

bool is_valid(const GridParams& grid, const Cell& cell);

// Throws InputError when the cell lies outside the grid.
void require_valid(const GridParams& grid, const Cell& cell);

Cell step(const GridParams& grid, const Cell& cell, Move move);

BoundaryClass classify(const GridParams& grid, const Cell& cell);

Quadrant quadrant_of(const GridParams& grid, const Cell& cell);

/// u^{-1} r: one step right, then one step down.
Cell diag_successor(const GridParams& grid, const Cell& cell);

// Row-major linear index, used for flat per-cell tables.
inline std::int64_t cell_index(const GridParams& grid, const Cell& c) {
  return c.row * grid.cols() + c.col;
}

inline Cell cell_at(const GridParams& grid, std::int64_t index) {
  return {index / grid.cols(), index % grid.cols()};
}

}  // namespace hamtorus
