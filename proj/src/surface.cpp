#include "hamtorus/surface.hpp"

#include <numeric>

#include "hamtorus/errors.hpp"

namespace hamtorus {

GridParams::GridParams(std::int64_t n, std::int64_t m) : n_(n), m_(m), g_(0) {
  if (n < 1 || m < 1) {
    throw InputError("grid sizes must be positive, got n=" + std::to_string(n) +
                     " m=" + std::to_string(m));
  }
  g_ = std::gcd(n, m);
}

std::string to_string(const Cell& c) {
  return std::to_string(c.row) + "," + std::to_string(c.col);
}

std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::TL: return "TL";
    case Quadrant::TR: return "TR";
    case Quadrant::BL: return "BL";
    case Quadrant::BR: return "BR";
  }
  return "?";
}

bool is_valid(const GridParams& grid, const Cell& cell) {
  return cell.row >= 0 && cell.row < grid.rows() && cell.col >= 0 &&
         cell.col < grid.cols();
}

void require_valid(const GridParams& grid, const Cell& cell) {
  if (!is_valid(grid, cell)) {
    throw InputError("cell (" + to_string(cell) + ") outside " +
                     std::to_string(grid.rows()) + "x" +
                     std::to_string(grid.cols()) + " grid");
  }
}

Cell step(const GridParams& grid, const Cell& cell, Move move) {
  require_valid(grid, cell);
  const auto rows = grid.rows();
  const auto cols = grid.cols();
  switch (move) {
    case Move::Up:
      if (cell.row == 0) return {rows - 1, (cell.col + grid.m()) % cols};
      return {cell.row - 1, cell.col};
    case Move::UpInv:
      if (cell.row == rows - 1) return {0, (cell.col + grid.m()) % cols};
      return {cell.row + 1, cell.col};
    case Move::Right:
      if (cell.col == cols - 1) return {(cell.row + grid.n()) % rows, 0};
      return {cell.row, cell.col + 1};
    case Move::RightInv:
      if (cell.col == 0) return {(cell.row + grid.n()) % rows, cols - 1};
      return {cell.row, cell.col - 1};
  }
  return cell;
}

Quadrant quadrant_of(const GridParams& grid, const Cell& cell) {
  const bool top = cell.row < grid.n();
  const bool left = cell.col < grid.m();
  if (top) return left ? Quadrant::TL : Quadrant::TR;
  return left ? Quadrant::BL : Quadrant::BR;
}

BoundaryClass classify(const GridParams& grid, const Cell& cell) {
  require_valid(grid, cell);
  BoundaryClass bc;
  bc.on_a = cell.row == 0 && cell.col < grid.m();
  bc.on_b = cell.row == 0 && cell.col >= grid.m();
  bc.on_c = cell.col == grid.cols() - 1 && cell.row < grid.n();
  bc.on_d = cell.col == grid.cols() - 1 && cell.row >= grid.n();
  bc.quadrant = quadrant_of(grid, cell);
  return bc;
}

Cell diag_successor(const GridParams& grid, const Cell& cell) {
  return step(grid, step(grid, cell, Move::Right), Move::UpInv);
}

}  // namespace hamtorus
