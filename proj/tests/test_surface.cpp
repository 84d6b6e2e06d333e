#include "doctest.h"
#include "hamtorus/errors.hpp"
#include "hamtorus/surface.hpp"

using namespace hamtorus;

TEST_SUITE("surface") {
  TEST_CASE("grid parameters") {
    GridParams g(4, 6);
    CHECK(g.g() == 2);
    CHECK(g.rows() == 8);
    CHECK(g.cols() == 12);
    CHECK(g.cell_count() == 96);
    CHECK_THROWS_AS(GridParams(0, 3), InputError);
    CHECK_THROWS_AS(GridParams(2, -1), InputError);
  }

  TEST_CASE("steps with and without wrap") {
    GridParams g(2, 3);
    CHECK(step(g, {1, 0}, Move::Up) == Cell{0, 0});
    CHECK(step(g, {0, 1}, Move::Up) == Cell{3, 4});
    CHECK(step(g, {2, 5}, Move::Right) == Cell{0, 0});
    CHECK(step(g, {0, 0}, Move::Right) == Cell{0, 1});
    CHECK_THROWS_AS(step(g, {4, 0}, Move::Up), InputError);
    CHECK_THROWS_AS(step(g, {0, 6}, Move::Right), InputError);
  }

  TEST_CASE("inverse moves undo moves everywhere") {
    for (std::int64_t n = 1; n <= 4; ++n) {
      for (std::int64_t m = 1; m <= 4; ++m) {
        GridParams g(n, m);
        for (std::int64_t i = 0; i < g.cell_count(); ++i) {
          const auto c = cell_at(g, i);
          CHECK(step(g, step(g, c, Move::Up), Move::UpInv) == c);
          CHECK(step(g, step(g, c, Move::Right), Move::RightInv) == c);
          CHECK(cell_index(g, c) == i);
        }
      }
    }
  }

  TEST_CASE("boundary classification") {
    GridParams g(2, 3);
    auto corner = classify(g, {0, 0});
    CHECK(corner.on_a);
    CHECK_FALSE(corner.on_b);
    CHECK(corner.quadrant == Quadrant::TL);
    auto far = classify(g, {3, 5});
    CHECK(far.on_d);
    CHECK_FALSE(far.on_c);
    CHECK(far.quadrant == Quadrant::BR);
    CHECK(classify(g, {1, 2}) == BoundaryClass{false, false, false, false, Quadrant::TL});
    CHECK(classify(g, {0, 5}) == BoundaryClass{false, true, true, false, Quadrant::TR});
    CHECK(quadrant_of(g, {2, 2}) == Quadrant::BL);
  }

  TEST_CASE("diagonal successor") {
    GridParams g(2, 3);
    CHECK(diag_successor(g, {0, 0}) == Cell{1, 1});
    for (std::int64_t m = 2; m <= 9; ++m) {
      GridParams h(2, m);
      CHECK(diag_successor(h, {3, 2 * m - 1}) == Cell{2, 0});
      CHECK(diag_successor(h, {1, 2 * m - 1}) == Cell{0, m});
    }
  }

  TEST_CASE("cell text") { CHECK(to_string(Cell{3, 14}) == "3,14"); }
}
