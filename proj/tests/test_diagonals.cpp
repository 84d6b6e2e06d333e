#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "hamtorus/diagonals.hpp"

using namespace hamtorus;

namespace {

BoundaryProfile total(const DiagonalDecomposition& dec) {
  BoundaryProfile sum;
  for (const auto& d : dec.diagonals()) sum += d.profile;
  return sum;
}

}  // namespace

TEST_SUITE("diagonals") {
  TEST_CASE("diagonal counts") {
    CHECK(decompose(GridParams(1, 3)).size() == 2);
    CHECK(decompose(GridParams(3, 5)).size() == 2);
    CHECK(decompose(GridParams(2, 6)).size() == 4);
    CHECK(diag_count_naive(2, 3) == 1);
    CHECK(diag_count_naive(3, 5) == 2);
    CHECK(diag_count_naive(2, 6) == 4);
    CHECK(diag_count_naive(1, 1) == 2);
  }

  TEST_CASE("diagonals partition the grid in successor order") {
    for (std::int64_t n = 1; n <= 6; ++n) {
      for (std::int64_t m = 1; m <= 6; ++m) {
        GridParams g(n, m);
        auto dec = decompose(g);
        std::set<Cell> seen;
        Cell prev_first{-1, -1};
        for (const auto& d : dec.diagonals()) {
          CHECK(d.cells.front() == *std::min_element(d.cells.begin(), d.cells.end()));
          CHECK(prev_first < d.cells.front());
          prev_first = d.cells.front();
          for (std::size_t i = 0; i < d.cells.size(); ++i) {
            CHECK(seen.insert(d.cells[i]).second);
            CHECK(dec.diagonal_of(d.cells[i]) == d.id);
            CHECK(diag_successor(g, d.cells[i]) == d.cells[(i + 1) % d.cells.size()]);
          }
        }
        CHECK(static_cast<std::int64_t>(seen.size()) == g.cell_count());
        CHECK(static_cast<std::int64_t>(dec.size()) == diag_count_naive(n, m));
      }
    }
  }

  TEST_CASE("profiles") {
    auto one = decompose(GridParams(2, 3));
    REQUIRE(one.size() == 1);
    CHECK(one.diagonals()[0].profile == BoundaryProfile{3, 3, 2, 2});
    auto two = decompose(GridParams(1, 3));
    CHECK(total(two) == BoundaryProfile{3, 3, 1, 1});
    CHECK(two.diagonals()[0].profile == BoundaryProfile{3, 2, 1, 0});
    CHECK(two.diagonals()[1].profile == BoundaryProfile{0, 1, 0, 1});
    const auto square = decompose(GridParams(2, 2));
    for (const auto& d : square.diagonals()) {
      CHECK(d.profile.a <= 2);
      CHECK(d.profile.b <= 2);
      CHECK(d.profile.c <= 2);
      CHECK(d.profile.d <= 2);
      CHECK(profile(GridParams(2, 2), d) == d.profile);
    }
  }

  TEST_CASE("profiles always sum to (m, m, n, n)") {
    for (std::int64_t n = 1; n <= 7; ++n) {
      for (std::int64_t m = 1; m <= 7; ++m) {
        CHECK(total(decompose(GridParams(n, m))) == BoundaryProfile{m, m, n, n});
      }
    }
  }

  TEST_CASE("count is symmetric and scales with the gcd") {
    for (std::int64_t n = 1; n <= 12; ++n) {
      for (std::int64_t m = 1; m <= 12; ++m) {
        CHECK(diag_count_naive(n, m) == diag_count_naive(m, n));
        const auto g = std::gcd(n, m);
        CHECK(diag_count_naive(n, m) == g * diag_count_naive(n / g, m / g));
        if (std::gcd(n, m) == 1) CHECK(diag_count_naive(n, m) <= 3);
      }
    }
  }

  TEST_CASE("parallel groups") {
    for (std::int64_t n = 1; n <= 8; ++n) {
      for (std::int64_t m = 1; m <= 8; ++m) {
        GridParams g(n, m);
        auto dec = decompose(g);
        CHECK(block_groups_consistent(dec));
        CHECK(dec.groups().size() <= 4);
        std::size_t members = 0;
        for (std::size_t k = 0; k < dec.groups().size(); ++k) {
          const auto& group = dec.groups()[k];
          members += group.size();
          CHECK(group.size() % static_cast<std::size_t>(g.g()) == 0);
          for (int id : group) {
            CHECK(dec.diagonals()[id].group_id == static_cast<int>(k));
            CHECK(dec.diagonals()[id].profile == dec.diagonals()[group.front()].profile);
          }
        }
        CHECK(members == dec.size());
      }
    }
  }
}
