#include "hamtorus/diagonals.hpp"

#include <numeric>
#include <string>

#include "hamtorus/errors.hpp"

namespace hamtorus {
namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent[y] = x;
  }
  std::vector<int> parent;
};

}  // namespace

DiagonalDecomposition::DiagonalDecomposition(const GridParams& grid)
    : grid_(grid) {
  const auto total = grid.cell_count();
  label_.assign(static_cast<std::size_t>(total), -1);
  up_next_.resize(static_cast<std::size_t>(total));
  right_next_.resize(static_cast<std::size_t>(total));
  std::vector<std::int64_t> succ(static_cast<std::size_t>(total));
  for (std::int64_t i = 0; i < total; ++i) {
    const Cell c = cell_at(grid, i);
    up_next_[i] = cell_index(grid, step(grid, c, Move::Up));
    right_next_[i] = cell_index(grid, step(grid, c, Move::Right));
    succ[i] = cell_index(grid, diag_successor(grid, c));
  }

  for (std::int64_t start = 0; start < total; ++start) {
    if (label_[start] >= 0) continue;
    Diagonal diag;
    diag.id = static_cast<int>(diagonals_.size());
    std::int64_t cur = start;
    while (label_[cur] < 0) {
      label_[cur] = diag.id;
      diag.cells.push_back(cell_at(grid, cur));
      cur = succ[cur];
    }
    if (cur != start) {
      throw InconsistencyError("diagonal successor is not a bijection");
    }
    diag.profile = profile(grid, diag);
    diagonals_.push_back(std::move(diag));
  }
  find_groups();
}

void DiagonalDecomposition::find_groups() {
  const int count = static_cast<int>(diagonals_.size());
  DisjointSets sets(count);
  const auto cols = grid_.cols();

  for (int x = 0; x < count; ++x) {
    const auto& cells = diagonals_[x].cells;
    std::vector<std::int64_t> shifted(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      shifted[k] = cell_index(grid_, cells[k]);
    }
    for (std::int64_t i = 1; i <= cols; ++i) {
      for (auto& s : shifted) s = right_next_[s];
      const int candidate = label_[shifted.front()];
      if (sets.find(candidate) == sets.find(x)) continue;
      if (diagonals_[candidate].cells.size() != cells.size()) continue;
      bool all = true;
      for (auto s : shifted) {
        if (label_[s] != candidate) {
          all = false;
          break;
        }
      }
      // Equal sizes plus inclusion gives set equality.
      if (all) sets.unite(x, candidate);
    }
  }

  std::vector<int> group_of_root(count, -1);
  for (int x = 0; x < count; ++x) {
    const int root = sets.find(x);
    if (group_of_root[root] < 0) {
      group_of_root[root] = static_cast<int>(groups_.size());
      groups_.emplace_back();
    }
    diagonals_[x].group_id = group_of_root[root];
    groups_[group_of_root[root]].push_back(x);
  }

  for (const auto& group : groups_) {
    for (int member : group) {
      if (!(diagonals_[member].profile == diagonals_[group.front()].profile)) {
        throw InconsistencyError("parallel diagonals with different profiles");
      }
    }
  }
}

int DiagonalDecomposition::diagonal_of(const Cell& cell) const {
  require_valid(grid_, cell);
  return label_[cell_index(grid_, cell)];
}

DiagonalDecomposition decompose(const GridParams& grid) {
  return DiagonalDecomposition(grid);
}

std::int64_t diag_count_naive(std::int64_t n, std::int64_t m) {
  const GridParams grid(n, m);
  const auto total = grid.cell_count();
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  std::int64_t orbits = 0;
  for (std::int64_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    ++orbits;
    Cell cur = cell_at(grid, start);
    std::int64_t idx = start;
    while (!seen[idx]) {
      seen[idx] = true;
      cur = diag_successor(grid, cur);
      idx = cell_index(grid, cur);
    }
  }
  return orbits;
}

BoundaryProfile profile(const GridParams& grid, const Diagonal& d) {
  BoundaryProfile p;
  for (const auto& cell : d.cells) {
    const auto bc = classify(grid, cell);
    p.a += bc.on_a;
    p.b += bc.on_b;
    p.c += bc.on_c;
    p.d += bc.on_d;
  }
  return p;
}

bool block_groups_consistent(const DiagonalDecomposition& dec) {
  const auto& grid = dec.grid();
  const auto g = grid.g();
  const Cell corners[] = {{0, 0}, {0, grid.m()}, {grid.n(), 0}, {grid.n(), grid.m()}};
  for (const auto& corner : corners) {
    std::vector<int> ids;
    for (std::int64_t k = 0; k < g; ++k) {
      ids.push_back(dec.diagonal_of({corner.row, corner.col + k}));
    }
    for (std::size_t k = 0; k < ids.size(); ++k) {
      for (std::size_t j = k + 1; j < ids.size(); ++j) {
        if (ids[k] == ids[j]) return false;
      }
      if (dec.diagonals()[ids[k]].group_id != dec.diagonals()[ids[0]].group_id) {
        return false;
      }
    }
    for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
      for (const auto& cell : dec.diagonals()[ids[k]].cells) {
        if (dec.diagonal_of(step(grid, cell, Move::Right)) != ids[k + 1]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace hamtorus
