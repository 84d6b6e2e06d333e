#include "hamtorus/hamiltonicity.hpp"

#include <array>
#include <mutex>
#include <numeric>

#include "hamtorus/errors.hpp"

namespace hamtorus {
namespace {

// Cycle counter reusing its visit stamps across calls.
class ComponentCounter {
 public:
  explicit ComponentCounter(const DiagonalDecomposition& dec)
      : dec_(dec), stamp_(static_cast<std::size_t>(dec.grid().cell_count()), 0) {}

  std::int64_t count(const OrientationString& omega) {
    ++epoch_;
    const auto& labels = dec_.labels();
    const auto& up = dec_.up_next();
    const auto& right = dec_.right_next();
    const auto total = static_cast<std::int64_t>(stamp_.size());
    std::int64_t cycles = 0;
    for (std::int64_t start = 0; start < total; ++start) {
      if (stamp_[start] == epoch_) continue;
      ++cycles;
      auto cur = start;
      while (stamp_[cur] != epoch_) {
        stamp_[cur] = epoch_;
        cur = omega[labels[cur]] == Dir::Up ? up[cur] : right[cur];
      }
      if (cur != start) {
        throw InconsistencyError("oriented out-edges do not form a permutation");
      }
    }
    return cycles;
  }

 private:
  const DiagonalDecomposition& dec_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

void require_length(const DiagonalDecomposition& dec, const OrientationString& omega) {
  if (omega.size() != dec.size()) {
    throw InputError("orientation has " + std::to_string(omega.size()) +
                     " characters but the grid has " + std::to_string(dec.size()) +
                     " diagonals");
  }
}

std::int64_t next_index(const DiagonalDecomposition& dec, const OrientationString& omega,
                        std::int64_t idx) {
  return omega[dec.labels()[idx]] == Dir::Up ? dec.up_next()[idx] : dec.right_next()[idx];
}

// Orientation read off a per-cell direction table; nullopt if some diagonal
// is not constant.
std::optional<OrientationString> orientation_from_cells(const DiagonalDecomposition& dec,
                                                        const std::vector<Dir>& cell_dirs) {
  OrientationString omega(dec.size(), Dir::Up);
  for (const auto& diag : dec.diagonals()) {
    const auto first = cell_dirs[cell_index(dec.grid(), diag.cells.front())];
    for (const auto& cell : diag.cells) {
      if (cell_dirs[cell_index(dec.grid(), cell)] != first) return std::nullopt;
    }
    omega[diag.id] = first;
  }
  return omega;
}

}  // namespace

OrientationString GroupedOrientation::expand(const DiagonalDecomposition& dec) const {
  if (up_counts.size() != dec.groups().size()) {
    throw InputError("grouped orientation has " + std::to_string(up_counts.size()) +
                     " counts but the grid has " + std::to_string(dec.groups().size()) +
                     " groups");
  }
  OrientationString omega(dec.size(), Dir::Right);
  for (std::size_t k = 0; k < up_counts.size(); ++k) {
    const auto& group = dec.groups()[k];
    if (up_counts[k] < 0 || up_counts[k] > static_cast<std::int64_t>(group.size())) {
      throw InputError("group up-count out of range");
    }
    for (std::int64_t j = 0; j < up_counts[k]; ++j) omega[group[j]] = Dir::Up;
  }
  return omega;
}

Link GroupedOrientation::link(const DiagonalDecomposition& dec) const {
  Link link;
  for (std::size_t k = 0; k < up_counts.size(); ++k) {
    const auto& group = dec.groups()[k];
    const auto& p = dec.diagonals()[group.front()].profile;
    const auto up = up_counts[k];
    const auto right = static_cast<std::int64_t>(group.size()) - up;
    link.a += up * p.a;
    link.b += up * p.b;
    link.c += right * p.c;
    link.d += right * p.d;
  }
  return link;
}

std::int64_t count_components(const DiagonalDecomposition& dec, const OrientationString& omega) {
  require_length(dec, omega);
  return ComponentCounter(dec).count(omega);
}

Components trace_components(const DiagonalDecomposition& dec, const OrientationString& omega) {
  require_length(dec, omega);
  const auto total = dec.grid().cell_count();
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  Components out;
  for (std::int64_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    std::vector<Cell> cycle;
    auto cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cycle.push_back(cell_at(dec.grid(), cur));
      cur = next_index(dec, omega, cur);
    }
    if (cur != start) {
      throw InconsistencyError("oriented out-edges do not form a permutation");
    }
    out.cycles.push_back(std::move(cycle));
  }
  out.count = static_cast<std::int64_t>(out.cycles.size());
  return out;
}

bool is_hamiltonian_cycle(const DiagonalDecomposition& dec, const HamWitness& w) {
  const auto& grid = dec.grid();
  if (w.orientation.size() != dec.size()) return false;
  if (static_cast<std::int64_t>(w.cycle.size()) != grid.cell_count()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(grid.cell_count()), false);
  for (std::size_t i = 0; i < w.cycle.size(); ++i) {
    const auto& cell = w.cycle[i];
    if (!is_valid(grid, cell)) return false;
    const auto idx = cell_index(grid, cell);
    if (seen[idx]) return false;
    seen[idx] = true;
    const auto& next = w.cycle[(i + 1) % w.cycle.size()];
    if (next_index(dec, w.orientation, idx) != cell_index(grid, next)) return false;
  }
  return true;
}

HamWitness make_witness(const DiagonalDecomposition& dec, const OrientationString& omega) {
  require_length(dec, omega);
  HamWitness w{omega, {}};
  std::int64_t cur = 0;
  do {
    w.cycle.push_back(cell_at(dec.grid(), cur));
    cur = next_index(dec, omega, cur);
  } while (cur != 0 && static_cast<std::int64_t>(w.cycle.size()) <= dec.grid().cell_count());
  if (!is_hamiltonian_cycle(dec, w)) {
    throw InconsistencyError("orientation " + omega.str() + " is not a Hamiltonian cycle");
  }
  return w;
}

BruteResult is_hamiltonian_brute(std::int64_t n, std::int64_t m, bool with_witness) {
  const auto dec = decompose(GridParams(n, m));
  const auto c = dec.size();
  if (c > kBruteDiagonalCap) {
    throw ResourceError("brute force needs 2^" + std::to_string(c) +
                        " orientations; use the link tier instead");
  }
  ComponentCounter counter(dec);
  OrientationString omega(c, Dir::Up);
  const std::uint64_t limit = std::uint64_t{1} << c;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    // Position 0 is the most significant bit, so masks run in U < R order.
    for (std::size_t i = 0; i < c; ++i) {
      omega[i] = (mask >> (c - 1 - i)) & 1U ? Dir::Right : Dir::Up;
    }
    if (counter.count(omega) == 1) {
      BruteResult result{true, std::nullopt};
      if (with_witness) result.witness = make_witness(dec, omega);
      return result;
    }
  }
  return {};
}

FastResult hamiltonicity_fast(const DiagonalDecomposition& dec) {
  const auto& groups = dec.groups();
  if (groups.size() > 4) {
    throw InconsistencyError("found " + std::to_string(groups.size()) +
                             " parallel groups; at most 4 expected");
  }
  FastResult result;
  GroupedOrientation cur{std::vector<std::int64_t>(groups.size(), 0)};
  while (true) {
    ++result.links_checked;
    if (is_knot(cur.link(dec))) {
      result.hamiltonian = true;
      result.knot = cur;
      return result;
    }
    // Mixed-radix increment, last group fastest.
    std::size_t k = groups.size();
    while (k > 0) {
      --k;
      if (cur.up_counts[k] < static_cast<std::int64_t>(groups[k].size())) {
        ++cur.up_counts[k];
        break;
      }
      cur.up_counts[k] = 0;
      if (k == 0) return result;
    }
    if (groups.empty()) return result;
  }
}

bool is_hamiltonian_fast(std::int64_t n, std::int64_t m) {
  return hamiltonicity_fast(decompose(GridParams(n, m))).hamiltonian;
}

std::optional<HamWitness> fast_witness(std::int64_t n, std::int64_t m) {
  const auto dec = decompose(GridParams(n, m));
  const auto fast = hamiltonicity_fast(dec);
  if (!fast.knot) return std::nullopt;
  return make_witness(dec, fast.knot->expand(dec));
}

namespace {

std::optional<HamWitness> square_cycle_from(const DiagonalDecomposition& dec, Cell start) {
  const auto& grid = dec.grid();
  const auto n = grid.n();
  std::vector<Cell> cycle;
  std::vector<Dir> cell_dirs(static_cast<std::size_t>(grid.cell_count()), Dir::Up);
  Cell cur = start;
  for (std::int64_t rep = 0; rep < n; ++rep) {
    for (std::int64_t k = 0; k < 4 * n; ++k) {
      const bool up = k == 4 * n - 1;
      cycle.push_back(cur);
      cell_dirs[cell_index(grid, cur)] = up ? Dir::Up : Dir::Right;
      cur = step(grid, cur, up ? Move::Up : Move::Right);
    }
  }
  if (cur != start) return std::nullopt;
  auto omega = orientation_from_cells(dec, cell_dirs);
  if (!omega) return std::nullopt;
  HamWitness w{*omega, std::move(cycle)};
  if (!is_hamiltonian_cycle(dec, w)) return std::nullopt;
  return w;
}

// Which reading of "row n" makes the construction close up: counted from
// the top (row n) or from the bottom (row n - 1). Decided on n = 1, 2, 3.
bool square_rows_from_top() {
  static const bool from_top = [] {
    int top_ok = 0;
    int bottom_ok = 0;
    for (std::int64_t n = 1; n <= 3; ++n) {
      const auto dec = decompose(GridParams(n, n));
      top_ok += square_cycle_from(dec, {n, 0}).has_value();
      bottom_ok += square_cycle_from(dec, {n - 1, 0}).has_value();
    }
    if ((top_ok == 3) == (bottom_ok == 3)) {
      throw InconsistencyError("square construction start row is ambiguous or invalid");
    }
    return top_ok == 3;
  }();
  return from_top;
}

}  // namespace

HamWitness square_construction(std::int64_t n) {
  const auto dec = decompose(GridParams(n, n));
  const Cell start = square_rows_from_top() ? Cell{n, 0} : Cell{n - 1, 0};
  auto w = square_cycle_from(dec, start);
  if (!w) {
    throw InconsistencyError("square construction failed to validate for n=" +
                             std::to_string(n));
  }
  return *std::move(w);
}

namespace {

bool n2_rule_says_right(std::int64_t residue, std::int64_t diff) {
  const auto x = ((diff % 8) + 8) % 8;
  switch (residue) {
    case 0: return x % 2 == 1;
    case 1: return x == 1 || x == 2 || x == 6 || x == 7;
    case 2: return x == 3;
    case 4: return x == 0;
    case 6: return x == 1;
    case 7: return x == 0 || x == 1 || x == 2 || x == 5;
    default: break;
  }
  throw DomainError("no construction for m = " + std::to_string(residue) + " mod 8");
}

void require_n2_residue(std::int64_t m) {
  const auto residue = m % 8;
  if (residue == 3 || residue == 5) {
    throw DomainError("G(2," + std::to_string(m) +
                      ") has a single diagonal and is not Hamiltonian");
  }
}

std::optional<OrientationString> n2_candidate(const DiagonalDecomposition& dec,
                                              const StackedLayout& layout) {
  const auto m = dec.grid().m();
  const auto residue = m % 8;
  std::vector<Dir> cell_dirs(static_cast<std::size_t>(dec.grid().cell_count()));
  for (std::int64_t r = 0; r < 4; ++r) {
    for (std::int64_t c = 0; c < 2 * m; ++c) {
      const bool right_half = c >= m;
      std::int64_t row = r + (right_half != layout.right_half_on_top ? 4 : 0);
      if (layout.bottom_origin) row = 7 - row;
      const auto col = c % m;
      const bool right = n2_rule_says_right(residue, row - col) != layout.complement;
      cell_dirs[cell_index(dec.grid(), {r, c})] = right ? Dir::Right : Dir::Up;
    }
  }
  auto omega = orientation_from_cells(dec, cell_dirs);
  if (!omega || count_components(dec, *omega) != 1) return std::nullopt;
  return omega;
}

StackedLayout resolve_layout(std::int64_t residue) {
  for (bool complement : {false, true}) {
    for (bool right_on_top : {false, true}) {
      for (bool bottom : {false, true}) {
        const StackedLayout layout{right_on_top, bottom, complement};
        bool all = true;
        for (std::int64_t k = 0; k < 3 && all; ++k) {
          const auto m = residue == 0 ? 8 * (k + 1) : residue + 8 * k;
          all = n2_candidate(decompose(GridParams(2, m)), layout).has_value();
        }
        if (all) return layout;
      }
    }
  }
  throw InconsistencyError("no stacked layout validates the rule for m = " +
                           std::to_string(residue) + " mod 8");
}

}  // namespace

StackedLayout n2_layout(std::int64_t residue) {
  residue = ((residue % 8) + 8) % 8;
  require_n2_residue(residue);
  static std::array<std::optional<StackedLayout>, 8> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  if (!cache[residue]) cache[residue] = resolve_layout(residue);
  return *cache[residue];
}

OrientationString n2_orientation(std::int64_t m) {
  if (m < 1) throw InputError("m must be positive");
  require_n2_residue(m);
  const auto dec = decompose(GridParams(2, m));
  auto omega = n2_candidate(dec, n2_layout(m % 8));
  if (!omega) {
    throw InconsistencyError("residue rule does not give a Hamiltonian cycle for m=" +
                             std::to_string(m));
  }
  return *std::move(omega);
}

std::int64_t segment_successor(std::int64_t m, std::int64_t d) {
  if (m < 1) throw InputError("m must be positive");
  if (d < -3 || d > 2 * m - 1) {
    throw InputError("segment index " + std::to_string(d) + " outside [-3, " +
                     std::to_string(2 * m - 1) + "]");
  }
  if (d == 2 * m - 1) return -3;
  if (d == 2 * m - 2) return m;
  if (d == 2 * m - 3) return -1;
  if (d == 2 * m - 4) return -2;
  return ((d + m + 4) % (2 * m) + 2 * m) % (2 * m);
}

std::int64_t segment_successor_on_grid(std::int64_t m, std::int64_t d) {
  if (m < 1) throw InputError("m must be positive");
  if (d < -3 || d > 2 * m - 1) {
    throw InputError("segment index " + std::to_string(d) + " outside [-3, " +
                     std::to_string(2 * m - 1) + "]");
  }
  const GridParams grid(2, m);
  // The last cell of S_d in successor order is its lowest one.
  std::optional<Cell> last;
  for (std::int64_t r = 0; r < 4; ++r) {
    const auto c = r + d;
    if (c >= 0 && c < 2 * m) last = Cell{r, c};
  }
  if (!last) throw InputError("segment " + std::to_string(d) + " is empty");
  const auto next = diag_successor(grid, *last);
  return next.col - next.row;
}

std::string OneDiagonalReport::summary(std::int64_t n, std::int64_t m) const {
  const auto pair = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
  if (!applicable) {
    return pair + ": " + std::to_string(diagonals) + " diagonals, not applicable";
  }
  std::string s = pair + ": 1 diagonal";
  if (in_stated_domain(n, m)) s += "; not Hamiltonian";
  s += "; G(" + std::to_string(2 * n) + "," + std::to_string(2 * m) + ") Hamiltonian";
  s += "; link (" + std::to_string(m) + "," + std::to_string(m) + "," + std::to_string(n) +
       "," + std::to_string(n) + ") is a knot";
  return s;
}

OneDiagonalReport one_diagonal_checks(std::int64_t n, std::int64_t m) {
  OneDiagonalReport report;
  report.diagonals = diag_count_naive(n, m);
  if (report.diagonals != 1) return report;
  report.applicable = true;
  if (in_stated_domain(n, m)) {
    report.base_not_hamiltonian = !is_hamiltonian_fast(n, m);
    if (!report.base_not_hamiltonian) {
      throw InconsistencyError("one-diagonal grid found Hamiltonian");
    }
  }
  report.doubled_hamiltonian = is_hamiltonian_fast(2 * n, 2 * m);
  if (!report.doubled_hamiltonian) {
    throw InconsistencyError("doubled one-diagonal grid found non-Hamiltonian");
  }
  report.mmnn_knot = is_knot(Link{m, m, n, n});
  if (!report.mmnn_knot) {
    throw InconsistencyError("link (m,m,n,n) of a one-diagonal grid is not a knot");
  }
  return report;
}

bool periodicity_check(std::int64_t n, std::int64_t m) {
  GridParams grid(n, m);
  if (grid.g() != 1) {
    throw DomainError("periodicity needs coprime sizes, got gcd " + std::to_string(grid.g()));
  }
  return is_hamiltonian_fast(n, m) == is_hamiltonian_fast(n, m + 12 * n);
}

bool ham_torus1(std::int64_t n, std::int64_t m) {
  const GridParams grid(n, m);
  const auto g = grid.g();
  for (std::int64_t g1 = 1; g1 < g; ++g1) {
    if (std::gcd(g1, n) == 1 && std::gcd(g - g1, m) == 1) return true;
  }
  return false;
}

bool ham_torus1_trace(std::int64_t n, std::int64_t m) {
  const GridParams grid(n, m);
  const auto total = n * m;
  // Diagonals of the one-holed torus: orbits of (r, c) -> (r + 1, c + 1).
  std::vector<int> label(static_cast<std::size_t>(total), -1);
  int diagonals = 0;
  for (std::int64_t i = 0; i < total; ++i) {
    if (label[i] >= 0) continue;
    auto r = i / m;
    auto c = i % m;
    while (label[r * m + c] < 0) {
      label[r * m + c] = diagonals;
      r = (r + 1) % n;
      c = (c + 1) % m;
    }
    ++diagonals;
  }
  if (static_cast<std::size_t>(diagonals) > kBruteDiagonalCap) {
    throw ResourceError("too many torus diagonals for exhaustive trace");
  }
  std::vector<bool> seen(static_cast<std::size_t>(total));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << diagonals); ++mask) {
    std::fill(seen.begin(), seen.end(), false);
    std::int64_t cur = 0;
    std::int64_t steps = 0;
    while (!seen[cur]) {
      seen[cur] = true;
      ++steps;
      const auto r = cur / m;
      const auto c = cur % m;
      const bool up = (mask >> label[cur]) & 1U;
      cur = up ? ((r + n - 1) % n) * m + c : r * m + (c + 1) % m;
    }
    if (cur == 0 && steps == total) return true;
  }
  return false;
}

}  // namespace hamtorus
