// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hamtorus/census.hpp"
#include "hamtorus/counting.hpp"
#include "hamtorus/diagonals.hpp"
#include "hamtorus/errors.hpp"
#include "hamtorus/hamiltonicity.hpp"
#include "hamtorus/links.hpp"

using namespace hamtorus;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::string pair_text(std::int64_t n, std::int64_t m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

OrientationString from_mask(std::size_t size, std::uint64_t mask) {
  OrientationString w(size, Dir::Up);
  for (std::size_t i = 0; i < size; ++i) {
    if ((mask >> i) & 1U) w[i] = Dir::Right;
  }
  return w;
}

std::int64_t up_cells(const DiagonalDecomposition& dec, const OrientationString& w) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Dir::Up) total += static_cast<std::int64_t>(dec.diagonals()[i].cells.size());
  }
  return total;
}

const std::vector<std::pair<std::int64_t, std::int64_t>> kTable = {
    {5, 19},  {5, 41},  {7, 27},  {7, 29},  {7, 55},  {7, 57},  {11, 53}, {13, 29},
    {13, 31}, {13, 43}, {13, 47}, {17, 31}, {17, 37}, {17, 39}, {17, 55}, {19, 47},
    {19, 53}, {20, 29}, {25, 43}, {27, 43}, {27, 49}, {27, 59}, {31, 37}, {32, 59},
    {33, 43}, {33, 53}, {35, 59}, {36, 53}, {36, 59}, {41, 56}, {53, 56}};

Outcome table_reproduction() {
  const char* argv[] = {"hamtorus", "table", "--max", "60"};
  std::ostringstream out, err;
  if (cli_main(4, argv, out, err) != 0) return fail("table exited non-zero: " + err.str());
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  if (line != "n,m,diag,hamiltonian") return fail("bad header " + line);
  std::vector<std::pair<std::int64_t, std::int64_t>> got;
  while (std::getline(lines, line)) {
    std::int64_t n = 0, m = 0, diag = 0;
    char flag[8] = {};
    if (std::sscanf(line.c_str(), "%ld,%ld,%ld,%7s", &n, &m, &diag, flag) != 4) {
      return fail("unparsable row " + line);
    }
    got.emplace_back(n, m);
  }
  if (got != kTable) return fail(std::to_string(got.size()) + " rows, expected 31");
  return {true, "31 pairs, (5,19) .. (53,56)"};
}

Outcome n2_classification() {
  for (std::int64_t m = 1; m <= 40; ++m) {
    const bool excluded = m % 8 == 3 || m % 8 == 5;
    if (is_hamiltonian_fast(2, m) == excluded) return fail("verdict wrong at m=" + std::to_string(m));
    if (excluded && diag_count_naive(2, m) != 1) return fail("m=" + std::to_string(m) + " not one diagonal");
    if (!excluded && count_components(decompose(GridParams(2, m)), n2_orientation(m)) != 1) {
      return fail("construction fails at m=" + std::to_string(m));
    }
  }
  return {true, "m = 1..40"};
}

Outcome square_grids() {
  for (std::int64_t n = 1; n <= 20; ++n) {
    if (!is_hamiltonian_cycle(decompose(GridParams(n, n)), square_construction(n))) {
      return fail("n=" + std::to_string(n));
    }
  }
  return {true, "n = 1..20"};
}

Outcome oracle_equivalence() {
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (std::int64_t m = 1; m <= 10; ++m) {
      if (is_hamiltonian_brute(n, m).hamiltonian != is_hamiltonian_fast(n, m)) {
        return fail("tiers differ at " + pair_text(n, m));
      }
    }
  }
  int pairs = 0;
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t m = 1; m <= 60; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const auto naive = diag_count_naive(n, m);
      if (diag_count_string(n, m) != naive || diag_count_reduction(n, m) != naive ||
          diag_count_tree(n, m) != naive) {
        return fail("counters differ at " + pair_text(n, m));
      }
      ++pairs;
    }
  }
  return {true, "100 tier pairs, " + std::to_string(pairs) + " counting pairs"};
}

template <typename Check>
Outcome every_orientation(std::int64_t k, Check check, std::int64_t& checked) {
  for (std::int64_t n = 1; n <= k; ++n) {
    for (std::int64_t m = 1; m <= k; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const auto dec = decompose(GridParams(n, m));
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dec.size()); ++mask) {
        const auto w = from_mask(dec.size(), mask);
        ++checked;
        if (!check(dec, w)) return fail(pair_text(n, m) + " with " + w.str());
      }
    }
  }
  return {};
}

Outcome hamlink_equivalence() {
  std::int64_t checked = 0;
  auto r = every_orientation(8, [](const DiagonalDecomposition& dec, const OrientationString& w) {
    return count_components(dec, w) == loop_count(orientation_link(dec, w));
  }, checked);
  if (r.pass) r.detail = std::to_string(checked) + " orientations";
  return r;
}

Outcome coolproof_identity() {
  std::int64_t checked = 0;
  auto r = every_orientation(15, [](const DiagonalDecomposition& dec, const OrientationString& w) {
    const auto n = dec.grid().n();
    const auto nm = n * dec.grid().m();
    const auto up = up_cells(dec, w);
    if (up % nm != 0) return false;
    return orientation_link(dec, w).period() == (4 - up / nm) * n;
  }, checked);
  if (r.pass) r.detail = std::to_string(checked) + " orientations, k integral";
  return r;
}

// Orientation of G_{n,m+12n,2} induced by w: the columns [m, 2m) move to
// [m+12n, 2m+12n), and every diagonal keeps the direction of the one it
// passes through in the original columns.
std::optional<OrientationString> lift(const DiagonalDecomposition& small,
                                      const DiagonalDecomposition& big,
                                      const OrientationString& w) {
  const auto n = small.grid().n();
  const auto m = small.grid().m();
  std::vector<int> assigned(big.size(), -1);
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (const auto& c : small.diagonals()[i].cells) {
      const Cell moved{c.row, c.col < m ? c.col : c.col + 12 * n};
      const int target = big.diagonal_of(moved);
      const int dir = static_cast<int>(w[i]);
      if (assigned[target] != -1 && assigned[target] != dir) return std::nullopt;
      assigned[target] = dir;
    }
  }
  OrientationString out(big.size(), Dir::Up);
  for (std::size_t j = 0; j < big.size(); ++j) {
    if (assigned[j] == -1) return std::nullopt;
    out[j] = static_cast<Dir>(assigned[j]);
  }
  return out;
}

Outcome periodicity() {
  int verdicts = 0;
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t m = 1; m <= 10; ++m) {
      if (std::gcd(n, m) != 1) continue;
      if (!periodicity_check(n, m)) return fail("Ham differs at " + pair_text(n, m));
      ++verdicts;
    }
  }
  int links = 0;
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t m = 1; m <= 7; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const auto small = decompose(GridParams(n, m));
      const auto big = decompose(GridParams(n, m + 12 * n));
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << small.size()); ++mask) {
        const auto w = from_mask(small.size(), mask);
        const auto lifted = lift(small, big, w);
        if (!lifted) return fail("no induced orientation at " + pair_text(n, m));
        const auto k = up_cells(small, w) / (n * m);
        const auto l = orientation_link(small, w);
        const Link expected{l.a + 3 * k * n, l.b + 3 * k * n, l.c, l.d};
        if (orientation_link(big, *lifted) != expected) {
          return fail("link shift fails at " + pair_text(n, m) + " with " + w.str());
        }
        ++links;
      }
    }
  }
  return {true, std::to_string(verdicts) + " verdicts, " + std::to_string(links) + " lifted links"};
}

Outcome segment_map() {
  for (std::int64_t m : {11, 13, 19, 21}) {
    std::set<std::int64_t> orbit;
    for (std::int64_t d = -3; d <= 2 * m - 1; ++d) {
      if (segment_successor_on_grid(m, d) != segment_successor(m, d)) {
        return fail("m=" + std::to_string(m) + " d=" + std::to_string(d));
      }
    }
    std::int64_t d = 0;
    do {
      orbit.insert(d);
      d = segment_successor(m, d);
    } while (d != 0 && orbit.size() <= static_cast<std::size_t>(2 * m + 3));
    if (static_cast<std::int64_t>(orbit.size()) != 2 * m + 3) {
      return fail("orbit of S_0 has " + std::to_string(orbit.size()) + " segments at m=" +
                  std::to_string(m));
    }
    if (diag_count_naive(2, m) != 1) return fail("more than one diagonal at m=" + std::to_string(m));
  }
  return {true, "m = 11, 13, 19, 21"};
}

Outcome reduction_soundness() {
  std::vector<int> used(11, 0);
  for (std::int64_t m = 2; m <= 50; ++m) {
    for (std::int64_t n = 1; n < m; ++n) {
      if (std::gcd(n, m) != 1) continue;
      for (int b = 1; b <= 10; ++b) {
        const auto s = apply_branch(b, n, m);
        if (!s) continue;
        ++used[b];
        if (diag_count_naive(s->n, s->m) != diag_count_naive(n, m)) {
          return fail("branch " + std::to_string(b) + " at " + pair_text(n, m));
        }
      }
    }
  }
  for (int b = 1; b <= 10; ++b) {
    if (used[b] == 0) return fail("branch " + std::to_string(b) + " never applies");
  }
  auto diag = [](TreePair p) { return diag_count_naive(p.small, p.big); };
  using enum TreeMove;
  int rule_pairs = 0;
  for (std::int64_t big = 2; big <= 60; ++big) {
    for (std::int64_t small = 1; small < big; ++small) {
      if (std::gcd(big, small) != 1 || (big + small) % 2 == 0) continue;
      const TreePair p{big, small};
      const auto base = diag(p);
      const auto g = diag(apply(Gamma, p));
      bool ok = diag(apply(Delta, p)) == g &&
                diag(apply(Gamma, apply(Delta, p))) == diag(apply(Lambda, p)) &&
                diag(apply(Gamma, apply(Lambda, p))) == g;
      for (auto k : {Gamma, Delta, Lambda}) {
        ok = ok && diag(apply(Lambda, apply(k, p))) == base &&
             diag(apply(Gamma, apply(Gamma, apply(k, p)))) == base;
      }
      if (!ok) return fail("tree rule at " + pair_text(big, small));
      ++rule_pairs;
    }
  }
  for (std::int64_t m = 3; m <= 100; ++m) {
    for (std::int64_t n = 2; n < m; ++n) {
      if (std::gcd(n, m) != 1) continue;
      if ((diag_count_naive(n, m) == 2) != ((n * m) % 2 == 1)) {
        return fail("two-diagonal criterion at " + pair_text(n, m));
      }
    }
  }
  return {true, "10 branches, 5 rules on " + std::to_string(rule_pairs) + " tree pairs"};
}

Outcome census() {
  const char* argv[] = {"hamtorus", "census", "--max", "2000", "--format", "json"};
  std::ostringstream out, err;
  if (cli_main(6, argv, out, err) != 0) return fail("census exited non-zero");
  const auto r = diag_distribution(2000);
  if (r.max_deviation() >= 0.02) return fail("max deviation " + std::to_string(r.max_deviation()));
  const auto early = diag_distribution(100);
  char buf[160];
  std::snprintf(buf, sizeof buf, "P = %.4f %.4f %.4f; deviation %.4f at h=100, %.4f at h=2000%s",
                r.p1(), r.p2(), r.p3(), early.max_deviation(), r.max_deviation(),
                r.max_deviation() <= early.max_deviation() ? "" : " (not decreasing)");
  return {true, buf};
}

Outcome link_calculus() {
  for (std::int64_t a = 0; a <= 12; ++a) {
    for (std::int64_t b = 0; a + b <= 12; ++b) {
      for (std::int64_t c = 0; a + b + c <= 12; ++c) {
        for (std::int64_t d = 0; a + b + c + d <= 12; ++d) {
          if (a + b + c + d == 0) continue;
          const auto p = link_permutation({a, b, c, d});
          std::vector<bool> hit(p.size(), false);
          for (auto x : p) {
            if (x < 0 || x >= static_cast<std::int64_t>(p.size()) || hit[x]) {
              return fail("not bijective: " + to_string(Link{a, b, c, d}));
            }
            hit[x] = true;
          }
        }
      }
    }
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> small(0, 30);
  std::uniform_int_distribution<std::int64_t> slack(1, 60);
  int reduced = 0;
  while (reduced < 10000) {
    Link l{0, 0, small(rng), small(rng)};
    const std::int64_t t = l.c + l.d + small(rng);
    l.a = t + slack(rng);
    l.b = l.a + t - 2 * l.c - 2 * l.d;
    if (!link_reducible(l)) continue;
    if (loop_count(link_reduce(l)) != loop_count(l)) return fail("reduce changes " + to_string(l));
    ++reduced;
  }
  int knots = 0;
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (std::int64_t m = 1; m <= 20; ++m) {
      if (diag_count_naive(n, m) != 1) continue;
      if (!is_knot({m, m, n, n})) return fail("(m,m,n,n) not a knot at " + pair_text(n, m));
      ++knots;
    }
  }
  return {true, "10000 reductions, " + std::to_string(knots) + " one-diagonal knots"};
}

Outcome swap_identity() {
  std::mt19937 rng(99);
  for (int t = 0; t < 1000; ++t) {
    const int k = 1 + static_cast<int>(rng() % 8);
    std::vector<int> phi(k), pi(k);
    std::iota(phi.begin(), phi.end(), 0);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(phi.begin(), phi.end(), rng);
    std::shuffle(pi.begin(), pi.end(), rng);
    const std::int64_t n = 1 + rng() % 30;
    const std::int64_t m = 1 + rng() % 30;
    if (!floor_swap_identity_check(phi, pi, n, m)) return fail("instance " + std::to_string(t));
  }
  return {true, "1000 instances"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "table reproduction", 60, table_reproduction},
      {2, "n = 2 classification", 5, n2_classification},
      {3, "square grids", 1, square_grids},
      {4, "oracle equivalence", 120, oracle_equivalence},
      {5, "hamlink equivalence", 30, hamlink_equivalence},
      {6, "period identity", 30, coolproof_identity},
      {7, "periodicity", 30, periodicity},
      {8, "segment successor", 1, segment_map},
      {9, "reduction soundness", 60, reduction_soundness},
      {10, "diagonal census", 60, census},
      {11, "link calculus", 10, link_calculus},
      {12, "swap identity", 5, swap_identity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string note = o.detail;
    if (secs > c.budget_s) note += " [over " + std::to_string(static_cast<int>(c.budget_s)) + " s budget]";
    std::printf("%s criterion %2d  %-22s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                secs, note.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
