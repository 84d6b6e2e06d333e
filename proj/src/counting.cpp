#include "hamtorus/counting.hpp"

#include <algorithm>
#include <numeric>

#include "hamtorus/diagonals.hpp"
#include "hamtorus/errors.hpp"

namespace hamtorus {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a / b; }
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }
std::int64_t mod(std::int64_t a, std::int64_t b) { return ((a % b) + b) % b; }

void require_string_domain(std::int64_t n, std::int64_t m) {
  if (n <= 1 || m <= 1 || std::gcd(n, m) != 1) {
    throw DomainError("crossing strings need coprime n, m > 1; got (" + std::to_string(n) +
                      "," + std::to_string(m) + ")");
  }
}

Crossing inverse_letter(Crossing c) {
  switch (c) {
    case Crossing::D: return Crossing::DInv;
    case Crossing::R: return Crossing::RInv;
    case Crossing::DInv: return Crossing::D;
    case Crossing::RInv: return Crossing::R;
  }
  return c;
}

// Orbit counts of the six reduction base grids, from the naive counter.
std::int64_t base_value(std::int64_t n, std::int64_t m) {
  static const auto table = [] {
    std::array<std::array<std::int64_t, 5>, 5> t{};
    const std::pair<int, int> bases[] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}};
    for (auto [a, b] : bases) t[a][b] = diag_count_naive(a, b);
    return t;
  }();
  if (n > m) std::swap(n, m);
  if (n < 1 || m > 4 || table[n][m] == 0) {
    throw InconsistencyError("(" + std::to_string(n) + "," + std::to_string(m) +
                             ") is not a base pair");
  }
  return table[n][m];
}

}  // namespace

QuadPerm quad_identity() { return {0, 1, 2, 3}; }

QuadPerm then(const QuadPerm& first, const QuadPerm& second) {
  QuadPerm out{};
  for (int q = 0; q < 4; ++q) out[q] = second[first[q]];
  return out;
}

QuadPerm inverse(const QuadPerm& p) {
  QuadPerm out{};
  for (int q = 0; q < 4; ++q) out[p[q]] = static_cast<std::uint8_t>(q);
  return out;
}

int cycle_count(const QuadPerm& p) {
  std::array<bool, 4> seen{};
  int cycles = 0;
  for (int q = 0; q < 4; ++q) {
    if (seen[q]) continue;
    ++cycles;
    for (int x = q; !seen[x]; x = p[x]) seen[x] = true;
  }
  return cycles;
}

QuadPerms derive_quad_perms(const GridParams& grid) {
  if (grid.n() < 2 || grid.m() < 2) {
    throw InputError("quadrant permutations need a grid with n, m >= 2");
  }
  QuadPerms out{};
  for (int q = 0; q < 4; ++q) {
    const auto top = (q / 2) * grid.n();
    const auto left = (q % 2) * grid.m();
    // Bottom row, left column: only a horizontal crossing.
    const Cell bottom{top + grid.n() - 1, left};
    out.d[q] = static_cast<std::uint8_t>(quadrant_of(grid, step(grid, bottom, Move::UpInv)));
    // Top row, right column: only a vertical crossing.
    const Cell right{top, left + grid.m() - 1};
    out.r[q] = static_cast<std::uint8_t>(quadrant_of(grid, step(grid, right, Move::Right)));
  }

  const QuadPerm swap_halves{1, 0, 3, 2};
  auto power = [](const QuadPerm& p, int k) {
    QuadPerm acc = quad_identity();
    for (int i = 0; i < k; ++i) acc = then(acc, p);
    return acc;
  };
  const bool ok = cycle_count(out.d) == 1 && cycle_count(out.r) == 1 &&
                  power(out.d, 4) == quad_identity() && power(out.r, 4) == quad_identity() &&
                  then(then(swap_halves, out.d), swap_halves) == out.d &&
                  then(then(swap_halves, out.r), swap_halves) == inverse(out.r);
  if (!ok) throw InconsistencyError("quadrant crossing permutations fail their relations");
  return out;
}

const QuadPerms& quad_perms() {
  static const QuadPerms perms = derive_quad_perms(GridParams(3, 4));
  return perms;
}

std::size_t CrossingString::count(Crossing c) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), c));
}

void CrossingString::push(Crossing c, std::int64_t times) {
  for (std::int64_t i = 0; i < times; ++i) letters_.push_back(c);
}

CrossingString CrossingString::reduced() const {
  std::vector<Crossing> out;
  for (auto c : letters_) {
    if (!out.empty() && out.back() == inverse_letter(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return CrossingString(std::move(out));
}

std::string CrossingString::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (auto c : letters_) {
    switch (c) {
      case Crossing::D: s.push_back('d'); break;
      case Crossing::R: s.push_back('r'); break;
      case Crossing::DInv: s.push_back('D'); break;
      case Crossing::RInv: s.push_back('R'); break;
    }
  }
  return s;
}

CrossingString string_intervals(std::int64_t n, std::int64_t m) {
  require_string_domain(n, m);
  CrossingString s;
  for (std::int64_t j = 1; j <= m; ++j) {
    s.push(Crossing::R, floor_div(j * n, m) - floor_div((j - 1) * n, m));
    s.push(Crossing::D);
  }
  return s;
}

CrossingString string_powers(std::int64_t n, std::int64_t m) {
  require_string_domain(n, m);
  const auto k = m / n;
  const auto p = m % n;
  CrossingString t;
  for (std::int64_t i = 0; i < n; ++i) {
    t.push(Crossing::D, mod(-i * m, n) < p ? k + 1 : k);
    t.push(Crossing::R);
  }
  return t;
}

CrossingString string_ceil(std::int64_t n, std::int64_t m) {
  require_string_domain(n, m);
  CrossingString t;
  for (std::int64_t i = 1; i <= n; ++i) {
    t.push(Crossing::D, ceil_div(i * m, n) - ceil_div((i - 1) * m, n));
    t.push(Crossing::R);
  }
  return t;
}

CrossingString conjugate_by_d(const CrossingString& w) {
  std::vector<Crossing> letters{Crossing::D};
  letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  letters.push_back(Crossing::DInv);
  return CrossingString(std::move(letters)).reduced();
}

QuadPerm evaluate(const CrossingString& w) {
  const auto& perms = quad_perms();
  const QuadPerm d_inv = inverse(perms.d);
  const QuadPerm r_inv = inverse(perms.r);
  QuadPerm acc = quad_identity();
  for (auto c : w.letters()) {
    switch (c) {
      case Crossing::D: acc = then(acc, perms.d); break;
      case Crossing::R: acc = then(acc, perms.r); break;
      case Crossing::DInv: acc = then(acc, d_inv); break;
      case Crossing::RInv: acc = then(acc, r_inv); break;
    }
  }
  return acc;
}

int string_cycles(const CrossingString& w) { return cycle_count(evaluate(w)); }

std::int64_t diag_count_string(std::int64_t n, std::int64_t m) {
  const GridParams grid(n, m);
  const auto g = grid.g();
  const auto n0 = n / g;
  const auto m0 = m / g;
  if (n0 == 1 || m0 == 1) return g * diag_count_naive(n0, m0);
  return g * string_cycles(string_powers(n0, m0));
}

ReductionState ReductionState::of(std::int64_t n, std::int64_t m) {
  ReductionState s;
  s.n = n;
  s.m = m;
  s.q0 = m / n;
  s.r0 = m % n;
  if (s.r0 > 0) {
    s.q1 = n / s.r0;
    s.r1 = n % s.r0;
    if (*s.r1 > 0) {
      s.q2 = s.r0 / *s.r1;
      s.r2 = s.r0 % *s.r1;
    }
  }
  return s;
}

bool is_reduction_base(std::int64_t n, std::int64_t m) {
  if (n > m) std::swap(n, m);
  return (n == 1 && m >= 1 && m <= 4) || (n == 2 && m == 3) || (n == 3 && m == 4);
}

namespace {

bool branch_matches(int branch, const ReductionState& s) {
  const bool q0_is_1_with_r1 = s.q0 == 1 && s.q1.has_value();
  const bool q1_is_1 = q0_is_1_with_r1 && *s.q1 == 1 && s.r1.value_or(0) > 0;
  switch (branch) {
    case 1: return s.q0 >= 4;
    case 2: return s.q0 == 3;
    case 3: return s.q0 == 2;
    case 4: return q0_is_1_with_r1 && *s.q1 >= 4;
    case 5: return q0_is_1_with_r1 && *s.q1 == 3 && *s.r1 > 0;
    case 6: return q0_is_1_with_r1 && *s.q1 == 2 && *s.r1 > 0;
    case 7: return q1_is_1 && *s.q2 % 2 == 0 && *s.r2 > 0;
    case 8: return q1_is_1 && *s.q2 % 2 == 0 && *s.r2 == 0;
    case 9: return q1_is_1 && *s.q2 % 2 == 1 && *s.r2 > 0;
    case 10: return q1_is_1 && *s.q2 % 2 == 1 && *s.r2 == 0;
    default: break;
  }
  throw InputError("reduction branch must be in 1..10");
}

std::pair<std::int64_t, std::int64_t> branch_result(int branch, const ReductionState& s) {
  const auto n = s.n;
  switch (branch) {
    case 1: return {n, (s.q0 - 4) * n + s.r0};
    case 2: return {n, n - s.r0};
    case 3: return {n, 2 * n - s.r0};
    case 4: return {(*s.q1 - 3) * s.r0 + *s.r1, (*s.q1 - 2) * s.r0 + *s.r1};
    case 5: return {*s.r1, s.r0 + *s.r1};
    case 6: return {*s.r1, s.r0 - *s.r1};
    case 7: return {*s.r1 + *s.r2, *s.r1 + 2 * *s.r2};
    case 8: return {1, 1};
    case 9: return {*s.r2, *s.r1 + 2 * *s.r2};
    case 10: return {2, 3};
    default: break;
  }
  throw InputError("reduction branch must be in 1..10");
}

void require_reducible_pair(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1 || std::gcd(n, m) != 1 || (n >= m && !(n == 1 && m == 1))) {
    throw DomainError("reductions need a coprime pair n < m; got (" + std::to_string(n) + "," +
                      std::to_string(m) + ")");
  }
}

}  // namespace

std::optional<ReductionStep> apply_branch(int branch, std::int64_t n, std::int64_t m) {
  require_reducible_pair(n, m);
  const auto state = ReductionState::of(n, m);
  if (!branch_matches(branch, state)) return std::nullopt;
  const auto [n2, m2] = branch_result(branch, state);
  if (n2 < 1 || m2 < 1) return std::nullopt;
  return ReductionStep{branch, n2, m2};
}

std::optional<ReductionStep> reduce_pair(std::int64_t n, std::int64_t m) {
  require_reducible_pair(n, m);
  if (is_reduction_base(n, m)) return std::nullopt;
  const auto state = ReductionState::of(n, m);
  std::optional<ReductionStep> chosen;
  int matches = 0;
  for (int branch = 1; branch <= 10; ++branch) {
    if (!branch_matches(branch, state)) continue;
    ++matches;
    if (!chosen) {
      const auto [n2, m2] = branch_result(branch, state);
      chosen = ReductionStep{branch, n2, m2};
    }
  }
  if (matches != 1 || chosen->n < 1 || chosen->m < 1) {
    throw InconsistencyError(std::to_string(matches) + " reduction branches match (" +
                             std::to_string(n) + "," + std::to_string(m) + ")");
  }
  return chosen;
}

std::int64_t diag_count_reduction(std::int64_t n, std::int64_t m) {
  const GridParams grid(n, m);
  const auto g = grid.g();
  n /= g;
  m /= g;
  if (n > m) std::swap(n, m);
  // Every branch strictly shrinks the pair, so this bound is never reached.
  for (int guard = 0; guard < 100000; ++guard) {
    const auto next = reduce_pair(n, m);
    if (!next) return g * base_value(n, m);
    n = next->n;
    m = next->m;
    if (n > m) std::swap(n, m);
  }
  throw InconsistencyError("reduction chain did not terminate");
}

TreePair apply(TreeMove move, TreePair p) {
  switch (move) {
    case TreeMove::Gamma: return {2 * p.big - p.small, p.big};
    case TreeMove::Delta: return {2 * p.big + p.small, p.big};
    case TreeMove::Lambda: return {p.big + 2 * p.small, p.small};
  }
  return p;
}

std::string to_string(const TreeString& s) {
  std::string out;
  for (auto mv : s) {
    switch (mv) {
      case TreeMove::Gamma: out.push_back('g'); break;
      case TreeMove::Delta: out.push_back('d'); break;
      case TreeMove::Lambda: out.push_back('l'); break;
    }
  }
  return out;
}

TreeString parse_tree_string(const std::string& text) {
  TreeString s;
  for (char ch : text) {
    switch (ch) {
      case 'g': s.push_back(TreeMove::Gamma); break;
      case 'd': s.push_back(TreeMove::Delta); break;
      case 'l': s.push_back(TreeMove::Lambda); break;
      default: throw InputError(std::string("tree move must be g, d or l, got '") + ch + "'");
    }
  }
  return s;
}

TreePair apply(const TreeString& s, TreePair root) {
  for (auto it = s.rbegin(); it != s.rend(); ++it) root = apply(*it, root);
  return root;
}

TreeString tree_string(std::int64_t big, std::int64_t small) {
  if (small < 1 || big <= small || std::gcd(big, small) != 1 || (big + small) % 2 == 0) {
    throw DomainError("tree strings need an even-odd coprime pair big > small; got (" +
                      std::to_string(big) + "," + std::to_string(small) + ")");
  }
  TreeString s;
  while (!(big == 2 && small == 1)) {
    if (big < 2 * small) {
      s.push_back(TreeMove::Gamma);
      std::tie(big, small) = std::pair{small, 2 * small - big};
    } else if (big < 3 * small) {
      s.push_back(TreeMove::Delta);
      std::tie(big, small) = std::pair{small, big - 2 * small};
    } else {
      s.push_back(TreeMove::Lambda);
      big -= 2 * small;
    }
  }
  return s;
}

std::string to_string(CanonicalState s) {
  switch (s) {
    case CanonicalState::Empty: return "e";
    case CanonicalState::Gamma: return "g";
    case CanonicalState::Gamma2: return "gg";
    case CanonicalState::Lambda: return "l";
  }
  return "?";
}

TreeString as_tree_string(CanonicalState s) {
  switch (s) {
    case CanonicalState::Empty: return {};
    case CanonicalState::Gamma: return {TreeMove::Gamma};
    case CanonicalState::Gamma2: return {TreeMove::Gamma, TreeMove::Gamma};
    case CanonicalState::Lambda: return {TreeMove::Lambda};
  }
  return {};
}

namespace {

// Rewrites the leftmost characters until no rule applies:
//   d.. -> g..,  l k.. -> ..,  g d.. -> l..,  g l.. -> g..,  g g k.. -> ..
TreeString rewrite_prefix(TreeString w) {
  using enum TreeMove;
  while (!w.empty()) {
    if (w[0] == Delta) {
      w[0] = Gamma;
    } else if (w[0] == Lambda && w.size() >= 2) {
      w.erase(w.begin(), w.begin() + 2);
    } else if (w[0] == Gamma && w.size() >= 2 && w[1] == Delta) {
      w.erase(w.begin());
      w[0] = Lambda;
    } else if (w[0] == Gamma && w.size() >= 2 && w[1] == Lambda) {
      w.erase(w.begin() + 1);
    } else if (w[0] == Gamma && w.size() >= 3 && w[1] == Gamma) {
      w.erase(w.begin(), w.begin() + 3);
    } else {
      break;
    }
  }
  return w;
}

std::optional<CanonicalState> as_canonical(const TreeString& w) {
  for (auto s : {CanonicalState::Empty, CanonicalState::Gamma, CanonicalState::Gamma2,
                 CanonicalState::Lambda}) {
    if (as_tree_string(s) == w) return s;
  }
  return std::nullopt;
}

using TransitionTable = std::array<std::array<CanonicalState, 3>, 4>;

TransitionTable derive_transitions() {
  TransitionTable table{};
  for (int s = 0; s < 4; ++s) {
    for (int mv = 0; mv < 3; ++mv) {
      auto word = as_tree_string(static_cast<CanonicalState>(s));
      word.push_back(static_cast<TreeMove>(mv));
      const auto next = as_canonical(rewrite_prefix(word));
      if (!next) throw InconsistencyError("tree rewriting left a non-canonical word");
      table[s][mv] = *next;
    }
  }
  return table;
}

}  // namespace

CanonicalState transition(CanonicalState state, TreeMove move) {
  static const TransitionTable table = derive_transitions();
  return table[static_cast<int>(state)][static_cast<int>(move)];
}

CanonicalState canonicalize(const TreeString& s) {
  auto state = CanonicalState::Empty;
  for (auto mv : s) state = transition(state, mv);
  return state;
}

std::int64_t diag_count_tree(std::int64_t n, std::int64_t m) {
  const GridParams grid(n, m);
  const auto g = grid.g();
  n /= g;
  m /= g;
  if (n % 2 == 1 && m % 2 == 1) return 2 * g;
  const auto state = canonicalize(tree_string(std::max(n, m), std::min(n, m)));
  const auto base = apply(as_tree_string(state));
  return g * base_value(base.small, base.big);
}

namespace {

using Perm = std::vector<int>;

void require_perm(const Perm& p, std::size_t size) {
  if (p.size() != size || size == 0 || size > 8) {
    throw InputError("identity check needs two permutations of one set of at most 8 points");
  }
  std::vector<bool> seen(size, false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= size || seen[x]) {
      throw InputError("not a permutation");
    }
    seen[x] = true;
  }
}

Perm then_perm(const Perm& first, const Perm& second) {
  Perm out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

Perm power_then(Perm acc, const Perm& p, std::int64_t times) {
  for (std::int64_t i = 0; i < times; ++i) acc = then_perm(acc, p);
  return acc;
}

}  // namespace

bool floor_swap_identity_check(const Perm& phi, const Perm& pi, std::int64_t n, std::int64_t m) {
  require_perm(phi, phi.size());
  require_perm(pi, phi.size());
  if (n < 1 || m < 1) throw InputError("identity check needs n, m >= 1");
  Perm lhs(phi.size());
  std::iota(lhs.begin(), lhs.end(), 0);
  Perm rhs = lhs;
  for (std::int64_t i = 1; i <= m; ++i) {
    lhs = power_then(lhs, phi, ceil_div(i * n, m) - ceil_div((i - 1) * n, m));
    lhs = then_perm(lhs, pi);
  }
  for (std::int64_t j = 1; j <= n; ++j) {
    rhs = then_perm(rhs, phi);
    rhs = power_then(rhs, pi, floor_div(j * m, n) - floor_div((j - 1) * m, n));
  }
  return lhs == rhs;
}

}  // namespace hamtorus
