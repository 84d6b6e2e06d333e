#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamtorus/surface.hpp"

namespace hamtorus {

/// A permutation of the quadrants TL, TR, BL, BR (indexed by Quadrant).
using QuadPerm = std::array<std::uint8_t, 4>;

QuadPerm quad_identity();
/// Apply `first`, then `second`.
QuadPerm then(const QuadPerm& first, const QuadPerm& second);
QuadPerm inverse(const QuadPerm& p);
int cycle_count(const QuadPerm& p);

/// Quadrant transitions of a down-right diagonal crossing a horizontal (d)
/// or vertical (r) quadrant boundary.
struct QuadPerms {
  QuadPerm d;
  QuadPerm r;
};

/// Reads d and r off surface::step on `grid` (needs n, m >= 2) and checks
/// d^4 = r^4 = id, both 4-cycles, and s d s = d, s r s = r^-1 for
/// s = (TL TR)(BL BR). Throws InconsistencyError on failure.
QuadPerms derive_quad_perms(const GridParams& grid);

/// derive_quad_perms on a fixed sample grid, computed once.
const QuadPerms& quad_perms();

/// Letters of a boundary-crossing word; the inverse letters appear only in
/// conjugated forms.
enum class Crossing : std::uint8_t { D, R, DInv, RInv };

class CrossingString {
 public:
  CrossingString() = default;
  explicit CrossingString(std::vector<Crossing> letters) : letters_(std::move(letters)) {}

  const std::vector<Crossing>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::size_t count(Crossing c) const;

  void push(Crossing c, std::int64_t times = 1);

  /// Free reduction: cancels adjacent x x^-1 pairs.
  CrossingString reduced() const;

  /// "d", "r" for the generators, "D", "R" for their inverses.
  std::string str() const;

  friend bool operator==(const CrossingString&, const CrossingString&) = default;

 private:
  std::vector<Crossing> letters_;
};

/// s_{n,m}: for j = 1..m append r^i d with i = floor(jn/m) - floor((j-1)n/m).
/// Requires n, m > 1 and gcd(n, m) = 1; throws DomainError otherwise.
CrossingString string_intervals(std::int64_t n, std::int64_t m);

/// t_{n,m} from the generating sequence 0, -m, ..., -(n-1)m.
CrossingString string_powers(std::int64_t n, std::int64_t m);

/// t_{n,m} as prod_{i=1..n} d^{ceil(im/n) - ceil((i-1)m/n)} r.
CrossingString string_ceil(std::int64_t n, std::int64_t m);

/// d w d^-1, freely reduced.
CrossingString conjugate_by_d(const CrossingString& w);

/// Product of the letters, first letter applied first.
QuadPerm evaluate(const CrossingString& w);

/// Cycles of evaluate(w) on the four quadrants.
int string_cycles(const CrossingString& w);

/// g * cyc(t_{n/g, m/g}); shapes with a unit side fall back to the orbit count.
std::int64_t diag_count_string(std::int64_t n, std::int64_t m);

/// Euclidean data of a coprime pair n < m:
/// m = q0 n + r0, n = q1 r0 + r1, r0 = q2 r1 + r2. Entries past a zero
/// remainder are left unset.
struct ReductionState {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t q0 = 0, r0 = 0;
  std::optional<std::int64_t> q1, r1, q2, r2;

  static ReductionState of(std::int64_t n, std::int64_t m);
};

struct ReductionStep {
  int branch = 0;  // 1..10, in listing order
  std::int64_t n = 0;
  std::int64_t m = 0;
};

/// The pairs (n, m) every reduction chain ends in.
bool is_reduction_base(std::int64_t n, std::int64_t m);

/// One rewriting step. Returns nullopt for a base pair. Requires a coprime
/// pair with n < m, or n = m = 1; throws DomainError otherwise and
/// InconsistencyError if the branch conditions do not select exactly one rule.
std::optional<ReductionStep> reduce_pair(std::int64_t n, std::int64_t m);

/// Applies one specific branch, or nullopt when its conditions do not hold.
std::optional<ReductionStep> apply_branch(int branch, std::int64_t n, std::int64_t m);

std::int64_t diag_count_reduction(std::int64_t n, std::int64_t m);

enum class TreeMove : std::uint8_t { Gamma, Delta, Lambda };

/// Pair (big, small) in the ternary tree of even-odd coprime pairs.
struct TreePair {
  std::int64_t big = 0;
  std::int64_t small = 0;
  friend bool operator==(const TreePair&, const TreePair&) = default;
};

TreePair apply(TreeMove move, TreePair p);

/// Moves listed outermost first: "gd" means gamma(delta(x)).
using TreeString = std::vector<TreeMove>;

std::string to_string(const TreeString& s);
TreeString parse_tree_string(const std::string& text);

/// Apply a tree string to `root` (innermost move first).
TreePair apply(const TreeString& s, TreePair root = {2, 1});

/// Address of an even-odd pair in the tree rooted at (2, 1).
/// Requires big > small >= 1, coprime, big + small odd.
TreeString tree_string(std::int64_t big, std::int64_t small);

enum class CanonicalState : std::uint8_t { Empty, Gamma, Gamma2, Lambda };

std::string to_string(CanonicalState s);
TreeString as_tree_string(CanonicalState s);

/// Canonical state after appending `move` on the right of a prefix already
/// reduced to `state`.
CanonicalState transition(CanonicalState state, TreeMove move);

/// Reduces a tree string to one of the four canonical ones, reading moves
/// outermost first.
CanonicalState canonicalize(const TreeString& s);

std::int64_t diag_count_tree(std::int64_t n, std::int64_t m);

/// prod_{i=1..m} phi^{ceil(in/m) - ceil((i-1)n/m)} pi against
/// prod_{j=1..n} phi pi^{floor(jm/n) - floor((j-1)m/n)} for permutations of
/// {0, ..., k-1}.
bool floor_swap_identity_check(const std::vector<int>& phi, const std::vector<int>& pi,
                               std::int64_t n, std::int64_t m);

}  // namespace hamtorus
