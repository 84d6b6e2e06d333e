#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamtorus/diagonals.hpp"
#include "hamtorus/links.hpp"
#include "hamtorus/orientation.hpp"
#include "hamtorus/surface.hpp"

namespace hamtorus {

/// Up-count per parallel group. All expansions give the same link.
struct GroupedOrientation {
  std::vector<std::int64_t> up_counts;

  // Orients the first up_counts[k] members of group k up, the rest right.
  OrientationString expand(const DiagonalDecomposition& dec) const;
  Link link(const DiagonalDecomposition& dec) const;
};

struct HamWitness {
  OrientationString orientation;
  std::vector<Cell> cycle;
};

struct Components {
  std::int64_t count = 0;
  std::vector<std::vector<Cell>> cycles;
};

/// Cycle count of the permutation graph in which every cell keeps only the
/// out-edge its diagonal is oriented along.
std::int64_t count_components(const DiagonalDecomposition& dec, const OrientationString& omega);

/// Same as count_components, but also returns each cycle starting from its
/// row-major smallest cell.
Components trace_components(const DiagonalDecomposition& dec, const OrientationString& omega);

/// True iff `w.cycle` visits all 4nm cells once, each consecutive pair (and
/// the closing pair) joined by the edge the orientation dictates.
bool is_hamiltonian_cycle(const DiagonalDecomposition& dec, const HamWitness& w);

/// Witness for a single-cycle orientation, starting at cell (0, 0).
/// Throws InconsistencyError if the orientation is not Hamiltonian.
HamWitness make_witness(const DiagonalDecomposition& dec, const OrientationString& omega);

inline constexpr std::size_t kBruteDiagonalCap = 24;

struct BruteResult {
  bool hamiltonian = false;
  std::optional<HamWitness> witness;
};

/// Tries every orientation string, U < R lexicographically, by cycle trace.
/// Throws ResourceError above kBruteDiagonalCap diagonals.
BruteResult is_hamiltonian_brute(std::int64_t n, std::int64_t m, bool with_witness = false);

struct FastResult {
  bool hamiltonian = false;
  std::optional<GroupedOrientation> knot;
  std::int64_t links_checked = 0;
};

/// Per-group up-count enumeration with a link knot test for each candidate.
FastResult hamiltonicity_fast(const DiagonalDecomposition& dec);

bool is_hamiltonian_fast(std::int64_t n, std::int64_t m);

/// Witness from the first knot found by the link tier, if any.
std::optional<HamWitness> fast_witness(std::int64_t n, std::int64_t m);

/// Hamiltonian cycle of G_{n,n,2}: 4n-1 steps right then one up, n times,
/// from row n, column 0. Throws InconsistencyError if the cycle does not
/// validate.
HamWitness square_construction(std::int64_t n);

/// How the 8 x m stacked layout of the n = 2 constructions sits on the grid.
struct StackedLayout {
  bool right_half_on_top = false;
  bool bottom_origin = false;
  bool complement = false;  // swap U and R relative to the residue rule

  friend bool operator==(const StackedLayout&, const StackedLayout&) = default;
};

/// Layout that validates the residue rule for m mod 8, found by trying
/// candidate layouts on the three smallest m in the class.
/// Throws DomainError for residues 3 and 5, InconsistencyError when no
/// candidate validates.
StackedLayout n2_layout(std::int64_t residue);

/// Orientation of G_{2,m,2} from the residue rule, verified to be constant
/// on diagonals and to give a single cycle.
OrientationString n2_orientation(std::int64_t m);

/// Successor of segment S_d = {c - r = d} in G_{2,m,2}, piecewise formula.
/// Requires -3 <= d <= 2m-1; throws InputError otherwise.
std::int64_t segment_successor(std::int64_t m, std::int64_t d);

/// The same map read off the grid: segment of diag_successor(last cell of S_d).
std::int64_t segment_successor_on_grid(std::int64_t m, std::int64_t d);

struct OneDiagonalReport {
  bool applicable = false;
  std::int64_t diagonals = 0;
  bool base_not_hamiltonian = false;  // checked only when n, m > 1
  bool doubled_hamiltonian = false;
  bool mmnn_knot = false;

  std::string summary(std::int64_t n, std::int64_t m) const;
};

/// For one-diagonal grids: G_{n,m,2} is not Hamiltonian (n, m > 1),
/// G_{2n,2m,2} is, and (m, m, n, n) is a knot. Throws InconsistencyError if
/// any of these fails.
OneDiagonalReport one_diagonal_checks(std::int64_t n, std::int64_t m);

/// Ham(n, m) == Ham(n, m + 12n). Throws DomainError unless gcd(n, m) = 1.
bool periodicity_check(std::int64_t n, std::int64_t m);

/// Hamiltonicity of the one-holed torus grid by the gcd split criterion.
bool ham_torus1(std::int64_t n, std::int64_t m);

/// Same question by tracing every orientation of the torus diagonals.
/// Throws ResourceError above kBruteDiagonalCap diagonals.
bool ham_torus1_trace(std::int64_t n, std::int64_t m);

/// The constructions this library implements are stated for n, m > 1.
inline bool in_stated_domain(std::int64_t n, std::int64_t m) { return n > 1 && m > 1; }

}  // namespace hamtorus
