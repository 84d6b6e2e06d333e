#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamtorus/diagonals.hpp"
#include "hamtorus/orientation.hpp"

namespace hamtorus {

/// A two-holed torus link crossing boundaries A, B, C, D a, b, c, d times.
struct Link {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  std::int64_t size() const { return a + b + c + d; }
  // Period of the link reduction: -a + b + 2c + 2d.
  std::int64_t period() const { return -a + b + 2 * c + 2 * d; }

  friend auto operator<=>(const Link&, const Link&) = default;
};

std::string to_string(const Link& link);

/// Image of segment i under the over-grid connection. Requires 0 <= i < N.
inline std::int64_t link_image(const Link& l, std::int64_t i) {
  if (i < l.a) return i + l.b + l.c + l.d;
  if (i < l.a + l.b) return i - l.a + l.c + l.d;
  if (i < l.a + l.b + l.c) return i - (l.a + l.b) + l.d;
  return i - (l.a + l.b + l.c);
}

/// The interval permutation of the link on {0, ..., N-1}.
/// Throws InputError for an empty link or negative parameters.
std::vector<std::int64_t> link_permutation(const Link& link);

/// Number of loops, by a single cycle trace over the N segments.
std::int64_t loop_count(const Link& link);

inline bool is_knot(const Link& link) { return loop_count(link) == 1; }

/// (a, b, c, d) -> (a - t, b - t, c, d) with t = -a + b + 2c + 2d.
/// Requires a > t, b > t and t >= c + d; throws DomainError otherwise.
Link link_reduce(const Link& link);

bool link_reducible(const Link& link);

/// Sums boundary profiles: a, b over up-oriented diagonals, c, d over
/// right-oriented ones.
Link orientation_link(const DiagonalDecomposition& dec, const OrientationString& omega);

}  // namespace hamtorus
