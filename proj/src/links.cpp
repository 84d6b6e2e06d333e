#include "hamtorus/links.hpp"

#include "hamtorus/errors.hpp"

namespace hamtorus {
namespace {

void require_nonempty(const Link& l) {
  if (l.a < 0 || l.b < 0 || l.c < 0 || l.d < 0) {
    throw InputError("negative link parameter in " + to_string(l));
  }
  if (l.size() == 0) throw InputError("empty link");
}

}  // namespace

std::string to_string(const Link& l) {
  return "(" + std::to_string(l.a) + "," + std::to_string(l.b) + "," +
         std::to_string(l.c) + "," + std::to_string(l.d) + ")";
}

std::vector<std::int64_t> link_permutation(const Link& link) {
  require_nonempty(link);
  std::vector<std::int64_t> perm(static_cast<std::size_t>(link.size()));
  for (std::int64_t i = 0; i < link.size(); ++i) perm[i] = link_image(link, i);
  return perm;
}

std::int64_t loop_count(const Link& link) {
  require_nonempty(link);
  const auto total = link.size();
  std::vector<bool> visited(static_cast<std::size_t>(total), false);
  std::int64_t loops = 0;
  for (std::int64_t start = 0; start < total; ++start) {
    if (visited[start]) continue;
    ++loops;
    for (auto i = start; !visited[i]; i = link_image(link, i)) visited[i] = true;
  }
  return loops;
}

bool link_reducible(const Link& l) {
  const auto t = l.period();
  return l.a > t && l.b > t && t >= l.c + l.d;
}

Link link_reduce(const Link& link) {
  require_nonempty(link);
  if (!link_reducible(link)) {
    throw DomainError("link reduction needs a, b > t >= c + d; got " +
                      to_string(link) + " with t = " + std::to_string(link.period()));
  }
  const auto t = link.period();
  return {link.a - t, link.b - t, link.c, link.d};
}

Link orientation_link(const DiagonalDecomposition& dec, const OrientationString& omega) {
  if (omega.size() != dec.size()) {
    throw InputError("orientation has " + std::to_string(omega.size()) +
                     " characters but the grid has " + std::to_string(dec.size()) +
                     " diagonals");
  }
  Link link;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const auto& p = dec.diagonals()[i].profile;
    if (omega[i] == Dir::Up) {
      link.a += p.a;
      link.b += p.b;
    } else {
      link.c += p.c;
      link.d += p.d;
    }
  }
  return link;
}

}  // namespace hamtorus
