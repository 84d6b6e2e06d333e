#include "hamtorus/orientation.hpp"

#include "hamtorus/errors.hpp"

namespace hamtorus {

OrientationString OrientationString::parse(std::string_view text) {
  std::vector<Dir> dirs;
  dirs.reserve(text.size());
  for (char ch : text) {
    if (ch == 'U' || ch == 'u') {
      dirs.push_back(Dir::Up);
    } else if (ch == 'R' || ch == 'r') {
      dirs.push_back(Dir::Right);
    } else {
      throw InputError(std::string("orientation character must be U or R, got '") +
                       ch + "'");
    }
  }
  return OrientationString(std::move(dirs));
}

std::size_t OrientationString::up_count() const {
  std::size_t k = 0;
  for (auto d : dirs_) k += d == Dir::Up;
  return k;
}

std::string OrientationString::str() const {
  std::string s;
  s.reserve(dirs_.size());
  for (auto d : dirs_) s.push_back(d == Dir::Up ? 'U' : 'R');
  return s;
}

}  // namespace hamtorus
