#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hamtorus {

enum class Dir : std::uint8_t { Up, Right };

/// One direction per diagonal, indexed by diagonal id.
class OrientationString {
 public:
  OrientationString() = default;
  explicit OrientationString(std::vector<Dir> dirs) : dirs_(std::move(dirs)) {}
  OrientationString(std::size_t size, Dir fill) : dirs_(size, fill) {}

  // Parses a string over {U, R}. Throws InputError on other characters.
  static OrientationString parse(std::string_view text);

  std::size_t size() const { return dirs_.size(); }
  Dir operator[](std::size_t i) const { return dirs_[i]; }
  Dir& operator[](std::size_t i) { return dirs_[i]; }
  const std::vector<Dir>& dirs() const { return dirs_; }

  std::size_t up_count() const;
  std::string str() const;

  friend bool operator==(const OrientationString&, const OrientationString&) = default;

 private:
  std::vector<Dir> dirs_;
};

}  // namespace hamtorus
