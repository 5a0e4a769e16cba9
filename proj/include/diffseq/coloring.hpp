#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diffseq {

using Color = std::uint8_t;

// Largest color count expressible in the text format (0-9 then a-z).
inline constexpr int kMaxColors = 36;

/// An r-coloring of the interval [1, n]. Position x is stored at index x-1.
class Coloring {
 public:
  Coloring() = default;
  Coloring(std::vector<Color> colors, int r);

  /// Parses the digit/letter format; position i of the text is the color of
  /// integer i. Throws std::invalid_argument on characters >= r.
  static Coloring parse(std::string_view text, int r);

  int size() const { return static_cast<int>(colors_.size()); }
  int num_colors() const { return r_; }
  bool empty() const { return colors_.empty(); }

  Color at(int x) const { return colors_[static_cast<std::size_t>(x - 1)]; }
  void set(int x, Color c);

  std::span<const Color> colors() const { return colors_; }

  /// Restriction to [1, m].
  Coloring prefix(int m) const;

  std::string to_string() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
  int r_ = 1;
};

char color_char(int c);
int color_value(char ch);

}  // namespace diffseq
