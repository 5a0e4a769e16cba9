#include "diffseq/coloring.hpp"

#include <stdexcept>

namespace diffseq {

char color_char(int c) {
  if (c < 0 || c >= kMaxColors) throw std::out_of_range("color id out of range: " + std::to_string(c));
  return c < 10 ? static_cast<char>('0' + c) : static_cast<char>('a' + c - 10);
}

int color_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'Z') return ch - 'A' + 10;
  return -1;
}

Coloring::Coloring(std::vector<Color> colors, int r) : colors_(std::move(colors)), r_(r) {
  if (r < 1 || r > kMaxColors) throw std::invalid_argument("color count must be in [1,36]");
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] >= r_) {
      throw std::invalid_argument("color " + std::to_string(colors_[i]) + " at position " +
                                  std::to_string(i + 1) + " is not < r=" + std::to_string(r_));
    }
  }
}

Coloring Coloring::parse(std::string_view text, int r) {
  std::vector<Color> colors;
  colors.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int v = color_value(text[i]);
    if (v < 0 || v >= r) {
      throw std::invalid_argument("invalid color character '" + std::string(1, text[i]) + "' at position " +
                                  std::to_string(i + 1) + " for r=" + std::to_string(r));
    }
    colors.push_back(static_cast<Color>(v));
  }
  return Coloring(std::move(colors), r);
}

void Coloring::set(int x, Color c) {
  if (c >= r_) throw std::invalid_argument("color out of range");
  colors_.at(static_cast<std::size_t>(x - 1)) = c;
}

Coloring Coloring::prefix(int m) const {
  if (m < 0 || m > size()) throw std::out_of_range("prefix length out of range");
  return Coloring(std::vector<Color>(colors_.begin(), colors_.begin() + m), r_);
}

std::string Coloring::to_string() const {
  std::string out;
  out.reserve(colors_.size());
  for (Color c : colors_) out.push_back(color_char(c));
  return out;
}

}  // namespace diffseq
