#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ortho {

using Word = std::uint64_t;

constexpr int kMaxDimension = 64;

constexpr Word full_mask(int n) { return n >= 64 ? ~Word{0} : ((Word{1} << n) - 1); }

constexpr int weight(Word w) { return std::popcount(w); }

/// A +-1 vector of length n, stored as the set of coordinates equal to -1.
/// Bit i set means coordinate i+1 is -1 (equivalently element i+1 of the subset).
class VertexWord {
 public:
  constexpr VertexWord() = default;
  VertexWord(Word bits, int n) : bits_(bits), n_(n) {
    if (n < 1 || n > kMaxDimension) throw std::invalid_argument("dimension out of range: " + std::to_string(n));
    if ((bits & ~full_mask(n)) != 0) throw std::invalid_argument("vertex has bits beyond dimension " + std::to_string(n));
  }

  constexpr Word bits() const { return bits_; }
  constexpr int n() const { return n_; }
  constexpr int weight() const { return std::popcount(bits_); }
  constexpr bool even() const { return weight() % 2 == 0; }

  VertexWord complement() const { return VertexWord(bits_ ^ full_mask(n_), n_); }
  VertexWord translate(Word by) const { return VertexWord(bits_ ^ (by & full_mask(n_)), n_); }

  friend constexpr bool operator==(const VertexWord&, const VertexWord&) = default;
  friend constexpr auto operator<=>(const VertexWord& a, const VertexWord& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  Word bits_ = 0;
  int n_ = 1;
};

/// Hamming distance between two words.
constexpr int distance(Word a, Word b) { return std::popcount(a ^ b); }

std::vector<VertexWord> to_vertices(const std::vector<Word>& words, int n);
std::vector<Word> to_words(const std::vector<VertexWord>& vertices);

/// Coordinate-first rendering: character i is '1' when coordinate i+1 is -1.
std::string to_pattern(const VertexWord& v);

}  // namespace ortho
