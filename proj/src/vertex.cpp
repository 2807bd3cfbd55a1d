#include "ortho/vertex.hpp"

namespace ortho {

std::vector<VertexWord> to_vertices(const std::vector<Word>& words, int n) {
  std::vector<VertexWord> out;
  out.reserve(words.size());
  for (Word w : words) out.emplace_back(w, n);
  return out;
}

std::vector<Word> to_words(const std::vector<VertexWord>& vertices) {
  std::vector<Word> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(v.bits());
  return out;
}

std::string to_pattern(const VertexWord& v) {
  std::string s(static_cast<std::size_t>(v.n()), '0');
  for (int i = 0; i < v.n(); ++i)
    if ((v.bits() >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

}  // namespace ortho
