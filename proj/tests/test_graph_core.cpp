#include "ortho/graph_core.hpp"

#include <doctest.h>

#include <algorithm>
#include <queue>
#include <set>

using namespace ortho;

namespace {

Word from_pattern(const std::string& p) {
  Word w = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == '1') w |= Word{1} << i;
  return w;
}

// Components of Omega_n by BFS over an explicit neighbour scan.
std::size_t bfs_components(int n) {
  const std::size_t v = std::size_t{1} << n;
  std::vector<int> comp(v, -1);
  std::size_t count = 0;
  for (Word s = 0; s < v; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<Word> q;
    q.push(s);
    comp[s] = static_cast<int>(count);
    while (!q.empty()) {
      const Word u = q.front();
      q.pop();
      for (Word w = 0; w < v; ++w)
        if (comp[w] < 0 && orthogonal_bits(u, w, n)) {
          comp[w] = static_cast<int>(count);
          q.push(w);
        }
    }
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("orthogonality is Hamming distance n/2") {
  const VertexWord u(from_pattern("1100"), 4);
  CHECK(orthogonal(u, VertexWord(from_pattern("1010"), 4)));
  CHECK_FALSE(orthogonal(u, VertexWord(from_pattern("0011"), 4)));
  CHECK_FALSE(orthogonal(u, u));
  CHECK(orthogonal(VertexWord(0, 2), VertexWord(from_pattern("10"), 2)));
  CHECK_THROWS_AS(orthogonal(VertexWord(0, 4), VertexWord(0, 8)), std::invalid_argument);
  CHECK(to_pattern(VertexWord(from_pattern("0110"), 4)) == "0110");
}

TEST_CASE("vertex words reject stray bits and bad dimensions") {
  CHECK_THROWS_AS(VertexWord(0b10000, 4), std::invalid_argument);
  CHECK_THROWS_AS(VertexWord(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(VertexWord(0, 65), std::invalid_argument);
  CHECK(VertexWord(~Word{0}, 64).weight() == 64);
}

TEST_CASE("structure report counts") {
  const auto o8 = structure_report(GraphKind::omega(8));
  CHECK(o8.vertex_count == 256);
  CHECK(o8.degree == 70);
  CHECK(o8.edge_count == 8960);
  CHECK(o8.parity_class == ParityClass::TwoIsomorphicComponents);
  CHECK(o8.component_count == 2);

  const auto o6 = structure_report(GraphKind::omega(6));
  CHECK(o6.parity_class == ParityClass::Bipartite);
  CHECK(o6.component_count == 1);

  const auto o5 = structure_report(GraphKind::omega(5));
  CHECK(o5.parity_class == ParityClass::Edgeless);
  CHECK(o5.edge_count == 0);
  CHECK(o5.component_count == 32);

  const auto y8 = structure_report(GraphKind::y(8));
  CHECK(y8.vertex_count == 64);
  CHECK(y8.degree == 35);

  CHECK(structure_report(GraphKind::omega(64)).vertex_count == pow2(64));
  CHECK_THROWS_AS(GraphKind::y(6), std::invalid_argument);
  CHECK_THROWS_AS(GraphKind::psi(6), std::invalid_argument);
}

TEST_CASE("component counts agree with breadth-first search") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(structure_report(GraphKind::omega(n)).component_count == bfs_components(n));
  }
}

TEST_CASE("Y_n canonical forms and adjacency") {
  const int n = 8;
  const auto ys = y_vertex_words(n);
  CHECK(ys.size() == 64);
  for (Word w : ys) {
    CHECK((w & 1U) == 0);
    CHECK(weight(w) % 2 == 0);
  }
  const auto set = y_vertex_words(n, Representative::BitZeroSet);
  for (std::size_t i = 0; i < ys.size(); ++i) CHECK(std::binary_search(set.begin(), set.end(), ys[i] ^ full_mask(n)));

  const VertexWord u(0b00000110, n);
  CHECK(y_canonical(u.complement()) == u);
  CHECK(is_y_canonical(u));
  CHECK_FALSE(is_y_canonical(u.complement()));

  // Every canonical vertex has exactly binom(8,4)/2 canonical neighbours.
  for (Word a : ys) {
    int deg = 0;
    for (Word b : ys) deg += y_adjacent(VertexWord(a, n), VertexWord(b, n)) ? 1 : 0;
    CHECK(deg == 35);
  }
  CHECK(y_neighbour_masks(n).size() == 35);
  CHECK(neighbour_masks(n).size() == 70);
}

TEST_CASE("antipodal structure and component isomorphism") {
  for (int n : {4, 8, 12}) {
    CAPTURE(n);
    CHECK(antipodal_structure_check(n).holds);
    CHECK(components_isomorphic_check(n));
  }
  CHECK_THROWS(antipodal_structure_check(6));
}

TEST_CASE("double cover partition of Omega_2n") {
  for (int n : {1, 2, 4, 8}) {
    CAPTURE(n);
    const auto r = double_cover_partition(n);
    CHECK(r.holds());
    CHECK(r.copies == (std::size_t{1} << n));
  }
}

TEST_CASE("Psi_n is a spanning subgraph of Omega_n") {
  for (int n : {1, 2, 4, 8}) {
    CAPTURE(n);
    for (Word u = 0; u <= full_mask(n); ++u)
      for (Word v = 0; v <= full_mask(n); ++v) {
        if (!psi_adjacent(u, v, n)) continue;
        REQUIRE(orthogonal_bits(u, v, n));
        REQUIRE(psi_adjacent(v, u, n));
      }
  }
  CHECK(psi_adjacent(0b00, 0b01, 2));
  CHECK_FALSE(psi_adjacent(0b00, 0b11, 2));
}

TEST_CASE("Psi edge table") {
  const auto rows = psi_stats(8);
  REQUIRE(rows.size() == 9);
  CHECK(rows[1].psi_edges == 4);
  CHECK(rows[2].psi_edges == 48);
  CHECK(rows[3].psi_edges == 2816);
  CHECK(rows[4].psi_edges == 9109504);
  CHECK(rows[4].omega_edges == 421724160);
  CHECK(*rows[2].ratio == 1);
  CHECK(*rows[3].ratio == Rational(11, 35));
  CHECK_FALSE(rows[0].ratio.has_value());
  for (std::size_t j = 3; j < rows.size(); ++j) CHECK(*rows[j].ratio < *rows[j - 1].ratio);
  for (int n : {2, 4, 8, 16}) CHECK(psi_edge_count_exhaustive(n) == rows[static_cast<std::size_t>(__builtin_ctz(n))].psi_edges);
}
