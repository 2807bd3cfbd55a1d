#pragma once

// Implicit orthogonality graphs: Omega_n on all +-1 vectors, its quotient Y_n
// (one parity class modulo negation, 4 | n) and the recursive skeleton Psi_n.
// Nothing here materializes an adjacency list; adjacency is a popcount.

#include "ortho/arith.hpp"
#include "ortho/vertex.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ortho {

enum class GraphFamily { Omega, Y, Psi };

struct GraphKind {
  GraphFamily family = GraphFamily::Omega;
  int n = 1;

  static GraphKind omega(int n);
  static GraphKind y(int n);
  static GraphKind psi(int n);

  friend bool operator==(const GraphKind&, const GraphKind&) = default;
};

std::string to_string(GraphFamily f);
std::string to_string(const GraphKind& k);
GraphFamily parse_family(const std::string& s);

constexpr bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

enum class ParityClass { Edgeless, Bipartite, TwoIsomorphicComponents };
std::string to_string(ParityClass p);

struct GraphStats {
  GraphKind kind;
  BigInt vertex_count;
  BigInt edge_count;
  BigInt degree;
  ParityClass parity_class = ParityClass::Edgeless;
  BigInt component_count;
};

/// Which member of {x, complement(x)} stands for a Y_n vertex.
enum class Representative { BitZeroClear, BitZeroSet };

// Hot-path predicate on raw words; the caller guarantees both words have dimension n.
constexpr bool orthogonal_bits(Word a, Word b, int n) { return n % 2 == 0 && distance(a, b) == n / 2; }

/// True iff u and v are orthogonal as +-1 vectors (Hamming distance n/2).
bool orthogonal(const VertexWord& u, const VertexWord& v);

GraphStats structure_report(const GraphKind& kind);

VertexWord y_canonical(const VertexWord& v, Representative rep = Representative::BitZeroClear);
bool is_y_canonical(const VertexWord& v, Representative rep = Representative::BitZeroClear);
bool y_adjacent(const VertexWord& u, const VertexWord& v, Representative rep = Representative::BitZeroClear);

/// Canonical Y_n vertices in ascending order of their bits (2^(n-2) of them).
std::vector<Word> y_vertex_words(int n, Representative rep = Representative::BitZeroClear);

/// All words of length n with exactly `w` set bits, ascending.
std::vector<Word> words_of_weight(int n, int w);

/// Masks m with |m| = n/2; u ^ m ranges over the Omega_n neighbourhood of u.
std::vector<Word> neighbour_masks(int n);

/// Masks m with |m| = n/2 and bit 0 clear; u ^ m ranges over the Y_n neighbourhood of a canonical u.
std::vector<Word> y_neighbour_masks(int n);

struct AntipodalReport {
  int n = 0;
  bool holds = false;
  std::optional<std::pair<Word, Word>> witness;
};

/// Exhaustive check that x ~ y iff x ~ -y, and x is never adjacent to -x.
AntipodalReport antipodal_structure_check(int n, int jobs = 0);

/// Translation by an odd word maps the even component of Omega_n onto the odd one
/// and preserves adjacency; checked over all pairs of even vertices.
bool components_isomorphic_check(int n);

/// The embedding x -> x^(r): x followed by x*r (coordinatewise product), a vertex of Omega_{2n}.
constexpr Word embed(Word x, Word r, int n) { return x | ((x ^ r) << n); }

struct PartitionReport {
  int n = 0;               ///< dimension of the small graph; the big one is 2n
  std::size_t copies = 0;  ///< number of embedded copies (one per r)
  std::size_t join_pairs = 0;
  bool partitions = false;
  bool copies_induced = false;
  bool joins_complete = false;
  bool holds() const { return partitions && copies_induced && joins_complete; }
};

PartitionReport double_cover_partition(int n);

/// Psi_n adjacency (n a power of two, n <= 64).
bool psi_adjacent(Word u, Word v, int n);

struct PsiRow {
  int j = 0;  ///< n = 2^j
  BigInt n;
  BigInt vertex_count;
  BigInt psi_edges;
  BigInt omega_edges;
  std::optional<Rational> ratio;  ///< undefined when Omega_n has no edges
};

std::vector<PsiRow> psi_stats(int k);

/// Exhaustive Psi_n edge count by implicit adjacency (n <= 16).
BigInt psi_edge_count_exhaustive(int n);

}  // namespace ortho
