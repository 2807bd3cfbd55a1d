#pragma once

#include "ortho/graph_core.hpp"
#include "ortho/maxind_search.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ortho {

struct CliqueCertificate {
  int n = 0;
  std::vector<VertexWord> vertices;
  std::size_t size() const { return vertices.size(); }
};

/// Rows of the 2^k x 2^k Sylvester matrix: row i has -1 in column j iff popcount(i & j) is odd.
CliqueCertificate sylvester_clique(int k);

/// Pairwise orthogonal and at most n vertices.
bool check_clique(const CliqueCertificate& c);

/// True iff the translates S ^ c, c in C, are pairwise disjoint.
/// Throws std::invalid_argument when S is not independent in Omega_n.
bool translate_disjointness(std::span<const VertexWord> s, const CliqueCertificate& c);

struct ColouringCertificate {
  GraphKind kind;
  std::vector<std::vector<VertexWord>> classes;
  std::size_t palette_size() const { return classes.size(); }
};

struct ColouringCheck {
  bool partition = false;
  bool proper = false;
  std::optional<std::pair<Word, Word>> witness_edge;
  std::optional<Word> witness_vertex;  ///< missing or repeated vertex
  bool holds() const { return partition && proper; }
};

/// Partition and per-class independence against implicit Omega or Psi adjacency (n <= 16).
ColouringCheck verify_colouring(const ColouringCertificate& c, int jobs = 0);

/// Classes S ^ c for c in C; throws std::runtime_error with a witness if the result is not a proper colouring.
ColouringCertificate normal_cayley_colouring(std::span<const VertexWord> s, const CliqueCertificate& c);

/// Psi_{2^k} colouring with 2^k colours; the two sides of each join get disjoint palettes.
ColouringCertificate psi_colouring(int k);

/// Colour of a vertex of Psi_n under psi_colouring.
int psi_colour(Word u, int n);

enum class ChiVerdict { EqualsN, LessThanN, GreaterThanN };
std::string to_string(ChiVerdict v);
ChiVerdict parse_verdict(const std::string& s);

/// Search outcomes are expensive for n = 16; the cache keeps one per n.
class SearchCache {
 public:
  explicit SearchCache(int jobs = 0) : jobs_(jobs) {}
  const SearchOutcome& get(int n);

 private:
  int jobs_;
  std::map<int, SearchOutcome> outcomes_;
};

struct ChiStatus {
  int n = 0;
  ChiVerdict verdict = ChiVerdict::EqualsN;
  std::optional<int> chromatic_number;  ///< known exactly for edgeless and bipartite cases
  std::vector<std::string> justification;
  std::optional<ColouringCertificate> certificate;
};

ChiStatus chi_status(int n, SearchCache& cache);

/// The n-colouring of Omega_n for n in {1, 2, 4, 8}.
ColouringCertificate omega_colouring(int n, SearchCache& cache);

}  // namespace ortho
