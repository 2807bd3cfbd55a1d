#pragma once

// Tight independent sets of Y_n by kernel reduction: every characteristic
// vector meeting the ratio bound is z = C x' with C the reduced column echelon
// form of Hhat Bhat^T and x' a 0/1 vector, so 2^n candidates cover everything.

#include "ortho/graph_core.hpp"
#include "ortho/rational_matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ortho {

struct IndSetCertificate {
  GraphKind kind;
  std::vector<VertexWord> vertices;  // sorted
  std::optional<VertexWord> base;
  bool contains_base = false;
  bool meets_ratio_bound = false;
  bool eigenspace_member = false;
  std::size_t size() const { return vertices.size(); }
};

struct SearchOptions {
  Representative rep = Representative::BitZeroClear;
  std::optional<Word> base;  ///< defaults to the canonical image of the all-(+1) vector
  int jobs = 0;
};

struct SearchOutcome {
  int n = 0;
  VertexWord base;
  Representative rep = Representative::BitZeroClear;
  std::uint64_t candidates_total = 0;
  std::uint64_t count_01_valued = 0;
  std::uint64_t count_correct_weight = 0;
  std::uint64_t count_independent = 0;
  std::uint64_t count_contains_base = 0;
  std::size_t rank = 0;
  std::vector<std::uint64_t> certificate_x;  ///< x' of each certificate, ascending
  std::vector<IndSetCertificate> certificates;
  double wall_time = 0.0;
};

/// Sizes supported by the construction.
bool search_supported(int n);

RationalMatrix build_H(int n, Representative rep = Representative::BitZeroClear);
RationalMatrix build_Hhat(int n, Representative rep = Representative::BitZeroClear);
/// Vertex-edge incidence matrix of K_n (n x C(n,2), edges in lexicographic order).
RationalMatrix build_B(int n);
RationalMatrix build_Bhat(int n);
/// Rows of Hhat belonging to the Y_n neighbourhood of `base`.
RationalMatrix build_Nhat(int n, VertexWord base, Representative rep = Representative::BitZeroClear);

/// C = rcef(Hhat Bhat^T). Throws std::runtime_error if the rank is not n.
EchelonResult reduce(int n, Representative rep = Representative::BitZeroClear, int jobs = 0);

SearchOutcome enumerate(int n, const SearchOptions& options = {});

/// True iff no two vertices are adjacent in `kind`; throws on duplicates or
/// vertices that do not belong to the graph.
bool check_independent(std::span<const VertexWord> vertices, const GraphKind& kind, int jobs = 0);

}  // namespace ortho
