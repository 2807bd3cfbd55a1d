#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::parallel with the same
// contract; results never depend on the worker count.

#include "ortho/rational_matrix.hpp"
#include "ortho/vertex.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ortho::kernels {

/// Default worker count: ORTHO_LAB_JOBS if set, else the OpenMP maximum.
int default_jobs();
int resolve_jobs(int jobs);

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  RationalMatrix to_rational() const;
};

/// Columns of an echelon matrix scaled to a common integer denominator:
/// entries(i, j) == scale * C(i, j).
struct ScaledColumns {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::int64_t scale = 1;
  std::vector<std::int64_t> entries;

  static ScaledColumns from(const RationalMatrix& c);
};

struct CandidateHit {
  std::uint64_t x = 0;      ///< coefficient vector as an integer, bit j = x'_j
  std::uint64_t weight = 0; ///< number of rows where z = 1
  friend bool operator==(const CandidateHit&, const CandidateHit&) = default;
};

struct ScanTotals {
  std::vector<CandidateHit> zero_one;  ///< every candidate whose z = C x' is 0/1-valued, ascending x
  std::uint64_t scanned = 0;
};

struct PairWitness {
  Word a = 0;
  Word b = 0;
};

namespace serial {

/// out[u] = sum over masks m of values[u ^ m], for every u with active[u].
void apply_adjacency(std::span<const std::int64_t> values, std::span<const Word> masks,
                     std::span<const Word> rows, std::span<std::int64_t> out);

ScanTotals scan_candidates(const ScaledColumns& c, std::uint64_t lo, std::uint64_t hi);

/// First pair (x, y) breaking x~y <=> x~-y, or x~-x, over all of {0,1}^n.
std::optional<PairWitness> antipodal_violation(int n);

/// First adjacent pair inside `words` under Hamming distance n/2.
std::optional<PairWitness> adjacent_pair(std::span<const Word> words, int n);

/// First candidate with no neighbour (distance n/2) among `members`.
std::optional<Word> unblocked_vertex(std::span<const Word> candidates, std::span<const Word> members, int n);

IntMatrix gram(const IntMatrix& m);

/// Rank via the reduced column echelon form.
std::size_t rank(const RationalMatrix& m);

}  // namespace serial

namespace parallel {

void apply_adjacency(std::span<const std::int64_t> values, std::span<const Word> masks,
                     std::span<const Word> rows, std::span<std::int64_t> out, int jobs);
ScanTotals scan_candidates(const ScaledColumns& c, std::uint64_t lo, std::uint64_t hi, int jobs);
std::optional<PairWitness> antipodal_violation(int n, int jobs);
std::optional<PairWitness> adjacent_pair(std::span<const Word> words, int n, int jobs);
std::optional<Word> unblocked_vertex(std::span<const Word> candidates, std::span<const Word> members, int n,
                                     int jobs);
IntMatrix gram(const IntMatrix& m, int jobs);
std::size_t rank(const RationalMatrix& m, int jobs);

}  // namespace parallel

}  // namespace ortho::kernels
