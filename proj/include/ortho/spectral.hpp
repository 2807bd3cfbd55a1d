#pragma once

// Closed-form eigenvalue data for Omega_n and Y_n, the ratio bound with its
// equality condition, and the Gram-matrix identities behind the kernel lemma.

#include "ortho/arith.hpp"
#include "ortho/graph_core.hpp"
#include "ortho/rational_matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ortho {

struct BoundReport {
  GraphKind kind;
  BigInt v;
  BigInt d;
  Rational tau;
  Rational bound;
  bool is_integer = false;
  bool simplifies_to_power_form = false;
};

/// tau = -binom(n, n/2) / (n - 1); valid only for 4 | n.
Rational least_eigenvalue(int n);

/// Ratio bound v(-tau)/(d - tau) for Omega(n) or Y(n), 4 | n.
/// Y_n has half the degree and half the least eigenvalue of Omega_n.
BoundReport ratio_bound(const GraphKind& kind);

/// 2-subsets of [n] as words, lexicographic order of their element lists.
std::vector<Word> two_subsets(int n);

/// Rows: all subsets of [n] (by word). Columns: 2-subsets then (n-2)-subsets,
/// each block in lexicographic order. Entry (-1)^{|A cap p|}.
RationalMatrix build_W(int n);

struct NtnSpectrum {
  Rational c0, c1, c2;
  Rational lambda1, lambda2, lambda0;
  std::size_t mult1 = 0, mult2 = 0, mult0 = 0;         // measured by rank
  std::size_t expected1 = 0, expected2 = 0, expected0 = 0;  // 1, C(n,2)-n, n-1
  Rational trace;                                      // trace of N^T N
  bool gram_matches = false;  ///< N^T N == c0 I + c1 L + c2 Lbar entrywise
  bool multiplicities_match = false;
  bool trace_consistent = false;
  bool y_rows_half_gram = false;  ///< the Y-neighbourhood rows give exactly half the Gram matrix
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

struct EigencheckReport {
  int n = 0;
  std::size_t columns_checked = 0;
  Rational max_defect;  ///< max |(A w - tau w)_i| over all checked columns
  std::optional<std::size_t> witness_column;
  std::optional<std::size_t> column_rank;
  std::optional<NtnSpectrum> ntn;
  bool passed() const;
};

/// Checks A w = tau w for every column of W by streaming each vertex's neighbours.
EigencheckReport verify_tau_eigenspace(int n, int jobs = 0);

/// (A v)_u for v indexed by word, computed by streaming neighbours (Omega or Y kinds).
std::vector<std::int64_t> apply_adjacency(const GraphKind& kind, std::span<const std::int64_t> values,
                                          int jobs = 0);

/// Exact test of A(z - (s/v) 1) = tau (z - (s/v) 1).
/// For Omega(n), z is indexed by word (size 2^n); for Y(n), z is indexed by the
/// position of the canonical vertex in y_vertex_words(n, rep).
bool equality_condition_check(const GraphKind& kind, std::span<const std::uint8_t> z,
                              Representative rep = Representative::BitZeroClear, int jobs = 0);

/// Convenience overload taking the set itself.
bool equality_condition_check(const GraphKind& kind, std::span<const VertexWord> set, int jobs = 0);

struct GramReport {
  int n = 0;
  std::size_t n_rows = 0;               ///< rows of N (the Y-neighbourhood of the empty set)
  bool n_bt_all_minus_one = false;      ///< N B^T = -1
  bool nhat_bhat_t_zero = false;        ///< Nhat Bhat^T = 0
  bool b_bt_stated = false;             ///< B B^T == (n-1) I + J
  Rational b_bt_diagonal;               ///< measured diagonal of B B^T
  Rational b_bt_off_diagonal;           ///< measured off-diagonal of B B^T
  bool b_bt_uniform = false;            ///< B B^T == (diag - off) I + off J
  bool n_ones_stated = false;           ///< N 1 == (n/2) 1
  std::optional<Rational> n_ones_value; ///< the common value of N 1, when constant
  std::vector<std::string> witnesses;

  bool stated_identities_hold() const { return n_bt_all_minus_one && b_bt_stated && n_ones_stated; }
};

GramReport gram_identities(int n, int jobs = 0);

/// N^T N against its closed form; eigenvalue multiplicities via exact ranks.
EigencheckReport ntn_spectrum(int n, int jobs = 0);

}  // namespace ortho
