#pragma once

#include "ortho/graph_core.hpp"
#include "ortho/maxind_search.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ortho {

enum class FamilyKind { Galliard, OddSmall };
std::string to_string(FamilyKind f);
FamilyKind parse_family_kind(const std::string& s);

struct FamilyReport {
  FamilyKind family = FamilyKind::Galliard;
  int n = 0;
  int parameter = 0;         ///< c = n/4 - 1 for Galliard, m = n/4 for OddSmall
  std::size_t raw_count = 0; ///< qualifying subsets before identifying complements
  std::size_t size = 0;
  std::vector<VertexWord> members;  ///< Y-canonical for Galliard, raw subsets for OddSmall
  bool independent = false;
  std::optional<bool> maximal;
  bool meets_ratio_bound = false;
};

/// {F : |F| even, |F cap [c]| >= |F \ [c]|} as Y_n vertices, c = n/4 - 1.
FamilyReport galliard_family(int n, int jobs = 0);

/// {F : |F| != m mod 2, |F| < m} as an Omega_n independent set, n = 4m.
FamilyReport s_family(int n, int jobs = 0);

/// Closed-form size sum_{j < m, j != m mod 2} binom(n, j).
BigInt s_family_size(int n);

struct TransformCheck {
  int n = 0;
  bool equal = false;
  std::size_t image_size = 0;
  std::size_t target_size = 0;
  std::optional<VertexWord> witness;
};

/// {F xor [c] : F in F_n} == {G : |G| odd, |G| <= c}.
TransformCheck symdiff_transform_check(int n);

/// {x, -x} for every member plus their translates by the first-coordinate flip.
/// Input must lie in one parity class of Omega_n (4 | n) with no complementary pair.
IndSetCertificate lift_to_omega(std::span<const VertexWord> set, int n, int jobs = 0);
IndSetCertificate lift_to_omega(const FamilyReport& report, int jobs = 0);
IndSetCertificate lift_to_omega(const IndSetCertificate& cert, int jobs = 0);

struct M2kReport {
  int n = 0;
  int k = 0;      ///< n = m 2^k with m odd
  BigInt m;
  BigInt m2k_bound;                    ///< 2^n / 2^k
  std::optional<Rational> ratio_bound; ///< 2^n / n when 4 | n
  std::optional<Rational> factor;      ///< m2k_bound / ratio_bound
  bool tight = false;                  ///< k = 1: half the vertices, Omega_n bipartite
};

M2kReport m2k_bound(int n);

}  // namespace ortho
