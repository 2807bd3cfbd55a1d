#include "ortho/families.hpp"
#include "ortho/maxind_search.hpp"
#include "ortho/spectral.hpp"

#include <doctest.h>

#include <random>

using namespace ortho;

namespace {

// Eigenvalue of Omega_n on characters of weight j (Krawtchouk polynomial K_{n/2}(j)).
BigInt krawtchouk(int n, int j) {
  BigInt s = 0;
  for (int i = 0; i <= n / 2; ++i) {
    const BigInt t = binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i)) *
                     binomial(static_cast<unsigned long>(n - j), static_cast<unsigned long>(n / 2 - i));
    s += (i % 2 == 0) ? t : BigInt(-t);
  }
  return s;
}

std::vector<Rational> minus_mean(std::span<const std::uint8_t> z) {
  Rational s = 0;
  for (auto b : z) s += b;
  const Rational mean = s / static_cast<long>(z.size());
  std::vector<Rational> out;
  for (auto b : z) out.push_back(Rational(b) - mean);
  return out;
}

}  // namespace

TEST_CASE("least eigenvalue matches the Krawtchouk minimum") {
  for (int n = 4; n <= 64; n += 4) {
    CAPTURE(n);
    BigInt lo = krawtchouk(n, 0);
    for (int j = 1; j <= n; ++j) lo = std::min(lo, krawtchouk(n, j));
    CHECK(least_eigenvalue(n) == Rational(lo));
    CHECK(krawtchouk(n, 2) == lo);
  }
  CHECK(least_eigenvalue(4) == -2);
  CHECK(least_eigenvalue(8) == -10);
  CHECK(least_eigenvalue(12) == -84);
  CHECK(least_eigenvalue(16) == -858);
  CHECK_THROWS(least_eigenvalue(6));
}

TEST_CASE("ratio bounds") {
  for (int n = 4; n <= 64; n += 4) {
    CAPTURE(n);
    const auto b = ratio_bound(GraphKind::omega(n));
    CHECK(b.bound == make_rational(pow2(static_cast<unsigned long>(n)), BigInt(n)));
    CHECK(b.is_integer == is_power_of_two(n));
    const auto y = ratio_bound(GraphKind::y(n));
    CHECK(y.bound * 4 == b.bound);
  }
  CHECK(ratio_bound(GraphKind::y(8)).bound == 8);
  CHECK(ratio_bound(GraphKind::y(16)).bound == 1024);
  CHECK_THROWS(ratio_bound(GraphKind::psi(8)));
}

TEST_CASE("W columns are tau-eigenvectors") {
  for (int n : {4, 8}) {
    CAPTURE(n);
    const auto r = verify_tau_eigenspace(n);
    CHECK(r.passed());
    CHECK(r.columns_checked == 2 * two_subsets(n).size());
    CHECK(r.max_defect == 0);
  }
  CHECK(*verify_tau_eigenspace(4).column_rank == 6);
  CHECK(*verify_tau_eigenspace(8).column_rank == 56);
}

TEST_CASE("equality condition agrees with column-space membership") {
  std::mt19937_64 rng(99);
  // Omega_4 against the W basis.
  const RationalMatrix w4 = build_W(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint8_t> z(16);
    for (auto& b : z) b = rng() % 2;
    const auto centred = minus_mean(z);
    CHECK(equality_condition_check(GraphKind::omega(4), z) == in_column_space(w4, centred));
  }
  // Y_8 against Hhat, including every tight set the search finds.
  const RationalMatrix h = build_Hhat(8);
  const auto ys = y_vertex_words(8);
  std::vector<std::vector<std::uint8_t>> zs;
  for (const auto& c : enumerate(8).certificates) {
    std::vector<std::uint8_t> z(ys.size(), 0);
    for (const auto& v : c.vertices) z[std::lower_bound(ys.begin(), ys.end(), v.bits()) - ys.begin()] = 1;
    zs.push_back(z);
  }
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::uint8_t> z(ys.size());
    for (auto& b : z) b = rng() % 4 == 0;
    zs.push_back(z);
  }
  int hits = 0;
  for (const auto& z : zs) {
    std::vector<Rational> col(z.begin(), z.end());
    const bool member = in_column_space(h, col);
    hits += member;
    CHECK(equality_condition_check(GraphKind::y(8), z) == member);
  }
  CHECK(hits >= 8);
}

TEST_CASE("lifted tight sets satisfy the equality condition in Omega_8") {
  const auto cert = enumerate(8).certificates.front();
  const auto lifted = lift_to_omega(cert);
  CHECK(lifted.size() == 32);
  CHECK(equality_condition_check(GraphKind::omega(8), lifted.vertices));
  std::vector<VertexWord> small(lifted.vertices.begin(), lifted.vertices.begin() + 16);
  CHECK_FALSE(equality_condition_check(GraphKind::omega(8), small));
}

TEST_CASE("Gram identities as measured") {
  for (int n : {8, 12, 16}) {
    CAPTURE(n);
    const auto g = gram_identities(n);
    CHECK(g.n_rows == binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2)) / 2);
    CHECK(g.n_bt_all_minus_one);
    CHECK(g.nhat_bhat_t_zero);
    CHECK(g.b_bt_uniform);
    CHECK(g.b_bt_diagonal == n - 1);
    CHECK(g.b_bt_off_diagonal == 1);
    REQUIRE(g.n_ones_value.has_value());
    CHECK(*g.n_ones_value == -n / 2);
    // (n-1)I + J would put n on the diagonal; +(n/2) would need the opposite sign.
    CHECK_FALSE(g.b_bt_stated);
    CHECK_FALSE(g.n_ones_stated);
  }
}

TEST_CASE("N^T N spectrum") {
  const auto s8 = ntn_spectrum(8);
  REQUIRE(s8.ntn.has_value());
  CHECK(s8.passed());
  CHECK(s8.ntn->c0 == 70);
  CHECK(s8.ntn->c1 == -10);
  CHECK(s8.ntn->c2 == 6);
  CHECK(s8.ntn->lambda1 == 40);
  CHECK(s8.ntn->lambda2 == 96);
  CHECK(s8.ntn->lambda0 == 0);
  CHECK(s8.ntn->mult1 == 1);
  CHECK(s8.ntn->mult2 == 20);
  CHECK(s8.ntn->mult0 == 7);
  CHECK(s8.ntn->trace == 1960);
  CHECK(s8.ntn->y_rows_half_gram);

  const auto s12 = ntn_spectrum(12);
  CHECK(s12.passed());
  CHECK(s12.ntn->lambda1 == 504);
  CHECK(s12.ntn->lambda2 == 1120);
  CHECK(s12.ntn->mult2 == 54);
  CHECK(s12.ntn->trace == 60984);
}
