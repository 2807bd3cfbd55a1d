#include "ortho/rational_matrix.hpp"

#include <doctest.h>

#include <random>

using namespace ortho;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Rank by the determinant of every square minor: tiny, slow, independent.
Rational det(RationalMatrix m) {
  const std::size_t n = m.rows();
  Rational d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      d = -d;
    }
    d *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

std::size_t minor_rank(const RationalMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::size_t best = 0;
  for (unsigned rs = 1; rs < (1U << r); ++rs)
    for (unsigned cs = 1; cs < (1U << c); ++cs) {
      const auto k = static_cast<std::size_t>(__builtin_popcount(rs));
      if (k != static_cast<std::size_t>(__builtin_popcount(cs)) || k <= best) continue;
      RationalMatrix sub(k, k);
      std::size_t a = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rs >> i & 1U)) continue;
        std::size_t b = 0;
        for (std::size_t j = 0; j < c; ++j)
          if (cs >> j & 1U) sub(a, b++) = m(i, j);
        ++a;
      }
      if (det(sub) != 0) best = k;
    }
  return best;
}

}  // namespace

TEST_CASE("rcef of small matrices") {
  const RationalMatrix m{{2, 4}, {1, 3}};
  const auto e = rcef(m);
  CHECK(e.rank == 2);
  CHECK(e.c == RationalMatrix::identity(2));
  CHECK(e.pivot_rows == std::vector<std::size_t>{0, 1});

  const RationalMatrix dep{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto d = rcef(dep);
  CHECK(d.rank == 2);
  CHECK(d.pivot_rows == std::vector<std::size_t>{0, 2});
  CHECK(d.c(0, 0) == 1);
  CHECK(d.c(0, 1) == 0);
  CHECK(d.c(1, 0) == 2);
  CHECK(d.c(2, 1) == 1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(d.c(i, 2) == 0);

  const RationalMatrix frac{{3, 0}, {1, 0}};
  const auto f = rcef(frac);
  CHECK(f.rank == 1);
  CHECK(f.c(1, 0) == Rational(1, 3));
}

TEST_CASE("rank and rcef properties on random matrices") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    RationalMatrix m = random_matrix(rng, r, c, -2, 2);
    if (trial % 3 == 0 && c > 1)  // force a dependent column
      for (std::size_t i = 0; i < r; ++i) m(i, c - 1) = m(i, 0) * 2 - m(i, c - 2);
    CAPTURE(m.to_string());
    const auto e = rcef(m);
    CHECK(e.rank == minor_rank(m));
    CHECK(rank(m) == e.rank);
    CHECK(rank(m.transpose()) == e.rank);
    CHECK(rcef(e.c).c == e.c);
    for (std::size_t j = e.rank; j < c; ++j)
      for (std::size_t i = 0; i < r; ++i) CHECK(e.c(i, j) == 0);
    for (std::size_t k = 0; k < e.rank; ++k) {
      CHECK(e.c(e.pivot_rows[k], k) == 1);
      for (std::size_t j = 0; j < c; ++j)
        if (j != k) CHECK(e.c(e.pivot_rows[k], j) == 0);
    }
    // Every column of m lies in the span of the echelon columns, and conversely.
    for (std::size_t j = 0; j < c; ++j) {
      std::vector<Rational> col(r);
      for (std::size_t i = 0; i < r; ++i) col[i] = m(i, j);
      CHECK(in_column_space(e.c, col));
    }
    for (std::size_t j = 0; j < e.rank; ++j) {
      std::vector<Rational> col(r);
      for (std::size_t i = 0; i < r; ++i) col[i] = e.c(i, j);
      CHECK(in_column_space(m, col));
    }
  }
}

TEST_CASE("matrix products and arithmetic") {
  const RationalMatrix a{{1, 2}, {3, 4}};
  const RationalMatrix b{{0, 1}, {1, 0}};
  CHECK(matmul(a, b) == RationalMatrix{{2, 1}, {4, 3}});
  CHECK(matmul(a, RationalMatrix::identity(2)) == a);
  CHECK((a + b) - b == a);
  CHECK(Rational(2) * a == a + a);
  CHECK(a.transpose().transpose() == a);
  CHECK_THROWS_AS(matmul(a, RationalMatrix(3, 1)), std::invalid_argument);
  CHECK(a.append_ones_column().cols() == 3);
  CHECK(a.append_ones_column().drop_last_column() == a);
  CHECK(RationalMatrix(2, 3).is_zero());
  CHECK(RationalMatrix::filled(2, 2, Rational(1, 2)).is_integral() == false);

  std::mt19937_64 rng(7);
  const auto x = random_matrix(rng, 9, 7, -3, 3);
  const auto y = random_matrix(rng, 7, 5, -3, 3);
  CHECK(matmul(x, y, 1) == matmul(x, y, 4));
  CHECK(matmul(x, y).transpose() == matmul(y.transpose(), x.transpose()));
}

TEST_CASE("column space membership") {
  const RationalMatrix m{{1, 0}, {0, 1}, {1, 1}};
  CHECK(in_column_space(m, std::vector<Rational>{2, 3, 5}));
  CHECK_FALSE(in_column_space(m, std::vector<Rational>{2, 3, 4}));
  CHECK(in_column_space(m, std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(5, 6)}));
}
