#include "ortho/rational_matrix.hpp"

#include "ortho/kernels.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace ortho {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::filled(std::size_t rows, std::size_t cols, const Rational& value) {
  RationalMatrix m(rows, cols);
  for (auto& x : m.data_) x = value;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> indices) const {
  RationalMatrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw std::out_of_range("row index out of range");
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(indices[i], c);
  }
  return out;
}

RationalMatrix RationalMatrix::append_ones_column() const {
  RationalMatrix out(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    out(r, cols_) = 1;
  }
  return out;
}

RationalMatrix RationalMatrix::drop_last_column() const {
  if (cols_ == 0) throw std::invalid_argument("no column to drop");
  RationalMatrix out(rows_, cols_ - 1);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c + 1 < cols_; ++c) out(r, c) = (*this)(r, c);
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool RationalMatrix::is_integral() const {
  for (const auto& x : data_)
    if (x.get_den() != 1) return false;
  return true;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
    os << "]\n";
  }
  return os.str();
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b, int jobs) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul dimension mismatch: " + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()));
  RationalMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<long>(a.rows());
  const int threads = kernels::resolve_jobs(jobs);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (long r = 0; r < rows; ++r) {
    Rational t;
    auto dst = out.row(static_cast<std::size_t>(r));
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(static_cast<std::size_t>(r), k);
      if (sgn(x) == 0) continue;
      auto src = b.row(k);
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (sgn(src[c]) == 0) continue;
        t = x * src[c];
        dst[c] += t;
      }
    }
  }
  return out;
}

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
}

}  // namespace

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = s * m(r, c);
  return out;
}

EchelonResult rcef(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Column-major working copy: column operations touch contiguous storage.
  std::vector<std::vector<Rational>> col(cols, std::vector<Rational>(rows));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) col[c][r] = m(r, c);

  EchelonResult res;
  std::size_t pc = 0;
  Rational f;
  for (std::size_t r = 0; r < rows && pc < cols; ++r) {
    std::size_t j = pc;
    while (j < cols && sgn(col[j][r]) == 0) ++j;
    if (j == cols) continue;
    std::swap(col[j], col[pc]);

    // Entries of a non-pivot column above r are already zero.
    auto& p = col[pc];
    const Rational inv = 1 / p[r];
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(p[i]) != 0) p[i] *= inv;

    for (std::size_t k = 0; k < cols; ++k) {
      if (k == pc || sgn(col[k][r]) == 0) continue;
      f = col[k][r];
      auto& dst = col[k];
      for (std::size_t i = r; i < rows; ++i)
        if (sgn(p[i]) != 0) dst[i] -= f * p[i];
    }
    res.pivot_rows.push_back(r);
    ++pc;
  }
  res.rank = pc;
  res.c = RationalMatrix(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) res.c(r, c) = col[c][r];
  return res;
}

std::size_t rank(const RationalMatrix& m, int jobs) { return kernels::parallel::rank(m, jobs); }

bool in_column_space(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  return rank(m) == rank(aug);
}

}  // namespace ortho
