#include "ortho/kernels.hpp"

#include "ortho/graph_core.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ortho::kernels {

int default_jobs() {
  if (const char* env = std::getenv("ORTHO_LAB_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return std::max(1, omp_get_max_threads());
}

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : default_jobs(); }

RationalMatrix IntMatrix::to_rational() const {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>((*this)(r, c));
  return m;
}

ScaledColumns ScaledColumns::from(const RationalMatrix& c) {
  BigInt scale = 1;
  for (std::size_t r = 0; r < c.rows(); ++r)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const BigInt& d = c(r, j).get_den();
      if (d != 1) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
    }
  ScaledColumns s;
  s.rows = c.rows();
  s.cols = c.cols();
  s.scale = to_int64(scale);
  s.entries.resize(s.rows * s.cols);
  BigInt bound = BigInt(1) << 56;
  for (std::size_t r = 0; r < c.rows(); ++r)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const BigInt v = c(r, j).get_num() * (scale / c(r, j).get_den());
      if (abs(v) > bound) throw std::overflow_error("scaled echelon entry too large for the integer kernel");
      s.entries[r * s.cols + j] = to_int64(v);
    }
  return s;
}

namespace {

// z = C x' restricted to one candidate; aborts on the first entry outside {0, scale}.
bool evaluate_candidate(const ScaledColumns& c, std::uint64_t x, std::uint64_t& weight) {
  weight = 0;
  for (std::size_t r = 0; r < c.rows; ++r) {
    const std::int64_t* row = c.entries.data() + r * c.cols;
    std::int64_t s = 0;
    for (std::uint64_t bits = x; bits != 0; bits &= bits - 1) s += row[std::countr_zero(bits)];
    if (s == c.scale)
      ++weight;
    else if (s != 0)
      return false;
  }
  return true;
}

void check_range(const ScaledColumns& c, std::uint64_t lo, std::uint64_t hi) {
  if (c.cols > 63) throw std::invalid_argument("candidate space too large");
  if (lo > hi || hi > (std::uint64_t{1} << c.cols)) throw std::invalid_argument("bad candidate range");
}

std::optional<PairWitness> antipodal_at(Word x, int n) {
  const Word top = full_mask(n);
  const Word negx = x ^ top;
  if (orthogonal_bits(x, negx, n)) return PairWitness{x, negx};
  for (Word y = 0; y <= top; ++y)
    if (orthogonal_bits(x, y, n) != orthogonal_bits(x, y ^ top, n)) return PairWitness{x, y};
  return std::nullopt;
}

void rank_check_shape(const RationalMatrix& m) {
  if (m.rows() > (std::size_t{1} << 30)) throw std::invalid_argument("matrix too large");
}

}  // namespace

namespace serial {

void apply_adjacency(std::span<const std::int64_t> values, std::span<const Word> masks,
                     std::span<const Word> rows, std::span<std::int64_t> out) {
  for (Word u : rows) {
    std::int64_t s = 0;
    for (Word m : masks) s += values[u ^ m];
    out[u] = s;
  }
}

ScanTotals scan_candidates(const ScaledColumns& c, std::uint64_t lo, std::uint64_t hi) {
  check_range(c, lo, hi);
  ScanTotals t;
  std::uint64_t w = 0;
  for (std::uint64_t x = lo; x < hi; ++x)
    if (evaluate_candidate(c, x, w)) t.zero_one.push_back({x, w});
  t.scanned = hi - lo;
  return t;
}

std::optional<PairWitness> antipodal_violation(int n) {
  for (Word x = 0; x <= full_mask(n); ++x)
    if (auto w = antipodal_at(x, n)) return w;
  return std::nullopt;
}

std::optional<PairWitness> adjacent_pair(std::span<const Word> words, int n) {
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (orthogonal_bits(words[i], words[j], n)) return PairWitness{words[i], words[j]};
  return std::nullopt;
}

std::optional<Word> unblocked_vertex(std::span<const Word> candidates, std::span<const Word> members, int n) {
  for (Word v : candidates) {
    bool blocked = false;
    for (Word m : members)
      if (orthogonal_bits(v, m, n)) {
        blocked = true;
        break;
      }
    if (!blocked) return v;
  }
  return std::nullopt;
}

IntMatrix gram(const IntMatrix& m) {
  IntMatrix g(m.cols, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t a = 0; a < m.cols; ++a) {
      const std::int64_t x = m(r, a);
      if (x == 0) continue;
      for (std::size_t b = 0; b < m.cols; ++b) g(a, b) += x * m(r, b);
    }
  return g;
}

std::size_t rank(const RationalMatrix& m) {
  rank_check_shape(m);
  return rcef(m).rank;
}

}  // namespace serial

namespace parallel {

void apply_adjacency(std::span<const std::int64_t> values, std::span<const Word> masks,
                     std::span<const Word> rows, std::span<std::int64_t> out, int jobs) {
  const auto count = static_cast<long>(rows.size());
#pragma omp parallel for schedule(static) num_threads(resolve_jobs(jobs))
  for (long i = 0; i < count; ++i) {
    const Word u = rows[static_cast<std::size_t>(i)];
    std::int64_t s = 0;
    for (Word m : masks) s += values[u ^ m];
    out[u] = s;
  }
}

ScanTotals scan_candidates(const ScaledColumns& c, std::uint64_t lo, std::uint64_t hi, int jobs) {
  check_range(c, lo, hi);
  const int threads = resolve_jobs(jobs);
  // Disjoint contiguous ranges, concatenated in range order afterwards.
  const std::uint64_t span = hi - lo;
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(span, 64ULL * threads));
  std::vector<std::vector<CandidateHit>> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long k = 0; k < static_cast<long>(chunks); ++k) {
    const std::uint64_t a = lo + span * static_cast<std::uint64_t>(k) / chunks;
    const std::uint64_t b = lo + span * static_cast<std::uint64_t>(k + 1) / chunks;
    std::uint64_t w = 0;
    auto& out = parts[static_cast<std::size_t>(k)];
    for (std::uint64_t x = a; x < b; ++x)
      if (evaluate_candidate(c, x, w)) out.push_back({x, w});
  }
  ScanTotals t;
  for (auto& p : parts) t.zero_one.insert(t.zero_one.end(), p.begin(), p.end());
  t.scanned = span;
  return t;
}

std::optional<PairWitness> antipodal_violation(int n, int jobs) {
  const long top = static_cast<long>(full_mask(n));
  long first_bad = top + 1;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first_bad) num_threads(resolve_jobs(jobs))
  for (long x = 0; x <= top; ++x)
    if (x < first_bad && antipodal_at(static_cast<Word>(x), n)) first_bad = std::min(first_bad, x);
  if (first_bad > top) return std::nullopt;
  return antipodal_at(static_cast<Word>(first_bad), n);
}

std::optional<PairWitness> adjacent_pair(std::span<const Word> words, int n, int jobs) {
  const long count = static_cast<long>(words.size());
  long first_bad = count;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first_bad) num_threads(resolve_jobs(jobs))
  for (long i = 0; i < count; ++i) {
    if (i >= first_bad) continue;
    const Word a = words[static_cast<std::size_t>(i)];
    for (long j = i + 1; j < count; ++j)
      if (orthogonal_bits(a, words[static_cast<std::size_t>(j)], n)) {
        first_bad = std::min(first_bad, i);
        break;
      }
  }
  if (first_bad == count) return std::nullopt;
  // Smallest i is deterministic; rescan it serially for the partner.
  return serial::adjacent_pair(words.subspan(static_cast<std::size_t>(first_bad)), n);
}

std::optional<Word> unblocked_vertex(std::span<const Word> candidates, std::span<const Word> members, int n,
                                     int jobs) {
  const long count = static_cast<long>(candidates.size());
  long first = count;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first) num_threads(resolve_jobs(jobs))
  for (long i = 0; i < count; ++i) {
    if (i >= first) continue;
    const Word v = candidates[static_cast<std::size_t>(i)];
    bool blocked = false;
    for (Word m : members)
      if (orthogonal_bits(v, m, n)) {
        blocked = true;
        break;
      }
    if (!blocked) first = std::min(first, i);
  }
  if (first == count) return std::nullopt;
  return candidates[static_cast<std::size_t>(first)];
}

IntMatrix gram(const IntMatrix& m, int jobs) {
  IntMatrix g(m.cols, m.cols);
  const long cols = static_cast<long>(m.cols);
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_jobs(jobs))
  for (long a = 0; a < cols; ++a)
    for (std::size_t b = static_cast<std::size_t>(a); b < m.cols; ++b) {
      std::int64_t s = 0;
      for (std::size_t r = 0; r < m.rows; ++r) s += m(r, static_cast<std::size_t>(a)) * m(r, b);
      g(static_cast<std::size_t>(a), b) = s;
      g(b, static_cast<std::size_t>(a)) = s;
    }
  return g;
}

std::size_t rank(const RationalMatrix& m, int jobs) {
  rank_check_shape(m);
  const int threads = resolve_jobs(jobs);
  std::vector<std::vector<Rational>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r].assign(m.row(r).begin(), m.row(r).end());

  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols() && pr < rows.size(); ++c) {
    std::size_t p = pr;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[pr]);
    auto& piv = rows[pr];
    const Rational inv = 1 / piv[c];
    for (std::size_t k = c; k < piv.size(); ++k)
      if (sgn(piv[k]) != 0) piv[k] *= inv;

    const long total = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 32) num_threads(threads)
    for (long i = static_cast<long>(pr) + 1; i < total; ++i) {
      auto& row = rows[static_cast<std::size_t>(i)];
      if (sgn(row[c]) == 0) continue;
      const Rational f = row[c];
      Rational t;
      for (std::size_t k = c + 1; k < row.size(); ++k) {
        if (sgn(piv[k]) == 0) continue;
        t = f * piv[k];
        row[k] -= t;
      }
      row[c] = 0;
    }
    ++pr;
  }
  return pr;
}

}  // namespace parallel

}  // namespace ortho::kernels
