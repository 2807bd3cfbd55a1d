#include "ortho/spectral.hpp"

#include "ortho/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace ortho {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<int> elements(Word w) {
  std::vector<int> out;
  for (; w != 0; w &= w - 1) out.push_back(std::countr_zero(w));
  return out;
}

// Subsets of size w, lexicographic in their sorted element lists.
std::vector<Word> lex_subsets(int n, int w) {
  auto words = words_of_weight(n, w);
  std::sort(words.begin(), words.end(), [](Word a, Word b) { return elements(a) < elements(b); });
  return words;
}

int sign_of(Word a, Word p) { return weight(a & p) % 2 == 0 ? 1 : -1; }

// The 2-subset block of W restricted to `rows`.
kernels::IntMatrix sign_matrix(std::span<const Word> rows, std::span<const Word> cols) {
  kernels::IntMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = sign_of(rows[r], cols[c]);
  return m;
}

}  // namespace

Rational least_eigenvalue(int n) {
  require(n >= 4 && n % 4 == 0, "least eigenvalue formula needs 4 | n, got " + std::to_string(n));
  require(n <= kMaxDimension, "dimension out of range");
  return make_rational(-binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2)), BigInt(n - 1));
}

BoundReport ratio_bound(const GraphKind& kind) {
  require(kind.family == GraphFamily::Omega || kind.family == GraphFamily::Y,
          "ratio bound is defined here for Omega and Y only");
  const int n = kind.n;
  const Rational tau = least_eigenvalue(n);
  const BigInt mid = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));
  BoundReport r;
  r.kind = kind;
  BigInt power;
  if (kind.family == GraphFamily::Omega) {
    r.v = pow2(static_cast<unsigned long>(n));
    r.d = mid;
    r.tau = tau;
    power = pow2(static_cast<unsigned long>(n));
  } else {
    // Omega's even component is Y_n[K2-bar]: both spectra scale by 1/2.
    r.v = pow2(static_cast<unsigned long>(n - 2));
    r.d = mid / 2;
    r.tau = tau / 2;
    power = pow2(static_cast<unsigned long>(n - 2));
  }
  r.bound = Rational(r.v) * (-r.tau) / (Rational(r.d) - r.tau);
  r.bound.canonicalize();
  r.is_integer = is_integer(r.bound);
  r.simplifies_to_power_form = r.bound == make_rational(power, BigInt(n));
  return r;
}

std::vector<Word> two_subsets(int n) { return lex_subsets(n, 2); }

RationalMatrix build_W(int n) {
  require(n == 4 || n == 8, "build_W supports n in {4, 8}");
  auto cols = lex_subsets(n, 2);
  auto tail = lex_subsets(n, n - 2);
  cols.insert(cols.end(), tail.begin(), tail.end());
  const std::size_t rows = std::size_t{1} << n;
  RationalMatrix w(rows, cols.size());
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t c = 0; c < cols.size(); ++c) w(a, c) = sign_of(a, cols[c]);
  return w;
}

bool EigencheckReport::passed() const {
  bool ok = sgn(max_defect) == 0;
  if (ntn) ok = ok && ntn->gram_matches && ntn->multiplicities_match && ntn->trace_consistent;
  return ok;
}

std::vector<std::int64_t> apply_adjacency(const GraphKind& kind, std::span<const std::int64_t> values, int jobs) {
  const int n = kind.n;
  require(n <= 20, "implicit adjacency scans need n <= 20");
  const std::size_t size = std::size_t{1} << n;
  require(values.size() == size, "value vector must be indexed by word");
  std::vector<Word> rows;
  std::vector<Word> masks;
  if (kind.family == GraphFamily::Omega) {
    rows.resize(size);
    for (std::size_t i = 0; i < size; ++i) rows[i] = i;
    masks = neighbour_masks(n);
  } else if (kind.family == GraphFamily::Y) {
    for (Word w = 0; w < size; ++w)
      if (weight(w) % 2 == 0) rows.push_back(w);
    masks = y_neighbour_masks(n);
  } else {
    throw std::invalid_argument("apply_adjacency supports Omega and Y");
  }
  std::vector<std::int64_t> out(size, 0);
  kernels::parallel::apply_adjacency(values, masks, rows, out, jobs);
  return out;
}

EigencheckReport verify_tau_eigenspace(int n, int jobs) {
  require(n == 4 || n == 8, "eigenspace verification supports n in {4, 8}");
  const RationalMatrix w = build_W(n);
  const Rational tau = least_eigenvalue(n);
  const std::int64_t p = to_int64(tau.get_num()), q = to_int64(tau.get_den());
  const std::size_t size = w.rows();

  EigencheckReport rep;
  rep.n = n;
  rep.max_defect = 0;
  std::vector<std::int64_t> col(size);
  for (std::size_t c = 0; c < w.cols(); ++c) {
    for (std::size_t a = 0; a < size; ++a) col[a] = w(a, c).get_num().get_si();
    const auto aw = apply_adjacency(GraphKind::omega(n), col, jobs);
    for (std::size_t a = 0; a < size; ++a) {
      const std::int64_t scaled = q * aw[a] - p * col[a];
      if (scaled != 0) {
        Rational d(std::abs(scaled), q);
        d.canonicalize();
        if (d > rep.max_defect) {
          rep.max_defect = d;
          rep.witness_column = c;
        }
      }
    }
    ++rep.columns_checked;
  }
  rep.column_rank = rank(w, jobs);
  return rep;
}

bool equality_condition_check(const GraphKind& kind, std::span<const std::uint8_t> z, Representative rep, int jobs) {
  const int n = kind.n;
  require(n % 4 == 0 && n <= 16, "equality check needs 4 | n and n <= 16");
  for (auto b : z) require(b <= 1, "characteristic vector must be 0/1-valued");

  const BoundReport br = ratio_bound(kind);
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int64_t> values(size, 0);
  std::vector<Word> rows;
  if (kind.family == GraphFamily::Omega) {
    require(z.size() == size, "Omega characteristic vector must have 2^n entries");
    for (std::size_t i = 0; i < size; ++i) values[i] = z[i];
    rows.resize(size);
    for (std::size_t i = 0; i < size; ++i) rows[i] = i;
  } else {
    rows = y_vertex_words(n, rep);
    require(z.size() == rows.size(), "Y characteristic vector must have 2^(n-2) entries");
    for (std::size_t i = 0; i < rows.size(); ++i) values[rows[i]] = z[i];
  }
  std::int64_t s = 0;
  for (Word u : rows) s += values[u];

  const auto az = apply_adjacency(kind, values, jobs);
  const std::int64_t v = to_int64(br.v), d = to_int64(br.d);
  const std::int64_t p = to_int64(br.tau.get_num()), q = to_int64(br.tau.get_den());
  // q (v (Az)_u - s d) == p (v z_u - s), i.e. A(z - s/v 1) = tau (z - s/v 1) scaled by v q.
  for (Word u : rows)
    if (q * (v * az[u] - s * d) != p * (v * values[u] - s)) return false;
  return true;
}

bool equality_condition_check(const GraphKind& kind, std::span<const VertexWord> set, int jobs) {
  const int n = kind.n;
  require(n % 4 == 0 && n <= 16, "equality check needs 4 | n and n <= 16");
  if (kind.family == GraphFamily::Omega) {
    std::vector<std::uint8_t> z(std::size_t{1} << n, 0);
    for (const auto& x : set) {
      require(x.n() == n, "vertex dimension mismatch");
      z[x.bits()] = 1;
    }
    return equality_condition_check(kind, z, Representative::BitZeroClear, jobs);
  }
  require(kind.family == GraphFamily::Y, "equality check supports Omega and Y");
  const Representative rep =
      !set.empty() && (set.front().bits() & 1U) ? Representative::BitZeroSet : Representative::BitZeroClear;
  const auto rows = y_vertex_words(n, rep);
  std::vector<std::uint8_t> z(rows.size(), 0);
  for (const auto& x : set) {
    require(x.n() == n && is_y_canonical(x, rep), "set members must be canonical Y vertices");
    const auto it = std::lower_bound(rows.begin(), rows.end(), x.bits());
    z[static_cast<std::size_t>(it - rows.begin())] = 1;
  }
  return equality_condition_check(kind, z, rep, jobs);
}

GramReport gram_identities(int n, int jobs) {
  require(n == 8 || n == 12 || n == 16, "Gram identities support n in {8, 12, 16}");
  GramReport rep;
  rep.n = n;
  const auto pairs = two_subsets(n);
  const auto nbrs = y_neighbour_masks(n);  // Y-neighbours of the empty set, ascending
  rep.n_rows = nbrs.size();

  RationalMatrix N = sign_matrix(nbrs, pairs).to_rational();
  RationalMatrix B(static_cast<std::size_t>(n), pairs.size());
  for (std::size_t e = 0; e < pairs.size(); ++e)
    for (int i = 0; i < n; ++i)
      if ((pairs[e] >> i) & 1U) B(static_cast<std::size_t>(i), e) = 1;
  const RationalMatrix Bt = B.transpose();

  const RationalMatrix nbt = matmul(N, Bt, jobs);
  rep.n_bt_all_minus_one = nbt == RationalMatrix::filled(nbt.rows(), nbt.cols(), Rational(-1));
  if (!rep.n_bt_all_minus_one) rep.witnesses.push_back("N B^T is not all -1");

  const RationalMatrix nhat_bhat = matmul(N.append_ones_column(), B.append_ones_column().transpose(), jobs);
  rep.nhat_bhat_t_zero = nhat_bhat.is_zero();

  const RationalMatrix bbt = matmul(B, Bt, jobs);
  const RationalMatrix stated = Rational(n - 1) * RationalMatrix::identity(static_cast<std::size_t>(n)) +
                                RationalMatrix::filled(static_cast<std::size_t>(n), static_cast<std::size_t>(n), 1);
  rep.b_bt_stated = bbt == stated;
  rep.b_bt_diagonal = bbt(0, 0);
  rep.b_bt_off_diagonal = bbt(0, 1);
  const Rational lam = rep.b_bt_diagonal - rep.b_bt_off_diagonal;
  rep.b_bt_uniform = bbt == lam * RationalMatrix::identity(static_cast<std::size_t>(n)) +
                                RationalMatrix::filled(static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                                                       rep.b_bt_off_diagonal);
  if (!rep.b_bt_stated)
    rep.witnesses.push_back("B B^T (0,0) = " + bbt(0, 0).get_str() + ", expected " + stated(0, 0).get_str());

  bool constant = true;
  Rational first;
  for (std::size_t r = 0; r < N.rows(); ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < N.cols(); ++c) s += N(r, c);
    if (r == 0)
      first = s;
    else if (s != first)
      constant = false;
  }
  if (constant && N.rows() > 0) rep.n_ones_value = first;
  rep.n_ones_stated = constant && first == Rational(n / 2);
  if (!rep.n_ones_stated)
    rep.witnesses.push_back("N 1 row 0 = " + first.get_str() + ", expected " + std::to_string(n / 2));
  return rep;
}

EigencheckReport ntn_spectrum(int n, int jobs) {
  require(n == 8 || n == 12 || n == 16, "N^T N spectrum supports n in {8, 12, 16}");
  const auto pairs = two_subsets(n);
  const std::size_t m = pairs.size();
  const unsigned long un = static_cast<unsigned long>(n);
  const BigInt mid = binomial(un, un / 2);

  // Full even-component neighbourhood of the empty set: every n/2-subset.
  const auto full_rows = words_of_weight(n, n / 2);
  const auto y_rows = y_neighbour_masks(n);
  const kernels::IntMatrix g = kernels::parallel::gram(sign_matrix(full_rows, pairs), jobs);
  const kernels::IntMatrix gy = kernels::parallel::gram(sign_matrix(y_rows, pairs), jobs);

  NtnSpectrum s;
  s.c0 = Rational(mid);
  s.c1 = Rational(mid - 8 * binomial(un - 3, un / 2 - 1));
  s.c2 = Rational(mid - 16 * binomial(un - 4, un / 2 - 1));
  s.lambda1 = Rational(n, 2 * (n - 1)) * s.c0;
  s.lambda1.canonicalize();
  s.lambda2 = Rational(n * (n - 2), (n - 1) * (n - 3)) * s.c0;
  s.lambda2.canonicalize();
  s.lambda0 = 0;
  s.expected1 = 1;
  s.expected2 = m - static_cast<std::size_t>(n);
  s.expected0 = static_cast<std::size_t>(n) - 1;

  EigencheckReport rep;
  rep.n = n;
  rep.columns_checked = m;
  rep.max_defect = 0;
  s.gram_matches = true;
  s.y_rows_half_gram = true;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const int meet = weight(pairs[a] & pairs[b]);
      const Rational& expect = a == b ? s.c0 : (meet == 1 ? s.c1 : s.c2);
      const Rational diff = abs(Rational(static_cast<long>(g(a, b))) - expect);
      if (sgn(diff) != 0) {
        s.gram_matches = false;
        if (!s.witness) s.witness = std::pair{a, b};
        if (diff > rep.max_defect) rep.max_defect = diff;
      }
      if (2 * gy(a, b) != g(a, b)) s.y_rows_half_gram = false;
    }

  const RationalMatrix G = g.to_rational();
  auto multiplicity = [&](const Rational& lambda) {
    return m - rank(G - lambda * RationalMatrix::identity(m), jobs);
  };
  s.mult1 = multiplicity(s.lambda1);
  s.mult2 = multiplicity(s.lambda2);
  s.mult0 = multiplicity(s.lambda0);
  s.multiplicities_match = s.mult1 == s.expected1 && s.mult2 == s.expected2 && s.mult0 == s.expected0;

  s.trace = 0;
  for (std::size_t a = 0; a < m; ++a) s.trace += static_cast<long>(g(a, a));
  const Rational weighted = s.lambda1 * static_cast<long>(s.mult1) + s.lambda2 * static_cast<long>(s.mult2);
  s.trace_consistent = s.mult1 + s.mult2 + s.mult0 == m && weighted == s.trace &&
                       s.trace == s.c0 * static_cast<long>(m);
  rep.ntn = s;
  return rep;
}

}  // namespace ortho
