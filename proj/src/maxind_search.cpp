#include "ortho/maxind_search.hpp"

#include "ortho/kernels.hpp"
#include "ortho/spectral.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace ortho {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

int sign_of(Word a, Word p) { return weight(a & p) % 2 == 0 ? 1 : -1; }

Word default_base(int n, Representative rep) { return rep == Representative::BitZeroClear ? 0 : full_mask(n); }

VertexWord checked_base(int n, const SearchOptions& o) {
  const VertexWord base(o.base.value_or(default_base(n, o.rep)), n);
  require(is_y_canonical(base, o.rep), "base vertex must be a canonical Y vertex");
  return base;
}

// Bhat with column p scaled by (-1)^{|base cap p|}; its row space is ker(Nhat) for that base.
RationalMatrix bhat_for_base(int n, Word base) {
  RationalMatrix b = build_Bhat(n);
  const auto pairs = two_subsets(n);
  for (std::size_t e = 0; e < pairs.size(); ++e)
    if (sign_of(base, pairs[e]) < 0)
      for (std::size_t i = 0; i < b.rows(); ++i) b(i, e) = -b(i, e);
  return b;
}

EchelonResult reduce_for(int n, Representative rep, Word base, int jobs) {
  const RationalMatrix hb = matmul(build_Hhat(n, rep), bhat_for_base(n, base).transpose(), jobs);
  return rcef(hb);
}

}  // namespace

bool search_supported(int n) { return n == 4 || n == 8 || n == 12 || n == 16; }

RationalMatrix build_H(int n, Representative rep) {
  require(search_supported(n), "build_H supports n in {4, 8, 12, 16}");
  const auto rows = y_vertex_words(n, rep);
  const auto cols = two_subsets(n);
  RationalMatrix h(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) h(r, c) = sign_of(rows[r], cols[c]);
  return h;
}

RationalMatrix build_Hhat(int n, Representative rep) { return build_H(n, rep).append_ones_column(); }

RationalMatrix build_B(int n) {
  require(n >= 2 && n <= kMaxDimension, "build_B needs n >= 2");
  const auto pairs = two_subsets(n);
  RationalMatrix b(static_cast<std::size_t>(n), pairs.size());
  for (std::size_t e = 0; e < pairs.size(); ++e)
    for (int i = 0; i < n; ++i)
      if ((pairs[e] >> i) & 1U) b(static_cast<std::size_t>(i), e) = 1;
  return b;
}

RationalMatrix build_Bhat(int n) { return build_B(n).append_ones_column(); }

RationalMatrix build_Nhat(int n, VertexWord base, Representative rep) {
  require(search_supported(n), "build_Nhat supports n in {4, 8, 12, 16}");
  require(base.n() == n && is_y_canonical(base, rep), "base vertex must be a canonical Y vertex");
  const auto rows = y_vertex_words(n, rep);
  std::vector<std::size_t> idx;
  for (Word m : y_neighbour_masks(n)) {
    const auto it = std::lower_bound(rows.begin(), rows.end(), base.bits() ^ m);
    idx.push_back(static_cast<std::size_t>(it - rows.begin()));
  }
  std::sort(idx.begin(), idx.end());
  const RationalMatrix hhat = build_Hhat(n, rep);
  return hhat.select_rows(idx);
}

EchelonResult reduce(int n, Representative rep, int jobs) {
  require(search_supported(n), "reduce supports n in {4, 8, 12, 16}");
  auto res = reduce_for(n, rep, default_base(n, rep), jobs);
  if (res.rank != static_cast<std::size_t>(n))
    throw std::runtime_error("rank of Hhat Bhat^T is " + std::to_string(res.rank) + ", expected " +
                             std::to_string(n));
  return res;
}

SearchOutcome enumerate(int n, const SearchOptions& options) {
  require(search_supported(n), "search supports n in {4, 8, 12, 16}");
  const auto start = std::chrono::steady_clock::now();
  SearchOutcome out;
  out.n = n;
  out.rep = options.rep;
  out.base = checked_base(n, options);

  const EchelonResult ech = reduce_for(n, options.rep, out.base.bits(), options.jobs);
  out.rank = ech.rank;
  RationalMatrix c(ech.c.rows(), ech.rank);
  for (std::size_t r = 0; r < c.rows(); ++r)
    for (std::size_t j = 0; j < ech.rank; ++j) c(r, j) = ech.c(r, j);

  const auto scaled = kernels::ScaledColumns::from(c);
  const std::uint64_t total = std::uint64_t{1} << ech.rank;
  const auto scan = kernels::parallel::scan_candidates(scaled, 0, total, options.jobs);
  out.candidates_total = total;
  out.count_01_valued = scan.zero_one.size();

  const auto rows = y_vertex_words(n, options.rep);
  const Rational target = ratio_bound(GraphKind::y(n)).bound;
  const GraphKind kind = GraphKind::y(n);
  for (const auto& hit : scan.zero_one) {
    if (Rational(static_cast<unsigned long>(hit.weight)) != target) continue;
    ++out.count_correct_weight;

    std::vector<std::uint8_t> z(rows.size(), 0);
    std::vector<Word> support;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::int64_t s = 0;
      const std::int64_t* row = scaled.entries.data() + r * scaled.cols;
      for (std::uint64_t bits = hit.x; bits != 0; bits &= bits - 1) s += row[std::countr_zero(bits)];
      if (s == scaled.scale) {
        z[r] = 1;
        support.push_back(rows[r]);
      }
    }
    if (kernels::parallel::adjacent_pair(support, n, options.jobs)) continue;
    ++out.count_independent;

    IndSetCertificate cert;
    cert.kind = kind;
    cert.vertices = to_vertices(support, n);
    cert.base = out.base;
    cert.contains_base = std::binary_search(support.begin(), support.end(), out.base.bits());
    cert.meets_ratio_bound = Rational(static_cast<unsigned long>(support.size())) == target;
    cert.eigenspace_member = equality_condition_check(kind, z, options.rep, options.jobs);
    if (cert.contains_base) ++out.count_contains_base;
    out.certificate_x.push_back(hit.x);
    out.certificates.push_back(std::move(cert));
  }
  out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

bool check_independent(std::span<const VertexWord> vertices, const GraphKind& kind, int jobs) {
  const int n = kind.n;
  std::vector<Word> words;
  words.reserve(vertices.size());
  std::set<Word> seen;
  for (const auto& v : vertices) {
    require(v.n() == n, "vertex dimension mismatch");
    Word key = v.bits();
    if (kind.family == GraphFamily::Y) {
      require(v.even(), "Y vertices have even weight");
      key = y_canonical(v).bits();
    }
    if (!seen.insert(key).second) throw std::invalid_argument("duplicate vertex " + to_pattern(v));
    words.push_back(v.bits());
  }
  if (kind.family == GraphFamily::Psi) {
    require(is_power_of_two(n), "Psi_n requires n a power of two");
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); ++j)
        if (psi_adjacent(words[i], words[j], n)) return false;
    return true;
  }
  // Omega adjacency; for Y it is complement-invariant when 4 | n.
  return !kernels::parallel::adjacent_pair(words, n, jobs).has_value();
}

}  // namespace ortho
