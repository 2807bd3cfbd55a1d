#include "ortho/graph_core.hpp"

#include "ortho/kernels.hpp"

#include <stdexcept>

namespace ortho {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_dimension(int n) { require(n >= 1 && n <= kMaxDimension, "dimension out of range: " + std::to_string(n)); }

}  // namespace

GraphKind GraphKind::omega(int n) {
  require_dimension(n);
  return {GraphFamily::Omega, n};
}

GraphKind GraphKind::y(int n) {
  require_dimension(n);
  require(n % 4 == 0, "Y_n requires n divisible by 4, got " + std::to_string(n));
  return {GraphFamily::Y, n};
}

GraphKind GraphKind::psi(int n) {
  require_dimension(n);
  require(is_power_of_two(n), "Psi_n requires n a power of two, got " + std::to_string(n));
  return {GraphFamily::Psi, n};
}

std::string to_string(GraphFamily f) {
  switch (f) {
    case GraphFamily::Omega: return "omega";
    case GraphFamily::Y: return "y";
    case GraphFamily::Psi: return "psi";
  }
  return "?";
}

std::string to_string(const GraphKind& k) { return to_string(k.family) + "(" + std::to_string(k.n) + ")"; }

GraphFamily parse_family(const std::string& s) {
  if (s == "omega") return GraphFamily::Omega;
  if (s == "y") return GraphFamily::Y;
  if (s == "psi") return GraphFamily::Psi;
  throw std::invalid_argument("unknown graph family: " + s);
}

std::string to_string(ParityClass p) {
  switch (p) {
    case ParityClass::Edgeless: return "edgeless";
    case ParityClass::Bipartite: return "bipartite";
    case ParityClass::TwoIsomorphicComponents: return "two_isomorphic_components";
  }
  return "?";
}

bool orthogonal(const VertexWord& u, const VertexWord& v) {
  if (u.n() != v.n())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(u.n()) + " vs " + std::to_string(v.n()));
  return orthogonal_bits(u.bits(), v.bits(), u.n());
}

namespace {

// Psi_1 has degree 0; Psi_2m adds the whole opposite join side.
BigInt psi_degree(int n) {
  BigInt d = 0;
  for (long m = 1; m < n; m *= 2) d += pow2(static_cast<unsigned long>(m));
  return d;
}

}  // namespace

GraphStats structure_report(const GraphKind& kind) {
  const int n = kind.n;
  GraphStats s;
  s.kind = kind;
  if (n % 2 == 1)
    s.parity_class = ParityClass::Edgeless;
  else if (n % 4 == 2)
    s.parity_class = ParityClass::Bipartite;
  else
    s.parity_class = ParityClass::TwoIsomorphicComponents;

  switch (kind.family) {
    case GraphFamily::Omega:
      s.vertex_count = pow2(static_cast<unsigned long>(n));
      if (n % 2 == 1) {
        s.degree = 0;
        s.component_count = s.vertex_count;
      } else {
        s.degree = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));
        s.component_count = n % 4 == 2 ? 1 : 2;
      }
      break;
    case GraphFamily::Y:
      s.vertex_count = pow2(static_cast<unsigned long>(n - 2));
      s.degree = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2)) / 2;
      s.component_count = 1;
      break;
    case GraphFamily::Psi:
      s.vertex_count = pow2(static_cast<unsigned long>(n));
      s.degree = psi_degree(n);
      s.component_count = n == 1 ? BigInt(2) : pow2(static_cast<unsigned long>(n / 2 - 1));
      break;
  }
  s.edge_count = s.vertex_count * s.degree / 2;
  return s;
}

bool is_y_canonical(const VertexWord& v, Representative rep) {
  if (v.n() % 4 != 0 || !v.even()) return false;
  const bool bit0 = (v.bits() & 1U) != 0;
  return rep == Representative::BitZeroClear ? !bit0 : bit0;
}

VertexWord y_canonical(const VertexWord& v, Representative rep) {
  require(v.n() % 4 == 0, "Y_n requires n divisible by 4, got " + std::to_string(v.n()));
  require(v.even(), "Y_n vertices have even weight");
  const bool bit0 = (v.bits() & 1U) != 0;
  const bool keep = rep == Representative::BitZeroClear ? !bit0 : bit0;
  return keep ? v : v.complement();
}

bool y_adjacent(const VertexWord& u, const VertexWord& v, Representative rep) {
  require(is_y_canonical(u, rep) && is_y_canonical(v, rep), "y_adjacent expects canonical Y vertices");
  return orthogonal(u, v);
}

std::vector<Word> words_of_weight(int n, int w) {
  require_dimension(n);
  std::vector<Word> out;
  if (w < 0 || w > n) return out;
  if (w == 0) return {Word{0}};
  const Word limit = full_mask(n);
  Word x = full_mask(w);
  while (true) {
    out.push_back(x);
    if (x == (limit & ~full_mask(n - w))) break;
    // Gosper's hack: next word with the same popcount.
    const Word c = x & (~x + 1);
    const Word r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

std::vector<Word> neighbour_masks(int n) {
  if (n % 2 == 1) return {};
  return words_of_weight(n, n / 2);
}

std::vector<Word> y_neighbour_masks(int n) {
  std::vector<Word> out;
  for (Word m : neighbour_masks(n))
    if ((m & 1U) == 0) out.push_back(m);
  return out;
}

std::vector<Word> y_vertex_words(int n, Representative rep) {
  require(n % 4 == 0 && n >= 4 && n <= 24, "Y_n vertex listing supports 4 | n, n <= 24");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << (n - 2));
  const Word want = rep == Representative::BitZeroClear ? 0 : 1;
  for (Word w = 0; w <= full_mask(n); ++w)
    if ((w & 1U) == want && weight(w) % 2 == 0) out.push_back(w);
  return out;
}

AntipodalReport antipodal_structure_check(int n, int jobs) {
  require(n % 4 == 0 && n >= 4 && n <= 16, "antipodal check needs 4 | n and n <= 16");
  AntipodalReport r;
  r.n = n;
  auto w = kernels::parallel::antipodal_violation(n, jobs);
  r.holds = !w.has_value();
  if (w) r.witness = std::pair{w->a, w->b};
  return r;
}

bool components_isomorphic_check(int n) {
  require(n % 4 == 0 && n >= 4 && n <= 12, "component check needs 4 | n and n <= 12");
  const Word odd = 1;
  const Word top = full_mask(n);
  for (Word x = 0; x <= top; ++x) {
    for (Word y = x + 1; y <= top; ++y) {
      const bool same_parity = (weight(x) + weight(y)) % 2 == 0;
      const bool adj = orthogonal_bits(x, y, n);
      if (!same_parity && adj) return false;  // edge between parity classes
      if (weight(x) % 2 == 0 && same_parity && adj != orthogonal_bits(x ^ odd, y ^ odd, n)) return false;
    }
  }
  return true;
}

PartitionReport double_cover_partition(int n) {
  require(n >= 1 && 2 * n <= 16, "double cover check needs 2n <= 16");
  PartitionReport rep;
  rep.n = n;
  const Word small = full_mask(n);
  const std::size_t count = std::size_t{1} << n;
  rep.copies = count;
  rep.join_pairs = count / 2;

  std::vector<std::uint8_t> hits(std::size_t{1} << (2 * n), 0);
  for (Word r = 0; r <= small; ++r)
    for (Word x = 0; x <= small; ++x) {
      auto& h = hits[embed(x, r, n)];
      if (h < 2) ++h;
    }
  rep.partitions = true;
  for (auto h : hits)
    if (h != 1) rep.partitions = false;

  rep.copies_induced = true;
  for (Word r = 0; r <= small && rep.copies_induced; ++r)
    for (Word x = 0; x <= small && rep.copies_induced; ++x)
      for (Word y = x + 1; y <= small; ++y)
        if (orthogonal_bits(x, y, n) != orthogonal_bits(embed(x, r, n), embed(y, r, n), 2 * n)) {
          rep.copies_induced = false;
          break;
        }

  rep.joins_complete = true;
  for (Word r = 0; r <= small && rep.joins_complete; ++r) {
    const Word neg = r ^ small;
    for (Word x = 0; x <= small && rep.joins_complete; ++x)
      for (Word y = 0; y <= small; ++y)
        if (!orthogonal_bits(embed(x, r, n), embed(y, neg, n), 2 * n)) {
          rep.joins_complete = false;
          break;
        }
  }
  return rep;
}

bool psi_adjacent(Word u, Word v, int n) {
  while (n > 1) {
    const int m = n / 2;
    const Word half = full_mask(m);
    const Word ux = u & half, vx = v & half;
    const Word ur = ux ^ (u >> m), vr = vx ^ (v >> m);
    if ((ur ^ vr) == half) return true;  // opposite join sides
    if (ur != vr) return false;          // different copies
    u = ux;
    v = vx;
    n = m;
  }
  return false;
}

std::vector<PsiRow> psi_stats(int k) {
  require(k >= 0 && k <= 8, "psi_stats supports k <= 8");
  std::vector<PsiRow> rows;
  BigInt psi_edges = 0;
  for (int j = 0; j <= k; ++j) {
    PsiRow row;
    row.j = j;
    const unsigned long n = 1UL << j;
    row.n = BigInt(n);
    row.vertex_count = pow2(n);
    row.psi_edges = psi_edges;
    row.omega_edges = n % 2 == 1 ? BigInt(0) : pow2(n - 1) * binomial(n, n / 2);
    if (row.omega_edges != 0) row.ratio = make_rational(row.psi_edges, row.omega_edges);
    rows.push_back(row);
    // E(Psi_2n) = 2^(n-1) (2 E(Psi_n) + 4^n)
    psi_edges = pow2(n - 1) * (2 * psi_edges + pow2(2 * n));
  }
  return rows;
}

BigInt psi_edge_count_exhaustive(int n) {
  require(is_power_of_two(n) && n <= 16, "exhaustive Psi count needs n a power of two, n <= 16");
  std::uint64_t edges = 0;
  const Word top = full_mask(n);
  const auto masks = neighbour_masks(n);
  // Psi_n is spanning in Omega_n, so only Omega-neighbours need testing.
  for (Word u = 0; u <= top; ++u)
    for (Word m : masks)
      if (u < (u ^ m) && psi_adjacent(u, u ^ m, n)) ++edges;
  return BigInt(static_cast<unsigned long>(edges));
}

}  // namespace ortho
