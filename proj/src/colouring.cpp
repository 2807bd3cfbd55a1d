#include "ortho/colouring.hpp"

#include "ortho/families.hpp"
#include "ortho/kernels.hpp"
#include "ortho/spectral.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ortho {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string hexword(Word w) {
  static const char* digits = "0123456789abcdef";
  if (w == 0) return "0";
  std::string s;
  for (; w != 0; w >>= 4) s.insert(s.begin(), digits[w & 15U]);
  return s;
}

}  // namespace

CliqueCertificate sylvester_clique(int k) {
  require(k >= 0 && k <= 6, "Sylvester clique supports 0 <= k <= 6");
  const int n = 1 << k;
  CliqueCertificate c;
  c.n = n;
  for (Word i = 0; i < static_cast<Word>(n); ++i) {
    Word row = 0;
    for (Word j = 0; j < static_cast<Word>(n); ++j)
      if (weight(i & j) % 2 == 1) row |= Word{1} << j;
    c.vertices.emplace_back(row, n);
  }
  return c;
}

bool check_clique(const CliqueCertificate& c) {
  if (c.size() > static_cast<std::size_t>(c.n)) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.vertices[i].n() != c.n) return false;
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!orthogonal(c.vertices[i], c.vertices[j])) return false;
  }
  return true;
}

bool translate_disjointness(std::span<const VertexWord> s, const CliqueCertificate& c) {
  const GraphKind kind = GraphKind::omega(c.n);
  require(check_independent(s, kind), "translate_disjointness expects an independent set");
  std::set<Word> seen;
  for (const auto& g : c.vertices)
    for (const auto& x : s)
      if (!seen.insert(x.bits() ^ g.bits()).second) return false;
  return true;
}

ColouringCheck verify_colouring(const ColouringCertificate& c, int jobs) {
  const int n = c.kind.n;
  require(n <= 16, "colouring verification needs n <= 16");
  ColouringCheck chk;

  std::vector<Word> universe;
  if (c.kind.family == GraphFamily::Y) {
    universe = y_vertex_words(n);
  } else {
    universe.resize(std::size_t{1} << n);
    for (std::size_t i = 0; i < universe.size(); ++i) universe[i] = i;
  }
  std::vector<std::uint8_t> hits(std::size_t{1} << n, 0);
  std::vector<std::uint8_t> allowed(std::size_t{1} << n, 0);
  for (Word u : universe) allowed[u] = 1;
  chk.partition = true;
  for (const auto& cls : c.classes)
    for (const auto& v : cls) {
      if (v.n() != n || !allowed[v.bits()] || hits[v.bits()]++ > 0) {
        chk.partition = false;
        if (!chk.witness_vertex) chk.witness_vertex = v.bits();
      }
    }
  for (Word u : universe)
    if (hits[u] == 0) {
      chk.partition = false;
      if (!chk.witness_vertex) chk.witness_vertex = u;
    }

  chk.proper = true;
  for (const auto& cls : c.classes) {
    const auto words = to_words(cls);
    if (c.kind.family == GraphFamily::Psi) {
      for (std::size_t i = 0; i < words.size() && chk.proper; ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
          if (psi_adjacent(words[i], words[j], n)) {
            chk.proper = false;
            chk.witness_edge = std::pair{words[i], words[j]};
            break;
          }
    } else if (auto w = kernels::parallel::adjacent_pair(words, n, jobs)) {
      chk.proper = false;
      chk.witness_edge = std::pair{w->a, w->b};
    }
    if (!chk.proper) break;
  }
  return chk;
}

ColouringCertificate normal_cayley_colouring(std::span<const VertexWord> s, const CliqueCertificate& c) {
  const int n = c.n;
  require(check_clique(c), "normal_cayley_colouring expects a clique");
  require(check_independent(s, GraphKind::omega(n)), "normal_cayley_colouring expects an independent set");
  require(static_cast<std::uint64_t>(s.size()) * c.size() == (std::uint64_t{1} << n),
          "|S| |C| must equal the number of vertices");
  ColouringCertificate col;
  col.kind = GraphKind::omega(n);
  for (const auto& g : c.vertices) {
    std::vector<VertexWord> cls;
    cls.reserve(s.size());
    for (const auto& x : s) cls.push_back(x.translate(g.bits()));
    std::sort(cls.begin(), cls.end());
    col.classes.push_back(std::move(cls));
  }
  const auto chk = verify_colouring(col);
  if (!chk.partition)
    throw std::runtime_error("translates do not partition the vertex set (vertex " +
                             hexword(chk.witness_vertex.value_or(0)) + ")");
  if (!chk.proper)
    throw std::runtime_error("class contains the edge " + hexword(chk.witness_edge->first) + "-" +
                             hexword(chk.witness_edge->second));
  return col;
}

int psi_colour(Word u, int n) {
  int colour = 0;
  while (n > 1) {
    const int m = n / 2;
    const Word x = u & full_mask(m);
    const Word r = x ^ (u >> m);
    // Copies are indexed by the member of {r, -r} with bit 0 clear; the other side gets the upper palette.
    if (r & 1U) colour += m;
    u = x;
    n = m;
  }
  return colour;
}

ColouringCertificate psi_colouring(int k) {
  require(k >= 0 && k <= 4, "psi_colouring supports k <= 4");
  const int n = 1 << k;
  ColouringCertificate c;
  c.kind = GraphKind::psi(n);
  c.classes.resize(static_cast<std::size_t>(n));
  for (Word u = 0; u <= full_mask(n); ++u) c.classes[static_cast<std::size_t>(psi_colour(u, n))].emplace_back(u, n);
  return c;
}

std::string to_string(ChiVerdict v) {
  switch (v) {
    case ChiVerdict::EqualsN: return "EqualsN";
    case ChiVerdict::LessThanN: return "LessThanN";
    case ChiVerdict::GreaterThanN: return "GreaterThanN";
  }
  return "?";
}

ChiVerdict parse_verdict(const std::string& s) {
  if (s == "EqualsN") return ChiVerdict::EqualsN;
  if (s == "LessThanN") return ChiVerdict::LessThanN;
  if (s == "GreaterThanN") return ChiVerdict::GreaterThanN;
  throw std::invalid_argument("unknown verdict: " + s);
}

const SearchOutcome& SearchCache::get(int n) {
  auto it = outcomes_.find(n);
  if (it == outcomes_.end()) {
    SearchOptions o;
    o.jobs = jobs_;
    it = outcomes_.emplace(n, enumerate(n, o)).first;
  }
  return it->second;
}

ColouringCertificate omega_colouring(int n, SearchCache& cache) {
  require(n == 1 || n == 2 || n == 4 || n == 8, "an n-colouring of Omega_n exists only for n in {1, 2, 4, 8}");
  ColouringCertificate c;
  c.kind = GraphKind::omega(n);
  if (n == 1) {
    c.classes = {{VertexWord(0, 1), VertexWord(1, 1)}};
    return c;
  }
  if (n == 2) {
    c.classes = {{VertexWord(0b00, 2), VertexWord(0b11, 2)}, {VertexWord(0b01, 2), VertexWord(0b10, 2)}};
    return c;
  }
  const SearchOutcome& s = cache.get(n);
  if (s.certificates.empty()) throw std::runtime_error("no tight independent set found for n=" + std::to_string(n));
  const IndSetCertificate lifted = lift_to_omega(s.certificates.front());
  int k = 0;
  while ((1 << k) < n) ++k;
  return normal_cayley_colouring(lifted.vertices, sylvester_clique(k));
}

ChiStatus chi_status(int n, SearchCache& cache) {
  require(n >= 1, "n must be positive");
  ChiStatus st;
  st.n = n;
  auto& why = st.justification;

  if (n == 1) {
    st.verdict = ChiVerdict::EqualsN;
    st.chromatic_number = 1;
    why.push_back("Omega_1 is edgeless on two vertices: one colour, chi = 1 = n");
    st.certificate = omega_colouring(1, cache);
    return st;
  }
  if (n % 2 == 1) {
    st.verdict = ChiVerdict::LessThanN;
    st.chromatic_number = 1;
    why.push_back("n odd: no two +-1 vectors of odd length are orthogonal, the graph is edgeless");
    why.push_back("chi = 1 < n");
    return st;
  }
  if (n % 4 == 2) {
    st.chromatic_number = 2;
    why.push_back("n = 2 mod 4: every edge joins an even-weight vertex to an odd-weight vertex, the graph is bipartite");
    if (n == 2) {
      st.verdict = ChiVerdict::EqualsN;
      why.push_back("Omega_2 is a 4-cycle: chi = 2 = n");
      st.certificate = omega_colouring(2, cache);
    } else {
      st.verdict = ChiVerdict::LessThanN;
      why.push_back("chi = 2 < n");
    }
    return st;
  }

  const BoundReport br = ratio_bound(GraphKind::omega(n));
  if (!is_power_of_two(n)) {
    st.verdict = ChiVerdict::GreaterThanN;
    const M2kReport m2k = m2k_bound(n);
    why.push_back("ratio bound: alpha(Omega_" + std::to_string(n) + ") <= 2^n/n = " + br.bound.get_str());
    why.push_back("2^n/n is not an integer (n has the odd factor " + m2k.m.get_str() +
                  "), so alpha < 2^n/n");
    why.push_back("n colour classes would need one of size >= 2^n/n: chi > n");
    why.push_back("recursive bound 2^n/2^k = " + m2k.m2k_bound.get_str() + " is weaker by the factor " +
                  m2k.m.get_str());
    return st;
  }

  if (n == 4 || n == 8) {
    st.verdict = ChiVerdict::EqualsN;
    const SearchOutcome& s = cache.get(n);
    why.push_back("Sylvester-Hadamard rows give an " + std::to_string(n) + "-clique: chi >= n");
    why.push_back("search over Y_" + std::to_string(n) + " found " + std::to_string(s.count_independent) +
                  " independent sets meeting the ratio bound " + ratio_bound(GraphKind::y(n)).bound.get_str());
    why.push_back("lifted to Omega_" + std::to_string(n) + ": alpha = 2^n/n = " + br.bound.get_str() +
                  ", so alpha * omega = 2^n");
    why.push_back("translates of the independent set by the clique partition the vertices into n independent classes: chi = n");
    st.certificate = omega_colouring(n, cache);
    st.chromatic_number = n;
    return st;
  }

  const SearchOutcome& s16 = cache.get(16);
  if (s16.count_independent != 0)
    throw std::runtime_error("search for n=16 produced tight sets; the non-colourability chain does not apply");
  st.verdict = ChiVerdict::GreaterThanN;
  for (int m = n; m > 16; m /= 2)
    why.push_back("alpha(Omega_" + std::to_string(m) + ") = 2^" + std::to_string(m) + "/" + std::to_string(m) +
                  " would force alpha(Omega_" + std::to_string(m / 2) + ") = 2^" + std::to_string(m / 2) + "/" +
                  std::to_string(m / 2) + " (join recursion)");
  why.push_back("search over Y_16 scanned " + std::to_string(s16.candidates_total) +
                " candidates: no independent set of size 1024, so alpha(Omega_16) < 4096");
  if (n > 16) why.push_back("hence alpha(Omega_" + std::to_string(n) + ") < 2^n/n");
  why.push_back("an n-colouring of Omega_n for n a power of two needs alpha = 2^n/n: chi > n");
  return st;
}

}  // namespace ortho
