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

// Raw members of F_n: even subsets with |F cap [c]| >= |F \ [c]| and |F| <= 4c.
std::vector<Word> galliard_raw(int n) {
  const int c = n / 4 - 1;
  const Word head = full_mask(c);
  std::vector<Word> out;
  for (Word f = 0; f <= full_mask(n); ++f) {
    const int w = weight(f);
    if (w % 2 != 0 || w > 4 * c) continue;
    if (weight(f & head) >= weight(f & ~head)) out.push_back(f);
  }
  return out;
}

std::vector<Word> odd_small(int n, int limit) {
  std::vector<Word> out;
  for (int w = 1; w <= limit; w += 2) {
    auto layer = words_of_weight(n, w);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(FamilyKind f) { return f == FamilyKind::Galliard ? "galliard" : "odd_small"; }

FamilyKind parse_family_kind(const std::string& s) {
  if (s == "galliard") return FamilyKind::Galliard;
  if (s == "odd_small" || s == "odd-small") return FamilyKind::OddSmall;
  throw std::invalid_argument("unknown family: " + s);
}

FamilyReport galliard_family(int n, int jobs) {
  require(n == 8 || n == 16, "Galliard family supports n in {8, 16}");
  FamilyReport r;
  r.family = FamilyKind::Galliard;
  r.n = n;
  r.parameter = n / 4 - 1;
  const auto raw = galliard_raw(n);
  r.raw_count = raw.size();

  std::set<Word> canon;
  for (Word f : raw) canon.insert(y_canonical(VertexWord(f, n)).bits());
  const std::vector<Word> words(canon.begin(), canon.end());
  r.members = to_vertices(words, n);
  r.size = words.size();
  r.independent = !kernels::parallel::adjacent_pair(words, n, jobs).has_value();

  std::vector<Word> others;
  for (Word v : y_vertex_words(n))
    if (!canon.count(v)) others.push_back(v);
  r.maximal = !kernels::parallel::unblocked_vertex(others, words, n, jobs).has_value();
  r.meets_ratio_bound = Rational(static_cast<unsigned long>(r.size)) == ratio_bound(GraphKind::y(n)).bound;
  return r;
}

BigInt s_family_size(int n) {
  require(n % 4 == 0 && n >= 4, "S_n needs 4 | n");
  const int m = n / 4;
  BigInt total = 0;
  for (int j = 0; j < m; ++j)
    if (j % 2 != m % 2) total += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j));
  return total;
}

FamilyReport s_family(int n, int jobs) {
  require(n % 4 == 0 && n >= 4 && n <= 24, "S_n supports 4 | n, n <= 24");
  FamilyReport r;
  r.family = FamilyKind::OddSmall;
  r.n = n;
  const int m = n / 4;
  r.parameter = m;
  std::vector<Word> words;
  for (int w = 0; w < m; ++w) {
    if (w % 2 == m % 2) continue;
    auto layer = words_of_weight(n, w);
    words.insert(words.end(), layer.begin(), layer.end());
  }
  std::sort(words.begin(), words.end());
  r.raw_count = words.size();
  r.size = words.size();
  r.members = to_vertices(words, n);
  r.independent = !kernels::parallel::adjacent_pair(words, n, jobs).has_value();
  // Measured on the 4x lift in Omega_n, where complements and the other parity class are accounted for.
  if (n <= 16 && r.independent) {
    const auto lifted = to_words(lift_to_omega(r.members, n, jobs).vertices);
    const std::set<Word> in(lifted.begin(), lifted.end());
    std::vector<Word> others;
    for (Word v = 0; v <= full_mask(n); ++v)
      if (!in.count(v)) others.push_back(v);
    r.maximal = !kernels::parallel::unblocked_vertex(others, lifted, n, jobs).has_value();
  }
  r.meets_ratio_bound = Rational(4 * static_cast<unsigned long>(r.size)) == ratio_bound(GraphKind::omega(n)).bound;
  return r;
}

TransformCheck symdiff_transform_check(int n) {
  require(n == 8 || n == 16, "transform check supports n in {8, 16}");
  const int c = n / 4 - 1;
  TransformCheck t;
  t.n = n;
  std::set<Word> image;
  for (Word f : galliard_raw(n)) image.insert(f ^ full_mask(c));
  const auto target = odd_small(n, c);
  t.image_size = image.size();
  t.target_size = target.size();
  const std::set<Word> want(target.begin(), target.end());
  t.equal = image == want;
  if (!t.equal) {
    for (Word w : image)
      if (!want.count(w)) {
        t.witness = VertexWord(w, n);
        break;
      }
    if (!t.witness)
      for (Word w : want)
        if (!image.count(w)) {
          t.witness = VertexWord(w, n);
          break;
        }
  }
  return t;
}

IndSetCertificate lift_to_omega(std::span<const VertexWord> set, int n, int jobs) {
  require(n % 4 == 0 && n >= 4, "lifting needs 4 | n");
  IndSetCertificate cert;
  cert.kind = GraphKind::omega(n);
  if (set.empty()) return cert;

  const bool parity = set.front().even();
  std::set<Word> members;
  for (const auto& x : set) {
    require(x.n() == n, "vertex dimension mismatch");
    require(x.even() == parity, "lift input must lie in one parity class");
    members.insert(x.bits());
  }
  for (Word x : members) require(!members.count(x ^ full_mask(n)), "lift input contains a complementary pair");

  std::vector<Word> out;
  out.reserve(4 * members.size());
  constexpr Word flip = 1;  // first-coordinate sign change: an odd translation
  for (Word x : members) {
    const Word neg = x ^ full_mask(n);
    out.insert(out.end(), {x, neg, x ^ flip, neg ^ flip});
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw std::runtime_error("lift produced duplicates");
  if (kernels::parallel::adjacent_pair(out, n, jobs)) throw std::runtime_error("lift is not independent in Omega_n");

  cert.vertices = to_vertices(out, n);
  cert.meets_ratio_bound = Rational(static_cast<unsigned long>(out.size())) == ratio_bound(cert.kind).bound;
  cert.eigenspace_member = n <= 16 && equality_condition_check(cert.kind, cert.vertices, jobs);
  return cert;
}

IndSetCertificate lift_to_omega(const FamilyReport& report, int jobs) {
  return lift_to_omega(report.members, report.n, jobs);
}

IndSetCertificate lift_to_omega(const IndSetCertificate& cert, int jobs) {
  require(cert.kind.family == GraphFamily::Y, "lift expects a Y_n certificate");
  return lift_to_omega(cert.vertices, cert.kind.n, jobs);
}

M2kReport m2k_bound(int n) {
  require(n >= 2 && n % 2 == 0 && n <= kMaxDimension, "m2k bound needs even n");
  M2kReport r;
  r.n = n;
  int m = n;
  while (m % 2 == 0) {
    m /= 2;
    ++r.k;
  }
  r.m = m;
  r.m2k_bound = pow2(static_cast<unsigned long>(n - r.k));
  if (n % 4 == 0) {
    r.ratio_bound = make_rational(pow2(static_cast<unsigned long>(n)), BigInt(n));
    r.factor = Rational(r.m2k_bound) / *r.ratio_bound;
    r.factor->canonicalize();
  }
  r.tight = r.k == 1;
  return r;
}

}  // namespace ortho
