#include "ortho/certificate.hpp"

#include <algorithm>
#include <set>

namespace ortho {

namespace {

Json opt_rational(const std::optional<Rational>& q) { return q ? Json(q->get_str()) : Json(nullptr); }

template <class T>
Json opt_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json vertex_list(const std::vector<VertexWord>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(encode_vertex(v));
  return a;
}

std::string rep_name(Representative r) { return r == Representative::BitZeroClear ? "bit0_clear" : "bit0_set"; }

Representative parse_rep(const std::string& s) {
  if (s == "bit0_clear") return Representative::BitZeroClear;
  if (s == "bit0_set") return Representative::BitZeroSet;
  throw SchemaError("unknown representative: " + s);
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field: ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("bad field ") + key + ": " + e.what());
  }
}

const Json& sub(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field: ") + key);
  return j.at(key);
}

GraphKind kind_from_json(const Json& j) {
  const auto fam = field<std::string>(j, "family");
  const int n = field<int>(j, "n");
  try {
    switch (parse_family(fam)) {
      case GraphFamily::Omega: return GraphKind::omega(n);
      case GraphFamily::Y: return GraphKind::y(n);
      case GraphFamily::Psi: return GraphKind::psi(n);
    }
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("bad graph kind");
}

std::vector<VertexWord> vertices_from_json(const Json& j, int n) {
  if (!j.is_array()) throw SchemaError("vertex list must be an array");
  std::vector<VertexWord> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(decode_vertex(x, n));
  return out;
}

// Records every leaf where `want` (recomputed) and `got` (stored) disagree.
void diff_json(const std::string& path, const Json& want, const Json& got, std::vector<std::string>& diffs) {
  constexpr std::size_t kMaxDiffs = 32;
  if (diffs.size() >= kMaxDiffs) return;
  if (want.is_object() && got.is_object()) {
    std::set<std::string> keys;
    for (auto it = want.begin(); it != want.end(); ++it) keys.insert(it.key());
    for (auto it = got.begin(); it != got.end(); ++it) keys.insert(it.key());
    for (const auto& k : keys) {
      const std::string p = path + "." + k;
      if (!want.contains(k))
        diffs.push_back(p + ": unexpected field");
      else if (!got.contains(k))
        diffs.push_back(p + ": missing field");
      else
        diff_json(p, want.at(k), got.at(k), diffs);
    }
    return;
  }
  if (want.is_array() && got.is_array() && want.size() == got.size()) {
    for (std::size_t i = 0; i < want.size(); ++i) diff_json(path + "[" + std::to_string(i) + "]", want[i], got[i], diffs);
    return;
  }
  if (want != got) diffs.push_back(path + ": stored " + got.dump() + ", recomputed " + want.dump());
}

Json indset_summary(const IndSetCertificate& c, bool independent) {
  return Json{{"size", c.size()},
              {"independent", independent},
              {"meets_ratio_bound", c.meets_ratio_bound},
              {"eigenspace_member", c.eigenspace_member}};
}

bool strictly_decreasing_from_two(const std::vector<PsiRow>& rows) {
  for (std::size_t j = 3; j < rows.size(); ++j)
    if (!(rows[j].ratio && rows[j - 1].ratio && *rows[j].ratio < *rows[j - 1].ratio)) return false;
  return true;
}

}  // namespace

std::string to_string(EnvelopeKind k) {
  switch (k) {
    case EnvelopeKind::Bound: return "bound";
    case EnvelopeKind::Spectrum: return "spectrum";
    case EnvelopeKind::IndSet: return "indset";
    case EnvelopeKind::Clique: return "clique";
    case EnvelopeKind::Colouring: return "colouring";
    case EnvelopeKind::Search: return "search";
    case EnvelopeKind::Family: return "family";
    case EnvelopeKind::PsiTable: return "psi_table";
    case EnvelopeKind::Status: return "status";
  }
  return "?";
}

EnvelopeKind parse_envelope_kind(const std::string& s) {
  for (auto k : {EnvelopeKind::Bound, EnvelopeKind::Spectrum, EnvelopeKind::IndSet, EnvelopeKind::Clique,
                 EnvelopeKind::Colouring, EnvelopeKind::Search, EnvelopeKind::Family, EnvelopeKind::PsiTable,
                 EnvelopeKind::Status})
    if (to_string(k) == s) return k;
  throw SchemaError("unknown certificate kind: " + s);
}

std::string canonical_dump(const Json& j) { return j.dump(); }

std::string encode_vertex(const VertexWord& v) {
  static const char* digits = "0123456789abcdef";
  Word w = v.bits();
  if (w == 0) return "0";
  std::string s;
  for (; w != 0; w >>= 4) s.insert(s.begin(), digits[w & 15U]);
  return s;
}

VertexWord decode_vertex(const Json& j, int n) {
  if (!j.is_string()) throw SchemaError("vertex must be a hex string");
  const auto s = j.get<std::string>();
  if (s.empty() || s.size() > 16) throw SchemaError("bad vertex encoding: " + s);
  Word w = 0;
  for (char ch : s) {
    int d;
    if (ch >= '0' && ch <= '9')
      d = ch - '0';
    else if (ch >= 'a' && ch <= 'f')
      d = ch - 'a' + 10;
    else
      throw SchemaError("bad vertex encoding: " + s);
    w = (w << 4) | static_cast<Word>(d);
  }
  return VertexWord(w, n);  // invalid_argument when bits exceed n: a content error, not a schema error
}

Json to_json(const GraphKind& k) { return Json{{"family", to_string(k.family)}, {"n", k.n}}; }

Json to_json(const BoundReport& r) {
  return Json{{"kind", to_json(r.kind)},
              {"v", r.v.get_str()},
              {"d", r.d.get_str()},
              {"tau", r.tau.get_str()},
              {"bound", r.bound.get_str()},
              {"is_integer", r.is_integer},
              {"simplifies_to_power_form", r.simplifies_to_power_form}};
}

Json to_json(const EigencheckReport& r) {
  Json j{{"n", r.n},
         {"columns_checked", r.columns_checked},
         {"max_defect", r.max_defect.get_str()},
         {"witness_column", opt_value(r.witness_column)},
         {"column_rank", opt_value(r.column_rank)},
         {"passed", r.passed()},
         {"ntn", nullptr}};
  if (r.ntn) {
    const auto& s = *r.ntn;
    j["ntn"] = Json{{"coefficients", {s.c0.get_str(), s.c1.get_str(), s.c2.get_str()}},
                    {"eigenvalues", {s.lambda1.get_str(), s.lambda2.get_str(), s.lambda0.get_str()}},
                    {"multiplicities", {s.mult1, s.mult2, s.mult0}},
                    {"expected_multiplicities", {s.expected1, s.expected2, s.expected0}},
                    {"trace", s.trace.get_str()},
                    {"gram_matches", s.gram_matches},
                    {"multiplicities_match", s.multiplicities_match},
                    {"trace_consistent", s.trace_consistent},
                    {"y_rows_half_gram", s.y_rows_half_gram}};
  }
  return j;
}

Json to_json(const GramReport& r) {
  return Json{{"n", r.n},
              {"n_rows", r.n_rows},
              {"n_bt_all_minus_one", r.n_bt_all_minus_one},
              {"nhat_bhat_t_zero", r.nhat_bhat_t_zero},
              {"b_bt_stated", r.b_bt_stated},
              {"b_bt_diagonal", r.b_bt_diagonal.get_str()},
              {"b_bt_off_diagonal", r.b_bt_off_diagonal.get_str()},
              {"b_bt_uniform", r.b_bt_uniform},
              {"n_ones_stated", r.n_ones_stated},
              {"n_ones_value", opt_rational(r.n_ones_value)},
              {"witnesses", r.witnesses}};
}

Json to_json(const IndSetCertificate& c) {
  return Json{{"kind", to_json(c.kind)},
              {"vertices", vertex_list(c.vertices)},
              {"size", c.size()},
              {"base", c.base ? Json(encode_vertex(*c.base)) : Json(nullptr)},
              {"contains_base", c.contains_base},
              {"independent", true},
              {"meets_ratio_bound", c.meets_ratio_bound},
              {"eigenspace_member", c.eigenspace_member}};
}

Json to_json(const CliqueCertificate& c) {
  return Json{{"n", c.n},
              {"vertices", vertex_list(c.vertices)},
              {"size", c.size()},
              {"pairwise_orthogonal", check_clique(c)},
              {"hadamard", check_clique(c) && c.size() == static_cast<std::size_t>(c.n)}};
}

Json to_json(const ColouringCertificate& c) {
  Json classes = Json::array();
  for (const auto& cls : c.classes) classes.push_back(vertex_list(cls));
  const auto chk = verify_colouring(c);
  return Json{{"kind", to_json(c.kind)},
              {"classes", classes},
              {"palette_size", c.palette_size()},
              {"partition", chk.partition},
              {"proper", chk.proper}};
}

Json to_json(const SearchOutcome& s) {
  Json certs = Json::array();
  for (std::size_t i = 0; i < s.certificates.size(); ++i)
    certs.push_back(Json{{"x", encode_vertex(VertexWord(s.certificate_x[i], 64))},
                         {"certificate", to_json(s.certificates[i])}});
  return Json{{"n", s.n},
              {"base", encode_vertex(s.base)},
              {"representative", rep_name(s.rep)},
              {"candidates_total", s.candidates_total},
              {"count_01_valued", s.count_01_valued},
              {"count_correct_weight", s.count_correct_weight},
              {"count_independent", s.count_independent},
              {"count_contains_base", s.count_contains_base},
              {"rank", s.rank},
              {"certificates", certs},
              {"wall_time", s.wall_time}};
}

Json to_json(const FamilyReport& f) {
  return Json{{"family", to_string(f.family)},
              {"n", f.n},
              {"parameter", f.parameter},
              {"raw_count", f.raw_count},
              {"size", f.size},
              {"members", f.members.size() <= kMemberListLimit ? vertex_list(f.members) : Json(nullptr)},
              {"independent", f.independent},
              {"maximal", opt_value(f.maximal)},
              {"meets_ratio_bound", f.meets_ratio_bound}};
}

Json to_json(const TransformCheck& t) {
  return Json{{"n", t.n},
              {"equal", t.equal},
              {"image_size", t.image_size},
              {"target_size", t.target_size},
              {"witness", t.witness ? Json(encode_vertex(*t.witness)) : Json(nullptr)}};
}

Json to_json(const M2kReport& m) {
  return Json{{"n", m.n},
              {"k", m.k},
              {"m", m.m.get_str()},
              {"m2k_bound", m.m2k_bound.get_str()},
              {"ratio_bound", opt_rational(m.ratio_bound)},
              {"factor", opt_rational(m.factor)},
              {"tight", m.tight}};
}

Json to_json(const std::vector<PsiRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows)
    a.push_back(Json{{"j", r.j},
                     {"n", r.n.get_str()},
                     {"vertex_count", r.vertex_count.get_str()},
                     {"psi_edges", r.psi_edges.get_str()},
                     {"omega_edges", r.omega_edges.get_str()},
                     {"ratio", opt_rational(r.ratio)}});
  return a;
}

Json to_json(const ChiStatus& s) {
  return Json{{"n", s.n},
              {"verdict", to_string(s.verdict)},
              {"chromatic_number", opt_value(s.chromatic_number)},
              {"justification", s.justification},
              {"certificate", s.certificate ? to_json(*s.certificate) : Json(nullptr)}};
}

Json to_json(const Envelope& e) {
  return Json{{"schema_version", e.schema_version},
              {"kind", to_string(e.kind)},
              {"n", e.n},
              {"produced_by", e.produced_by},
              {"payload", e.payload}};
}

Envelope envelope_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("certificate must be a JSON object");
  Envelope e;
  e.schema_version = field<int>(j, "schema_version");
  if (e.schema_version != kSchemaVersion) throw SchemaError("unsupported schema_version " + std::to_string(e.schema_version));
  e.kind = parse_envelope_kind(field<std::string>(j, "kind"));
  e.n = field<int>(j, "n");
  e.produced_by = field<std::string>(j, "produced_by");
  e.payload = sub(j, "payload");
  if (!e.payload.is_object()) throw SchemaError("payload must be an object");
  return e;
}

Envelope make_envelope(EnvelopeKind kind, int n, Json payload) {
  Envelope e;
  e.kind = kind;
  e.n = n;
  e.payload = std::move(payload);
  return e;
}

Json spectrum_payload(int n, int jobs) {
  if (n < 4 || n % 4 != 0 || n > kMaxDimension) throw std::invalid_argument("spectrum needs 4 | n, n <= 64");
  Json j{{"n", n},
         {"least_eigenvalue", least_eigenvalue(n).get_str()},
         {"bound_omega", to_json(ratio_bound(GraphKind::omega(n)))},
         {"bound_y", to_json(ratio_bound(GraphKind::y(n)))},
         {"eigenspace", nullptr},
         {"gram", nullptr},
         {"ntn", nullptr}};
  if (n == 4 || n == 8) j["eigenspace"] = to_json(verify_tau_eigenspace(n, jobs));
  if (n == 8 || n == 12 || n == 16) {
    j["gram"] = to_json(gram_identities(n, jobs));
    j["ntn"] = to_json(ntn_spectrum(n, jobs));
  }
  return j;
}

Json family_payload(FamilyKind family, int n, bool lift, int jobs) {
  const FamilyReport r = family == FamilyKind::Galliard ? galliard_family(n, jobs) : s_family(n, jobs);
  Json j{{"report", to_json(r)},
         {"transform", nullptr},
         {"lift", nullptr},
         {"closed_form_size", nullptr},
         {"lifted_size", 4 * r.size}};
  if (family == FamilyKind::Galliard) j["transform"] = to_json(symdiff_transform_check(n));
  if (family == FamilyKind::OddSmall) j["closed_form_size"] = s_family_size(n).get_str();
  if (lift && r.independent && n <= 16) j["lift"] = indset_summary(lift_to_omega(r, jobs), true);
  return j;
}

Json psi_payload(int k) {
  const auto rows = psi_stats(k);
  return Json{{"k", k}, {"rows", to_json(rows)}, {"strictly_decreasing_from_j2", strictly_decreasing_from_two(rows)}};
}

Json status_payload(int n, SearchCache& cache) {
  Json j = to_json(chi_status(n, cache));
  if (n % 4 == 0 && n >= 2) j["m2k"] = to_json(m2k_bound(n));
  return j;
}

namespace {

void verify_indset(const Json& p, VerifyResult& res, int jobs, const std::string& path) {
  const GraphKind kind = kind_from_json(sub(p, "kind"));
  const int n = kind.n;
  Json want = p;
  std::vector<VertexWord> vs;
  try {
    vs = vertices_from_json(sub(p, "vertices"), n);
  } catch (const std::invalid_argument& e) {
    res.diffs.push_back(path + ".vertices: " + e.what());
    return;
  }
  std::sort(vs.begin(), vs.end());
  want["size"] = vs.size();
  bool independent = false;
  try {
    independent = check_independent(vs, kind, jobs);
  } catch (const std::invalid_argument& e) {
    res.diffs.push_back(path + ".vertices: " + e.what());
  }
  want["independent"] = independent;
  bool meets = false;
  if ((kind.family == GraphFamily::Omega || kind.family == GraphFamily::Y) && n % 4 == 0)
    meets = Rational(static_cast<unsigned long>(vs.size())) == ratio_bound(kind).bound;
  want["meets_ratio_bound"] = meets;
  bool member = false;
  if (independent && n % 4 == 0 && n <= 16 && kind.family != GraphFamily::Psi) {
    try {
      member = equality_condition_check(kind, vs, jobs);
    } catch (const std::invalid_argument& e) {
      res.diffs.push_back(path + ".vertices: " + e.what());
    }
  }
  want["eigenspace_member"] = member;
  const Json& base = sub(p, "base");
  if (!base.is_null()) {
    try {
      const VertexWord b = decode_vertex(base, n);
      want["contains_base"] = std::binary_search(vs.begin(), vs.end(), b);
    } catch (const std::invalid_argument& e) {
      res.diffs.push_back(path + ".base: " + e.what());
    }
  } else {
    want["contains_base"] = false;
  }
  diff_json(path, want, p, res.diffs);
}

void verify_colouring_payload(const Json& p, VerifyResult& res, int jobs, const std::string& path) {
  ColouringCertificate c;
  c.kind = kind_from_json(sub(p, "kind"));
  const Json& classes = sub(p, "classes");
  if (!classes.is_array()) throw SchemaError("classes must be an array");
  try {
    for (const auto& cls : classes) c.classes.push_back(vertices_from_json(cls, c.kind.n));
  } catch (const std::invalid_argument& e) {
    res.diffs.push_back(path + ".classes: " + e.what());
    return;
  }
  const auto chk = verify_colouring(c, jobs);
  Json want = p;
  want["palette_size"] = c.palette_size();
  want["partition"] = chk.partition;
  want["proper"] = chk.proper;
  diff_json(path, want, p, res.diffs);
  if (!chk.holds()) res.diffs.push_back(path + ": not a proper colouring of " + to_string(c.kind));
}

}  // namespace

VerifyResult verify(const Envelope& e, int jobs) {
  VerifyResult res;
  const Json& p = e.payload;
  try {
    switch (e.kind) {
      case EnvelopeKind::Bound: {
        const GraphKind kind = kind_from_json(sub(p, "kind"));
        diff_json("payload", to_json(ratio_bound(kind)), p, res.diffs);
        break;
      }
      case EnvelopeKind::Spectrum:
        diff_json("payload", spectrum_payload(field<int>(p, "n"), jobs), p, res.diffs);
        break;
      case EnvelopeKind::IndSet:
        verify_indset(p, res, jobs, "payload");
        break;
      case EnvelopeKind::Clique: {
        CliqueCertificate c;
        c.n = field<int>(p, "n");
        try {
          c.vertices = vertices_from_json(sub(p, "vertices"), c.n);
        } catch (const std::invalid_argument& ex) {
          res.diffs.push_back(std::string("payload.vertices: ") + ex.what());
          break;
        }
        diff_json("payload", to_json(c), p, res.diffs);
        break;
      }
      case EnvelopeKind::Colouring:
        verify_colouring_payload(p, res, jobs, "payload");
        break;
      case EnvelopeKind::Search: {
        const int n = field<int>(p, "n");
        SearchOptions o;
        o.rep = parse_rep(field<std::string>(p, "representative"));
        o.jobs = jobs;
        try {
          const VertexWord base = decode_vertex(sub(p, "base"), n);
          if (!is_y_canonical(base, o.rep)) {
            res.diffs.push_back("payload.base: not a canonical Y vertex");
            break;
          }
          o.base = base.bits();
        } catch (const std::invalid_argument& ex) {
          res.diffs.push_back(std::string("payload.base: ") + ex.what());
          break;
        }
        if (!search_supported(n)) {
          res.diffs.push_back("payload.n: unsupported search size");
          break;
        }
        const Json& certs = sub(p, "certificates");
        if (!certs.is_array()) throw SchemaError("certificates must be an array");
        for (std::size_t i = 0; i < certs.size(); ++i)
          verify_indset(sub(certs[i], "certificate"), res, jobs, "payload.certificates[" + std::to_string(i) + "].certificate");
        Json want = to_json(enumerate(n, o));
        Json got = p;
        want.erase("wall_time");
        got.erase("wall_time");
        diff_json("payload", want, got, res.diffs);
        break;
      }
      case EnvelopeKind::Family: {
        const Json& report = sub(p, "report");
        const FamilyKind fam = parse_family_kind(field<std::string>(report, "family"));
        const int n = field<int>(report, "n");
        const bool lift = !sub(p, "lift").is_null();
        diff_json("payload", family_payload(fam, n, lift, jobs), p, res.diffs);
        const Json& members = sub(report, "members");
        if (!members.is_null()) {
          try {
            const auto vs = vertices_from_json(members, n);
            const GraphKind kind = fam == FamilyKind::Galliard ? GraphKind::y(n) : GraphKind::omega(n);
            if (field<bool>(report, "independent") && !check_independent(vs, kind, jobs))
              res.diffs.push_back("payload.report.members: stored members are not independent");
          } catch (const std::invalid_argument& ex) {
            res.diffs.push_back(std::string("payload.report.members: ") + ex.what());
          }
        }
        break;
      }
      case EnvelopeKind::PsiTable:
        diff_json("payload", psi_payload(field<int>(p, "k")), p, res.diffs);
        break;
      case EnvelopeKind::Status: {
        SearchCache cache(jobs);
        const int n = field<int>(p, "n");
        Json want = status_payload(n, cache);
        // The certificate is checked on its own below; any valid n-colouring is acceptable.
        Json got = p;
        want.erase("certificate");
        got.erase("certificate");
        diff_json("payload", want, got, res.diffs);
        const Json& cert = sub(p, "certificate");
        if (!cert.is_null()) {
          verify_colouring_payload(cert, res, jobs, "payload.certificate");
          if (field<std::size_t>(cert, "palette_size") != static_cast<std::size_t>(n))
            res.diffs.push_back("payload.certificate.palette_size: expected " + std::to_string(n));
        }
        break;
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw SchemaError(ex.what());
  }
  if (p.contains("n") && p.at("n").is_number_integer() && e.kind != EnvelopeKind::PsiTable &&
      p.at("n").get<int>() != e.n)
    res.diffs.push_back("envelope n does not match payload n");
  res.ok = res.diffs.empty();
  return res;
}

}  // namespace ortho
