#include "ortho/certificate.hpp"

#include <doctest.h>

using namespace ortho;

namespace {

Envelope round_trip(const Envelope& e) { return envelope_from_json(Json::parse(canonical_dump(to_json(e)))); }

}  // namespace

TEST_CASE("vertex encoding") {
  CHECK(encode_vertex(VertexWord(0, 8)) == "0");
  CHECK(encode_vertex(VertexWord(0xab, 8)) == "ab");
  CHECK(decode_vertex(Json("ab"), 8) == VertexWord(0xab, 8));
  CHECK_THROWS_AS(decode_vertex(Json("0xab"), 8), SchemaError);
  CHECK_THROWS_AS(decode_vertex(Json("AB"), 8), SchemaError);
  CHECK_THROWS_AS(decode_vertex(Json(171), 8), SchemaError);
  CHECK_THROWS_AS(decode_vertex(Json("1ff"), 8), std::invalid_argument);
}

TEST_CASE("canonical dumps are stable under a parse round trip") {
  SearchCache cache;
  const std::vector<Envelope> es{
      make_envelope(EnvelopeKind::Bound, 12, to_json(ratio_bound(GraphKind::omega(12)))),
      make_envelope(EnvelopeKind::Search, 8, to_json(enumerate(8))),
      make_envelope(EnvelopeKind::Colouring, 8, to_json(omega_colouring(8, cache))),
      make_envelope(EnvelopeKind::Status, 32, status_payload(32, cache)),
      make_envelope(EnvelopeKind::PsiTable, 16, psi_payload(4)),
  };
  for (const auto& e : es) {
    const std::string a = canonical_dump(to_json(e));
    CHECK(canonical_dump(to_json(round_trip(e))) == a);
  }
}

TEST_CASE("verify accepts what the library produces") {
  SearchCache cache;
  const std::vector<Envelope> es{
      make_envelope(EnvelopeKind::Bound, 8, to_json(ratio_bound(GraphKind::y(8)))),
      make_envelope(EnvelopeKind::Spectrum, 8, spectrum_payload(8)),
      make_envelope(EnvelopeKind::IndSet, 8, to_json(enumerate(8).certificates.front())),
      make_envelope(EnvelopeKind::Clique, 16, to_json(sylvester_clique(4))),
      make_envelope(EnvelopeKind::Colouring, 4, to_json(psi_colouring(2))),
      make_envelope(EnvelopeKind::Search, 8, to_json(enumerate(8))),
      make_envelope(EnvelopeKind::Family, 8, family_payload(FamilyKind::Galliard, 8, true)),
      make_envelope(EnvelopeKind::Family, 12, family_payload(FamilyKind::OddSmall, 12, false)),
      make_envelope(EnvelopeKind::PsiTable, 64, psi_payload(6)),
      make_envelope(EnvelopeKind::Status, 8, status_payload(8, cache)),
      make_envelope(EnvelopeKind::Status, 20, status_payload(20, cache)),
  };
  for (const auto& e : es) {
    CAPTURE(to_string(e.kind));
    const auto r = verify(round_trip(e));
    CHECK(r.ok);
    CHECK(r.diffs.empty());
  }
}

TEST_CASE("verify rejects tampered content") {
  SearchCache cache;
  auto bound = make_envelope(EnvelopeKind::Bound, 8, to_json(ratio_bound(GraphKind::omega(8))));
  bound.payload["bound"] = "33";
  CHECK_FALSE(verify(bound).ok);

  auto indset = make_envelope(EnvelopeKind::IndSet, 8, to_json(enumerate(8).certificates.front()));
  indset.payload["vertices"][1] = "1e";  // adjacent to the base vertex 0
  CHECK_FALSE(verify(indset).ok);

  auto colouring = make_envelope(EnvelopeKind::Colouring, 8, to_json(omega_colouring(8, cache)));
  auto& classes = colouring.payload["classes"];
  for (const auto& v : classes[7]) classes[6].push_back(v);
  classes.erase(7);
  colouring.payload["palette_size"] = 7;
  const auto r = verify(colouring);
  CHECK_FALSE(r.ok);

  auto status = make_envelope(EnvelopeKind::Status, 16, status_payload(16, cache));
  status.payload["verdict"] = "EqualsN";
  CHECK_FALSE(verify(status).ok);

  auto psi = make_envelope(EnvelopeKind::PsiTable, 16, psi_payload(4));
  psi.payload["rows"][3]["psi_edges"] = "2817";
  CHECK_FALSE(verify(psi).ok);
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(envelope_from_json(Json::parse(R"({"kind":"bound"})")), SchemaError);
  CHECK_THROWS_AS(envelope_from_json(Json::parse(R"({"kind":"nope","n":4,"payload":{},"produced_by":"x","schema_version":1})")),
                  SchemaError);
  CHECK_THROWS_AS(envelope_from_json(Json::parse(R"({"kind":"bound","n":4,"payload":{},"produced_by":"x","schema_version":2})")),
                  SchemaError);
  auto e = make_envelope(EnvelopeKind::Bound, 8, Json{{"kind", "omega"}});
  CHECK_THROWS_AS(verify(e), SchemaError);
}
