#pragma once

// Certificate envelopes: canonical JSON (sorted keys, compact, lowercase hex
// vertices, big integers and rationals as decimal strings) and an independent
// verifier that recomputes every claim from the stored data.

#include "ortho/colouring.hpp"
#include "ortho/families.hpp"
#include "ortho/maxind_search.hpp"
#include "ortho/spectral.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace ortho {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "ortho-lab 1.0.0";

enum class EnvelopeKind { Bound, Spectrum, IndSet, Clique, Colouring, Search, Family, PsiTable, Status };
std::string to_string(EnvelopeKind k);
EnvelopeKind parse_envelope_kind(const std::string& s);

/// Malformed envelope: wrong keys, wrong types, unparseable values.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Envelope {
  int schema_version = kSchemaVersion;
  EnvelopeKind kind = EnvelopeKind::Bound;
  int n = 0;
  std::string produced_by = kToolVersion;
  Json payload;
};

Json to_json(const Envelope& e);
Envelope envelope_from_json(const Json& j);

/// Compact dump with sorted keys.
std::string canonical_dump(const Json& j);

std::string encode_vertex(const VertexWord& v);
VertexWord decode_vertex(const Json& j, int n);

Json to_json(const GraphKind& k);
Json to_json(const BoundReport& r);
Json to_json(const EigencheckReport& r);
Json to_json(const GramReport& r);
Json to_json(const IndSetCertificate& c);
Json to_json(const CliqueCertificate& c);
Json to_json(const ColouringCertificate& c);
Json to_json(const SearchOutcome& s);
Json to_json(const FamilyReport& f);
Json to_json(const TransformCheck& t);
Json to_json(const M2kReport& m);
Json to_json(const std::vector<PsiRow>& rows);
Json to_json(const ChiStatus& s);

Envelope make_envelope(EnvelopeKind kind, int n, Json payload);

// Payload builders shared by the CLI and the verifier.
inline constexpr std::size_t kMemberListLimit = 10000;

Json spectrum_payload(int n, int jobs = 0);
Json family_payload(FamilyKind family, int n, bool lift, int jobs = 0);
Json psi_payload(int k);
Json status_payload(int n, SearchCache& cache);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> diffs;
};

/// Recomputes everything in the payload; throws SchemaError on malformed input.
VerifyResult verify(const Envelope& e, int jobs = 0);

}  // namespace ortho
