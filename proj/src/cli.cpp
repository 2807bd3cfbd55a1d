#include "ortho/cli.hpp"

#include "ortho/certificate.hpp"
#include "ortho/kernels.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace ortho::cli {

namespace {

int emit(const Envelope& e, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const std::string text = canonical_dump(to_json(e)) + "\n";
  if (out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    err << "cannot write " << out_path << "\n";
    return kExitUsage;
  }
  f << text;
  return kExitOk;
}

int log2_exact(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonality graph toolkit: bounds, searches, colourings and certificates", "ortho-lab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  int jobs = 0;
  int n = 0;
  app.add_option("--out", out_path, "Write the certificate to FILE instead of stdout");
  app.add_option("--jobs", jobs, "Worker threads (default: ORTHO_LAB_JOBS or all cores)")->check(CLI::PositiveNumber);

  auto* bound = app.add_subcommand("bound", "Ratio bound for Omega_n or Y_n");
  std::string bound_kind = "omega";
  bound->add_option("--n", n, "Dimension (multiple of 4)")->required();
  bound->add_option("--kind", bound_kind, "omega or y")->check(CLI::IsMember({"omega", "y"}));

  auto* spectrum = app.add_subcommand("spectrum", "Eigenspace, Gram-identity and N^T N spectrum checks");
  spectrum->add_option("--n", n, "Dimension (multiple of 4)")->required();

  auto* search = app.add_subcommand("search", "Enumerate tight independent sets of Y_n");
  std::string base_hex;
  std::string rep_name = "bit0_clear";
  search->add_option("--n", n, "Dimension: 4, 8, 12 or 16")->required();
  search->add_option("--base", base_hex, "Base vertex as lowercase hex (canonical Y vertex)");
  search->add_option("--rep", rep_name, "Y representative convention")->check(CLI::IsMember({"bit0_clear", "bit0_set"}));

  auto* colour = app.add_subcommand("colour", "Colouring or clique certificate");
  std::string method = "cayley";
  bool clique_only = false;
  colour->add_option("--n", n, "Dimension")->required();
  colour->add_option("--method", method, "cayley (Omega_n) or psi (Psi_n)")->check(CLI::IsMember({"cayley", "psi"}));
  colour->add_flag("--clique", clique_only, "Emit the Sylvester clique instead");

  auto* families = app.add_subcommand("families", "Explicit independent-set families");
  std::string family = "galliard";
  bool lift = false;
  families->add_option("--n", n, "Dimension")->required();
  families->add_option("--family", family, "galliard or odd-small")->check(CLI::IsMember({"galliard", "odd-small"}));
  families->add_flag("--lift", lift, "Also lift the family to Omega_n and check it");

  auto* psi = app.add_subcommand("psi", "Edge counts of the recursive skeleton Psi_n");
  int k = 0;
  psi->add_option("--k", k, "Largest exponent, n = 2^k")->required()->check(CLI::Range(0, 8));

  auto* status = app.add_subcommand("status", "Is chi(Omega_n) equal to n?");
  status->add_option("--n", n, "Dimension")->required()->check(CLI::Range(1, 64));

  auto* verify_cmd = app.add_subcommand("verify", "Recompute every claim in a stored certificate");
  std::string cert_path;
  verify_cmd->add_option("file", cert_path, "Certificate JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (jobs == 0) jobs = kernels::default_jobs();

  try {
    if (*bound) {
      const GraphKind kind = bound_kind == "y" ? GraphKind::y(n) : GraphKind::omega(n);
      return emit(make_envelope(EnvelopeKind::Bound, n, to_json(ratio_bound(kind))), out_path, out, err);
    }
    if (*spectrum) return emit(make_envelope(EnvelopeKind::Spectrum, n, spectrum_payload(n, jobs)), out_path, out, err);
    if (*search) {
      SearchOptions o;
      o.jobs = jobs;
      o.rep = rep_name == "bit0_set" ? Representative::BitZeroSet : Representative::BitZeroClear;
      if (!base_hex.empty()) o.base = decode_vertex(Json(base_hex), n).bits();
      const SearchOutcome s = enumerate(n, o);
      err << "search n=" << n << ": " << s.count_independent << " tight independent sets from "
          << s.candidates_total << " candidates in " << s.wall_time << " s\n";
      return emit(make_envelope(EnvelopeKind::Search, n, to_json(s)), out_path, out, err);
    }
    if (*colour) {
      if (clique_only) {
        if (!is_power_of_two(n) || n > 64) throw std::invalid_argument("Sylvester cliques need n a power of two");
        return emit(make_envelope(EnvelopeKind::Clique, n, to_json(sylvester_clique(log2_exact(n)))), out_path, out,
                    err);
      }
      if (method == "psi") {
        if (!is_power_of_two(n) || n > 16) throw std::invalid_argument("psi colouring needs n a power of two, n <= 16");
        return emit(make_envelope(EnvelopeKind::Colouring, n, to_json(psi_colouring(log2_exact(n)))), out_path, out,
                    err);
      }
      if (!(n == 1 || n == 2 || n == 4 || n == 8)) {
        err << "Omega_" << n << " has no " << n << "-colouring (see `status --n " << n << "`)\n";
        return kExitVerifyFailed;
      }
      SearchCache cache(jobs);
      return emit(make_envelope(EnvelopeKind::Colouring, n, to_json(omega_colouring(n, cache))), out_path, out, err);
    }
    if (*families)
      return emit(make_envelope(EnvelopeKind::Family, n, family_payload(parse_family_kind(family), n, lift, jobs)),
                  out_path, out, err);
    if (*psi) return emit(make_envelope(EnvelopeKind::PsiTable, 1 << k, psi_payload(k)), out_path, out, err);
    if (*status) {
      SearchCache cache(jobs);
      return emit(make_envelope(EnvelopeKind::Status, n, status_payload(n, cache)), out_path, out, err);
    }
    if (*verify_cmd) {
      std::ifstream f(cert_path, std::ios::binary);
      if (!f) {
        err << "cannot read " << cert_path << "\n";
        return kExitUsage;
      }
      Json j;
      try {
        j = Json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        err << "malformed JSON: " << e.what() << "\n";
        return kExitUsage;
      }
      const Envelope env = envelope_from_json(j);
      const VerifyResult r = verify(env, jobs);
      if (!r.ok) {
        err << "verification FAILED for " << to_string(env.kind) << " certificate:\n";
        for (const auto& d : r.diffs) err << "  " << d << "\n";
        return kExitVerifyFailed;
      }
      out << canonical_dump(Json{{"kind", to_string(env.kind)}, {"n", env.n}, {"verified", true}}) << "\n";
      return kExitOk;
    }
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace ortho::cli
