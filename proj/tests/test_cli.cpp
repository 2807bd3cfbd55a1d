#include "ortho/cli.hpp"
#include "ortho/certificate.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace ortho;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run lab(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("ortho_cli_" + name); }

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

}  // namespace

TEST_CASE("produce then verify for every subcommand") {
  const std::vector<std::vector<std::string>> cmds{
      {"bound", "--n", "16", "--kind", "y"},
      {"spectrum", "--n", "8"},
      {"search", "--n", "8"},
      {"colour", "--n", "8"},
      {"colour", "--n", "16", "--clique"},
      {"colour", "--n", "8", "--method", "psi"},
      {"families", "--n", "8", "--lift"},
      {"families", "--n", "12", "--family", "odd-small"},
      {"psi", "--k", "6"},
      {"status", "--n", "64"},
  };
  int i = 0;
  for (auto cmd : cmds) {
    CAPTURE(cmd.front());
    const fs::path p = scratch("cert" + std::to_string(i++) + ".json");
    cmd.push_back("--out");
    cmd.push_back(p.string());
    REQUIRE(lab(cmd).code == cli::kExitOk);
    const auto v = lab({"verify", p.string()});
    CHECK(v.code == cli::kExitOk);
    CHECK(v.out.find("\"verified\":true") != std::string::npos);
  }
}

TEST_CASE("output is byte-identical across runs and a parse round trip") {
  const auto a = lab({"status", "--n", "8"});
  const auto b = lab({"--jobs", "1", "status", "--n", "8"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(canonical_dump(Json::parse(a.out)) + "\n" == a.out);
}

TEST_CASE("tampering gives exit code 1") {
  const fs::path p = scratch("tamper.json");
  REQUIRE(lab({"colour", "--n", "8", "--out", p.string()}).code == 0);
  Json j = Json::parse(slurp(p));
  auto& classes = j["payload"]["classes"];
  for (const auto& v : classes[7]) classes[6].push_back(v);
  classes.erase(7);
  j["payload"]["palette_size"] = 7;
  spit(p, canonical_dump(j));
  const auto r = lab({"verify", p.string()});
  CHECK(r.code == cli::kExitVerifyFailed);
  CHECK(r.err.find("FAILED") != std::string::npos);

  REQUIRE(lab({"bound", "--n", "8", "--out", p.string()}).code == 0);
  j = Json::parse(slurp(p));
  j["payload"]["tau"] = "-9";
  spit(p, canonical_dump(j));
  CHECK(lab({"verify", p.string()}).code == cli::kExitVerifyFailed);
}

TEST_CASE("usage and schema errors give exit code 2") {
  CHECK(lab({}).code == cli::kExitUsage);
  CHECK(lab({"bound"}).code == cli::kExitUsage);
  CHECK(lab({"bound", "--n", "6"}).code == cli::kExitUsage);
  CHECK(lab({"search", "--n", "8", "--base", "zz"}).code == cli::kExitUsage);
  CHECK(lab({"psi", "--k", "9"}).code == cli::kExitUsage);
  CHECK(lab({"verify", scratch("does_not_exist.json").string()}).code == cli::kExitUsage);

  const fs::path p = scratch("schema.json");
  spit(p, "{not json");
  CHECK(lab({"verify", p.string()}).code == cli::kExitUsage);
  spit(p, R"({"kind":"bound","n":8,"payload":{},"produced_by":"x","schema_version":1})");
  CHECK(lab({"verify", p.string()}).code == cli::kExitUsage);
  spit(p, R"({"kind":"bound","n":8})");
  CHECK(lab({"verify", p.string()}).code == cli::kExitUsage);
}

TEST_CASE("no n-colouring outside {1, 2, 4, 8}") {
  CHECK(lab({"colour", "--n", "16"}).code == cli::kExitVerifyFailed);
  CHECK(lab({"colour", "--n", "12"}).code == cli::kExitVerifyFailed);
}

TEST_CASE("the installed binary reports the same exit codes") {
  const std::string bin = ORTHO_LAB_BINARY;
  const auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("bound --n 8") == 0);
  CHECK(status("bound --n 7") == 2);
  CHECK(status("colour --n 16") == 1);
}
