// Runs the command-line binary on the shipped fixtures.

#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "bikernel/serialize.hpp"

using namespace bikernel;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  json doc() const { return json::parse(out); }
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(BIKERNEL_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }
std::string golden(const std::string& name) { return std::string(GOLDEN_DIR) + "/" + name; }

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("bikernel_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& f) const { return (path / f).string(); }
};

}  // namespace

TEST_CASE("check and univalence exit codes") {
  CHECK(cli("check " + fixture("terminal.json")).code == 0);
  CHECK(cli("check " + fixture("chaotic2.json")).code == 0);

  const Run z = cli("univalence " + fixture("zmod2-delooping.json"));
  CHECK(z.code == 1);
  const json r = z.doc();
  CHECK(r["local"].empty());
  REQUIRE(r["global"].size() == 1);
  CHECK(r["global"][0]["cells"] == json::array({"*", "*"}));
  CHECK(r["global"][0]["count"] == 2);

  CHECK(cli("univalence --local " + fixture("zmod2-delooping.json")).code == 0);
  CHECK(cli("univalence --global " + fixture("discrete2.json")).code == 0);
  const Run d = cli("univalence --local " + fixture("delta2.json"));
  CHECK(d.code == 1);
  CHECK(d.doc()["local"][0]["count"] == 2);
  CHECK(cli("univalence --local " + fixture("chaotic2.json")).code == 0);
  CHECK(cli("univalence --global " + fixture("chaotic2.json")).code == 1);
}

TEST_CASE("invalid input exits 2 with the key path") {
  TempDir tmp;
  json bad = read_json_file(fixture("terminal.json"));
  bad["vcomp"]["e;x"] = "e";
  write_json_file(tmp / "bad.json", bad);
  const Run r = cli("check " + tmp / "bad.json");
  CHECK(r.code == 2);
  CHECK(r.doc()["message"].get<std::string>().find("$.vcomp") != std::string::npos);

  json disp = read_json_file(fixture("bool-leq.json"));
  disp["d0"]["zzz"] = "*";
  disp["base"] = fixture("bool-delooping.json");
  write_json_file(tmp / "disp.json", disp);
  const Run q = cli("check --disp " + tmp / "disp.json");
  CHECK(q.code == 2);
  CHECK(q.doc()["message"].get<std::string>().find("$.d0.zzz") != std::string::npos);

  CHECK(cli("check " + tmp / "missing.json").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("yoneda " + fixture("terminal.json") + " --object nowhere").code == 2);
  CHECK(cli("yoneda " + fixture("delta2.json") + " --object '*'").code == 2);
}

TEST_CASE("budget exhaustion exits 3") {
  const std::string args =
      "build pseudo --src " + fixture("terminal.json") + " --tgt " + fixture("bool-delooping.json");
  CHECK(cli("--budget 10 " + args).code == 3);
  CHECK(cli(args).code == 0);
  const std::string with_env = "BIKERNEL_BUDGET=10 " + std::string(BIKERNEL_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(with_env.c_str());
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("displayed checks") {
  CHECK(cli("check --disp " + fixture("bool-leq.json")).code == 0);
  CHECK(cli("check --disp " + fixture("discrete2-fullsub.json")).code == 0);
  CHECK(cli("univalence --displayed " + fixture("bool-leq.json")).code == 0);
  CHECK(cli("check --disp-biequiv " + fixture("discrete2-fullsub-identity.json")).code == 0);
  CHECK(cli("check --cwf " + fixture("cwf-point.json")).code == 0);
  CHECK(cli("check --cwf " + fixture("cwf-empty-terms.json")).code == 1);
}

TEST_CASE("build outputs re-parse and re-validate") {
  TempDir tmp;
  struct Case {
    std::string args, out;
    bool disp;
  };
  const std::vector<Case> cases = {
      {"total " + fixture("bool-leq.json"), "total.json", false},
      {"product " + fixture("bool-leq.json") + " " + fixture("bool-leq.json"), "product.json", true},
      {"fullsub " + fixture("chaotic2.json") + " --objects a", "fullsub.json", true},
      {"trivial " + fixture("discrete2.json") + " " + fixture("terminal.json"), "trivial.json", true},
      {"chaotic " + fixture("bool-delooping.json") + " --sizes 2 --relation geq", "chaotic.json", true},
      {"pseudo --src " + fixture("terminal.json") + " --tgt " + fixture("discrete2.json"), "pseudo.json", false},
      {"fragment " + fixture("poset2.json"), "fragment.json", false},
      {"kleisli " + fixture("poset2.json"), "kleisli.json", false},
      {"cwf " + fixture("point.json") + " --bound 1", "cwf.json", false},
  };
  for (const Case& c : cases) {
    const Run r = cli("build " + c.args + " --out " + tmp / c.out);
    CHECK_MESSAGE(r.code == 0, c.args);
    CHECK(r.doc()["status"] == "pass");
    CHECK(fs::exists(tmp / c.out));
    CHECK(cli(std::string(c.disp ? "check --disp " : "check ") + tmp / c.out).code == 0);
  }
  // Without --out the document itself goes to stdout.
  const Run doc = cli("build fragment " + fixture("poset2.json"));
  CHECK(doc.code == 0);
  CHECK(doc.doc() == read_json_file(tmp / "fragment.json"));

  // The monad tower of the poset-2 fragment has two monads.
  const Run m = cli("build monads " + tmp / "fragment.json" + " --out " + tmp / "monads.json" +
                    " --expose-tower " + tmp / "tower");
  CHECK(m.code == 0);
  CHECK(m.doc()["counts"]["objects"] == 2);
  for (const char* layer : {"alg", "unit", "mult", "m2", "laws", "monads"}) {
    CHECK(cli("check --disp " + tmp / (std::string("tower/") + layer + ".json")).code == 0);
  }

  // Sigma over the total of a built displayed bicategory.
  CHECK(cli("build chaotic " + tmp / "total.json" + " --sizes 1,2 --relation eq --out " + tmp / "e.json").code == 0);
  CHECK(cli("build sigma " + fixture("bool-leq.json") + " " + tmp / "e.json" + " --out " + tmp / "s.json").code == 0);
  CHECK(cli("univalence --displayed " + tmp / "s.json").code == 0);
  CHECK(cli("build sigma " + fixture("bool-leq.json") + " " + fixture("bool-leq.json")).code == 2);
}

TEST_CASE("find") {
  CHECK(cli("find kleisli " + fixture("poset2.json")).doc()["count"] == 2);
  CHECK(cli("find presheaves " + fixture("point.json") + " --bound 2").doc()["count"] == 3);
  CHECK(cli("find monads " + fixture("bool-delooping.json")).doc()["count"] == 1);
  CHECK(cli("find adjequiv " + fixture("chaotic2.json")).doc()["count"] == 4);
  CHECK(cli("find psfunctors --src " + fixture("terminal.json") + " --tgt " + fixture("discrete2.json")).doc()["count"] ==
        2);
}

TEST_CASE("yoneda") {
  const Run r = cli("yoneda " + fixture("bool-delooping.json") + " --object '*'");
  CHECK(r.code == 0);
  CHECK(r.doc()["pstrans"]["objects"] == 2);
  CHECK(cli("yoneda " + fixture("bool-delooping.json") + " --object '*' --presheaf " +
            fixture("bool-yoneda-presheaf.json"))
            .code == 0);
  CHECK(cli("yoneda " + fixture("terminal.json") + " --object '*'").code == 0);
}

TEST_CASE("fuzz") {
  const Run r = cli("fuzz --seed 7 --count 200");
  CHECK(r.code == 0);
  const json j = r.doc();
  CHECK(j["properties"]["total-univalence"]["instances"] == 200);
  for (const auto& [name, c] : j["properties"].items()) {
    CHECK_MESSAGE(c["instances"] == c["verified"], name);
  }
  CHECK(cli("fuzz --seed 7 --count 20").out == cli("fuzz --seed 7 --count 20").out);
}

TEST_CASE("report schemas match the golden files") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"check " + fixture("terminal.json"), "check-terminal.json"},
      {"univalence " + fixture("zmod2-delooping.json"), "univalence-zmod2.json"},
      {"univalence " + fixture("delta2.json"), "univalence-delta2.json"},
      {"check --cwf " + fixture("cwf-empty-terms.json"), "cwf-empty-terms.json"},
      {"check --cwf " + fixture("cwf-point.json"), "cwf-point.json"},
      {"yoneda " + fixture("bool-delooping.json") + " --object '*'", "yoneda-bool.json"},
      {"fuzz --seed 3 --count 20", "fuzz-3-20.json"},
      {"find invertible " + fixture("zmod2-delooping.json"), "find-invertible-zmod2.json"},
  };
  for (const auto& [args, file] : cases) {
    CHECK_MESSAGE(cli(args).doc() == read_json_file(golden(file)), file);
  }
}
