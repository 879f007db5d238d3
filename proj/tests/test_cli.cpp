#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "multimod/cli.hpp"
#include "multimod/fixtures.hpp"
#include "multimod/json_io.hpp"

using namespace multimod;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("multimod_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const json_io::Json& j) {
  const fs::path p = scratch() / name;
  json_io::save_json(j, p.string());
  return p.string();
}

std::string write_text(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("check exit codes") {
  const std::string a3 = write("a3.json", json_io::to_json(fixtures::quadratic_a3()));
  const std::string a3t = write("a3t.json", json_io::to_json(fixtures::quadratic_a3_swapped()));
  CHECK(run({"check", "--property", "multimodular", "--box=-2..2", a3}).code == cli::kExitOk);
  const Result bad = run({"check", "--property", "multimodular", "--box=-2..2", a3t});
  CHECK(bad.code == cli::kExitFails);
  CHECK(bad.out.find("f(z+d) + f(z+d')") != std::string::npos);
  CHECK(run({"check", "--property", "quad-mm", a3}).code == cli::kExitOk);
  const Result crit = run({"check", "--property", "quad-mm", a3t});
  CHECK(crit.code == cli::kExitFails);
  CHECK(crit.out.find("(i,j)=(1,3)") != std::string::npos);
}

TEST_CASE("box options") {
  const std::string a3 = write("a3.json", json_io::to_json(fixtures::quadratic_a3()));
  CHECK(run({"check", "--property", "multimodular", "--box", "-2..2", a3}).code == cli::kExitOk);
  CHECK(run({"check", "--property", "multimodular", "--box=-1..1", "--box=0..2", "--box=-2..0", a3}).code ==
        cli::kExitOk);
  CHECK(run({"check", "--property", "multimodular", "--box=-1..1", "--box=0..2", a3}).code == cli::kExitInputError);
  CHECK(run({"check", "--property", "multimodular", a3}).code == cli::kExitInputError);
  CHECK(run({"check", "--property", "multimodular", "--box=2..1", a3}).code == cli::kExitInputError);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run({"check", "--property", "multimodular", "/nonexistent.json"}).code == cli::kExitInputError);
  CHECK(run({"check", "--property", "multimodular", write_text("broken.json", "{\"kind\":")}).code ==
        cli::kExitInputError);
  CHECK(run({"check", "--property", "bogus", "x.json"}).code == cli::kExitInputError);
  CHECK(run({"check", "--frobnicate"}).code == cli::kExitInputError);
  CHECK(run({}).code == cli::kExitInputError);
  CHECK(run({"repro", "0.0"}).code == cli::kExitInputError);
  const std::string a4 = write("a4.json", json_io::to_json(fixtures::quadratic_a4()));
  CHECK(run({"op", "sweep-out", "--index", "9", a4}).code == cli::kExitInputError);
  const Result help = run({"--help"});
  CHECK(help.code == cli::kExitOk);
  CHECK(help.out.find("check") != std::string::npos);
}

TEST_CASE("json output parses back") {
  const std::string t = write("t12.json", json_io::to_json(fixtures::set_t1_plus_t2()));
  const Result r = run({"--json", "check", "--property", "lnat-set", t});
  CHECK(r.code == cli::kExitFails);
  const auto j = json_io::Json::parse(r.out);
  CHECK(j["holds"] == false);
  CHECK(j["witness"]["kind"] == "midpoint");
  CHECK(j["witness"]["points"][0] == json_io::Json::array({0, 1, 1}));
  CHECK(j["checked"].get<int>() > 0);
}

TEST_CASE("op output composes with check") {
  const std::string a3 = write("a3.json", json_io::to_json(fixtures::quadratic_a3()));
  const std::string out = (scratch() / "perm.json").string();
  CHECK(run({"op", "permute", "--perm", "2,1,3", "--box=-2..2", a3, "-o", out}).code == cli::kExitOk);
  CHECK(run({"check", "--property", "multimodular", out}).code == cli::kExitFails);

  const std::string scaled = (scratch() / "third.json").string();
  CHECK(run({"op", "scale-values", "--factor", "1/3", "--box=0..1", a3, "-o", scaled}).code == cli::kExitOk);
  const auto doc = json_io::load_document(scaled);
  CHECK(std::get<TableFunction>(doc)(Point{1, 1, 1}) == ExtendedValue(Rational(8, 3)));

  const std::string s1 = write("s1.json", json_io::to_json(fixtures::set_s1()));
  const std::string s2 = write("s2.json", json_io::to_json(fixtures::set_s2()));
  const std::string sum = (scratch() / "sum.json").string();
  CHECK(run({"op", "minkowski", s1, s2, "-o", sum}).code == cli::kExitOk);
  CHECK(run({"check", "--property", "mm-set", sum}).code == cli::kExitFails);
  CHECK(run({"check", "--property", "mm-set", s1}).code == cli::kExitOk);

  const std::string a4 = write("a4.json", json_io::to_json(fixtures::quadratic_a4()));
  const std::string swept = (scratch() / "swept.json").string();
  CHECK(run({"op", "sweep-out", "--index", "3", a4, "-o", swept}).code == cli::kExitOk);
  CHECK(std::get<QuadraticFunction>(json_io::load_document(swept)).matrix() == fixtures::swept_a4());
  CHECK(run({"check", "--property", "quad-mm", swept}).code == cli::kExitFails);
}

TEST_CASE("project reports the box it minimized over") {
  const std::string a4 = write("a4.json", json_io::to_json(fixtures::quadratic_a4()));
  const std::string out = (scratch() / "proj.json").string();
  const Result r = run({"op", "project", "--subset", "1,2,4", "--box=-3..3", a4, "-o", out});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("[-3,3] x [-3,3] x [-3,3] x [-3,3]") != std::string::npos);
  CHECK(run({"check", "--property", "multimodular", out}).code == cli::kExitFails);
}

TEST_CASE("transform subcommand") {
  const std::string a3 = write("a3.json", json_io::to_json(fixtures::quadratic_a3()));
  const Result r = run({"transform", "--map", "conj-quad", a3});
  CHECK(r.code == cli::kExitOk);
  const auto doc = json_io::parse_document_text(r.out);
  CHECK(std::get<QuadraticFunction>(doc).matrix() == fixtures::conjugate_b3());
  const std::string g = (scratch() / "g.json").string();
  CHECK(run({"transform", "--map", "to-lnat", "--box=-1..1", a3, "-o", g}).code == cli::kExitOk);
  CHECK(run({"check", "--property", "lnat", g}).code == cli::kExitOk);
  const std::string lifted = (scratch() / "lift.json").string();
  CHECK(run({"transform", "--map", "lift-mm", "--box=-1..1", a3, "-o", lifted}).code == cli::kExitOk);
  CHECK(run({"check", "--property", "submodular", lifted}).code == cli::kExitOk);
}

TEST_CASE("minimize subcommand") {
  const std::string a3 = write("a3.json", json_io::to_json(fixtures::quadratic_a3()));
  const Result r = run({"minimize", "--start", "2,-2,1", "--verify", "--box=-2..2", a3});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("value 0") != std::string::npos);
  CHECK(r.out.find("agrees") != std::string::npos);
  const Result j = run({"--json", "minimize", "--box=-2..2", a3});
  CHECK(json_io::Json::parse(j.out)["verified"] == false);
  CHECK(run({"minimize", "--start", "9,9,9", "--box=-2..2", a3}).code == cli::kExitInputError);
}

TEST_CASE("repro, closure and table subcommands") {
  const Result r = run({"repro", "4.2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("p=(0,1,1), q=(1,1,0)") != std::string::npos);
  CHECK(run({"repro", "3.1"}).code == cli::kExitOk);
  CHECK(run({"repro", "T-n4"}).code == cli::kExitOk);

  const Result c = run({"--json", "closure", "--op", "scale-vars", "--trials", "10", "--seed", "3", "--n", "3"});
  CHECK(c.code == cli::kExitOk);
  CHECK(json_io::Json::parse(c.out)["violated"] == 0);
  CHECK(run({"closure", "--op", "rotate"}).code == cli::kExitInputError);

  const Result t = run({"--json", "table1", "--trials", "50", "--seed", "1"});
  CHECK(t.code == cli::kExitOk);
  CHECK(json_io::Json::parse(t.out)["pattern"] == "N Y Y N Y Y N N");
}

TEST_CASE("installed tool returns the documented exit codes") {
  const std::string a3t = write("a3t.json", json_io::to_json(fixtures::quadratic_a3_swapped()));
  const std::string tool = MULTIMOD_TOOL;
  auto status = [&](const std::string& args) {
    const int s = std::system((tool + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(s);
  };
  CHECK(status("repro 4.2") == 0);
  CHECK(status("check --property multimodular --box=-2..2 " + a3t) == 1);
  CHECK(status("check --property nothing " + a3t) == 2);
}
