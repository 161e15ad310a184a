#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "hrmc/checker.hpp"
#include "hrmc/codec.hpp"
#include "hrmc/constructions.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = hrmc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("hrmc-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check") {
  Scratch tmp;
  const auto p21 = tmp.write("paper-21.json", hrmc::encode_instance(hrmc::paper_c8c8p5()));
  CHECK(run({"check", "--instance", p21, "-a", "4"}).code == hrmc::cli::kExitPass);
  CHECK(run({"check", "--instance", p21}).code == hrmc::cli::kExitPass);

  const auto k2 = tmp.write("k2-two-colors.json", R"({"n": 2, "edges": [[0,1]], "k": 2, "colors": [[1],[2]]})");
  const auto fail = run({"--format", "json", "check", "--instance", k2, "-a", "1"});
  CHECK(fail.code == hrmc::cli::kExitFail);
  const auto doc = nlohmann::json::parse(fail.out);
  CHECK(doc.at("resistance_witness") == nlohmann::json::array({0}));

  const auto human = run({"check", "--instance", k2, "-a", "1"});
  CHECK(human.code == hrmc::cli::kExitFail);
  CHECK(human.out.find("{0}") != std::string::npos);

  const auto edges = tmp.write("g.edges", "2 1\n0 1\n");
  const auto coloring = tmp.write("g.coloring", hrmc::encode_coloring(hrmc::Multicoloring(2, 2)));
  CHECK(run({"check", "--graph", edges, "-a", "0"}).code == hrmc::cli::kExitUsage);
  CHECK(run({"check", "--graph", edges, "--coloring", coloring, "-a", "1"}).code == hrmc::cli::kExitFail);
  CHECK(run({"check", "--graph", edges, "--coloring", coloring, "-a", "3"}).code == hrmc::cli::kExitUsage);
  CHECK(run({"check", "--instance", tmp.write("bad.json", "{")}).code == hrmc::cli::kExitUsage);
  CHECK(run({"check", "--instance", "/nonexistent/file.json", "-a", "1"}).code == hrmc::cli::kExitUsage);
}

TEST_CASE("sampled check reports its seed") {
  Scratch tmp;
  const auto p21 = tmp.write("p21.json", hrmc::encode_instance(hrmc::paper_c8c8p5()));
  const auto r = run({"--format", "json", "check", "--instance", p21, "--sample", "500", "--seed", "9"});
  CHECK(r.code == hrmc::cli::kExitPass);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("seed") == 9);
  CHECK(doc.at("trials") == 500);
}

TEST_CASE("construct") {
  const auto p14 = run({"construct", "--family", "paper-14"});
  CHECK(p14.code == hrmc::cli::kExitPass);
  const auto inst = hrmc::decode_instance(p14.out);
  CHECK(inst.num_vertices() == 14);
  CHECK(inst.palette_size() == 7);

  const auto cp4 = hrmc::decode_instance(run({"construct", "--family", "clique-partition:4"}).out);
  CHECK(cp4.num_vertices() == 25);
  CHECK(cp4.palette_size() == 5);

  const auto bad = run({"construct", "--family", "paper-9"});
  CHECK(bad.code == hrmc::cli::kExitUsage);
  CHECK(bad.err.find("clique-partition") != std::string::npos);
}

TEST_CASE("search") {
  Scratch tmp;
  const auto k3 = tmp.write("k3.edges", "3 3\n0 1\n1 2\n2 0\n");
  CHECK(run({"search", "--graph", k3, "-a", "1", "-k", "2"}).code == hrmc::cli::kExitFail);

  const auto two_k2 = tmp.write("2k2.edges", "4 2\n0 1\n2 3\n");
  const auto sat = run({"search", "--graph", two_k2, "-a", "1", "-k", "2"});
  CHECK(sat.code == hrmc::cli::kExitPass);
  const auto witness = tmp.write("witness.json", sat.out);
  CHECK(run({"check", "--instance", witness}).code == hrmc::cli::kExitPass);

  const auto structured = run({"--format", "json", "search", "--graph", two_k2, "-a", "1", "-k", "2"});
  CHECK(structured.code == hrmc::cli::kExitPass);
  CHECK(nlohmann::json::parse(structured.out).at("outcome") == "sat");

  CHECK(run({"search", "--nonexistence", "-n", "3", "-a", "1", "--kmax", "4"}).code == hrmc::cli::kExitFail);
  CHECK(run({"search", "--nonexistence", "-n", "4", "-a", "1", "--kmax", "2"}).code == hrmc::cli::kExitPass);
  CHECK(run({"search", "--graph", two_k2, "-a", "1", "--min-colors", "--kmax", "3"}).code == hrmc::cli::kExitPass);

  const auto c7 = tmp.write("c7.edges", "7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n");
  CHECK(run({"search", "--graph", c7, "-a", "3", "-k", "6", "--budget", "0"}).code == hrmc::cli::kExitUnknown);
  CHECK(run({"search", "--graph", c7}).code == hrmc::cli::kExitUsage);
}

TEST_CASE("verify-lemma") {
  const auto ok = run({"verify-lemma", "--lemma", "5", "--trials", "2000", "--seed", "0"});
  CHECK(ok.code == hrmc::cli::kExitPass);
  CHECK(ok.out.find("seed=0") != std::string::npos);
  CHECK(run({"verify-lemma", "--lemma", "6"}).code == hrmc::cli::kExitUsage);
}

TEST_CASE("table") {
  const auto four = run({"table", "--max-a", "4"});
  CHECK(four.code == hrmc::cli::kExitPass);
  CHECK(four.out.find("K(4,n=21)=10  proven-by construction") != std::string::npos);
  const auto three = run({"table", "--max-a", "3"});
  CHECK(three.out.find("K(3,n>=16)=4") != std::string::npos);
  const auto one = run({"table", "--max-a", "1"});
  CHECK(one.out.find("K(1,n<=3)=inf  proven-by exhaustive-search") != std::string::npos);
  CHECK(one.out.find("paper-citation") != std::string::npos);
  CHECK(run({"table", "--max-a", "5"}).code == hrmc::cli::kExitUsage);
}

TEST_CASE("human and structured verdicts agree") {
  for (const auto& name : {"paper-14", "clique-partition:2"}) {
    Scratch tmp;
    const auto path = tmp.write("inst.json", run({"construct", "--family", name}).out);
    for (const char* a : {"1", "3", "4"}) {
      const auto human = run({"check", "--instance", path, "-a", a});
      const auto json = run({"--format", "json", "check", "--instance", path, "-a", a});
      CHECK(human.code == json.code);
      CHECK((nlohmann::json::parse(json.out).at("highly_resistant") == true) == (human.code == 0));
    }
  }
}

TEST_CASE("usage errors and thread overrides") {
  CHECK(run({}).code == hrmc::cli::kExitUsage);
  CHECK(run({"bogus"}).code == hrmc::cli::kExitUsage);
  CHECK(run({"--help"}).code == hrmc::cli::kExitPass);
  CHECK(run({"--threads", "2", "construct", "--family", "paper-21"}).code == hrmc::cli::kExitPass);
  CHECK(run({"--threads", "0", "table"}).code == hrmc::cli::kExitUsage);
  Scratch tmp;
  const auto p14 = tmp.write("p14.json", hrmc::encode_instance(hrmc::paper_c7_pair()));
  const auto one = run({"--threads", "1", "check", "--instance", p14});
  const auto many = run({"--threads", "4", "check", "--instance", p14});
  CHECK(one.out == many.out);
  ::setenv(hrmc::cli::kThreadsEnv, "nope", 1);
  CHECK(run({"check", "--instance", p14}).code == hrmc::cli::kExitUsage);
  ::setenv(hrmc::cli::kThreadsEnv, "2", 1);
  CHECK(run({"check", "--instance", p14}).code == hrmc::cli::kExitPass);
  ::unsetenv(hrmc::cli::kThreadsEnv);
}

}  // TEST_SUITE
