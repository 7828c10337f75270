#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"

using recipart::cli::parse_and_dispatch;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = parse_and_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("find") {
  Run r = run({"find", "--n", "11"});
  CHECK(r.code == 0);
  CHECK(r.out == "{2,3,6}\n");
  r = run({"find", "--n", "5"});
  CHECK(r.code == 1);
  CHECK(r.out == "none\n");
  r = run({"find", "--n", "11", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"kind\": \"partition\"") != std::string::npos);
  CHECK(run({"find", "--n", "96", "--m-free", "7"}).code == 1);
  CHECK(run({"find", "--n", "80", "--alpha", "1", "--primes", "2,3,5,7"}).code == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 3);
  CHECK(run({"find"}).code == 3);
  CHECK(run({"bogus"}).code == 3);
  CHECK(run({"find", "--n", "11", "--alpha", "1/0"}).code == 3);
  CHECK(run({"find", "--n", "11", "--alpha", "x"}).code == 3);
  CHECK(run({"find", "--n", "11", "--m-free", "1"}).code == 3);
  CHECK(run({"find", "--n", "11", "--primes", "2,a"}).code == 3);
  CHECK(run({"verify-range", "--lo", "1", "--hi", "5", "--residue", "3"}).code == 3);
  CHECK(run({"prove", "--table", "nope"}).code == 3);
  CHECK(run({"construct", "--table", "graham-q", "--n", "10"}).code == 3);
  CHECK(run({"construct", "--table", "odd15", "--n", "4000"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enum and count") {
  Run r = run({"enum", "--n", "91", "--primes", "2,3,5,7,11,13"});
  CHECK(r.code == 0);
  r = run({"count", "--n", "151", "--m-free", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
  r = run({"count", "--n", "151"});
  CHECK(r.code == 0);
  r = run({"enum", "--n", "100", "--max-solutions", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("incomplete") != std::string::npos);
  CHECK(run({"enum", "--n", "5"}).code == 1);
}

TEST_CASE("verify-range") {
  Run r = run({"verify-range", "--lo", "97", "--hi", "112", "--m-free", "7", "--jobs", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("16 witnessed, 0 failures") != std::string::npos);
  r = run({"verify-range", "--lo", "90", "--hi", "100", "--m-free", "7", "--jobs", "1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("96") != std::string::npos);
  r = run({"verify-range", "--lo", "24", "--hi", "60", "--max-nodes", "1", "--jobs", "1"});
  CHECK(r.code == 2);
  r = run({"verify-range", "--lo", "3609", "--hi", "3700", "--m-free", "2", "--residue", "1:8", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"modulus\": 8") != std::string::npos);
}

TEST_CASE("spectrum verbs") {
  Run r = run({"bwindow", "--lo", "65", "--hi", "78"});
  CHECK(r.code == 0);
  CHECK(r.out == "{}\nsize 0\n");
  r = run({"bset", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("size ") != std::string::npos);
  r = run({"growth", "--lo", "100", "--hi", "102", "--N", "136"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,count\n", 0) == 0);
}

TEST_CASE("nm") {
  Run r = run({"nm", "--M", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("N_7 = 97") != std::string::npos);
  r = run({"nm", "--M", "2"});
  CHECK(r.out.find("upper bound") != std::string::npos);
  CHECK(r.out.find("1 mod 8") != std::string::npos);
  r = run({"nm", "--M", "7", "--verify", "110", "--jobs", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n=96 has no") != std::string::npos);
  CHECK(run({"nm", "--M", "1"}).code == 3);
}

TEST_CASE("prove") {
  Run r = run({"prove", "--table", "graham-q"});
  CHECK(r.code == 0);
  CHECK(r.out.find("P5=verified") != std::string::npos);
  CHECK(r.out.find("holds") != std::string::npos);
  r = run({"prove", "--table", "graham-q", "--X", "10"});
  CHECK(r.code == 1);
  r = run({"prove", "--table", "sp(5)", "--skip-base"});
  CHECK(r.code == 0);
  CHECK(r.out.find("congruence=verified") != std::string::npos);
  r = run({"prove", "--table", "graham-s", "--json"});
  CHECK(r.code == 0);
}

TEST_CASE("construct and synth") {
  Run r = run({"construct", "--table", "graham-q", "--n", "100000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("depth ") != std::string::npos);
  r = run({"construct", "--table", "graham-s", "--n", "3000", "--alpha", "4/3", "--json"});
  CHECK(r.code == 0);
  r = run({"synth", "--alpha", "1", "--S", "1", "--forbid", "1,39", "--max-size", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("i=1 m=2 beta=1 A={2}", 0) == 0);
  CHECK(r.out.find("uncovered") == std::string::npos);
}

TEST_CASE("certificates through the CLI") {
  const fs::path dir = fs::temp_directory_path() / ("recipart-cli-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string manifest = (dir / "m7.json").string();
  CHECK(run({"verify-range", "--lo", "97", "--hi", "112", "--m-free", "7", "--cert", manifest}).code == 0);
  Run r = run({"verify-cert", manifest});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("verified range", 0) == 0);
  const std::string tables = (dir / "q.json").string();
  CHECK(run({"prove", "--table", "graham-q", "--skip-base", "--cert", tables}).code == 0);
  CHECK(run({"verify-cert", tables}).code == 0);
  CHECK(run({"verify-cert", (dir / "missing.json").string()}).code != 0);
  fs::remove_all(dir);
}

TEST_CASE("repro") {
  Run r = run({"repro", "--list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("graham") != std::string::npos);
  r = run({"repro", "graham"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{2,3,6}") != std::string::npos);
  CHECK(run({"repro", "nope"}).code == 3);
}
