#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "seqth/cert.hpp"
#include "seqth/hf.hpp"
#include "seqth/snake.hpp"
#include "seqth/syntax.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = seqth::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("encode") {
  auto r = run({"encode", "tree", "babaa"});
  CHECK(r.code == 0);
  CHECK(r.out == "[2,1,2,1,0]\n");
  CHECK(run({"encode", "tree", "(pair (pair bot (pair bot bot)) bot)"}).out == "[2,3,2,3,2,1,0]\n");
  r = run({"encode", "hf", "{{},{{}}}"});
  CHECK(r.code == 0);
  CHECK(r.out == "[2,3,2,1,2,1,0]\n");
  CHECK(seqth::parse_snake(r.out) == seqth::Snake{2, 3, 2, 1, 2, 1, 0});
}

TEST_CASE("decode") {
  CHECK(run({"decode", "snake", "[2,1,2,1,0]"}).out == "(pair bot (pair bot bot))\n");
  auto r = run({"decode", "snake", "[2,3,2,1,2,1,0]", "--as", "hf"});
  CHECK(r.code == 0);
  CHECK(r.out == "{{},{{}}}\n");
  CHECK(seqth::parse_hf(r.out) == seqth::parse_hf("{{{}},{}}"));
  r = run({"decode", "snake", "[2,3,2,3,4,5,4,3,2,1,2,1,2,1,0]", "--as", "hf"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("eval") {
  auto r = run({"eval", "(= (cat e e) e)"});
  CHECK(r.code == 0);
  CHECK(r.out == "TRUE\n");
  r = run({"eval", "(exists x (= (app x e) (app (app e e) e)))", "--budget", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "TRUE\nx = (())\n");
  r = run({"eval", "(exists x (= (app x x) x))", "--budget", "3"});
  CHECK(r.code == 1);
  CHECK(r.out == "UNKNOWN\n");
  r = run({"eval", "(= (app e e) e)"});
  CHECK(r.code == 1);
  CHECK(r.out == "FALSE\n");
  r = run({"eval", "(forall x (= x x))"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("parse errors point into the input") {
  const auto r = run({"eval", "(= e e"});
  CHECK(r.code == 1);
  CHECK(r.err == "parse error: missing ')' at offset 6\n  (= e e\n        ^\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval"}).code == 2);
  CHECK(run({"eval", "(= e e)", "--budget", "many"}).code == 2);
  CHECK(run({"--format", "json", "eval", "(= e e)"}).code == 2);
  CHECK(run({"--format", "canonical", "eval", "(= e e)"}).code == 0);
  CHECK(run({"encode", "graph", "a"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("axioms") != std::string::npos);
}

TEST_CASE("translate and relativize print parseable formulas") {
  auto r = run({"translate", "ast", "(exists y (forall x (not (in x y))))"});
  CHECK(r.code == 0);
  CHECK(r.out == "(exists y (forall x (not (exists v1 (exists v2 (= (cat (app v1 x) v2) y))))))\n");
  CHECK_NOTHROW(seqth::parse_formula(r.out));
  r = run({"relativize", "(exists x (= x e))", "(prefix z (app e e))"});
  CHECK(r.code == 0);
  CHECK(r.out == "(exists x (and (prefix x (app e e)) (= x e)))\n");
  CHECK(run({"relativize", "(exists x (= x e))", "(= e e)"}).code == 1);
}

TEST_CASE("axioms") {
  auto r = run({"axioms", "seq", "--bound", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Seq4 PASS tuples=") != std::string::npos);
  r = run({"axioms", "nope"});
  CHECK(r.code == 1);
  CHECK(r.err.find("seq-star") != std::string::npos);
}

TEST_CASE("cert and check through a file") {
  const auto path = std::filesystem::temp_directory_path() / "seqth_test_cert.json";
  const std::string formula = "(all-prefix x (app e e) (or (= x e) (= x (app e e))))";
  auto r = run({"cert", formula, "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "TRUE\n");
  r = run({"check", path.string(), formula});
  CHECK(r.code == 0);
  CHECK(r.out == "ACCEPT\n");
  r = run({"check", path.string(), "(all-prefix x (app e e) (or (= x (app e e)) (= x e)))"});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("REJECT ", 0) == 0);

  r = run({"cert", formula});
  CHECK(r.code == 0);
  CHECK(seqth::check_cert(seqth::certificate_from_json(r.out), seqth::parse_formula(formula)));

  CHECK(run({"check", (path.string() + ".missing"), formula}).code == 1);
  std::filesystem::remove(path);
  CHECK(run({"cert", "(exists x (= (app x x) x))", "--budget", "2"}).out == "UNKNOWN\n");
}
