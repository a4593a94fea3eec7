#include "doctest.h"

#include <sstream>

#include "infcc/cli.hpp"
#include "infcc/serialize.hpp"

using namespace infcc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "infcc");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cc prints Laurent text") {
  const Run r = run({"cc", "--triangulation", "fountain:0", "--arc", "-3,-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "(x[-3,0] + 1)/x[-2,0]\n");
}

TEST_CASE("cc json round trips") {
  const Run r = run({"cc", "-t", "polygon:0-4:0.2,0.3", "--arc", "1,4", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(arc_from_json(j.at("arc")) == Arc{1, 4});
  const LaurentPoly p = laurent_from_json(j.at("cc"));
  CHECK(p.to_text() == j.at("text"));
  CHECK(to_json(p) == j.at("cc"));
}

TEST_CASE("unreachable arcs exit with 2") {
  const Run r = run({"cc", "--triangulation", "fountain:0", "--arc", "-1,1"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.err) == json::parse(R"({"unreachable":{"fountain":0}})"));
  CHECK(r.out.empty());
  CHECK(run({"tiling", "-t", "fountain:0", "--window", "-3,3"}).code == 2);
}

TEST_CASE("usage errors exit with 1 and name the flag") {
  const Run missing = run({"cc", "--triangulation", "fountain:0"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("--arc") != std::string::npos);
  const Run bad = run({"cc", "-t", "fountain:0", "--arc", "1,2"});
  CHECK(bad.code == 1);
  CHECK(run({"cc", "-t", "fountain:0", "--arc", "a,b"}).err.find("--arc") != std::string::npos);
  CHECK(run({"cc", "-t", "moebius:0", "--arc", "0,2"}).code == 1);
  CHECK(run({}).code == 1);
}

TEST_CASE("flips apply in order") {
  const Run a = run({"cc", "-t", "polygon:0-4:0.2,0.3", "--flip", "0,2", "--arc", "0,2"});
  CHECK(a.code == 0);
  CHECK(a.out == "(x[0,3] + 1)/x[1,3]\n");
  const Run f = run({"flip", "-t", "zigzag:0", "--arc", "0,2", "--format", "json"});
  REQUIRE(f.code == 0);
  CHECK(json::parse(f.out).at("replacement") == json::array({-1, 1}));
}

TEST_CASE("tiling csv layout") {
  const Run r = run({"tiling", "-t", "zigzag:0", "--window", "0,4", "--format", "csv", "--check"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(header == "j\\i,0,1,2,3,4");
  CHECK(first.rfind("4,5,8,3,", 0) == 0);
}

TEST_CASE("other verbs") {
  CHECK(run({"validate", "-t", "zigzag:0", "--window", "-5,5"}).out.find("\"valid\":true") != std::string::npos);
  const Run q = run({"quiver", "-t", "polygon:0-4:0.2,0.3", "--window", "0,4"});
  CHECK(json::parse(q.out).at("arrows") == json::parse("[[[0,2],[0,3]]]"));
  const Run red = run({"reduce", "-t", "zigzag:0", "--arc", "-3,5"});
  CHECK(red.code == 0);
  CHECK(json::parse(red.out).at("rank") == 6);
  const Run fr = run({"frontier", "--word", "URURURUR", "--bbox", "-3,-3,3,3", "--check"});
  CHECK(fr.code == 0);
  CHECK(run({"frontier", "--word", "RRR", "--bbox", "-3,-3,3,3"}).code == 1);
  const Run v = run({"verify", "--suite", "10"});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("PASS 10", 0) == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"cc", "-t", "zigzag:0", "--arc", "-4,5", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}
