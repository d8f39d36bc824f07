#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mctl/cli.hpp"
#include "oracles.hpp"

namespace mctl {
namespace {

using nlohmann::json;

struct CliRun {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, JwRbrOverQDelta) {
  CliRun r = run({"jw", "--word", "rbr", "--ring", "qdelta"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = r.j();
  EXPECT_TRUE(j["exists"].get<bool>());
  ASSERT_EQ(j["terms"].size(), 2u);
  std::set<std::string> coeffs;
  for (const auto& t : j["terms"]) coeffs.insert(t["coeff"].get<std::string>());
  EXPECT_EQ(coeffs, (std::set<std::string>{"1", "1/delta"}));
  EXPECT_EQ(j["obstruction"], nullptr);
}

TEST(Cli, JwIdentity) {
  CliRun r = run({"jw", "--word", "rb"});
  ASSERT_EQ(r.code, 0);
  json j = r.j();
  ASSERT_EQ(j["terms"].size(), 1u);
  EXPECT_EQ(j["terms"][0]["matching"], json::parse(R"({"m":1,"k":1,"pairs":[["B1","T1"]]})"));
  EXPECT_EQ(j["terms"][0]["coeff"], "1");
}

TEST(Cli, JwObstructionIsNotAnError) {
  CliRun r = run({"jw", "--word", "rbr", "--ring", "fp:2", "--cartan", "-2"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = r.j();
  EXPECT_FALSE(j["exists"].get<bool>());
  EXPECT_TRUE(j["terms"].empty());
  EXPECT_TRUE(j["obstruction"].is_object());
  CliRun eq = run({"jw", "--word", "rbr", "--ring", "fp:2", "--cartan=-2"});
  EXPECT_EQ(eq.out, r.out);
}

TEST(Cli, JwMethodsAgree) {
  for (const char* method : {"recursive", "descriptive", "oracle"}) {
    CliRun r = run({"jw", "--word", "rbrg", "--method", method});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, run({"jw", "--word", "rbrg"}).out) << method;
  }
}

TEST(Cli, FailingPrimes) {
  EXPECT_EQ(run({"failing-primes", "--word", "rbr"}).j()["primes"], json({2}));
  EXPECT_EQ(run({"failing-primes", "--word", "rbrb"}).j()["primes"], json({3}));
  EXPECT_EQ(run({"failing-primes", "--word", "rgb"}).j()["primes"], json::array());
  EXPECT_EQ(run({"failing-primes", "--word", "rbrb", "--max-prime", "2"}).j()["primes"], json::array());
}

TEST(Cli, Count) {
  EXPECT_EQ(run({"count", "--bottom", "grgyrybgbyb", "--top", "gyrorybrb"}).j()["count"], 4);
  EXPECT_EQ(run({"count", "--bottom", "rgb", "--top", "rgb"}).j()["count"], 1);
  EXPECT_EQ(run({"count", "--bottom", "r", "--top", "b"}).j()["count"], 0);
}

TEST(Cli, Hecke) {
  json kl = run({"hecke", "kl", "--word", "r"}).j();
  EXPECT_EQ(kl["basis"], "standard");
  EXPECT_EQ(json_io::hecke_from(kl), kl_basis(CoxeterWord::reduced({"r"})));
  EXPECT_EQ(kl["terms"], json::parse(R"([{"word":[],"poly":{"1":1}},{"word":["r"],"poly":{"0":1}}])"));

  json one = run({"hecke", "kl", "--word", ""}).j();
  EXPECT_EQ(one["terms"], json::parse(R"([{"word":[],"poly":{"0":1}}])"));

  json mult = run({"hecke", "mult", "--left", "rb", "--by", "r"}).j();
  EXPECT_EQ(mult["basis"], "kl");
  EXPECT_EQ(mult["terms"], json::parse(R"([{"word":["r"],"poly":{"0":1}},{"word":["r","b","r"],"poly":{"0":1}}])"));

  CliRun text = run({"--format", "text", "hecke", "kl", "--word", "r"});
  EXPECT_EQ(text.out, "b_r = H_r + v\n");
}

TEST(Cli, Verdict) {
  json j = run({"verdict", "--word", "rbrb", "--ring", "fp:2"}).j();
  EXPECT_TRUE(j["holds"].get<bool>());
  json f = run({"verdict", "--word", "rbr", "--ring", "fp:2"}).j();
  EXPECT_EQ(f["word"], json({"r", "b", "r"}));
  EXPECT_FALSE(f["holds"].get<bool>());
  ASSERT_EQ(f["witnesses"].size(), 1u);
  const json& w = f["witnesses"][0];
  EXPECT_EQ(w["run"], json({1, 3}));
  EXPECT_EQ(w["k"], 2);
  EXPECT_EQ(w["m"], 1);
  EXPECT_EQ(w["pair"], json({"r", "b"}));
  EXPECT_EQ(w["value"], "0");
}

TEST(Cli, NonReducedWordWarns) {
  CliRun r = run({"verdict", "--word", "rbbr", "--ring", "fp:2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("not reduced"), std::string::npos);
  EXPECT_EQ(r.j()["word"], json::array());
}

TEST(Cli, Decompose) {
  json j = run({"decompose", "--word", "rbr"}).j();
  EXPECT_EQ(j["summands"], json::parse(R"([{"word":["r"],"multiplicity":1},{"word":["r","b","r"],"multiplicity":1}])"));
  EXPECT_EQ(run({"--format", "text", "decompose", "--word", "rbr"}).out, "rbr = V_r + V_rbr\n");
}

TEST(Cli, CheckDegenerateTag) {
  json j = run({"check", "--x", "rb", "--s", "b"}).j();
  EXPECT_TRUE(j["degenerate"].get<bool>());
  EXPECT_EQ(j["tl_summands"], nullptr);
  EXPECT_EQ(j["hecke"]["terms"], json::parse(R"([{"word":["r","b"],"poly":{"-1":1,"1":1}}])"));
  json hard = run({"check", "--x", "rb", "--s", "r"}).j();
  EXPECT_TRUE(hard["agree"].get<bool>());
  EXPECT_EQ(hard["tl_summands"], json::parse(R"([["r"],["r","b","r"]])"));
}

TEST(Cli, RealizationFile) {
  const std::string path = ::testing::TempDir() + "/mctl_realization.json";
  {
    std::ofstream f(path);
    f << R"({"alphabet":["r","b"],"cartan":{"r,b":"-2","b,r":"-2"},"ring":{"type":"fp","p":2}})";
  }
  json j = run({"verdict", "--word", "rbr", "--realization", path}).j();
  EXPECT_FALSE(j["holds"].get<bool>());
  EXPECT_EQ(run({"verdict", "--word", "rbr", "--realization", path, "--ring", "q"}).code, 2);
  EXPECT_EQ(run({"verdict", "--word", "rgr", "--realization", path}).code, 2);
  std::remove(path.c_str());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"jw"}).code, 2);
  EXPECT_EQ(run({"jw", "--word", "rr"}).code, 2);
  EXPECT_EQ(run({"jw", "--word", "rb", "--ring", "fp:4"}).code, 2);
  EXPECT_EQ(run({"jw", "--word", "rb", "--ring", "q", "--cartan", "sym-delta"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "jw", "--word", "rb"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"jw", "--word", "rbrbg"},
                                                                {"decompose", "--word", "rbrb"},
                                                                {"check", "--x", "rbrb", "--s", "r"}})
    EXPECT_EQ(run(args).out, run(args).out);
}

// Each emitted JSON value parses back to an equal value and re-serializes to the same bytes.
TEST(JsonRoundTrip, Outputs) {
  const std::vector<Color> rbg{"r", "b", "g"};
  auto Aq = share(CartanMatrix::symmetric_delta(rbg));
  auto F2 = share(CartanMatrix::crystallographic(RingSpec::prime_field(2), rbg));
  for (const auto& x : oracle::words_over(rbg, 5)) {
    for (const auto& A : {Aq, F2}) {
      JWResult r = jw_recursive(x, A);
      json j = json_io::jw(r);
      JWResult back = json_io::jw_from(json::parse(j.dump()), A);
      EXPECT_EQ(back.exists, r.exists);
      if (r.exists) {
        EXPECT_EQ(*back.morphism, *r.morphism);
      }
      EXPECT_EQ(json_io::jw(back).dump(), j.dump());

      RealizationSpec R(A);
      Verdict v = soergel_verdict(CoxeterWord::from(x), R);
      json vj = json_io::verdict(v);
      EXPECT_EQ(json_io::verdict(json_io::verdict_from(json::parse(vj.dump()), A->ring())).dump(), vj.dump());
    }
    const HeckeElement b = kl_basis(CoxeterWord::from(x));
    EXPECT_EQ(json_io::hecke_from(json::parse(json_io::hecke(b).dump())), b);
    auto d = decompose_word(CoxeterWord::from(x).length() <= 4 ? CoxeterWord::from(x) : CoxeterWord(), RealizationSpec(Aq));
    json dj = json_io::decomposition(d);
    EXPECT_EQ(json_io::decomposition(json_io::decomposition_from(dj, Aq->ring())).dump(), dj.dump());
  }
  for (const auto& d : enumerate_matchings(3, 3)) EXPECT_EQ(json_io::matching_from(json_io::matching(d)), d);
}

TEST(JsonRoundTrip, Cartan) {
  const RingSpec r = RingSpec::rational_functions();
  CartanMatrix A(r, {"r", "b"}, {{{"r", "b"}, r.parse_element("-delta")}, {{"b", "r"}, r.parse_element("(1-delta^2)/delta")}});
  json j = json_io::cartan(A);
  EXPECT_EQ(json_io::cartan_from(json::parse(j.dump())), A);
  for (const char* text : {R"({"alphabet":["r","b"],"cartan":{"r,b":"-2"},"ring":{"type":"q"}})",
                           R"({"alphabet":["r","b"],"cartan":{"r,b":"-2","b,r":"x"},"ring":{"type":"q"}})",
                           R"({"alphabet":["r","b"],"cartan":{"rb":"-2"},"ring":{"type":"q"}})",
                           R"({"alphabet":["r","b"],"cartan":{"r,b":"-2","b,r":"-2"},"ring":{"type":"fp","p":6}})",
                           R"({"alphabet":["r","b"],"cartan":{"r,b":"-2","b,r":"-2"}})"})
    EXPECT_THROW(json_io::cartan_from(json::parse(text)), ParseError) << text;
}

}  // namespace
}  // namespace mctl
