#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "ryser/cli.hpp"

using namespace ryser;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ryser_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST(Io, RoundTripEveryFamily) {
  std::vector<Construction> all{truncated_plane(3), truncated_plane(4), truncated_plane(5), conic_truncated(3),
                                conic_truncated(4), conic_truncated(5), build_g1()};
  for (int q : {3, 5})
    for (int nu : {2, 3}) all.push_back(build_h1(q, nu));
  for (int q : {4, 5})
    for (int nu : {2, 3}) all.push_back(build_h2(q, nu));
  for (const auto& c : all) {
    const io::HypergraphFile f{c.graph, c.recipe};
    const auto text = io::serialize(f);
    EXPECT_EQ(io::parse_hypergraph(text), f);
    EXPECT_EQ(io::serialize(io::parse_hypergraph(text)), text);
  }
}

TEST(Io, MetaIsOptional) {
  const io::HypergraphFile f{disjoint_union(truncated_plane(3).graph, truncated_plane(3).graph), std::nullopt};
  EXPECT_EQ(io::parse_hypergraph(io::serialize(f)), f);
}

TEST(Io, MalformedInputIsRejected) {
  for (const char* text : {"", "[]", "{\"format_version\": 9}", "{\"format_version\":1,\"r\":2,\"vertices\":[{\"id\":1,\"label\":\"a\",\"side\":0}],\"edges\":[]}",
                           "{\"format_version\":1,\"r\":2,\"vertices\":[],\"edges\":[[0,1]]}"}) {
    try {
      (void)io::parse_hypergraph(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
    }
  }
}

TEST(Io, Sha256KnownVector) {
  EXPECT_EQ(io::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Io, CertificateRoundTrip) {
  const io::CertificateFile f{is_ryser(build_h1(3, 2).graph), io::sha256_hex("x")};
  EXPECT_EQ(io::parse_certificate(io::serialize(f)), f);
}

TEST_F(CliTest, BuildVerifyDecompose) {
  const auto h1 = path("h1.json"), cert = path("cert.json"), dcert = path("dcert.json");
  ASSERT_EQ(run({"build", "--family", "h1", "--q", "3", "--nu", "2", "--out", h1}).code, 0);
  const auto v = run({"verify", "--in", h1, "--expect-nu", "2", "--expect-tau", "6", "--expect-r", "4", "--cert", cert});
  EXPECT_EQ(v.code, 0) << v.err;
  const auto parsed = nlohmann::json::parse(v.out);
  EXPECT_EQ(parsed["tau"], 6);
  EXPECT_EQ(parsed["ryser"], true);

  EXPECT_EQ(run({"verify", "--in", h1, "--check-cert", cert}).code, 0);

  const auto d = run({"decompose", "--in", h1, "--cert", dcert});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(nlohmann::json::parse(d.out)["outcome"], "None");
  const auto dc = io::parse_certificate(io::read_file(dcert));
  EXPECT_EQ(dc.cert.kind, CertificateKind::NoDisjointPair);
  EXPECT_TRUE(dc.cert.exhaustive);
  EXPECT_EQ(run({"verify", "--in", h1, "--check-cert", dcert}).code, 0);
}

TEST_F(CliTest, UnmetExpectationExitsTwo) {
  const auto h1 = path("h1.json");
  ASSERT_EQ(run({"build", "--family", "h1", "--q", "3", "--out", h1}).code, 0);
  const auto v = run({"verify", "--in", h1, "--expect-tau", "7"});
  EXPECT_EQ(v.code, 2);
  EXPECT_NE(v.err.find("tau"), std::string::npos);
}

TEST_F(CliTest, CertificateForOtherInputIsRejected) {
  const auto a = path("a.json"), b = path("b.json"), cert = path("cert.json");
  ASSERT_EQ(run({"build", "--family", "truncated", "--q", "3", "--out", a}).code, 0);
  ASSERT_EQ(run({"build", "--family", "conic", "--q", "3", "--out", b}).code, 0);
  ASSERT_EQ(run({"verify", "--in", a, "--cert", cert}).code, 0);
  const auto v = run({"verify", "--in", b, "--check-cert", cert});
  EXPECT_EQ(v.code, 2);
  EXPECT_NE(v.out.find("digest"), std::string::npos);
}

TEST_F(CliTest, TamperedCertificateIsRejected) {
  const auto h = path("h.json"), cert = path("cert.json");
  ASSERT_EQ(run({"build", "--family", "g1", "--out", h}).code, 0);
  ASSERT_EQ(run({"verify", "--in", h, "--cert", cert}).code, 0);
  auto f = io::parse_certificate(io::read_file(cert));
  f.cert.tau = *f.cert.tau - 1;
  f.cert.cover.pop_back();
  io::write_file(cert, io::serialize(f));
  EXPECT_EQ(run({"verify", "--in", h, "--check-cert", cert}).code, 2);
}

TEST_F(CliTest, DecomposeFindsPairInDisjointCopies) {
  const auto u = path("u.json"), cert = path("cert.json");
  const auto tc = conic_truncated(3).graph;
  io::write_file(u, io::serialize(io::HypergraphFile{disjoint_union(tc, tc), std::nullopt}));
  const auto d = run({"decompose", "--in", u, "--cert", cert});
  EXPECT_EQ(d.code, 2);
  EXPECT_EQ(nlohmann::json::parse(d.out)["pair"].size(), 2u);
  EXPECT_EQ(run({"verify", "--in", u, "--check-cert", cert}).code, 0);
}

TEST_F(CliTest, DecomposeCapIsInconclusive) {
  const auto h = path("h2.json");
  ASSERT_EQ(run({"build", "--family", "h2", "--q", "4", "--out", h}).code, 0);
  EXPECT_EQ(run({"decompose", "--in", h, "--cap", "20"}).code, 3);
}

TEST_F(CliTest, BadInputsExitOne) {
  const auto x = path("x.json");
  const auto r = run({"build", "--family", "h1", "--q", "4", "--nu", "2", "--out", x});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("NotOddPrime"), std::string::npos);
  EXPECT_EQ(run({"build", "--family", "nope", "--q", "3", "--out", x}).code, 1);
  EXPECT_EQ(run({"verify", "--in", path("missing.json")}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  const auto o = run({"oracle", "nontrivial", "--q", "7"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("SearchTooLarge"), std::string::npos);
}

TEST_F(CliTest, OracleAndEmbed) {
  const auto o = run({"oracle", "blocking", "--q", "3"});
  ASSERT_EQ(o.code, 0);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["minimum"], 4);
  EXPECT_EQ(j["classes"]["Line"], 13);
  EXPECT_EQ(j["blockers"].size(), 13u);
  EXPECT_FALSE(nlohmann::json::parse(run({"oracle", "nontrivial", "--q", "4", "--summary"}).out).contains("blockers"));

  const auto g = path("g1.json"), h = path("h1.json");
  ASSERT_EQ(run({"build", "--family", "g1", "--out", g}).code, 0);
  ASSERT_EQ(run({"build", "--family", "h1", "--q", "3", "--out", h}).code, 0);
  const auto e = run({"embed", "--small", g, "--big", h});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(nlohmann::json::parse(e.out)["embedding"]["vertex_map"]["v12"], "p1:(0:1:0)");
  EXPECT_EQ(run({"embed", "--small", h, "--big", g}).code, 2);
}

TEST_F(CliTest, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("decompose"), std::string::npos);
}
