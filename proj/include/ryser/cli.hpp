#pragma once

// Command-line front end. Exit codes: 0 success, 1 invalid input or flags,
// 2 negative answer (unmet expectation, disjoint pair found, no embedding),
// 3 inconclusive decomposition search.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ryser/constructions.hpp"
#include "ryser/decompose.hpp"
#include "ryser/embedding.hpp"
#include "ryser/io.hpp"
#include "ryser/oracles.hpp"
#include "ryser/solve.hpp"

namespace ryser::cli {

enum Exit : int { kOk = 0, kInvalid = 1, kNegative = 2, kInconclusive = 3 };

namespace detail {

using nlohmann::json;

inline json kernel_json(const Hypergraph& h, const RyserKernel& k) {
  std::vector<std::string> labels;
  for (int v : k.support) labels.push_back(h.vertex(v).label);
  return {{"edges", k.edge_ids}, {"support", k.support}, {"support_labels", labels}, {"tau", k.tau}};
}

inline std::vector<std::string> labels_of(const Hypergraph& h, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int v : ids) out.push_back(h.vertex(v).label);
  return out;
}

// Problems found when re-checking a stored certificate; empty means it holds.
inline std::vector<std::string> check_certificate(const Hypergraph& h, const std::string& input_bytes,
                                                  const io::CertificateFile& cf) {
  std::vector<std::string> problems;
  const auto& c = cf.cert;
  if (cf.input_digest != io::sha256_hex(input_bytes)) problems.push_back("input digest does not match");
  if (c.r != h.r()) problems.push_back("r differs");
  switch (c.kind) {
    case CertificateKind::Matching:
    case CertificateKind::Cover:
    case CertificateKind::Ryser: {
      if (!recheck(h, c)) problems.push_back("witness does not re-verify");
      if (c.nu && *c.nu != *matching_number(h).nu) problems.push_back("nu differs from recomputation");
      if (c.tau && *c.tau != *cover_number(h).tau) problems.push_back("tau differs from recomputation");
      break;
    }
    case CertificateKind::DisjointPair: {
      if (c.families.size() != 2) {
        problems.push_back("a disjoint pair needs two families");
        break;
      }
      std::vector<std::vector<int>> supports;
      for (const auto& fam : c.families) {
        for (int e : fam)
          if (e < 0 || e >= h.edge_count()) {
            problems.push_back("family references unknown edge");
            return problems;
          }
        const auto sub = restrict(h, fam);
        if (*matching_number(sub).nu != 1) problems.push_back("a family is not intersecting");
        if (*cover_number(sub).tau < h.r() - 1) problems.push_back("a family has tau < r-1");
        std::vector<int> s;
        for (int e : fam) s.insert(s.end(), h.edge(e).begin(), h.edge(e).end());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        supports.push_back(std::move(s));
      }
      std::vector<int> common;
      std::set_intersection(supports[0].begin(), supports[0].end(), supports[1].begin(), supports[1].end(),
                            std::back_inserter(common));
      if (!common.empty()) problems.push_back("family supports intersect");
      break;
    }
    case CertificateKind::NoDisjointPair: {
      const auto res = find_disjoint_ryser_pair(h);
      if (res.pair) problems.push_back("recomputation found a disjoint pair");
      else if (c.exhaustive && res.outcome != PairOutcome::NoneExhaustive)
        problems.push_back("recomputation was not exhaustive");
      break;
    }
  }
  return problems;
}

struct Options {
  // build
  std::string family;
  int q = 0;
  int nu = 0;
  std::string out;
  // verify / decompose
  std::string in;
  std::optional<int> expect_nu, expect_tau, expect_r;
  std::string cert;
  std::string check_cert;
  std::uint64_t cap = kDefaultCliqueCap;
  // oracle
  std::string which;
  bool summary = false;
  // embed
  std::string small, big;
};

inline int do_build(const Options& o, std::ostream& out) {
  const auto fam = family_from_string(o.family);
  if (!fam) throw Error(ErrorCode::InvalidInput, "unknown family " + o.family);
  int nu = o.nu;
  if (nu == 0) nu = (*fam == Family::H1 || *fam == Family::H2 || *fam == Family::G1) ? 2 : 1;
  if ((*fam == Family::Truncated || *fam == Family::ConicTruncated) && nu != 1)
    throw Error(ErrorCode::InvalidInput, "--nu must be 1 for " + o.family);
  if (*fam == Family::G1 && nu != 2) throw Error(ErrorCode::InvalidInput, "--nu must be 2 for g1");
  if (*fam != Family::G1 && o.q == 0) throw Error(ErrorCode::InvalidInput, "--q is required for " + o.family);
  auto c = build(*fam, *fam == Family::G1 ? 3 : o.q, nu);
  io::write_file(o.out, io::serialize(io::HypergraphFile{c.graph, c.recipe}));
  out << json{{"family", o.family}, {"q", c.recipe.q}, {"nu", c.recipe.nu}, {"r", c.graph.r()},
              {"vertices", c.graph.vertex_count()}, {"edges", c.graph.edge_count()}, {"out", o.out}}
             .dump()
      << "\n";
  return kOk;
}

inline int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto bytes = io::read_file(o.in);
  const auto file = io::parse_hypergraph(bytes);
  const auto& h = file.graph;
  json rep;
  bool ok = true;

  const auto val = validate_partite(h);
  rep["partite"] = val.ok();
  if (!val.ok()) {
    ok = false;
    json vs = json::array();
    for (const auto& v : val.violations) vs.push_back(v.message);
    rep["violations"] = vs;
  }

  const auto cert = is_ryser(h);
  rep["r"] = h.r();
  rep["nu"] = *cert.nu;
  rep["tau"] = *cert.tau;
  rep["ryser"] = cert.ryser;
  rep["matching"] = cert.matching;
  rep["cover"] = cert.cover;
  rep["cover_labels"] = labels_of(h, cert.cover);

  auto expect = [&](const char* name, const std::optional<int>& want, int got) {
    if (!want) return;
    const bool met = *want == got;
    rep["expectations"][name] = {{"expected", *want}, {"actual", got}, {"met", met}};
    if (!met) {
      ok = false;
      err << name << ": expected " << *want << ", got " << got << "\n";
    }
  };
  expect("r", o.expect_r, h.r());
  expect("nu", o.expect_nu, *cert.nu);
  expect("tau", o.expect_tau, *cert.tau);

  if (!o.check_cert.empty()) {
    const auto problems = check_certificate(h, bytes, io::parse_certificate(io::read_file(o.check_cert)));
    rep["certificate_check"] = {{"file", o.check_cert}, {"ok", problems.empty()}, {"problems", problems}};
    if (!problems.empty()) ok = false;
  }
  if (!o.cert.empty()) io::write_file(o.cert, io::serialize(io::CertificateFile{cert, io::sha256_hex(bytes)}));

  rep["ok"] = ok;
  out << rep.dump(2) << "\n";
  return ok ? kOk : kNegative;
}

inline int do_decompose(const Options& o, std::ostream& out) {
  const auto bytes = io::read_file(o.in);
  const auto h = io::parse_hypergraph(bytes).graph;
  const auto res = find_disjoint_ryser_pair(h, o.cap);
  json rep = {{"outcome", to_string(res.outcome)},
              {"exhaustive", res.outcome != PairOutcome::Inconclusive},
              {"kernels", res.kernel_count},
              {"cliques_visited", res.visited}};
  if (res.pair) rep["pair"] = {kernel_json(h, res.pair->first), kernel_json(h, res.pair->second)};
  if (!o.cert.empty())
    io::write_file(o.cert, io::serialize(io::CertificateFile{to_certificate(h, res), io::sha256_hex(bytes)}));
  out << rep.dump(2) << "\n";
  switch (res.outcome) {
    case PairOutcome::NoneExhaustive: return kOk;
    case PairOutcome::Found: return kNegative;
    case PairOutcome::Inconclusive: return kInconclusive;
  }
  return kInvalid;
}

inline int do_oracle(const Options& o, std::ostream& out) {
  BlockerReport rep;
  if (o.which == "blocking") rep = min_blocking_sets(o.q);
  else if (o.which == "conic-blockers") rep = classify_conic_blockers(o.q);
  else rep = min_nontrivial_blocking(o.q);
  json hist = json::object();
  for (const auto& [k, n] : rep.histogram()) hist[std::string(to_string(k))] = n;
  json j = {{"q", rep.q}, {"target", to_string(rep.target)}, {"minimum", rep.minimum}, {"count", rep.count()},
            {"classes", hist}};
  if (!o.summary) {
    const ProjectivePlane plane(rep.q);
    json bs = json::array();
    for (const auto& b : rep.blockers) {
      std::vector<std::string> pts;
      for (int p : b.points) pts.push_back(plane.point_label(p));
      bs.push_back({{"class", to_string(b.kind)}, {"points", pts}});
    }
    j["blockers"] = bs;
  }
  out << j.dump(2) << "\n";
  return kOk;
}

inline int do_embed(const Options& o, std::ostream& out) {
  const auto small = io::parse_hypergraph(io::read_file(o.small)).graph;
  const auto big = io::parse_hypergraph(io::read_file(o.big)).graph;
  const auto emb = find_embedding(small, big);
  if (!emb) {
    out << json{{"embedding", nullptr}}.dump() << "\n";
    return kNegative;
  }
  json vmap = json::object();
  for (int v = 0; v < small.vertex_count(); ++v)
    vmap[small.vertex(v).label] = big.vertex(emb->vertex_map[static_cast<std::size_t>(v)]).label;
  out << json{{"embedding", {{"side_map", emb->side_map}, {"vertex_map", vmap}, {"edge_map", emb->edge_map}}}}.dump(2)
      << "\n";
  return kOk;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build and check Ryser-extremal hypergraphs from projective planes", "ryser"};
  app.require_subcommand(1);
  detail::Options o;

  auto* build = app.add_subcommand("build", "construct a hypergraph and write it as JSON");
  build->add_option("--family", o.family, "truncated | conic | h1 | h2 | g1")
      ->required()
      ->check(CLI::IsMember({"truncated", "conic", "h1", "h2", "g1"}));
  build->add_option("--q", o.q, "field order");
  build->add_option("--nu", o.nu, "number of planes (matching number)");
  build->add_option("--out", o.out, "output file")->required();

  auto* verify = app.add_subcommand("verify", "compute nu, tau and the Ryser predicate");
  verify->add_option("--in", o.in)->required();
  verify->add_option("--expect-nu", o.expect_nu);
  verify->add_option("--expect-tau", o.expect_tau);
  verify->add_option("--expect-r", o.expect_r);
  verify->add_option("--cert", o.cert, "write a certificate here");
  verify->add_option("--check-cert", o.check_cert, "re-check an existing certificate");

  auto* decompose = app.add_subcommand("decompose", "search for two disjoint intersecting Ryser subhypergraphs");
  decompose->add_option("--in", o.in)->required();
  decompose->add_option("--cap", o.cap, "maximum number of cliques to visit");
  decompose->add_option("--cert", o.cert, "write a certificate here");

  auto* oracle = app.add_subcommand("oracle", "exhaustive blocking-set searches");
  oracle->add_option("which", o.which)->required()->check(CLI::IsMember({"blocking", "conic-blockers", "nontrivial"}));
  oracle->add_option("--q", o.q)->required();
  oracle->add_flag("--summary", o.summary, "omit the list of blockers");

  auto* embed = app.add_subcommand("embed", "find a subhypergraph embedding");
  embed->add_option("--small", o.small)->required();
  embed->add_option("--big", o.big)->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (*build) return detail::do_build(o, out);
    if (*verify) return detail::do_verify(o, out, err);
    if (*decompose) return detail::do_decompose(o, out);
    if (*oracle) return detail::do_oracle(o, out);
    if (*embed) return detail::do_embed(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace ryser::cli
