#pragma once

// JSON files for hypergraphs and certificates.
//
// Hypergraph file:
//   {"format_version": 1, "r": R,
//    "vertices": [{"id", "label", "side"}, ...],
//    "edges": [[v, ...], ...],
//    "meta": {"family", "q", "nu", "recipe": {...}}}        (meta optional)
//
// Certificate file: the certificate fields plus the SHA-256 of the exact
// bytes of the hypergraph file it was computed from.

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ryser/constructions.hpp"
#include "ryser/error.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/solve.hpp"

namespace ryser::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

struct HypergraphFile {
  Hypergraph graph;
  std::optional<ConstructionRecipe> recipe;

  friend bool operator==(const HypergraphFile&, const HypergraphFile&) = default;
};

struct CertificateFile {
  Certificate cert;
  std::string input_digest;  // hex SHA-256 of the hypergraph file bytes

  friend bool operator==(const CertificateFile&, const CertificateFile&) = default;
};

inline std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::InvalidInput, "SHA-256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::InvalidInput, "write failed: " + path);
}

namespace detail {

[[noreturn]] inline void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

inline std::optional<RecipeItem::Kind> item_kind_from_string(std::string_view s) {
  for (auto k : {RecipeItem::Kind::Point, RecipeItem::Kind::Line, RecipeItem::Kind::PointSet})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

inline std::optional<CertificateKind> cert_kind_from_string(std::string_view s) {
  for (auto k : {CertificateKind::Matching, CertificateKind::Cover, CertificateKind::Ryser,
                 CertificateKind::NoDisjointPair, CertificateKind::DisjointPair})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

inline json recipe_to_json(const ConstructionRecipe& r) {
  json items = json::object();
  for (const auto& [name, it] : r.items)
    items[name] = {{"kind", to_string(it.kind)}, {"plane", it.plane}, {"ids", it.ids}};
  json named = json::object();
  for (const auto& [name, e] : r.named_edges) named[name] = e;
  return {{"items", items}, {"named_edges", named}, {"edge_classes", r.edge_classes}, {"s_candidates", r.s_candidates}};
}

inline ConstructionRecipe recipe_from_json(const json& meta) {
  ConstructionRecipe r;
  const auto fam = family_from_string(meta.at("family").get<std::string>());
  if (!fam) bad("unknown family " + meta.at("family").dump());
  r.family = *fam;
  r.q = meta.at("q").get<int>();
  r.nu = meta.at("nu").get<int>();
  const json& rec = meta.at("recipe");
  for (const auto& [name, it] : rec.at("items").items()) {
    const auto kind = item_kind_from_string(it.at("kind").get<std::string>());
    if (!kind) bad("unknown recipe item kind for " + name);
    r.items[name] = {*kind, it.at("plane").get<int>(), it.at("ids").get<std::vector<int>>()};
  }
  for (const auto& [name, e] : rec.at("named_edges").items()) r.named_edges[name] = e.get<int>();
  r.edge_classes = rec.at("edge_classes").get<std::vector<std::vector<int>>>();
  r.s_candidates = rec.at("s_candidates").get<int>();
  return r;
}

}  // namespace detail

inline json to_json(const HypergraphFile& f) {
  json vs = json::array();
  for (const auto& v : f.graph.vertices()) vs.push_back({{"id", v.id}, {"label", v.label}, {"side", v.side}});
  json j = {{"format_version", kFormatVersion}, {"r", f.graph.r()}, {"vertices", vs}, {"edges", f.graph.edges()}};
  if (f.recipe)
    j["meta"] = {{"family", to_string(f.recipe->family)},
                 {"q", f.recipe->q},
                 {"nu", f.recipe->nu},
                 {"recipe", detail::recipe_to_json(*f.recipe)}};
  return j;
}

inline std::string serialize(const HypergraphFile& f) { return to_json(f).dump(2) + "\n"; }

inline HypergraphFile parse_hypergraph(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (!j.is_object()) detail::bad("top level must be an object");
    if (j.at("format_version").get<int>() != kFormatVersion)
      detail::bad("unsupported format_version " + j.at("format_version").dump());
    HypergraphFile f{Hypergraph(j.at("r").get<int>()), std::nullopt};
    for (const auto& v : j.at("vertices")) {
      const int id = v.at("id").get<int>();
      if (id != f.graph.vertex_count())
        detail::bad("vertex ids must be 0..n-1 in order, got " + std::to_string(id));
      f.graph.add_vertex(v.at("label").get<std::string>(), v.at("side").get<int>());
    }
    for (const auto& e : j.at("edges")) {
      auto vs = e.get<std::vector<int>>();
      for (int v : vs)
        if (v < 0 || v >= f.graph.vertex_count()) detail::bad("edge references unknown vertex " + std::to_string(v));
      f.graph.add_edge(std::move(vs));
    }
    if (j.contains("meta") && !j.at("meta").is_null()) f.recipe = detail::recipe_from_json(j.at("meta"));
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed hypergraph file: ") + e.what());
  }
}

inline json to_json(const CertificateFile& f) {
  const auto& c = f.cert;
  json j = {{"format_version", kFormatVersion},
            {"kind", to_string(c.kind)},
            {"r", c.r},
            {"exhaustive", c.exhaustive},
            {"input_sha256", f.input_digest}};
  if (c.nu) j["nu"] = *c.nu;
  if (c.tau) j["tau"] = *c.tau;
  if (!c.matching.empty()) j["matching"] = c.matching;
  if (!c.cover.empty()) j["cover"] = c.cover;
  if (!c.families.empty()) j["families"] = c.families;
  if (c.kind == CertificateKind::Ryser) {
    j["ryser"] = c.ryser;
    j["conjecture_bound"] = c.conjecture_bound;
  }
  return j;
}

inline std::string serialize(const CertificateFile& f) { return to_json(f).dump(2) + "\n"; }

inline CertificateFile parse_certificate(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("format_version").get<int>() != kFormatVersion) detail::bad("unsupported certificate format_version");
    CertificateFile f;
    auto& c = f.cert;
    const auto kind = detail::cert_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) detail::bad("unknown certificate kind " + j.at("kind").dump());
    c.kind = *kind;
    c.r = j.at("r").get<int>();
    c.exhaustive = j.at("exhaustive").get<bool>();
    f.input_digest = j.at("input_sha256").get<std::string>();
    if (j.contains("nu")) c.nu = j["nu"].get<int>();
    if (j.contains("tau")) c.tau = j["tau"].get<int>();
    c.matching = j.value("matching", std::vector<int>{});
    c.cover = j.value("cover", std::vector<int>{});
    c.families = j.value("families", std::vector<std::vector<int>>{});
    c.ryser = j.value("ryser", false);
    c.conjecture_bound = j.value("conjecture_bound", false);
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed certificate file: ") + e.what());
  }
}

}  // namespace ryser::io
