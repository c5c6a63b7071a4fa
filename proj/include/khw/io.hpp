#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "khw/classical.hpp"
#include "khw/diagram.hpp"
#include "khw/homology.hpp"

namespace khw {

inline constexpr const char* kVersion = "1.0.0";

inline nlohmann::json diagram_to_json(const LinkDiagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  j["signs"] = nlohmann::json::array();
  for (const auto& c : d.crossings) {
    j["crossings"].push_back({c.e[0], c.e[1], c.e[2], c.e[3]});
    j["signs"].push_back(c.sign);
  }
  j["components"] = d.components;
  if (d.basepoint >= 0) j["basepoint"] = d.basepoint;
  return j;
}

inline LinkDiagram diagram_from_json(const nlohmann::json& j) {
  LinkDiagram d;
  const auto& cr = j.at("crossings");
  const auto& sg = j.at("signs");
  for (size_t i = 0; i < cr.size(); ++i) {
    Crossing c;
    for (int k = 0; k < 4; ++k) c.e[k] = cr[i][k].get<int>();
    c.sign = sg[i].get<int>();
    d.crossings.push_back(c);
  }
  d.components = j.at("components").get<std::vector<std::vector<int>>>();
  d.basepoint = j.value("basepoint", -1);
  d.check();
  return d;
}

inline nlohmann::json homology_to_json(const BigradedGroups& h, const Ring& ring) {
  nlohmann::json j;
  j["ring"] = ring.str();
  j["entries"] = nlohmann::json::array();
  for (const auto& [ij, g] : h.entries) {
    nlohmann::json e;
    e["i"] = ij.first;
    e["j"] = ij.second;
    e["rank"] = g.rank;
    e["torsion"] = g.torsion;
    j["entries"].push_back(e);
  }
  if (!h.is_zero()) {
    ThicknessInterval t = thickness(h);
    j["delta_min"] = t.delta_min;
    j["delta_max"] = t.delta_max;
    j["width"] = t.width();
  }
  return j;
}

inline BigradedGroups homology_from_json(const nlohmann::json& j) {
  BigradedGroups h;
  for (const auto& e : j.at("entries"))
    h.set(e.at("i").get<int>(), e.at("j").get<int>(),
          AbelianGroup{e.at("rank").get<long long>(),
                       e.at("torsion").get<std::vector<long long>>()});
  return h;
}

inline std::string homology_to_csv(const BigradedGroups& h) {
  std::ostringstream out;
  out << "i,j,rank,torsion\n";
  for (const auto& [ij, g] : h.entries) {
    out << ij.first << "," << ij.second << "," << g.rank << ",";
    for (size_t k = 0; k < g.torsion.size(); ++k)
      out << (k ? ";" : "") << g.torsion[k];
    out << "\n";
  }
  return out.str();
}

inline nlohmann::json classical_to_json(const LinkDiagram& d, int budget = 22) {
  nlohmann::json j;
  j["det"] = determinant(d);
  if (is_connected(d)) j["signature"] = signature(d);
  j["jones"] = jones_unnormalized(d, budget).str();
  return j;
}

// --- content-addressed result cache -----------------------------------------------

inline uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Cache key: canonical diagram, ring, reduced flag, code version.
inline std::string cache_key(const LinkDiagram& d, const Ring& ring, bool reduced) {
  std::string payload = d.canonical_key() + "|" + ring.str() + "|" +
                        (reduced ? "red" : "unred");
  if (reduced) payload += "@" + std::to_string(d.basepoint);
  payload += "|" + std::string(kVersion);
  std::ostringstream hex;
  hex << std::hex << fnv1a(payload);
  return hex.str();
}

inline std::optional<BigradedGroups> cache_load(const std::string& dir, const std::string& key) {
  if (dir.empty()) return std::nullopt;
  std::filesystem::path p = std::filesystem::path(dir) / (key + ".json");
  std::ifstream in(p);
  if (!in) return std::nullopt;
  nlohmann::json j;
  in >> j;
  return homology_from_json(j);
}

inline void cache_store(const std::string& dir, const std::string& key,
                        const BigradedGroups& h, const Ring& ring) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  std::filesystem::path p = std::filesystem::path(dir) / (key + ".json");
  std::ofstream out(p);
  out << homology_to_json(h, ring).dump(1) << "\n";
}

/// Homology with optional caching; hits never change reported numbers.
inline BigradedGroups homology_cached(const LinkDiagram& d, const Ring& ring,
                                      const HomologyOptions& opt, const std::string& cache_dir) {
  std::string key = cache_key(d, ring, opt.reduced);
  if (auto hit = cache_load(cache_dir, key)) return *hit;
  BigradedGroups h = homology(d, ring, opt);
  cache_store(cache_dir, key, h, ring);
  return h;
}

} // namespace khw
