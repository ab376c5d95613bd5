/* Copyright 2026 The bikernel Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include "bikernel/io.hpp"

#include "io_util.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "bikernel/error.hpp"

namespace bikernel {

using namespace io_detail;

json to_json(const Bicat& p) {
  json j;
  j["objects"] = p.objects;
  json ones = json::object(), twos = json::object();
  for (const Cell& c : p.one_cells) {
    ones[c.name] = {{"src", p.name0(c.src)}, {"tgt", p.name0(c.tgt)}};
  }
  for (const Cell& c : p.two_cells) {
    twos[c.name] = {{"src", p.name1(c.src)}, {"tgt", p.name1(c.tgt)}};
  }
  j["one_cells"] = ones;
  j["two_cells"] = twos;

  auto n1 = [&](Id f) { return p.name1(f); };
  auto n2 = [&](Id t) { return p.name2(t); };
  json id1 = json::object();
  for (Id a = 0; a < Id(p.size0()); ++a) {
    if (p.id1(a) != kNone) id1[p.name0(a)] = n1(p.id1(a));
  }
  j["id1"] = id1;
  auto unary = [&](const std::vector<Id>& tab) {
    json out = json::object();
    for (Id f = 0; f < Id(tab.size()); ++f) {
      if (tab[f] != kNone) out[n1(f)] = n2(tab[f]);
    }
    return out;
  };
  j["id2"] = unary(p.id2_tab);
  j["lunitor"] = unary(p.lunitor_tab);
  j["lunitor_inv"] = unary(p.lunitor_inv_tab);
  j["runitor"] = unary(p.runitor_tab);
  j["runitor_inv"] = unary(p.runitor_inv_tab);

  json comp1 = json::object(), vcomp = json::object(), lw = json::object(),
       rw = json::object();
  for (const auto& [f, g, v] : p.comp1_tab.entries()) comp1[join_key({n1(f), n1(g)})] = n1(v);
  for (const auto& [a, b, v] : p.vcomp_tab.entries()) vcomp[join_key({n2(a), n2(b)})] = n2(v);
  for (const auto& [f, a, v] : p.lwhisker_tab.entries()) lw[join_key({n1(f), n2(a)})] = n2(v);
  for (const auto& [a, h, v] : p.rwhisker_tab.entries()) rw[join_key({n2(a), n1(h)})] = n2(v);
  j["comp1"] = comp1;
  j["vcomp"] = vcomp;
  j["lwhisker"] = lw;
  j["rwhisker"] = rw;
  json la = json::object(), lai = json::object();
  for (const auto& [f, g, h, v] : p.lassoc_tab.entries()) la[join_key({n1(f), n1(g), n1(h)})] = n2(v);
  for (const auto& [f, g, h, v] : p.lassoc_inv_tab.entries()) lai[join_key({n1(f), n1(g), n1(h)})] = n2(v);
  j["lassoc"] = la;
  j["lassoc_inv"] = lai;
  return j;
}

Bicat bicat_from_json(const json& j) {
  static const std::set<std::string> kKeys = {
      "objects", "one_cells", "two_cells", "id1", "comp1", "id2", "vcomp",
      "lwhisker", "rwhisker", "lunitor", "lunitor_inv", "runitor",
      "runitor_inv", "lassoc", "lassoc_inv"};
  expect_object(j, "$");
  for (const auto& [k, v] : j.items()) {
    if (!kKeys.count(k)) parse_fail("$." + k, "unknown key");
  }
  Bicat p;
  Names names;
  auto field = [&](const char* key) -> const json* {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
  };

  if (const json* objs = field("objects")) {
    if (!objs->is_array()) parse_fail("$.objects", "expected an array");
    for (std::size_t i = 0; i < objs->size(); ++i) {
      std::string path = "$.objects[" + std::to_string(i) + "]";
      std::string tok = expect_string((*objs)[i], path);
      check_token(tok, path);
      if (!names.obj.emplace(tok, p.add_object(tok)).second) {
        Fail(ErrorCode::kDuplicateId, path + ": object '" + tok + "'");
      }
    }
  }
  auto cells = [&](const char* key, auto& own, const auto& ends, const char* tier,
                   auto add) {
    const json* tab = field(key);
    if (tab == nullptr) return;
    std::string base = std::string("$.") + key;
    expect_object(*tab, base);
    for (const auto& [tok, v] : tab->items()) {
      std::string path = base + "." + tok;
      check_token(tok, path);
      expect_object(v, path);
      for (const auto& [k, unused] : v.items()) {
        if (k != "src" && k != "tgt") parse_fail(path + "." + k, "unknown key");
      }
      if (!v.contains("src") || !v.contains("tgt")) parse_fail(path, "needs src and tgt");
      Id s = Names::get(ends, expect_string(v["src"], path + ".src"), path + ".src", tier);
      Id t = Names::get(ends, expect_string(v["tgt"], path + ".tgt"), path + ".tgt", tier);
      own.emplace(tok, add(tok, s, t));
    }
  };
  cells("one_cells", names.one, names.obj, "object",
        [&](const std::string& tok, Id s, Id t) { return p.add_one_cell(tok, s, t); });
  cells("two_cells", names.two, names.one, "1-cell",
        [&](const std::string& tok, Id s, Id t) { return p.add_two_cell(tok, s, t); });
  p.size_tables();

  // Table readers. Keys are split on ';' and each part resolved in its tier.
  auto read = [&](const char* key, std::initializer_list<int> key_tiers, int value_tier,
                  auto store) {
    const json* tab = field(key);
    if (tab == nullptr) return;
    std::string base = std::string("$.") + key;
    expect_object(*tab, base);
    std::vector<int> tiers(key_tiers);
    for (const auto& [k, v] : tab->items()) {
      std::string path = base + "." + k;
      std::vector<std::string> parts = split_key(k);
      if (parts.size() != tiers.size()) {
        parse_fail(path, "expected " + std::to_string(tiers.size()) + " key components");
      }
      std::vector<Id> ids;
      auto lookup = [&](int tier, const std::string& tok) {
        switch (tier) {
          case 0: return Names::get(names.obj, tok, path, "object");
          case 1: return Names::get(names.one, tok, path, "1-cell");
          default: return Names::get(names.two, tok, path, "2-cell");
        }
      };
      for (std::size_t i = 0; i < parts.size(); ++i) ids.push_back(lookup(tiers[i], parts[i]));
      Id val = lookup(value_tier, expect_string(v, path));
      store(ids, val);
    }
  };
  read("id1", {0}, 1, [&](const std::vector<Id>& k, Id v) { p.id1_tab[k[0]] = v; });
  read("comp1", {1, 1}, 1, [&](const std::vector<Id>& k, Id v) { p.comp1_tab.set(k[0], k[1], v); });
  read("id2", {1}, 2, [&](const std::vector<Id>& k, Id v) { p.id2_tab[k[0]] = v; });
  read("vcomp", {2, 2}, 2, [&](const std::vector<Id>& k, Id v) { p.vcomp_tab.set(k[0], k[1], v); });
  read("lwhisker", {1, 2}, 2, [&](const std::vector<Id>& k, Id v) { p.lwhisker_tab.set(k[0], k[1], v); });
  read("rwhisker", {2, 1}, 2, [&](const std::vector<Id>& k, Id v) { p.rwhisker_tab.set(k[0], k[1], v); });
  read("lunitor", {1}, 2, [&](const std::vector<Id>& k, Id v) { p.lunitor_tab[k[0]] = v; });
  read("lunitor_inv", {1}, 2, [&](const std::vector<Id>& k, Id v) { p.lunitor_inv_tab[k[0]] = v; });
  read("runitor", {1}, 2, [&](const std::vector<Id>& k, Id v) { p.runitor_tab[k[0]] = v; });
  read("runitor_inv", {1}, 2, [&](const std::vector<Id>& k, Id v) { p.runitor_inv_tab[k[0]] = v; });
  read("lassoc", {1, 1, 1}, 2,
       [&](const std::vector<Id>& k, Id v) { p.lassoc_tab.set(k[0], k[1], k[2], v); });
  read("lassoc_inv", {1, 1, 1}, 2,
       [&](const std::vector<Id>& k, Id v) { p.lassoc_inv_tab.set(k[0], k[1], k[2], v); });
  p.finalize();
  return p;
}

json to_json(const Report& r) {
  json j;
  j["status"] = r.pass() ? "pass" : "fail";
  json vs = json::array();
  for (const Violation& v : r.violations) {
    vs.push_back({{"law", v.law}, {"cells", v.cells}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  j["violations"] = vs;
  j["violation_count"] = r.violation_count;
  j["instantiations"] = r.instantiations;
  return j;
}

json to_json(const FiniteCategory& c) {
  json j;
  j["name"] = c.name;
  j["objects"] = c.objects;
  json mors = json::object(), ids = json::object(), comp = json::object();
  for (const Cell& m : c.morphisms) {
    mors[m.name] = {{"src", c.objects[m.src]}, {"tgt", c.objects[m.tgt]}};
  }
  for (Id x = 0; x < Id(c.size0()); ++x) ids[c.objects[x]] = c.morphisms[c.id(x)].name;
  for (const auto& [f, g, h] : c.compose.entries()) {
    comp[join_key({c.morphisms[f].name, c.morphisms[g].name})] = c.morphisms[h].name;
  }
  j["morphisms"] = mors;
  j["id"] = ids;
  j["comp"] = comp;
  return j;
}

FiniteCategory category_from_json(const json& j) {
  expect_object(j, "$");
  for (const auto& [k, v] : j.items()) {
    if (k != "name" && k != "objects" && k != "morphisms" && k != "id" && k != "comp") {
      parse_fail("$." + k, "unknown key");
    }
  }
  FiniteCategory c;
  c.name = j.contains("name") ? expect_string(j["name"], "$.name") : "C";
  std::unordered_map<std::string, Id> objs, mors;
  if (j.contains("objects")) {
    for (std::size_t i = 0; i < j["objects"].size(); ++i) {
      std::string path = "$.objects[" + std::to_string(i) + "]";
      std::string tok = expect_string(j["objects"][i], path);
      if (!objs.emplace(tok, c.add_object(tok)).second) {
        Fail(ErrorCode::kDuplicateId, path + ": object '" + tok + "'");
      }
    }
  }
  if (j.contains("morphisms")) {
    for (const auto& [tok, v] : expect_object(j["morphisms"], "$.morphisms").items()) {
      std::string path = "$.morphisms." + tok;
      check_token(tok, path);
      expect_object(v, path);
      if (!v.contains("src") || !v.contains("tgt")) parse_fail(path, "needs src and tgt");
      Id s = Names::get(objs, expect_string(v["src"], path + ".src"), path, "object");
      Id t = Names::get(objs, expect_string(v["tgt"], path + ".tgt"), path, "object");
      mors.emplace(tok, c.add_morphism(tok, s, t));
    }
  }
  if (j.contains("id")) {
    for (const auto& [tok, v] : expect_object(j["id"], "$.id").items()) {
      std::string path = "$.id." + tok;
      c.identity[Names::get(objs, tok, path, "object")] =
          Names::get(mors, expect_string(v, path), path, "morphism");
    }
  }
  if (j.contains("comp")) {
    for (const auto& [k, v] : expect_object(j["comp"], "$.comp").items()) {
      std::string path = "$.comp." + k;
      auto parts = split_key(k);
      if (parts.size() != 2) parse_fail(path, "expected 2 key components");
      c.compose.set(Names::get(mors, parts[0], path, "morphism"),
                    Names::get(mors, parts[1], path, "morphism"),
                    Names::get(mors, expect_string(v, path), path, "morphism"));
    }
  }
  c.index();
  return c;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kParseError, path + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParseError, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) Fail(ErrorCode::kParseError, path + ": cannot write");
  out << j.dump(2) << "\n";
}

}  // namespace bikernel
