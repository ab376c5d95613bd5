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
#include "bikernel/serialize.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

#include "io_util.hpp"

namespace bikernel {

using namespace io_detail;

namespace {

const std::set<std::string> kTableKeys = {"id1",     "comp1",       "id2",     "vcomp",
                                          "lwhisker", "rwhisker",   "lunitor", "lunitor_inv",
                                          "runitor", "runitor_inv", "lassoc",  "lassoc_inv"};

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& path) {
  expect_object(j, path);
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) parse_fail(path + "." + k, "unknown key");
  }
}

const json& member(const json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) parse_fail(path, "missing key '" + key + "'");
  return *it;
}

Id resolved(Id id, const std::string& path, const std::string& tok, const char* what) {
  if (id == kNone) Fail(ErrorCode::kDanglingReference, path + ": unknown " + std::string(what) + " '" + tok + "'");
  return id;
}

Id obj_of(const Bicat& b, const json& v, const std::string& path) {
  const std::string t = expect_string(v, path);
  return resolved(b.find0(t), path, t, "object");
}
Id one_of(const Bicat& b, const json& v, const std::string& path) {
  const std::string t = expect_string(v, path);
  return resolved(b.find1(t), path, t, "1-cell");
}
Id two_of(const Bicat& b, const json& v, const std::string& path) {
  const std::string t = expect_string(v, path);
  return resolved(b.find2(t), path, t, "2-cell");
}
Id cobj_of(const FiniteCategory& c, const json& v, const std::string& path) {
  const std::string t = expect_string(v, path);
  return resolved(c.find_object(t), path, t, "object");
}
Id cmor_of(const FiniteCategory& c, const json& v, const std::string& path) {
  const std::string t = expect_string(v, path);
  return resolved(c.find_morphism(t), path, t, "morphism");
}

// A map keyed by every cell of one tier, read into a dense vector.
template <typename KeyName, typename Value>
std::vector<Id> dense(const json& j, std::size_t n, KeyName key_name, Value value, const std::string& path) {
  expect_object(j, path);
  std::vector<Id> out(n, kNone);
  for (Id i = 0; i < Id(n); ++i) {
    const std::string k = key_name(i);
    auto it = j.find(k);
    if (it == j.end()) parse_fail(path, "missing entry for '" + k + "'");
    out[i] = value(*it, path + "." + k);
  }
  if (j.size() != n) {
    for (const auto& [k, v] : j.items()) {
      bool known = false;
      for (Id i = 0; i < Id(n) && !known; ++i) known = key_name(i) == k;
      if (!known) parse_fail(path + "." + k, "unknown key");
    }
  }
  return out;
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) parse_fail(path + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(j[i].get<int>());
  }
  return out;
}

json witness_json(const UnivalenceWitness& w) {
  return {{"cells", w.cells}, {"count", w.count}, {"non_canonical", w.non_canonical}};
}

json load_inline_or_path(const json& j, const std::string& base_dir, const std::string& path) {
  if (j.is_string()) {
    std::filesystem::path p(j.get<std::string>());
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    return read_json_file(p.string());
  }
  expect_object(j, path);
  return j;
}

}  // namespace

json to_json(const UnivalenceReport& r) {
  json j;
  j["status"] = r.pass() ? "pass" : "fail";
  j["local_checked"] = r.local_checked;
  j["global_checked"] = r.global_checked;
  json local = json::array(), global = json::array();
  for (const UnivalenceWitness& w : r.local) local.push_back(witness_json(w));
  for (const UnivalenceWitness& w : r.global) global.push_back(witness_json(w));
  j["local"] = local;
  j["global"] = global;
  return j;
}

json to_json(const DispBicat& d) {
  const Bicat& B = *d.base;
  const Bicat& T = d.total;
  json j = to_json(T);
  j.erase("objects");
  j.erase("one_cells");
  j.erase("two_cells");
  j["base"] = to_json(B);
  json d0 = json::object(), d1 = json::object(), d2 = json::object();
  for (Id x = 0; x < Id(T.size0()); ++x) d0[T.name0(x)] = B.name0(d.over0[x]);
  for (Id u = 0; u < Id(T.size1()); ++u) {
    d1[T.name1(u)] = {{"over", B.name1(d.over1[u])}, {"src", T.name0(T.src1(u))}, {"tgt", T.name0(T.tgt1(u))}};
  }
  for (Id m = 0; m < Id(T.size2()); ++m) {
    d2[T.name2(m)] = {{"over", B.name2(d.over2[m])}, {"src", T.name1(T.src2(m))}, {"tgt", T.name1(T.tgt2(m))}};
  }
  j["d0"] = d0;
  j["d1"] = d1;
  j["d2"] = d2;
  return j;
}

DispBicat disp_from_json(const json& j, const std::string& base_dir) {
  std::set<std::string> allowed = kTableKeys;
  allowed.insert({"base", "d0", "d1", "d2"});
  only_keys(j, allowed, "$");
  BicatPtr base = share(bicat_from_json(load_inline_or_path(member(j, "base", "$"), base_dir, "$.base")));
  const Bicat& B = *base;

  // The total presentation, with the over-cells kept aside.
  json p = json::object();
  p["objects"] = json::array();
  p["one_cells"] = json::object();
  p["two_cells"] = json::object();
  std::map<std::string, std::string> over0, over1, over2;
  auto local_of = [&](const std::string& tok, const std::string& over, const std::string& path) {
    if (tok.size() <= over.size() + 1 || tok.compare(0, over.size(), over) != 0 || tok[over.size()] != '|') {
      parse_fail(path, "token must be '" + over + "|<local>'");
    }
    return tok.substr(over.size() + 1);
  };
  if (j.contains("d0")) {
    for (const auto& [tok, v] : expect_object(j["d0"], "$.d0").items()) {
      const std::string path = "$.d0." + tok;
      check_token(tok, path);
      obj_of(B, v, path);
      local_of(tok, v.get<std::string>(), path);
      over0[tok] = v.get<std::string>();
      p["objects"].push_back(tok);
    }
  }
  auto cells = [&](const char* key, const char* out, std::map<std::string, std::string>& over, auto resolve) {
    if (!j.contains(key)) return;
    const std::string base_path = std::string("$.") + key;
    for (const auto& [tok, v] : expect_object(j[key], base_path).items()) {
      const std::string path = base_path + "." + tok;
      check_token(tok, path);
      only_keys(v, {"over", "src", "tgt"}, path);
      const json& o = member(v, "over", path);
      resolve(o, path + ".over");
      local_of(tok, o.get<std::string>(), path);
      over[tok] = o.get<std::string>();
      p[out][tok] = {{"src", member(v, "src", path)}, {"tgt", member(v, "tgt", path)}};
    }
  };
  cells("d1", "one_cells", over1, [&](const json& v, const std::string& path) { one_of(B, v, path); });
  cells("d2", "two_cells", over2, [&](const json& v, const std::string& path) { two_of(B, v, path); });
  for (const std::string& k : kTableKeys) {
    if (j.contains(k)) p[k] = j[k];
  }

  DispBicat d;
  d.base = base;
  d.total = bicat_from_json(p);
  const Bicat& T = d.total;
  for (Id x = 0; x < Id(T.size0()); ++x) {
    const std::string& o = over0.at(T.name0(x));
    d.over0.push_back(B.find0(o));
    d.local0.push_back(T.name0(x).substr(o.size() + 1));
  }
  for (Id u = 0; u < Id(T.size1()); ++u) {
    const std::string& o = over1.at(T.name1(u));
    d.over1.push_back(B.find1(o));
    d.local1.push_back(T.name1(u).substr(o.size() + 1));
  }
  for (Id m = 0; m < Id(T.size2()); ++m) {
    const std::string& o = over2.at(T.name2(m));
    d.over2.push_back(B.find2(o));
    d.local2.push_back(T.name2(m).substr(o.size() + 1));
  }
  d.finalize();
  return d;
}

json functor_to_json(const FiniteCategory& c, const FiniteCategory& d, const Functor& f) {
  json obj = json::object(), mor = json::object();
  for (Id x = 0; x < Id(c.size0()); ++x) obj[c.objects[x]] = d.objects[f.obj[x]];
  for (Id m = 0; m < Id(c.size1()); ++m) mor[c.morphisms[m].name] = d.morphisms[f.mor[m]].name;
  return {{"obj", obj}, {"mor", mor}};
}

Functor functor_from_json(const FiniteCategory& c, const FiniteCategory& d, const json& j,
                          const std::string& path) {
  only_keys(j, {"obj", "mor"}, path);
  Functor f;
  f.obj = dense(member(j, "obj", path), c.size0(), [&](Id x) { return c.objects[x]; },
                [&](const json& v, const std::string& p) { return cobj_of(d, v, p); }, path + ".obj");
  f.mor = dense(member(j, "mor", path), c.size1(), [&](Id m) { return c.morphisms[m].name; },
                [&](const json& v, const std::string& p) { return cmor_of(d, v, p); }, path + ".mor");
  return f;
}

json nat_to_json(const FiniteCategory& c, const FiniteCategory& d, const NatTrans& n) {
  json comp = json::object();
  for (Id x = 0; x < Id(c.size0()); ++x) comp[c.objects[x]] = d.morphisms[n.component[x]].name;
  return {{"component", comp}};
}

NatTrans nat_from_json(const FiniteCategory& c, const FiniteCategory& d, const json& j,
                       const std::string& path) {
  only_keys(j, {"component"}, path);
  NatTrans n;
  n.component = dense(member(j, "component", path), c.size0(), [&](Id x) { return c.objects[x]; },
                      [&](const json& v, const std::string& p) { return cmor_of(d, v, p); },
                      path + ".component");
  return n;
}

json presheaf_to_json(const FiniteCategory& c, const Presheaf& p) {
  json size = json::object(), action = json::object();
  for (Id x = 0; x < Id(c.size0()); ++x) size[c.objects[x]] = p.size[x];
  for (Id m = 0; m < Id(c.size1()); ++m) action[c.morphisms[m].name] = p.action[m];
  return {{"size", size}, {"action", action}};
}

Presheaf presheaf_from_json(const FiniteCategory& c, const json& j, const std::string& path) {
  only_keys(j, {"size", "action"}, path);
  Presheaf p;
  const json& size = expect_object(member(j, "size", path), path + ".size");
  const json& action = expect_object(member(j, "action", path), path + ".action");
  for (Id x = 0; x < Id(c.size0()); ++x) {
    const std::string k = path + ".size." + c.objects[x];
    const json& v = member(size, c.objects[x], path + ".size");
    if (!v.is_number_integer() || v.get<int>() < 0) parse_fail(k, "expected a natural number");
    p.size.push_back(v.get<int>());
  }
  for (Id m = 0; m < Id(c.size1()); ++m) {
    const std::string& name = c.morphisms[m].name;
    p.action.push_back(int_list(member(action, name, path + ".action"), path + ".action." + name));
  }
  if (size.size() != c.size0()) parse_fail(path + ".size", "one entry per object");
  if (action.size() != c.size1()) parse_fail(path + ".action", "one entry per morphism");
  return p;
}

json kleisli_to_json(const FiniteCategory& c, const KleisliTriple& t) {
  json m = json::object(), eta = json::object(), star = json::object();
  for (Id x = 0; x < Id(c.size0()); ++x) {
    m[c.objects[x]] = c.objects[t.m[x]];
    eta[c.objects[x]] = c.morphisms[t.eta[x]].name;
  }
  for (const auto& [key, v] : t.star) {
    star[c.objects[key.first] + ";" + c.morphisms[key.second].name] = c.morphisms[v].name;
  }
  return {{"m", m}, {"eta", eta}, {"star", star}};
}

KleisliTriple kleisli_from_json(const FiniteCategory& c, const json& j, const std::string& path) {
  only_keys(j, {"m", "eta", "star"}, path);
  KleisliTriple t;
  t.m = dense(member(j, "m", path), c.size0(), [&](Id x) { return c.objects[x]; },
              [&](const json& v, const std::string& p) { return cobj_of(c, v, p); }, path + ".m");
  t.eta = dense(member(j, "eta", path), c.size0(), [&](Id x) { return c.objects[x]; },
                [&](const json& v, const std::string& p) { return cmor_of(c, v, p); }, path + ".eta");
  for (const auto& [k, v] : expect_object(member(j, "star", path), path + ".star").items()) {
    const std::string p = path + ".star." + k;
    const std::vector<std::string> parts = split_key(k);
    if (parts.size() != 2) parse_fail(p, "expected 2 key components");
    const Id b = resolved(c.find_object(parts[0]), p, parts[0], "object");
    const Id f = resolved(c.find_morphism(parts[1]), p, parts[1], "morphism");
    t.star[{b, f}] = cmor_of(c, v, p);
  }
  return t;
}

json to_json(const CwfDocument& d) {
  const FiniteCategory& c = d.category;
  json p = json::object();
  for (Id x = 0; x < Id(c.size0()); ++x) p[c.objects[x]] = d.p[x];
  return {{"category", to_json(c)},
          {"ty", presheaf_to_json(c, d.ty)},
          {"tm", presheaf_to_json(c, d.tm)},
          {"p", p}};
}

CwfDocument cwf_from_json(const json& j) {
  only_keys(j, {"category", "ty", "tm", "p"}, "$");
  CwfDocument d;
  d.category = category_from_json(member(j, "category", "$"));
  const FiniteCategory& c = d.category;
  d.ty = presheaf_from_json(c, member(j, "ty", "$"), "$.ty");
  d.tm = presheaf_from_json(c, member(j, "tm", "$"), "$.tm");
  const json& p = expect_object(member(j, "p", "$"), "$.p");
  for (Id x = 0; x < Id(c.size0()); ++x) {
    d.p.push_back(int_list(member(p, c.objects[x], "$.p"), "$.p." + c.objects[x]));
  }
  if (p.size() != c.size0()) parse_fail("$.p", "one entry per object");
  return d;
}

json to_json(const CwfRepresentation& r, const FiniteCategory& c) {
  json w = json::array(), missing = json::array();
  for (const Comprehension& k : r.witnesses) {
    w.push_back({{"gamma", c.objects[k.gamma]},
                 {"a", k.a},
                 {"ext", c.objects[k.ext]},
                 {"pi", c.morphisms[k.pi].name},
                 {"t", k.t}});
  }
  for (const auto& [g, a] : r.missing) missing.push_back({{"gamma", c.objects[g]}, {"a", a}});
  return {{"status", r.ok ? "pass" : "fail"}, {"witnesses", w}, {"missing", missing}};
}

json to_json(const Psfunctor& F) {
  const Bicat& B = *F.src;
  const Bicat& C = *F.tgt;
  json f0 = json::object(), f1 = json::object(), f2 = json::object(), gam = json::object(),
       del = json::object();
  for (Id a = 0; a < Id(B.size0()); ++a) {
    f0[B.name0(a)] = C.name0(F.f0[a]);
    gam[B.name0(a)] = C.name2(F.identitor[a]);
  }
  for (Id f = 0; f < Id(B.size1()); ++f) f1[B.name1(f)] = C.name1(F.f1[f]);
  for (Id t = 0; t < Id(B.size2()); ++t) f2[B.name2(t)] = C.name2(F.f2[t]);
  for (const auto& [f, g, v] : F.compositor.entries()) del[B.name1(f) + ";" + B.name1(g)] = C.name2(v);
  return {{"f0", f0}, {"f1", f1}, {"f2", f2}, {"identitor", gam}, {"compositor", del}};
}

Psfunctor psfunctor_from_json(BicatPtr src, BicatPtr tgt, const json& j, const std::string& path) {
  only_keys(j, {"f0", "f1", "f2", "identitor", "compositor"}, path);
  const Bicat& B = *src;
  const Bicat& C = *tgt;
  Psfunctor F;
  F.src = src;
  F.tgt = tgt;
  auto n0 = [&](Id a) { return B.name0(a); };
  auto n1 = [&](Id f) { return B.name1(f); };
  auto n2 = [&](Id t) { return B.name2(t); };
  auto c0 = [&](const json& v, const std::string& p) { return obj_of(C, v, p); };
  auto c1 = [&](const json& v, const std::string& p) { return one_of(C, v, p); };
  auto c2 = [&](const json& v, const std::string& p) { return two_of(C, v, p); };
  F.f0 = dense(member(j, "f0", path), B.size0(), n0, c0, path + ".f0");
  F.f1 = dense(member(j, "f1", path), B.size1(), n1, c1, path + ".f1");
  F.f2 = dense(member(j, "f2", path), B.size2(), n2, c2, path + ".f2");
  F.identitor = dense(member(j, "identitor", path), B.size0(), n0, c2, path + ".identitor");
  const json& del = expect_object(member(j, "compositor", path), path + ".compositor");
  for (const auto& [f, g, v] : B.comp1_tab.entries()) {
    (void)v;
    const std::string k = B.name1(f) + ";" + B.name1(g);
    F.compositor.set(f, g, c2(member(del, k, path + ".compositor"), path + ".compositor." + k));
  }
  if (del.size() != B.comp1_tab.entries().size()) parse_fail(path + ".compositor", "one entry per composable pair");
  return F;
}

json to_json(const Pstrans& t) {
  const Bicat& B = *t.from.src;
  const Bicat& C = *t.from.tgt;
  json e0 = json::object(), e1 = json::object();
  for (Id a = 0; a < Id(B.size0()); ++a) e0[B.name0(a)] = C.name1(t.eta0[a]);
  for (Id f = 0; f < Id(B.size1()); ++f) e1[B.name1(f)] = C.name2(t.eta1[f]);
  return {{"eta0", e0}, {"eta1", e1}};
}

Pstrans pstrans_from_json(const Psfunctor& from, const Psfunctor& to, const json& j, const std::string& path) {
  only_keys(j, {"eta0", "eta1"}, path);
  const Bicat& B = *from.src;
  const Bicat& C = *from.tgt;
  Pstrans t;
  t.from = from;
  t.to = to;
  t.eta0 = dense(member(j, "eta0", path), B.size0(), [&](Id a) { return B.name0(a); },
                 [&](const json& v, const std::string& p) { return one_of(C, v, p); }, path + ".eta0");
  t.eta1 = dense(member(j, "eta1", path), B.size1(), [&](Id f) { return B.name1(f); },
                 [&](const json& v, const std::string& p) { return two_of(C, v, p); }, path + ".eta1");
  return t;
}

json to_json(const Modification& m) {
  const Bicat& B = *m.from.from.src;
  const Bicat& C = *m.from.from.tgt;
  json g = json::object();
  for (Id a = 0; a < Id(B.size0()); ++a) g[B.name0(a)] = C.name2(m.gamma[a]);
  return {{"gamma", g}};
}

Modification modification_from_json(const Pstrans& from, const Pstrans& to, const json& j,
                                    const std::string& path) {
  only_keys(j, {"gamma"}, path);
  const Bicat& B = *from.from.src;
  const Bicat& C = *from.from.tgt;
  Modification m;
  m.from = from;
  m.to = to;
  m.gamma = dense(member(j, "gamma", path), B.size0(), [&](Id a) { return B.name0(a); },
                  [&](const json& v, const std::string& p) { return two_of(C, v, p); }, path + ".gamma");
  return m;
}

namespace {

json biequiv_components(const Biequivalence& b) {
  return {{"l", to_json(b.l)},         {"r", to_json(b.r)},         {"eta", to_json(b.eta)},
          {"eta_i", to_json(b.eta_i)}, {"eps", to_json(b.eps)},     {"eps_i", to_json(b.eps_i)},
          {"m1", to_json(b.m1)},       {"m2", to_json(b.m2)},       {"m3", to_json(b.m3)},
          {"m4", to_json(b.m4)}};
}

const std::set<std::string> kBiequivKeys = {"l", "r", "eta", "eta_i", "eps", "eps_i", "m1", "m2", "m3", "m4"};

// Reads the base components with endpoints fixed by the biequivalence
// typing: eta : r·l => id(C), eps : l·r => id(B) and so on.
Biequivalence base_biequiv_from_json(BicatPtr b, BicatPtr c, const json& j, const std::string& path) {
  only_keys(j, kBiequivKeys, path);
  Biequivalence q;
  q.l = psfunctor_from_json(b, c, member(j, "l", path), path + ".l");
  q.r = psfunctor_from_json(c, b, member(j, "r", path), path + ".r");
  const Psfunctor rl = comp_psfunctor(q.r, q.l), lr = comp_psfunctor(q.l, q.r);
  const Psfunctor idc = id_psfunctor(c), idb = id_psfunctor(b);
  q.eta = pstrans_from_json(rl, idc, member(j, "eta", path), path + ".eta");
  q.eta_i = pstrans_from_json(idc, rl, member(j, "eta_i", path), path + ".eta_i");
  q.eps = pstrans_from_json(lr, idb, member(j, "eps", path), path + ".eps");
  q.eps_i = pstrans_from_json(idb, lr, member(j, "eps_i", path), path + ".eps_i");
  q.m1 = modification_from_json(comp_pstrans(q.eta, q.eta_i), id_pstrans(rl), member(j, "m1", path), path + ".m1");
  q.m2 = modification_from_json(comp_pstrans(q.eta_i, q.eta), id_pstrans(idc), member(j, "m2", path), path + ".m2");
  q.m3 = modification_from_json(comp_pstrans(q.eps, q.eps_i), id_pstrans(lr), member(j, "m3", path), path + ".m3");
  q.m4 = modification_from_json(comp_pstrans(q.eps_i, q.eps), id_pstrans(idb), member(j, "m4", path), path + ".m4");
  return q;
}

}  // namespace

json to_json(const DispBiequivalence& b) {
  return {{"d1", to_json(*b.l.src)},
          {"d2", to_json(*b.l.tgt)},
          {"base", biequiv_components(b.base())},
          {"total", biequiv_components(total_biequivalence(b))}};
}

DispBiequivalence disp_biequivalence_from_json(const json& j, const std::string& base_dir) {
  only_keys(j, {"d1", "d2", "base", "total"}, "$");
  DispPtr d1 = share(disp_from_json(load_inline_or_path(member(j, "d1", "$"), base_dir, "$.d1"), base_dir));
  DispPtr d2 = share(disp_from_json(load_inline_or_path(member(j, "d2", "$"), base_dir, "$.d2"), base_dir));
  const Biequivalence base = base_biequiv_from_json(d1->base, d2->base, member(j, "base", "$"), "$.base");
  const Biequivalence total = base_biequiv_from_json(total_ptr(d1), total_ptr(d2), member(j, "total", "$"), "$.total");
  DispBiequivalence q;
  q.l = disp_over(total.l, base.l, d1, d2);
  q.r = disp_over(total.r, base.r, d2, d1);
  const DispPsfunctor rl = disp_comp_psfunctor(q.r, q.l), lr = disp_comp_psfunctor(q.l, q.r);
  const DispPsfunctor id2 = disp_id_psfunctor(d2), id1 = disp_id_psfunctor(d1);
  q.eta = disp_over(total.eta, rl, id2, base.eta);
  q.eta_i = disp_over(total.eta_i, id2, rl, base.eta_i);
  q.eps = disp_over(total.eps, lr, id1, base.eps);
  q.eps_i = disp_over(total.eps_i, id1, lr, base.eps_i);
  q.m1 = disp_over(total.m1, disp_comp_pstrans(q.eta, q.eta_i), disp_id_pstrans(rl), base.m1);
  q.m2 = disp_over(total.m2, disp_comp_pstrans(q.eta_i, q.eta), disp_id_pstrans(id2), base.m2);
  q.m3 = disp_over(total.m3, disp_comp_pstrans(q.eps, q.eps_i), disp_id_pstrans(lr), base.m3);
  q.m4 = disp_over(total.m4, disp_comp_pstrans(q.eps_i, q.eps), disp_id_pstrans(id1), base.m4);
  return q;
}

json to_json(const CatValuedPsfunctor& p) {
  const Bicat& O = *p.op;
  json cat = json::object(), one = json::object(), two = json::object(), gam = json::object(),
       del = json::object();
  for (Id a = 0; a < Id(O.size0()); ++a) {
    cat[O.name0(a)] = to_json(p.cat[a]);
    gam[O.name0(a)] = nat_to_json(p.cat[a], p.cat[a], p.identitor[a]);
  }
  for (Id f = 0; f < Id(O.size1()); ++f) {
    one[O.name1(f)] = functor_to_json(p.cat[O.src1(f)], p.cat[O.tgt1(f)], p.one[f]);
  }
  for (Id t = 0; t < Id(O.size2()); ++t) {
    const Id f = O.src2(t);
    two[O.name2(t)] = nat_to_json(p.cat[O.src1(f)], p.cat[O.tgt1(f)], p.two[t]);
  }
  for (const auto& [key, n] : p.compositor) {
    del[O.name1(key.first) + ";" + O.name1(key.second)] =
        nat_to_json(p.cat[O.src1(key.first)], p.cat[O.tgt1(key.second)], n);
  }
  return {{"cat", cat}, {"one", one}, {"two", two}, {"identitor", gam}, {"compositor", del}};
}

CatValuedPsfunctor cat_psfunctor_from_json(BicatPtr base, const json& j) {
  only_keys(j, {"cat", "one", "two", "identitor", "compositor"}, "$");
  CatValuedPsfunctor p;
  p.base = base;
  p.op = share(op_bicat(*base));
  const Bicat& O = *p.op;
  const json& cat = expect_object(member(j, "cat", "$"), "$.cat");
  for (Id a = 0; a < Id(O.size0()); ++a) {
    try {
      p.cat.push_back(category_from_json(member(cat, O.name0(a), "$.cat")));
    } catch (const Error& e) {
      Fail(e.code(), "$.cat." + O.name0(a) + ": " + e.what());
    }
  }
  const json& one = expect_object(member(j, "one", "$"), "$.one");
  for (Id f = 0; f < Id(O.size1()); ++f) {
    p.one.push_back(functor_from_json(p.cat[O.src1(f)], p.cat[O.tgt1(f)], member(one, O.name1(f), "$.one"),
                                      "$.one." + O.name1(f)));
  }
  const json& two = expect_object(member(j, "two", "$"), "$.two");
  for (Id t = 0; t < Id(O.size2()); ++t) {
    const Id f = O.src2(t);
    p.two.push_back(nat_from_json(p.cat[O.src1(f)], p.cat[O.tgt1(f)], member(two, O.name2(t), "$.two"),
                                  "$.two." + O.name2(t)));
  }
  const json& gam = expect_object(member(j, "identitor", "$"), "$.identitor");
  for (Id a = 0; a < Id(O.size0()); ++a) {
    p.identitor.push_back(nat_from_json(p.cat[a], p.cat[a], member(gam, O.name0(a), "$.identitor"),
                                        "$.identitor." + O.name0(a)));
  }
  const json& del = expect_object(member(j, "compositor", "$"), "$.compositor");
  for (const auto& [f, g, v] : O.comp1_tab.entries()) {
    (void)v;
    const std::string k = O.name1(f) + ";" + O.name1(g);
    p.compositor[{f, g}] = nat_from_json(p.cat[O.src1(f)], p.cat[O.tgt1(g)], member(del, k, "$.compositor"),
                                         "$.compositor." + k);
  }
  return p;
}

json to_json(const YonedaCheck& y, const FiniteCategory& pa) {
  json j;
  j["status"] = y.pass() ? "pass" : "fail";
  j["report"] = to_json(y.report);
  j["pstrans"] = {{"objects", y.pstrans_cat.size0()}, {"morphisms", y.pstrans_cat.size1()}};
  if (y.f.obj.size() == y.pstrans_cat.size0() && y.f.mor.size() == y.pstrans_cat.size1()) {
    j["F"] = functor_to_json(y.pstrans_cat, pa, y.f);
  }
  const bool g_ok = y.g.obj.size() == pa.size0() && y.g.mor.size() == pa.size1() &&
                    std::all_of(y.g.obj.begin(), y.g.obj.end(), [](Id i) { return i >= 0; }) &&
                    std::all_of(y.g.mor.begin(), y.g.mor.end(), [](Id i) { return i >= 0; });
  if (g_ok) j["G"] = functor_to_json(pa, y.pstrans_cat, y.g);
  if (y.unit.component.size() == y.pstrans_cat.size0() &&
      std::all_of(y.unit.component.begin(), y.unit.component.end(), [](Id i) { return i >= 0; })) {
    j["unit"] = nat_to_json(y.pstrans_cat, y.pstrans_cat, y.unit);
  }
  if (y.counit.component.size() == pa.size0() &&
      std::all_of(y.counit.component.begin(), y.counit.component.end(), [](Id i) { return i >= 0; })) {
    j["counit"] = nat_to_json(pa, pa, y.counit);
  }
  return j;
}

}  // namespace bikernel
