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
#include "bikernel/catinst.hpp"

#include "layers.hpp"
#include "odometer.hpp"

namespace bikernel {

namespace {

using Map = std::vector<int>;

// Every map from {0..n-1} to {0..m-1}.
std::vector<Map> all_maps(int n, int m) {
  std::vector<Map> out;
  if (n > 0 && m == 0) return out;
  Map f(n, 0);
  while (true) {
    out.push_back(f);
    int k = n;
    while (k > 0 && ++f[k - 1] == m) f[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::string map_token(const Map& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(f[i]);
  }
  return out;
}

std::string maps_token(const std::vector<Map>& fs) {
  std::string out = "[";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ",";
    out += map_token(fs[i]);
  }
  return out + "]";
}

Map iota(std::size_t n) {
  Map v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = int(i);
  return v;
}

}  // namespace

Report check_presheaf(const FiniteCategory& c, const Presheaf& p) {
  Report r;
  if (p.size.size() != c.size0() || p.action.size() != c.size1()) {
    r.add({"presheaf:shape", {"sizes"}, "", ""});
    return r;
  }
  for (Id x = 0; x < Id(c.size0()); ++x) {
    if (p.size[x] < 0) r.add({"presheaf:shape", {c.objects[x]}, "", ""});
  }
  for (Id f = 0; f < Id(c.size1()); ++f) {
    const Map& a = p.action[f];
    bool ok = Id(a.size()) == p.size[c.tgt(f)];
    for (int v : a) ok = ok && v >= 0 && v < p.size[c.src(f)];
    if (!ok) r.add({"presheaf:shape", {c.morphisms[f].name}, "", ""});
  }
  if (!r.pass()) return r;
  for (Id x = 0; x < Id(c.size0()); ++x) {
    r.instantiations["presheaf:identity"]++;
    if (p.action[c.id(x)] != iota(p.size[x])) {
      r.add({"presheaf:identity", {c.objects[x]}, "", ""});
    }
  }
  for (const auto& [f, g, fg] : c.compose.entries()) {
    r.instantiations["presheaf:compose"]++;
    for (int s = 0; s < p.size[c.tgt(g)]; ++s) {
      if (p.action[fg][s] != p.action[f][p.action[g][s]]) {
        r.add({"presheaf:compose", {c.morphisms[f].name, c.morphisms[g].name}, "", ""});
        break;
      }
    }
  }
  return r;
}

std::vector<Presheaf> enumerate_presheaves(const FiniteCategory& c, int bound, Budget& budget) {
  std::vector<Presheaf> out;
  std::vector<Id> sizes(bound + 1);
  for (int k = 0; k <= bound; ++k) sizes[k] = k;
  odometer(std::vector<std::vector<Id>>(c.size0(), sizes), budget, [&](const std::vector<Id>& size) {
    std::vector<std::vector<Map>> maps;
    std::vector<std::vector<Id>> choices;
    for (Id f = 0; f < Id(c.size1()); ++f) {
      if (f == c.id(c.src(f))) {
        maps.push_back({iota(size[c.src(f)])});
      } else {
        maps.push_back(all_maps(size[c.tgt(f)], size[c.src(f)]));
      }
      choices.push_back(iota(maps.back().size()));
    }
    odometer(choices, budget, [&](const std::vector<Id>& pick) {
      Presheaf p{{size.begin(), size.end()}, {}};
      for (Id f = 0; f < Id(c.size1()); ++f) p.action.push_back(maps[f][pick[f]]);
      if (check_presheaf(c, p).pass()) out.push_back(std::move(p));
    });
  });
  return out;
}

std::string presheaf_token(const Presheaf& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.size[i]);
  }
  return out + "/" + maps_token(p.action).substr(1);
}

bool is_presheaf_map(const FiniteCategory& c, const FiniteCategory&, const Functor& f,
                     const Presheaf& t, const Presheaf& u, const PresheafMap& b) {
  if (b.component.size() != c.size0()) return false;
  for (Id x = 0; x < Id(c.size0()); ++x) {
    if (Id(b.component[x].size()) != t.size[x]) return false;
    for (int v : b.component[x]) {
      if (v < 0 || v >= u.size[f.obj[x]]) return false;
    }
  }
  for (Id g = 0; g < Id(c.size1()); ++g) {
    const Id x = c.src(g), y = c.tgt(g);
    for (int s = 0; s < t.size[y]; ++s) {
      if (b.component[x][t.action[g][s]] != u.action[f.mor[g]][b.component[y][s]]) return false;
    }
  }
  return true;
}

std::vector<PresheafMap> enumerate_presheaf_maps(const FiniteCategory& c, const FiniteCategory& d,
                                                 const Functor& f, const Presheaf& t,
                                                 const Presheaf& u, Budget& budget) {
  std::vector<std::vector<Map>> maps;
  std::vector<std::vector<Id>> choices;
  for (Id x = 0; x < Id(c.size0()); ++x) {
    maps.push_back(all_maps(t.size[x], u.size[f.obj[x]]));
    choices.push_back(iota(maps.back().size()));
  }
  std::vector<PresheafMap> out;
  odometer(choices, budget, [&](const std::vector<Id>& pick) {
    PresheafMap b;
    for (Id x = 0; x < Id(c.size0()); ++x) b.component.push_back(maps[x][pick[x]]);
    if (is_presheaf_map(c, d, f, t, u, b)) out.push_back(std::move(b));
  });
  return out;
}

PresheafDisp presheaf_disp(const Fragment& frag, int bound, Budget& budget,
                           const std::map<std::string, std::vector<Presheaf>>& per_object) {
  const Bicat& B = *frag.bicat;
  ChaoticData data;
  std::vector<std::vector<Presheaf>> on(B.size0());
  std::map<std::pair<Id, std::string>, Presheaf> by_token;
  for (Id a = 0; a < Id(B.size0()); ++a) {
    const FiniteCategory& c = frag.cat(a);
    auto it = per_object.find(c.name);
    if (it != per_object.end()) {
      for (const Presheaf& p : it->second) {
        if (!check_presheaf(c, p).pass()) {
          Fail(ErrorCode::kPreconditionFailed, "presheaf_disp: invalid presheaf on " + c.name);
        }
      }
      on[a] = it->second;
    } else {
      on[a] = enumerate_presheaves(c, bound, budget);
    }
    auto& toks = data.d0[B.name0(a)];
    for (const Presheaf& p : on[a]) {
      toks.push_back(presheaf_token(p));
      by_token[{a, toks.back()}] = p;
    }
  }
  struct One {
    Id f;
    std::string src, tgt, token;
    const Presheaf* u;
    PresheafMap b;
  };
  std::vector<One> ones;
  std::map<std::pair<Id, std::string>, std::size_t> one_index;
  auto token_of = [](const std::string& s, const std::string& t, const PresheafMap& b) {
    return s + ">" + t + ":" + maps_token(b.component);
  };
  for (Id f = 0; f < Id(B.size1()); ++f) {
    const FiniteCategory& c = frag.cat(B.src1(f));
    const FiniteCategory& d = frag.cat(B.tgt1(f));
    for (const Presheaf& t : on[B.src1(f)]) {
      for (const Presheaf& u : on[B.tgt1(f)]) {
        for (PresheafMap& b : enumerate_presheaf_maps(c, d, frag.functors[f], t, u, budget)) {
          One o{f, presheaf_token(t), presheaf_token(u), {}, &u, std::move(b)};
          o.token = token_of(o.src, o.tgt, o.b);
          data.d1.push_back({B.name1(f), o.token, o.src, o.tgt});
          one_index[{f, o.token}] = ones.size();
          ones.push_back(std::move(o));
        }
      }
    }
  }
  for (Id a = 0; a < Id(B.size0()); ++a) {
    const FiniteCategory& c = frag.cat(a);
    for (const Presheaf& t : on[a]) {
      PresheafMap id;
      for (Id x = 0; x < Id(c.size0()); ++x) id.component.push_back(iota(t.size[x]));
      const std::string tok = presheaf_token(t);
      data.id[{B.name0(a), tok}] = token_of(tok, tok, id);
    }
  }
  std::vector<std::vector<std::size_t>> by_src(B.size0());
  for (std::size_t i = 0; i < ones.size(); ++i) by_src[B.src1(ones[i].f)].push_back(i);
  for (const One& u : ones) {
    const FiniteCategory& c = frag.cat(B.src1(u.f));
    const Functor& F = frag.functors[u.f];
    for (std::size_t j : by_src[B.tgt1(u.f)]) {
      const One& v = ones[j];
      if (v.src != u.tgt) continue;
      budget.Spend();
      PresheafMap w;
      for (Id x = 0; x < Id(c.size0()); ++x) {
        Map m;
        for (int s : u.b.component[x]) m.push_back(v.b.component[F.obj[x]][s]);
        w.component.push_back(std::move(m));
      }
      data.comp[{B.name1(u.f), u.token, B.name1(v.f), v.token}] = token_of(u.src, v.tgt, w);
    }
  }
  PresheafDisp out;
  out.disp = share(prop_disp(frag.bicat, data, [&](Id th, Id i, Id j) {
    const One& u = ones[i];
    const One& v = ones[j];
    const NatTrans& g = frag.nats[th];
    for (std::size_t x = 0; x < u.b.component.size(); ++x) {
      for (std::size_t s = 0; s < u.b.component[x].size(); ++s) {
        if (u.b.component[x][s] != u.u->action[g.component[x]][v.b.component[x][s]]) return false;
      }
    }
    return true;
  }));
  const DispBicat& D = *out.disp;
  for (Id x = 0; x < Id(D.total.size0()); ++x) out.objects.push_back(by_token.at({D.over0[x], D.local0[x]}));
  for (Id u = 0; u < Id(D.total.size1()); ++u) out.one_cells.push_back(ones[one_index.at({D.over1[u], D.local1[u]})].b);
  return out;
}

CwfRepresentation check_cwf_representation(const FiniteCategory& c, const Presheaf& ty,
                                           const Presheaf& tm, const std::vector<std::vector<int>>& p) {
  CwfRepresentation rep;
  const Id n = Id(c.size0());
  for (Id gamma = 0; gamma < n; ++gamma) {
    for (int a = 0; a < ty.size[gamma]; ++a) {
      bool found = false;
      for (Id ext = 0; ext < n && !found; ++ext) {
        for (Id pi : c.hom(ext, gamma)) {
          for (int t = 0; t < tm.size[ext] && !found; ++t) {
            if (p[ext][t] != ty.action[pi][a]) continue;
            bool universal = true;
            for (Id delta = 0; delta < n && universal; ++delta) {
              for (Id f : c.hom(delta, gamma)) {
                for (int s = 0; s < tm.size[delta] && universal; ++s) {
                  if (p[delta][s] != ty.action[f][a]) continue;
                  int through = 0;
                  for (Id g : c.hom(delta, ext)) {
                    through += c.comp(g, pi) == f && tm.action[g][t] == s;
                  }
                  universal = through == 1;
                }
                if (!universal) break;
              }
            }
            if (universal) {
              rep.witnesses.push_back({gamma, a, ext, pi, t});
              found = true;
            }
          }
          if (found) break;
        }
      }
      if (!found) rep.missing.push_back({gamma, a});
    }
  }
  rep.ok = rep.missing.empty();
  if (!rep.ok) rep.witnesses.clear();
  return rep;
}

CwfTower cwf_tower(const Fragment& frag, int bound, Budget& budget) {
  CwfTower t;
  t.pshd = presheaf_disp(frag, bound, budget);
  const DispBicat& ps = *t.pshd.disp;
  t.pair = share(prod_disp(ps, ps));
  const DispBicat& pair = *t.pair;
  const ProdIndex pi = prod_index(ps, ps, pair);

  // Candidate p : Tm => Ty, numbered across all objects of ∫pair.
  struct Candidate {
    Id object;
    PresheafMap p;
  };
  std::vector<Candidate> all;
  std::vector<std::vector<Id>> of(pair.total.size0());
  for (Id o = 0; o < Id(pair.total.size0()); ++o) {
    const FiniteCategory& c = frag.cat(pair.over0[o]);
    const Presheaf& ty = t.pshd.objects[pi.obj[o].first];
    const Presheaf& tm = t.pshd.objects[pi.obj[o].second];
    for (PresheafMap& p : enumerate_presheaf_maps(c, c, identity_functor(c), tm, ty, budget)) {
      of[o].push_back(Id(all.size()));
      all.push_back({o, std::move(p)});
    }
  }
  LawLayer layer = law_layer(
      total_ptr(t.pair), [&](Id o) { return std::vector<std::vector<Id>>{of[o]}; },
      [&](Id u, const std::vector<Id>& a, const std::vector<Id>& b) {
        const PresheafMap& bty = t.pshd.one_cells[pi.one[u].first];
        const PresheafMap& btm = t.pshd.one_cells[pi.one[u].second];
        const PresheafMap& p = all[a[0]].p;
        const PresheafMap& q = all[b[0]].p;
        const Functor& F = frag.functors[pair.over1[u]];
        for (std::size_t x = 0; x < p.component.size(); ++x) {
          for (std::size_t s = 0; s < p.component[x].size(); ++s) {
            if (bty.component[x][p.component[x][s]] != q.component[F.obj[x]][btm.component[x][s]]) return false;
          }
        }
        return true;
      },
      [&](const std::vector<Id>& v) { return maps_token(all[v[0]].p.component); }, budget);
  t.p = share(std::move(layer.disp));
  const DispBicat& pl = *t.p;
  t.cwf2 = share(sigma_disp(pair, pl));
  const SigmaIndex si = sigma_index(pair, pl, *t.cwf2);
  std::vector<CwfData> data;
  for (Id o = 0; o < Id(t.cwf2->total.size0()); ++o) {
    const Id x = si.obj[o];
    const Id po = pl.over0[x];
    const Candidate& cand = all[layer.value.at({po, pl.local0[x]})[0]];
    data.push_back({pair.over0[po], t.pshd.objects[pi.obj[po].first], t.pshd.objects[pi.obj[po].second],
                    cand.p.component});
  }
  t.is_cwf = share(fullsub_disp(total_ptr(t.cwf2), [&](Id o) {
    const CwfData& d = data[o];
    return check_cwf_representation(frag.cat(d.category), d.ty, d.tm, d.p).ok;
  }));
  t.cwf = share(sigma_disp(*t.cwf2, *t.is_cwf));
  const SigmaIndex sc = sigma_index(*t.cwf2, *t.is_cwf, *t.cwf);
  t.bicat = total_bicat(*t.cwf);
  for (Id o = 0; o < Id(t.bicat.size0()); ++o) t.objects.push_back(data[t.is_cwf->over0[sc.obj[o]]]);
  return t;
}

CwfTower cwf_tower(const Fragment& frag, int bound) {
  Budget budget;
  return cwf_tower(frag, bound, budget);
}

Bicat cwf_bicat(const Fragment& frag, int bound) { return cwf_tower(frag, bound).bicat; }

}  // namespace bikernel
