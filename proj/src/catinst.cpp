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

#include <set>

#include "odometer.hpp"

namespace bikernel {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out;
}

std::string functor_token(const FiniteCategory& c, const FiniteCategory& d, const Functor& f) {
  std::vector<std::string> o, m;
  for (Id x : f.obj) o.push_back(d.objects[x]);
  for (Id x : f.mor) m.push_back(d.morphisms[x].name);
  return c.name + ">" + d.name + ":[" + join(o) + "/" + join(m) + "]";
}

std::string morphisms_token(const FiniteCategory& d, const std::vector<Id>& ms) {
  std::vector<std::string> names;
  for (Id x : ms) names.push_back(d.morphisms[x].name);
  return "[" + join(names) + "]";
}

}  // namespace

Id Fragment::one_cell(Id a, Id b, const Functor& f) const {
  for (Id u : bicat->hom1(a, b)) {
    if (functors[u] == f) return u;
  }
  return kNone;
}

Id Fragment::two_cell(Id f, Id g, const NatTrans& n) const {
  for (Id t : bicat->hom2(f, g)) {
    if (nats[t] == n) return t;
  }
  return kNone;
}

Fragment fincat_fragment(const std::vector<FiniteCategory>& cats, Budget& budget) {
  std::set<std::string> names;
  for (const FiniteCategory& c : cats) {
    if (!validate_category(c).pass()) {
      Fail(ErrorCode::kPreconditionFailed, "fincat_fragment: category " + c.name + " is invalid");
    }
    if (!names.insert(c.name).second) {
      Fail(ErrorCode::kPreconditionFailed, "fincat_fragment: repeated category name " + c.name);
    }
  }
  const Id n = Id(cats.size());
  Bicat b;
  for (const FiniteCategory& c : cats) b.add_object(c.name);
  std::vector<Functor> fun;
  std::map<std::pair<Id, Id>, std::map<Functor, Id>> one;
  for (Id x = 0; x < n; ++x) {
    for (Id y = 0; y < n; ++y) {
      for (Functor& f : enumerate_functors(cats[x], cats[y], budget)) {
        const Id u = b.add_one_cell(functor_token(cats[x], cats[y], f), x, y);
        one[{x, y}][f] = u;
        fun.push_back(std::move(f));
      }
    }
  }
  const Id n1 = Id(fun.size());
  auto src = [&](Id f) { return b.one_cells[f].src; };
  auto tgt = [&](Id f) { return b.one_cells[f].tgt; };
  std::vector<NatTrans> nat;
  std::map<std::pair<Id, Id>, std::map<NatTrans, Id>> two;
  for (Id f = 0; f < n1; ++f) {
    for (Id g = 0; g < n1; ++g) {
      if (src(f) != src(g) || tgt(f) != tgt(g)) continue;
      const FiniteCategory& d = cats[tgt(f)];
      for (NatTrans& t : enumerate_nat_trans(cats[src(f)], d, fun[f], fun[g], budget)) {
        std::vector<std::string> comps;
        for (Id m : t.component) comps.push_back(d.morphisms[m].name);
        const Id c = b.add_two_cell(b.one_cells[f].name + "=>" + b.one_cells[g].name + ":[" + join(comps) + "]",
                                    f, g);
        two[{f, g}][t] = c;
        nat.push_back(std::move(t));
      }
    }
  }
  const Id n2 = Id(nat.size());
  auto one_of = [&](Id x, Id y, const Functor& f) { return one.at({x, y}).at(f); };
  auto two_of = [&](Id f, Id g, const NatTrans& t) { return two.at({f, g}).at(t); };

  b.size_tables();
  for (Id x = 0; x < n; ++x) b.id1_tab[x] = one_of(x, x, identity_functor(cats[x]));
  for (Id f = 0; f < n1; ++f) {
    for (Id g = 0; g < n1; ++g) {
      if (tgt(f) == src(g)) b.comp1_tab.set(f, g, one_of(src(f), tgt(g), compose_functors(fun[f], fun[g])));
    }
  }
  for (Id f = 0; f < n1; ++f) {
    const Id e = two_of(f, f, identity_nat(cats[src(f)], cats[tgt(f)], fun[f]));
    b.id2_tab[f] = e;
    b.lunitor_tab[f] = b.lunitor_inv_tab[f] = e;
    b.runitor_tab[f] = b.runitor_inv_tab[f] = e;
  }
  for (Id s = 0; s < n2; ++s) {
    const Cell& cs = b.two_cells[s];
    const FiniteCategory& d = cats[tgt(cs.src)];
    for (Id t = 0; t < n2; ++t) {
      const Cell& ct = b.two_cells[t];
      if (ct.src != cs.tgt) continue;
      b.vcomp_tab.set(s, t, two_of(cs.src, ct.tgt, vcomp_nat(d, nat[s], nat[t])));
    }
    for (Id f = 0; f < n1; ++f) {
      if (tgt(f) == src(cs.src)) {
        b.lwhisker_tab.set(f, s, two_of(b.comp1_tab.get(f, cs.src), b.comp1_tab.get(f, cs.tgt),
                                        lwhisker_nat(fun[f], nat[s])));
      }
      if (src(f) == tgt(cs.src)) {
        b.rwhisker_tab.set(s, f, two_of(b.comp1_tab.get(cs.src, f), b.comp1_tab.get(cs.tgt, f),
                                        rwhisker_nat(nat[s], fun[f])));
      }
    }
  }
  for (Id f = 0; f < n1; ++f) {
    for (Id g = 0; g < n1; ++g) {
      if (tgt(f) != src(g)) continue;
      const Id fg = b.comp1_tab.get(f, g);
      for (Id h = 0; h < n1; ++h) {
        if (tgt(g) != src(h)) continue;
        const Id e = b.id2_tab[b.comp1_tab.get(fg, h)];
        b.lassoc_tab.set(f, g, h, e);
        b.lassoc_inv_tab.set(f, g, h, e);
      }
    }
  }
  const Permutation perm = b.finalize();

  Fragment out;
  out.cats.resize(n);
  out.functors.resize(n1);
  out.nats.resize(n2);
  for (Id x = 0; x < n; ++x) out.cats[perm.obj[x]] = cats[x];
  for (Id f = 0; f < n1; ++f) out.functors[perm.one[f]] = fun[f];
  for (Id t = 0; t < n2; ++t) out.nats[perm.two[t]] = nat[t];
  out.bicat = share(std::move(b));
  return out;
}

Fragment fincat_fragment(const std::vector<FiniteCategory>& cats) {
  Budget budget;
  return fincat_fragment(cats, budget);
}

Bicat fincat_fragment_bicat(const std::vector<FiniteCategory>& cats) { return *fincat_fragment(cats).bicat; }

// ---------------------------------------------------------------------------

Report check_kleisli(const FiniteCategory& c, const KleisliTriple& t) {
  Report r;
  const Id n = Id(c.size0());
  auto shape = [&](const std::string& what) { r.add({"kleisli:shape", {what}, "", ""}); };
  if (Id(t.m.size()) != n || Id(t.eta.size()) != n) {
    shape("sizes");
    return r;
  }
  for (Id a = 0; a < n; ++a) {
    if (t.m[a] < 0 || t.m[a] >= n) {
      shape("M(" + c.objects[a] + ")");
      return r;
    }
    const Id e = t.eta[a];
    if (e < 0 || e >= Id(c.size1()) || c.src(e) != a || c.tgt(e) != t.m[a]) shape("eta(" + c.objects[a] + ")");
  }
  std::size_t slots = 0;
  for (Id b = 0; b < n; ++b) {
    for (Id f = 0; f < Id(c.size1()); ++f) {
      if (c.tgt(f) != t.m[b]) continue;
      ++slots;
      auto it = t.star.find({b, f});
      if (it == t.star.end() || it->second < 0 || it->second >= Id(c.size1()) ||
          c.src(it->second) != t.m[c.src(f)] || c.tgt(it->second) != t.m[b]) {
        shape("star(" + c.objects[b] + ", " + c.morphisms[f].name + ")");
      }
    }
  }
  if (slots != t.star.size()) shape("extra star entries");
  if (!r.pass()) return r;
  auto star = [&](Id b, Id f) { return t.star.at({b, f}); };
  for (Id a = 0; a < n; ++a) {
    r.instantiations["kleisli:unit-star"]++;
    if (star(a, t.eta[a]) != c.id(t.m[a])) r.add({"kleisli:unit-star", {c.objects[a]}, "", ""});
  }
  for (const auto& [key, fs] : t.star) {
    const auto [b, f] = key;
    const Id a = c.src(f);
    r.instantiations["kleisli:unit-left"]++;
    if (c.comp(t.eta[a], fs) != f) r.add({"kleisli:unit-left", {c.morphisms[f].name}, "", ""});
    for (Id cc = 0; cc < n; ++cc) {
      for (Id g : c.hom(b, t.m[cc])) {
        r.instantiations["kleisli:assoc"]++;
        const Id gs = star(cc, g);
        if (c.comp(fs, gs) != star(cc, c.comp(f, gs))) {
          r.add({"kleisli:assoc", {c.morphisms[f].name, c.morphisms[g].name}, "", ""});
        }
      }
    }
  }
  return r;
}

std::vector<KleisliTriple> enumerate_kleisli(const FiniteCategory& c, Budget& budget) {
  std::vector<KleisliTriple> out;
  const Id n = Id(c.size0());
  std::vector<Id> objs(n);
  for (Id a = 0; a < n; ++a) objs[a] = a;
  odometer(std::vector<std::vector<Id>>(n, objs), budget, [&](const std::vector<Id>& m) {
    std::vector<std::vector<Id>> eta_choices;
    for (Id a = 0; a < n; ++a) eta_choices.push_back(c.hom(a, m[a]));
    odometer(eta_choices, budget, [&](const std::vector<Id>& eta) {
      std::vector<std::pair<Id, Id>> keys;
      std::vector<std::vector<Id>> choices;
      for (Id b = 0; b < n; ++b) {
        for (Id f = 0; f < Id(c.size1()); ++f) {
          if (c.tgt(f) != m[b]) continue;
          const Id a = c.src(f);
          std::vector<Id> ok;
          for (Id g : c.hom(m[a], m[b])) {
            if (c.comp(eta[a], g) != f) continue;
            if (f == eta[b] && g != c.id(m[b])) continue;
            ok.push_back(g);
          }
          keys.push_back({b, f});
          choices.push_back(std::move(ok));
        }
      }
      odometer(choices, budget, [&](const std::vector<Id>& s) {
        KleisliTriple t{m, eta, {}};
        for (std::size_t i = 0; i < keys.size(); ++i) t.star[keys[i]] = s[i];
        if (check_kleisli(c, t).pass()) out.push_back(std::move(t));
      });
    });
  });
  return out;
}

std::string kleisli_token(const FiniteCategory& c, const KleisliTriple& t) {
  std::vector<std::string> m, stars;
  for (Id x : t.m) m.push_back(c.objects[x]);
  for (const auto& [key, s] : t.star) {
    stars.push_back(c.objects[key.first] + "/" + c.morphisms[key.second].name + "/" + c.morphisms[s].name);
  }
  return "[" + join(m) + "/" + morphisms_token(c, t.eta) + "/" + join(stars) + "]";
}

KleisliTriple kleisli_of_monad(const Fragment& frag, const MonadStructure& s) {
  const FiniteCategory& c = frag.cat(s.carrier);
  const Functor& m = frag.functors[s.m];
  const NatTrans& eta = frag.nats[s.eta];
  const NatTrans& mu = frag.nats[s.mu];
  KleisliTriple t{m.obj, eta.component, {}};
  for (Id b = 0; b < Id(c.size0()); ++b) {
    for (Id f = 0; f < Id(c.size1()); ++f) {
      if (c.tgt(f) == m.obj[b]) t.star[{b, f}] = c.comp(m.mor[f], mu.component[b]);
    }
  }
  return t;
}

MonadStructure monad_of_kleisli(const Fragment& frag, Id carrier, const KleisliTriple& t) {
  const FiniteCategory& c = frag.cat(carrier);
  if (!check_kleisli(c, t).pass()) Fail(ErrorCode::kTypeMismatch, "monad_of_kleisli: not a Kleisli triple on " + c.name);
  Functor m{t.m, {}};
  for (Id h = 0; h < Id(c.size1()); ++h) {
    const Id y = c.tgt(h);
    m.mor.push_back(t.star.at({y, c.comp(h, t.eta[y])}));
  }
  NatTrans mu;
  for (Id b = 0; b < Id(c.size0()); ++b) mu.component.push_back(t.star.at({b, c.id(t.m[b])}));
  const Id id = frag.bicat->id1(carrier);
  const Id mc = frag.one_cell(carrier, carrier, m);
  if (mc == kNone) Fail(ErrorCode::kConstructionFailed, "monad_of_kleisli: the functor is not in the fragment");
  return {carrier, mc, frag.two_cell(id, mc, NatTrans{t.eta}), frag.two_cell(frag.bicat->comp(mc, mc), mc, mu)};
}

KleisliDisp kleisli_disp(const Fragment& frag, Budget& budget) {
  const Bicat& B = *frag.bicat;
  ChaoticData data;
  std::map<std::pair<Id, std::string>, KleisliTriple> triple;
  std::vector<std::vector<KleisliTriple>> on(B.size0());
  for (Id a = 0; a < Id(B.size0()); ++a) {
    const FiniteCategory& c = frag.cat(a);
    on[a] = enumerate_kleisli(c, budget);
    auto& toks = data.d0[B.name0(a)];
    for (const KleisliTriple& t : on[a]) {
      toks.push_back(kleisli_token(c, t));
      triple[{a, toks.back()}] = t;
    }
  }
  struct One {
    Id f;
    const KleisliTriple *s, *t;
    std::vector<Id> fm;
    std::string src, tgt, token;
  };
  std::vector<One> ones;
  std::map<std::pair<Id, std::string>, std::size_t> one_index;  // (f, token)
  auto token_of = [](const std::string& src, const std::string& tgt, const FiniteCategory& d,
                     const std::vector<Id>& fm) { return src + ">" + tgt + ":" + morphisms_token(d, fm); };
  for (Id f = 0; f < Id(B.size1()); ++f) {
    const Id a = B.src1(f), b = B.tgt1(f);
    const FiniteCategory& c = frag.cat(a);
    const FiniteCategory& d = frag.cat(b);
    const Functor& F = frag.functors[f];
    for (const KleisliTriple& s : on[a]) {
      for (const KleisliTriple& t : on[b]) {
        // F_M(x) : M_D(F x) -> F(M_C x), invertible.
        std::vector<std::vector<Id>> choices;
        for (Id x = 0; x < Id(c.size0()); ++x) {
          std::vector<Id> iso;
          for (Id g : d.hom(t.m[F.obj[x]], F.obj[s.m[x]])) {
            if (d.inverse(g) != kNone && d.comp(t.eta[F.obj[x]], g) == F.mor[s.eta[x]]) iso.push_back(g);
          }
          choices.push_back(std::move(iso));
        }
        odometer(choices, budget, [&](const std::vector<Id>& fm) {
          for (const auto& [key, fs] : s.star) {
            const auto [y, g] = key;
            const Id x = c.src(g);
            const Id h = d.comp(F.mor[g], d.inverse(fm[y]));
            if (d.comp(t.star.at({F.obj[y], h}), fm[y]) != d.comp(fm[x], F.mor[fs])) return;
          }
          One o{f, &s, &t, fm, kleisli_token(c, s), kleisli_token(d, t), {}};
          o.token = token_of(o.src, o.tgt, d, fm);
          one_index[{f, o.token}] = ones.size();
          data.d1.push_back({B.name1(f), o.token, o.src, o.tgt});
          ones.push_back(std::move(o));
        });
      }
    }
  }
  for (Id a = 0; a < Id(B.size0()); ++a) {
    const FiniteCategory& c = frag.cat(a);
    for (const KleisliTriple& t : on[a]) {
      std::vector<Id> fm;
      for (Id x = 0; x < Id(c.size0()); ++x) fm.push_back(c.id(t.m[x]));
      const std::string tok = kleisli_token(c, t);
      data.id[{B.name0(a), tok}] = token_of(tok, tok, c, fm);
    }
  }
  std::vector<std::vector<std::size_t>> by_src(B.size0());
  for (std::size_t i = 0; i < ones.size(); ++i) by_src[B.src1(ones[i].f)].push_back(i);
  for (const One& u : ones) {
    const Id b = B.tgt1(u.f);
    for (std::size_t j : by_src[b]) {
      const One& v = ones[j];
      if (v.src != u.tgt) continue;
      budget.Spend();
      const FiniteCategory& c = frag.cat(B.src1(u.f));
      const FiniteCategory& e = frag.cat(B.tgt1(v.f));
      const Functor& F = frag.functors[u.f];
      const Functor& G = frag.functors[v.f];
      std::vector<Id> fm;
      for (Id x = 0; x < Id(c.size0()); ++x) fm.push_back(e.comp(v.fm[F.obj[x]], G.mor[u.fm[x]]));
      data.comp[{B.name1(u.f), u.token, B.name1(v.f), v.token}] = token_of(u.src, v.tgt, e, fm);
    }
  }
  KleisliDisp out;
  out.disp = share(prop_disp(frag.bicat, data, [&](Id th, Id i, Id j) {
    const One& u = ones[i];
    const One& v = ones[j];
    const FiniteCategory& c = frag.cat(B.src1(u.f));
    const FiniteCategory& d = frag.cat(B.tgt1(u.f));
    const NatTrans& n = frag.nats[th];
    const KleisliTriple& s = *u.s;
    const KleisliTriple& t = *u.t;
    for (Id x = 0; x < Id(c.size0()); ++x) {
      const Id nx = n.component[x];
      const Id y = d.tgt(nx);
      const Id mn = t.star.at({y, d.comp(nx, t.eta[y])});
      if (d.comp(u.fm[x], n.component[s.m[x]]) != d.comp(mn, v.fm[x])) return false;
    }
    return true;
  }));
  const DispBicat& D = *out.disp;
  for (Id x = 0; x < Id(D.total.size0()); ++x) out.objects.push_back(triple.at({D.over0[x], D.local0[x]}));
  for (Id u = 0; u < Id(D.total.size1()); ++u) out.one_cells.push_back(ones[one_index.at({D.over1[u], D.local1[u]})].fm);
  return out;
}

KleisliDisp kleisli_disp(const Fragment& frag) {
  Budget budget;
  return kleisli_disp(frag, budget);
}

Bicat kleisli_bicat(const Fragment& frag) { return kleisli_disp(frag).disp->total; }

MonadKleisli monad_kleisli_biequiv(const Fragment& frag, Budget& budget) {
  const Bicat& B = *frag.bicat;
  MonadKleisli out;
  out.monads = monad_tower(frag.bicat, budget);
  out.kleisli = kleisli_disp(frag, budget);
  const MonadTower& T = out.monads;
  const KleisliDisp& K = out.kleisli;
  const DispBicat& M = *T.monads;
  const DispBicat& D = *K.disp;

  for (const MonadStructure& s : T.objects) {
    const KleisliTriple k = kleisli_of_monad(frag, s);
    Id found = kNone;
    for (Id x : D.fiber0(s.carrier)) {
      if (K.objects[x] == k) found = x;
    }
    if (found == kNone) Fail(ErrorCode::kConstructionFailed, "monad_kleisli_biequiv: no Kleisli triple for a monad");
    out.to_kleisli.push_back(found);
  }
  for (Id x = 0; x < Id(D.total.size0()); ++x) {
    const MonadStructure s = monad_of_kleisli(frag, D.over0[x], K.objects[x]);
    Id found = kNone;
    for (Id y = 0; y < Id(T.objects.size()); ++y) {
      if (T.objects[y] == s) found = y;
    }
    if (found == kNone) Fail(ErrorCode::kConstructionFailed, "monad_kleisli_biequiv: no monad for a Kleisli triple");
    out.to_monad.push_back(found);
  }

  // 1-cells: n ↦ n⁻¹ componentwise, and back.
  std::vector<Id> l1, r1;
  for (Id u = 0; u < Id(M.total.size1()); ++u) {
    const MonadMap& mm = T.one_cells[u];
    const FiniteCategory& d = frag.cat(B.tgt1(mm.f));
    std::vector<Id> fm;
    for (Id c : frag.nats[mm.n].component) fm.push_back(d.inverse(c));
    Id found = kNone;
    for (Id v : D.total.hom1(out.to_kleisli[M.total.src1(u)], out.to_kleisli[M.total.tgt1(u)])) {
      if (D.over1[v] == mm.f && K.one_cells[v] == fm) found = v;
    }
    if (found == kNone) Fail(ErrorCode::kConstructionFailed, "monad_kleisli_biequiv: no Kleisli 1-cell for " + M.total.name1(u));
    l1.push_back(found);
  }
  for (Id v = 0; v < Id(D.total.size1()); ++v) {
    const Id f = D.over1[v];
    const FiniteCategory& d = frag.cat(B.tgt1(f));
    const Id sx = out.to_monad[D.total.src1(v)], tx = out.to_monad[D.total.tgt1(v)];
    NatTrans n;
    for (Id c : K.one_cells[v]) n.component.push_back(d.inverse(c));
    const Id n2 = frag.two_cell(B.comp(T.objects[sx].m, f), B.comp(f, T.objects[tx].m), n);
    Id found = kNone;
    for (Id u : M.total.hom1(sx, tx)) {
      if (T.one_cells[u] == MonadMap{f, n2}) found = u;
    }
    if (found == kNone) Fail(ErrorCode::kConstructionFailed, "monad_kleisli_biequiv: no monad map for " + D.total.name1(v));
    r1.push_back(found);
  }
  const Psfunctor id = id_psfunctor(frag.bicat);
  const DispPsfunctor l = disp_lift_psfunctor(T.monads, K.disp, id, out.to_kleisli, l1);
  const DispPsfunctor r = disp_lift_psfunctor(K.disp, T.monads, id, out.to_monad, r1);
  out.biequivalence = disp_inverse_biequivalence(l, r);
  return out;
}

MonadKleisli monad_kleisli_biequiv(const Fragment& frag) {
  Budget budget;
  return monad_kleisli_biequiv(frag, budget);
}

// ---------------------------------------------------------------------------

DispBicat pointed_groupoid_disp(const Fragment& frag) {
  const Bicat& B = *frag.bicat;
  for (const FiniteCategory& c : frag.cats) {
    if (!is_groupoid(c)) Fail(ErrorCode::kNotAGroupoid, "pointed_groupoid_disp: " + c.name + " is not a groupoid");
  }
  ChaoticData data;
  for (Id a = 0; a < Id(B.size0()); ++a) {
    const FiniteCategory& c = frag.cat(a);
    data.d0[B.name0(a)] = c.objects;
    for (Id x = 0; x < Id(c.size0()); ++x) {
      data.id[{B.name0(a), c.objects[x]}] = c.objects[x] + ">" + c.objects[x] + ":" + c.morphisms[c.id(x)].name;
    }
  }
  struct One {
    Id f, x, y, q;
  };
  std::vector<One> ones;
  auto token = [&](Id f, Id x, Id y, Id q) {
    const FiniteCategory& c = frag.cat(B.src1(f));
    const FiniteCategory& d = frag.cat(B.tgt1(f));
    return c.objects[x] + ">" + d.objects[y] + ":" + d.morphisms[q].name;
  };
  for (Id f = 0; f < Id(B.size1()); ++f) {
    const FiniteCategory& c = frag.cat(B.src1(f));
    const FiniteCategory& d = frag.cat(B.tgt1(f));
    for (Id x = 0; x < Id(c.size0()); ++x) {
      for (Id y = 0; y < Id(d.size0()); ++y) {
        for (Id q : d.hom(frag.functors[f].obj[x], y)) {
          data.d1.push_back({B.name1(f), token(f, x, y, q), c.objects[x], d.objects[y]});
          ones.push_back({f, x, y, q});
        }
      }
    }
  }
  for (const One& u : ones) {
    for (const One& v : ones) {
      if (B.tgt1(u.f) != B.src1(v.f) || u.y != v.x) continue;
      const FiniteCategory& e = frag.cat(B.tgt1(v.f));
      const Id q = e.comp(frag.functors[v.f].mor[u.q], v.q);
      data.comp[{B.name1(u.f), token(u.f, u.x, u.y, u.q), B.name1(v.f), token(v.f, v.x, v.y, v.q)}] =
          token(B.comp(u.f, v.f), u.x, v.y, q);
    }
  }
  return prop_disp(frag.bicat, data, [&](Id th, Id i, Id j) {
    const FiniteCategory& d = frag.cat(B.tgt1(ones[i].f));
    return d.comp(frag.nats[th].component[ones[i].x], ones[j].q) == ones[i].q;
  });
}

}  // namespace bikernel
