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
#include "bikernel/yoneda.hpp"

#include <string>

#include "bikernel/univalence.hpp"
#include "odometer.hpp"

namespace bikernel {

namespace {

std::string render(const NatTrans& n) {
  std::string s = "[";
  for (std::size_t i = 0; i < n.component.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(n.component[i]);
  }
  return s + "]";
}

class SemanticChecker {
 public:
  explicit SemanticChecker(Report& r) : r_(r) {}

  void eq(const std::string& law, std::vector<std::string> cells, const NatTrans& lhs,
          const NatTrans& rhs) {
    ++r_.instantiations[law];
    bool ok = lhs == rhs;
    for (Id k : lhs.component) ok = ok && k >= 0;
    if (!ok) r_.add({law, std::move(cells), render(lhs), render(rhs)});
  }

  void fail(const std::string& law, std::vector<std::string> cells, std::string got,
            std::string want) {
    r_.add({law, std::move(cells), std::move(got), std::move(want)});
  }

  // Runs a fincat validator and records a single typing failure.
  bool typed(const std::string& law, std::vector<std::string> cells, const Report& v) {
    if (v.pass()) return true;
    const std::string what = v.violations.empty() ? "" : v.violations.front().law;
    fail(law, std::move(cells), what, "well-typed");
    return false;
  }

 private:
  Report& r_;
};

NatTrans vchain(const FiniteCategory& d, std::initializer_list<NatTrans> parts) {
  NatTrans out;
  bool first = true;
  for (const NatTrans& n : parts) {
    out = first ? n : vcomp_nat(d, out, n);
    first = false;
  }
  return out;
}

void type_cat_psfunctor(const CatValuedPsfunctor& P, SemanticChecker& ck) {
  const Bicat& O = *P.op;
  if (P.cat.size() != O.size0() || P.one.size() != O.size1() || P.two.size() != O.size2() ||
      P.identitor.size() != O.size0()) {
    ck.fail("catpsfun:typing", {}, "table sizes", "one entry per cell");
    return;
  }
  for (Id a = 0; a < Id(O.size0()); ++a) {
    ck.typed("catpsfun:typing", {O.name0(a)}, validate_category(P.cat[a]));
  }
  for (Id f = 0; f < Id(O.size1()); ++f) {
    ck.typed("catpsfun:typing", {O.name1(f)},
             validate_functor(P.cat[O.src1(f)], P.cat[O.tgt1(f)], P.one[f]));
  }
  for (Id a = 0; a < Id(O.size0()); ++a) {
    const Id i = O.id1(a);
    if (!validate_functor(P.cat[a], P.cat[a], P.one[i]).pass()) continue;
    ck.typed("catpsfun:typing", {O.name0(a)},
             validate_nat_trans(P.cat[a], P.cat[a], identity_functor(P.cat[a]), P.one[i],
                                P.identitor[a]));
  }
  for (Id t = 0; t < Id(O.size2()); ++t) {
    const Id f = O.src2(t), g = O.tgt2(t);
    const FiniteCategory& x = P.cat[O.src1(f)];
    const FiniteCategory& y = P.cat[O.tgt1(f)];
    if (!validate_functor(x, y, P.one[f]).pass() || !validate_functor(x, y, P.one[g]).pass()) continue;
    ck.typed("catpsfun:typing", {O.name2(t)}, validate_nat_trans(x, y, P.one[f], P.one[g], P.two[t]));
  }
  for (const auto& [f, g, v] : O.comp1_tab.entries()) {
    auto it = P.compositor.find({f, g});
    if (it == P.compositor.end()) {
      ck.fail("catpsfun:typing", {O.name1(f), O.name1(g)}, "missing", "compositor");
      continue;
    }
    const FiniteCategory& x = P.cat[O.src1(f)];
    const FiniteCategory& y = P.cat[O.tgt1(f)];
    const FiniteCategory& z = P.cat[O.tgt1(g)];
    if (!validate_functor(x, y, P.one[f]).pass() || !validate_functor(y, z, P.one[g]).pass() ||
        !validate_functor(x, z, P.one[v]).pass()) {
      continue;
    }
    ck.typed("catpsfun:typing", {O.name1(f), O.name1(g)},
             validate_nat_trans(x, z, compose_functors(P.one[f], P.one[g]), P.one[v], it->second));
  }
}

bool same_base(const CatValuedPsfunctor& p, const CatValuedPsfunctor& q) {
  return p.base == q.base || (p.op->size0() == q.op->size0() && p.op->size1() == q.op->size1() &&
                              p.op->size2() == q.op->size2());
}

}  // namespace

Report check_cat_psfunctor(const CatValuedPsfunctor& P) {
  Report r;
  SemanticChecker ck(r);
  type_cat_psfunctor(P, ck);
  if (!r.pass()) return r;
  const Bicat& O = *P.op;
  auto C = [&](Id a) -> const FiniteCategory& { return P.cat[a]; };

  for (Id a = 0; a < Id(O.size0()); ++a) {
    ++r.instantiations["catpsfun:invertible"];
    if (!invert_nat(C(a), P.identitor[a])) ck.fail("catpsfun:invertible", {O.name0(a)}, render(P.identitor[a]), "invertible");
  }
  for (const auto& [f, g, v] : O.comp1_tab.entries()) {
    ++r.instantiations["catpsfun:invertible"];
    if (!invert_nat(C(O.tgt1(g)), P.delta(f, g))) {
      ck.fail("catpsfun:invertible", {O.name1(f), O.name1(g)}, render(P.delta(f, g)), "invertible");
    }
  }
  for (Id f = 0; f < Id(O.size1()); ++f) {
    ck.eq("catpsfun:id2", {O.name1(f)}, P.two[O.id2(f)],
          identity_nat(C(O.src1(f)), C(O.tgt1(f)), P.one[f]));
  }
  for (const auto& [s, t, v] : O.vcomp_tab.entries()) {
    const FiniteCategory& y = C(O.tgt1(O.src2(s)));
    ck.eq("catpsfun:vcomp", {O.name2(s), O.name2(t)}, P.two[v], vcomp_nat(y, P.two[s], P.two[t]));
  }
  for (const auto& [f, t, v] : O.lwhisker_tab.entries()) {
    const FiniteCategory& z = C(O.tgt1(O.src2(t)));
    const NatTrans lhs = vcomp_nat(z, lwhisker_nat(P.one[f], P.two[t]), P.delta(f, O.tgt2(t)));
    const NatTrans rhs = vcomp_nat(z, P.delta(f, O.src2(t)), P.two[v]);
    ck.eq("catpsfun:left-natural", {O.name1(f), O.name2(t)}, lhs, rhs);
  }
  for (const auto& [t, h, v] : O.rwhisker_tab.entries()) {
    const FiniteCategory& z = C(O.tgt1(h));
    const NatTrans lhs = vcomp_nat(z, rwhisker_nat(P.two[t], P.one[h]), P.delta(O.tgt2(t), h));
    const NatTrans rhs = vcomp_nat(z, P.delta(O.src2(t), h), P.two[v]);
    ck.eq("catpsfun:right-natural", {O.name2(t), O.name1(h)}, lhs, rhs);
  }
  for (Id f = 0; f < Id(O.size1()); ++f) {
    const Id a = O.src1(f), b = O.tgt1(f);
    const NatTrans id = identity_nat(C(a), C(b), P.one[f]);
    ck.eq("catpsfun:lunitor", {O.name1(f)}, id,
          vchain(C(b), {rwhisker_nat(P.identitor[a], P.one[f]), P.delta(O.id1(a), f), P.two[O.lu(f)]}));
    ck.eq("catpsfun:runitor", {O.name1(f)}, id,
          vchain(C(b), {lwhisker_nat(P.one[f], P.identitor[b]), P.delta(f, O.id1(b)), P.two[O.ru(f)]}));
  }
  for (const auto& [f, g, h, v] : O.lassoc_tab.entries()) {
    const FiniteCategory& d = C(O.tgt1(h));
    const NatTrans lhs =
        vchain(d, {lwhisker_nat(P.one[f], P.delta(g, h)), P.delta(f, O.comp(g, h)), P.two[v]});
    const NatTrans rhs = vcomp_nat(d, rwhisker_nat(P.delta(f, g), P.one[h]), P.delta(O.comp(f, g), h));
    ck.eq("catpsfun:assoc", {O.name1(f), O.name1(g), O.name1(h)}, lhs, rhs);
  }
  return r;
}

Report check_cat_pstrans(const CatValuedPsfunctor& P, const CatValuedPsfunctor& Q,
                         const CatPstrans& t) {
  Report r;
  SemanticChecker ck(r);
  if (!same_base(P, Q)) {
    ck.fail("catpstrans:typing", {}, "endpoints", "same base");
    return r;
  }
  const Bicat& O = *P.op;
  if (t.component.size() != O.size0() || t.naturality.size() != O.size1()) {
    ck.fail("catpstrans:typing", {}, "table sizes", "one entry per cell");
    return r;
  }
  for (Id a = 0; a < Id(O.size0()); ++a) {
    ck.typed("catpstrans:typing", {O.name0(a)}, validate_functor(P.cat[a], Q.cat[a], t.component[a]));
  }
  if (!r.pass()) return r;
  for (Id f = 0; f < Id(O.size1()); ++f) {
    const Id x = O.src1(f), y = O.tgt1(f);
    ck.typed("catpstrans:typing", {O.name1(f)},
             validate_nat_trans(P.cat[x], Q.cat[y], compose_functors(t.component[x], Q.one[f]),
                                compose_functors(P.one[f], t.component[y]), t.naturality[f]));
  }
  if (!r.pass()) return r;
  const auto& e0 = t.component;
  const auto& e1 = t.naturality;

  for (Id f = 0; f < Id(O.size1()); ++f) {
    ++r.instantiations["catpstrans:invertible"];
    if (!invert_nat(Q.cat[O.tgt1(f)], e1[f])) ck.fail("catpstrans:invertible", {O.name1(f)}, render(e1[f]), "invertible");
  }
  for (Id a = 0; a < Id(O.size0()); ++a) {
    const NatTrans lhs = rwhisker_nat(P.identitor[a], e0[a]);
    const NatTrans rhs = vcomp_nat(Q.cat[a], lwhisker_nat(e0[a], Q.identitor[a]), e1[O.id1(a)]);
    ck.eq("catpstrans:identity", {O.name0(a)}, lhs, rhs);
  }
  for (const auto& [f, g, fg] : O.comp1_tab.entries()) {
    const Id x = O.src1(f), z = O.tgt1(g);
    const FiniteCategory& d = Q.cat[z];
    const NatTrans lhs = vchain(d, {rwhisker_nat(e1[f], Q.one[g]), lwhisker_nat(P.one[f], e1[g]),
                                    rwhisker_nat(P.delta(f, g), e0[z])});
    const NatTrans rhs = vcomp_nat(d, lwhisker_nat(e0[x], Q.delta(f, g)), e1[fg]);
    ck.eq("catpstrans:composition", {O.name1(f), O.name1(g)}, lhs, rhs);
  }
  for (Id th = 0; th < Id(O.size2()); ++th) {
    const Id f = O.src2(th), g = O.tgt2(th);
    const Id x = O.src1(f), y = O.tgt1(f);
    const FiniteCategory& d = Q.cat[y];
    const NatTrans lhs = vcomp_nat(d, lwhisker_nat(e0[x], Q.two[th]), e1[g]);
    const NatTrans rhs = vcomp_nat(d, e1[f], rwhisker_nat(P.two[th], e0[y]));
    ck.eq("catpstrans:naturality", {O.name2(th)}, lhs, rhs);
  }
  return r;
}

Report check_cat_modification(const CatValuedPsfunctor& P, const CatValuedPsfunctor& Q,
                              const CatPstrans& from, const CatPstrans& to,
                              const CatModification& m) {
  Report r;
  SemanticChecker ck(r);
  const Bicat& O = *P.op;
  if (!same_base(P, Q) || m.component.size() != O.size0() || from.component.size() != O.size0() ||
      to.component.size() != O.size0() || from.naturality.size() != O.size1() ||
      to.naturality.size() != O.size1()) {
    ck.fail("catmodif:typing", {}, "table sizes", "one entry per object");
    return r;
  }
  for (Id a = 0; a < Id(O.size0()); ++a) {
    ck.typed("catmodif:typing", {O.name0(a)},
             validate_nat_trans(P.cat[a], Q.cat[a], from.component[a], to.component[a], m.component[a]));
  }
  if (!r.pass()) return r;
  for (Id f = 0; f < Id(O.size1()); ++f) {
    const Id x = O.src1(f), y = O.tgt1(f);
    const FiniteCategory& d = Q.cat[y];
    const NatTrans lhs = vcomp_nat(d, rwhisker_nat(m.component[x], Q.one[f]), to.naturality[f]);
    const NatTrans rhs = vcomp_nat(d, from.naturality[f], lwhisker_nat(P.one[f], m.component[y]));
    ck.eq("catmodif:square", {O.name1(f)}, lhs, rhs);
  }
  return r;
}

std::vector<CatPstrans> enumerate_cat_pstrans(const CatValuedPsfunctor& P,
                                              const CatValuedPsfunctor& Q, Budget& budget) {
  std::vector<CatPstrans> out;
  if (!same_base(P, Q)) return out;
  const Bicat& O = *P.op;
  std::vector<std::vector<Functor>> comps(O.size0());
  std::vector<std::vector<Id>> choice(O.size0());
  for (Id a = 0; a < Id(O.size0()); ++a) {
    comps[a] = enumerate_functors(P.cat[a], Q.cat[a], budget);
    for (std::size_t i = 0; i < comps[a].size(); ++i) choice[a].push_back(Id(i));
  }
  odometer(choice, budget, [&](const std::vector<Id>& pick) {
    CatPstrans t;
    for (Id a = 0; a < Id(O.size0()); ++a) t.component.push_back(comps[a][pick[a]]);
    std::vector<std::vector<NatTrans>> nats(O.size1());
    std::vector<std::vector<Id>> nat_choice(O.size1());
    for (Id f = 0; f < Id(O.size1()); ++f) {
      const Id x = O.src1(f), y = O.tgt1(f);
      for (NatTrans& n : enumerate_nat_trans(P.cat[x], Q.cat[y],
                                             compose_functors(t.component[x], Q.one[f]),
                                             compose_functors(P.one[f], t.component[y]), budget)) {
        if (invert_nat(Q.cat[y], n)) nats[f].push_back(std::move(n));
      }
      for (std::size_t i = 0; i < nats[f].size(); ++i) nat_choice[f].push_back(Id(i));
    }
    odometer(nat_choice, budget, [&](const std::vector<Id>& npick) {
      t.naturality.clear();
      for (Id f = 0; f < Id(O.size1()); ++f) t.naturality.push_back(nats[f][npick[f]]);
      if (check_cat_pstrans(P, Q, t).pass()) out.push_back(t);
    });
  });
  return out;
}

std::vector<CatModification> enumerate_cat_modifications(const CatValuedPsfunctor& P,
                                                         const CatValuedPsfunctor& Q,
                                                         const CatPstrans& from,
                                                         const CatPstrans& to, Budget& budget) {
  std::vector<CatModification> out;
  const Bicat& O = *P.op;
  std::vector<std::vector<NatTrans>> comps(O.size0());
  std::vector<std::vector<Id>> choice(O.size0());
  for (Id a = 0; a < Id(O.size0()); ++a) {
    comps[a] = enumerate_nat_trans(P.cat[a], Q.cat[a], from.component[a], to.component[a], budget);
    for (std::size_t i = 0; i < comps[a].size(); ++i) choice[a].push_back(Id(i));
  }
  odometer(choice, budget, [&](const std::vector<Id>& pick) {
    CatModification m;
    for (Id a = 0; a < Id(O.size0()); ++a) m.component.push_back(comps[a][pick[a]]);
    if (check_cat_modification(P, Q, from, to, m).pass()) out.push_back(std::move(m));
  });
  return out;
}

HomIndex hom_index(const Bicat& b, Id x, Id y) {
  HomIndex h;
  h.cat = hom_category(b, x, y);
  h.obj.assign(b.size1(), kNone);
  h.mor.assign(b.size2(), kNone);
  const std::vector<Id>& ones = b.hom1(x, y);
  h.cell1 = ones;
  for (std::size_t i = 0; i < ones.size(); ++i) h.obj[ones[i]] = Id(i);
  for (Id f : ones) {
    for (Id g : ones) {
      for (Id t : b.hom2(f, g)) {
        h.mor[t] = Id(h.cell2.size());
        h.cell2.push_back(t);
      }
    }
  }
  return h;
}

CatValuedPsfunctor representable0(BicatPtr bp, Id a) {
  const Bicat& B = *bp;
  if (a < 0 || std::size_t(a) >= B.size0()) Fail(ErrorCode::kDanglingReference, "representable0: unknown object");
  if (!check_local_univalence(B).pass()) {
    Fail(ErrorCode::kPreconditionFailed, "representable0: bicategory is not locally univalent");
  }
  CatValuedPsfunctor P;
  P.base = bp;
  P.op = share(op_bicat(B));
  std::vector<HomIndex> h;
  for (Id b = 0; b < Id(B.size0()); ++b) {
    h.push_back(hom_index(B, b, a));
    P.cat.push_back(h.back().cat);
  }
  // f : b1 -> b2 acts B(b2, a) -> B(b1, a).
  for (Id f = 0; f < Id(B.size1()); ++f) {
    const HomIndex& from = h[B.tgt1(f)];
    const HomIndex& to = h[B.src1(f)];
    Functor F;
    for (Id g : from.cell1) F.obj.push_back(to.obj[B.comp(f, g)]);
    for (Id t : from.cell2) F.mor.push_back(to.mor[B.lw(f, t)]);
    P.one.push_back(std::move(F));
  }
  for (Id th = 0; th < Id(B.size2()); ++th) {
    const Id f = B.src2(th);
    const HomIndex& from = h[B.tgt1(f)];
    const HomIndex& to = h[B.src1(f)];
    NatTrans n;
    for (Id g : from.cell1) n.component.push_back(to.mor[B.rw(th, g)]);
    P.two.push_back(std::move(n));
  }
  for (Id b = 0; b < Id(B.size0()); ++b) {
    NatTrans n;
    for (Id g : h[b].cell1) n.component.push_back(h[b].mor[B.lui(g)]);
    P.identitor.push_back(std::move(n));
  }
  // (f, g) composable in op(B): B-composite g·f, component α(g, f, k).
  for (const auto& [f, g, v] : P.op->comp1_tab.entries()) {
    (void)v;
    const HomIndex& from = h[B.tgt1(f)];
    const HomIndex& to = h[B.src1(g)];
    NatTrans n;
    for (Id k : from.cell1) n.component.push_back(to.mor[B.la(g, f, k)]);
    P.compositor[{f, g}] = std::move(n);
  }
  return P;
}

CatPstrans representable1(const Bicat& B, Id f) {
  const Id a = B.src1(f), b = B.tgt1(f);
  std::vector<HomIndex> ha, hb;
  for (Id c = 0; c < Id(B.size0()); ++c) {
    ha.push_back(hom_index(B, c, a));
    hb.push_back(hom_index(B, c, b));
  }
  CatPstrans t;
  for (Id c = 0; c < Id(B.size0()); ++c) {
    Functor F;
    for (Id g : ha[c].cell1) F.obj.push_back(hb[c].obj[B.comp(g, f)]);
    for (Id th : ha[c].cell2) F.mor.push_back(hb[c].mor[B.rw(th, f)]);
    t.component.push_back(std::move(F));
  }
  for (Id g = 0; g < Id(B.size1()); ++g) {
    const Id c1 = B.src1(g), c2 = B.tgt1(g);
    NatTrans n;
    for (Id h : ha[c2].cell1) n.component.push_back(hb[c1].mor[B.la(g, h, f)]);
    t.naturality.push_back(std::move(n));
  }
  return t;
}

CatModification representable2(const Bicat& B, Id theta) {
  const Id f = B.src2(theta);
  const Id a = B.src1(f), b = B.tgt1(f);
  CatModification m;
  for (Id c = 0; c < Id(B.size0()); ++c) {
    const HomIndex ha = hom_index(B, c, a);
    const HomIndex hb = hom_index(B, c, b);
    NatTrans n;
    for (Id h : ha.cell1) n.component.push_back(hb.mor[B.lw(h, theta)]);
    m.component.push_back(std::move(n));
  }
  return m;
}

namespace {

Id find_object(const PstransCategory& pc, const CatPstrans& t) {
  for (std::size_t i = 0; i < pc.objects.size(); ++i) {
    if (pc.objects[i] == t) return Id(i);
  }
  return kNone;
}

Id find_morphism(const PstransCategory& pc, Id s, Id t, const CatModification& m) {
  if (s < 0 || t < 0) return kNone;
  for (Id k : pc.cat.hom(s, t)) {
    if (pc.morphisms[k] == m) return k;
  }
  return kNone;
}

}  // namespace

PstransCategory pstrans_category(const CatValuedPsfunctor& P, const CatValuedPsfunctor& Q,
                                 Budget& budget) {
  PstransCategory pc;
  pc.cat.name = "pstrans";
  pc.objects = enumerate_cat_pstrans(P, Q, budget);
  const Id n = Id(pc.objects.size());
  const Id n0 = Id(P.op->size0());
  for (Id i = 0; i < n; ++i) pc.cat.add_object("t" + std::to_string(i));
  for (Id i = 0; i < n; ++i) {
    for (Id j = 0; j < n; ++j) {
      for (CatModification& m : enumerate_cat_modifications(P, Q, pc.objects[i], pc.objects[j], budget)) {
        pc.cat.add_morphism("m" + std::to_string(pc.morphisms.size()), i, j);
        pc.morphisms.push_back(std::move(m));
      }
    }
  }
  pc.cat.index();
  for (Id i = 0; i < n; ++i) {
    CatModification id;
    for (Id a = 0; a < n0; ++a) id.component.push_back(identity_nat(P.cat[a], Q.cat[a], pc.objects[i].component[a]));
    pc.cat.identity[i] = find_morphism(pc, i, i, id);
  }
  for (Id u = 0; u < Id(pc.morphisms.size()); ++u) {
    for (Id w = 0; w < Id(pc.morphisms.size()); ++w) {
      if (pc.cat.tgt(u) != pc.cat.src(w)) continue;
      CatModification c;
      for (Id a = 0; a < n0; ++a) {
        c.component.push_back(vcomp_nat(Q.cat[a], pc.morphisms[u].component[a], pc.morphisms[w].component[a]));
      }
      const Id v = find_morphism(pc, pc.cat.src(u), pc.cat.tgt(w), c);
      if (v != kNone) pc.cat.compose.set(u, w, v);
    }
  }
  return pc;
}

YonedaCheck yoneda_check(BicatPtr bp, const CatValuedPsfunctor& P, Id a, Budget& budget) {
  const Bicat& B = *bp;
  YonedaCheck out;
  Report& r = out.report;
  SemanticChecker ck(r);
  r.absorb(check_cat_psfunctor(P), "P:");
  if (!r.pass()) return out;
  const CatValuedPsfunctor Y = representable0(bp, a);
  PstransCategory pc = pstrans_category(Y, P, budget);
  const FiniteCategory& Pa = P.cat[a];
  std::vector<HomIndex> h;
  for (Id b = 0; b < Id(B.size0()); ++b) h.push_back(hom_index(B, b, a));
  const Id ida = h[a].obj[B.id1(a)];

  // F: τ ↦ τ(a)(id1 a).
  for (const CatPstrans& t : pc.objects) out.f.obj.push_back(t.component[a].obj[ida]);
  for (const CatModification& m : pc.morphisms) out.f.mor.push_back(m.component[a].component[ida]);

  // G: z ↦ (g ↦ P(g)(z)) with naturality from the compositor.
  auto image = [&](Id z) {
    CatPstrans t;
    for (Id b = 0; b < Id(B.size0()); ++b) {
      Functor c;
      for (Id g : h[b].cell1) c.obj.push_back(P.one[g].obj[z]);
      for (Id th : h[b].cell2) c.mor.push_back(P.two[th].component[z]);
      t.component.push_back(std::move(c));
    }
    // k : x -> y in op(B); g : x -> a in B is g : a -> x in op(B).
    for (Id k = 0; k < Id(B.size1()); ++k) {
      const Id x = P.op->src1(k);
      NatTrans n;
      for (Id g : h[x].cell1) n.component.push_back(P.delta(g, k).component[z]);
      t.naturality.push_back(std::move(n));
    }
    return t;
  };
  for (Id z = 0; z < Id(Pa.size0()); ++z) {
    const Id i = find_object(pc, image(z));
    if (i == kNone) ck.fail("yoneda:G", {Pa.objects[z]}, "not a pseudotransformation", "object");
    out.g.obj.push_back(i);
  }
  for (Id phi = 0; phi < Id(Pa.size1()); ++phi) {
    CatModification m;
    for (Id b = 0; b < Id(B.size0()); ++b) {
      NatTrans n;
      for (Id g : h[b].cell1) n.component.push_back(P.one[g].mor[phi]);
      m.component.push_back(std::move(n));
    }
    const Id s = out.g.obj[Pa.src(phi)], t = out.g.obj[Pa.tgt(phi)];
    const Id k = find_morphism(pc, s, t, m);
    if (k == kNone) ck.fail("yoneda:G", {Pa.morphisms[phi].name}, "not a modification", "morphism");
    out.g.mor.push_back(k);
  }
  out.pstrans_cat = pc.cat;
  out.objects = pc.objects;
  out.morphisms = pc.morphisms;
  if (!r.pass()) return out;
  ck.typed("yoneda:F", {}, validate_functor(pc.cat, Pa, out.f));
  ck.typed("yoneda:G", {}, validate_functor(Pa, pc.cat, out.g));
  if (!r.pass()) return out;

  // Unit at τ, on g : b -> a: the inverse of τ(g·id)'s naturality cell
  // followed by τ(b)(ρ g).
  for (Id i = 0; i < Id(pc.objects.size()); ++i) {
    const CatPstrans& t = pc.objects[i];
    CatModification m;
    bool ok = true;
    for (Id b = 0; b < Id(B.size0()); ++b) {
      const FiniteCategory& Pb = P.cat[b];
      NatTrans n;
      for (Id g : h[b].cell1) {
        const Id k = t.naturality[g].component[ida];
        const Id c = Pb.comp(k, t.component[b].mor[h[b].mor[B.ru(g)]]);
        const Id inv = c < 0 ? kNone : Pb.inverse(c);
        ok = ok && inv != kNone;
        n.component.push_back(inv);
      }
      m.component.push_back(std::move(n));
    }
    const Id u = ok ? find_morphism(pc, i, out.g.obj[out.f.obj[i]], m) : kNone;
    if (u == kNone) ck.fail("yoneda:unit", {pc.cat.objects[i]}, "no modification", "τ => G(F τ)");
    out.unit.component.push_back(u);
  }
  for (Id z = 0; z < Id(Pa.size0()); ++z) out.counit.component.push_back(Pa.inverse(P.identitor[a].component[z]));
  if (!r.pass()) return out;

  const Functor fg = compose_functors(out.f, out.g);
  const Functor gf = compose_functors(out.g, out.f);
  ck.typed("yoneda:unit", {}, validate_nat_trans(pc.cat, pc.cat, identity_functor(pc.cat), fg, out.unit));
  ck.typed("yoneda:counit", {}, validate_nat_trans(Pa, Pa, gf, identity_functor(Pa), out.counit));
  if (!r.pass()) return out;
  ++r.instantiations["yoneda:invertible"];
  if (!invert_nat(pc.cat, out.unit)) ck.fail("yoneda:invertible", {"unit"}, render(out.unit), "invertible");
  ++r.instantiations["yoneda:invertible"];
  if (!invert_nat(Pa, out.counit)) ck.fail("yoneda:invertible", {"counit"}, render(out.counit), "invertible");
  // F(unit τ) then counit(F τ) is id(F τ); unit(G z) then G(counit z) is id(G z).
  for (Id i = 0; i < Id(pc.objects.size()); ++i) {
    ++r.instantiations["yoneda:triangle"];
    const Id fi = out.f.obj[i];
    if (Pa.comp(out.f.mor[out.unit.component[i]], out.counit.component[fi]) != Pa.id(fi)) {
      ck.fail("yoneda:triangle", {pc.cat.objects[i]}, "F unit · counit F", "identity");
    }
  }
  for (Id z = 0; z < Id(Pa.size0()); ++z) {
    ++r.instantiations["yoneda:triangle"];
    const Id gz = out.g.obj[z];
    if (pc.cat.comp(out.unit.component[gz], out.g.mor[out.counit.component[z]]) != pc.cat.id(gz)) {
      ck.fail("yoneda:triangle", {Pa.objects[z]}, "unit G · G counit", "identity");
    }
  }
  return out;
}

YonedaCheck yoneda_check(BicatPtr b, const CatValuedPsfunctor& p, Id a) {
  Budget budget;
  return yoneda_check(std::move(b), p, a, budget);
}

YonedaHom yoneda_hom(BicatPtr bp, Id a, Id c, Budget& budget) {
  const Bicat& B = *bp;
  YonedaHom out;
  out.hom = hom_index(B, a, c);
  const CatValuedPsfunctor ya = representable0(bp, a);
  const CatValuedPsfunctor yc = representable0(bp, c);
  out.target = pstrans_category(ya, yc, budget);
  bool found = true;
  for (Id f : out.hom.cell1) {
    out.functor.obj.push_back(find_object(out.target, representable1(B, f)));
    found = found && out.functor.obj.back() != kNone;
  }
  for (Id th : out.hom.cell2) {
    const Id s = out.functor.obj[out.hom.obj[B.src2(th)]];
    const Id t = out.functor.obj[out.hom.obj[B.tgt2(th)]];
    out.functor.mor.push_back(find_morphism(out.target, s, t, representable2(B, th)));
    found = found && out.functor.mor.back() != kNone;
  }
  out.equivalence = found && validate_functor(out.hom.cat, out.target.cat, out.functor).pass() &&
                    is_equivalence(out.hom.cat, out.target.cat, out.functor);
  return out;
}

FullImage full_image(const Psfunctor& F) {
  const Bicat& C = *F.tgt;
  std::vector<bool> hit(C.size0(), false);
  for (Id x : F.f0) hit[x] = true;
  FullImage im;
  im.disp = share(fullsub_disp(F.tgt, [&](Id c) { return bool(hit[c]); }));
  im.bicat = total_ptr(im.disp);
  im.from_target.assign(C.size0(), kNone);
  for (Id x = 0; x < Id(im.disp->over0.size()); ++x) im.from_target[im.disp->over0[x]] = x;
  return im;
}

Psfunctor restrict_psfunctor(const Psfunctor& F, const FullImage& im) {
  const Bicat& C = *F.tgt;
  const DispBicat& d = *im.disp;
  std::vector<Id> inv1(C.size1(), kNone), inv2(C.size2(), kNone);
  for (Id u = 0; u < Id(d.over1.size()); ++u) inv1[d.over1[u]] = u;
  for (Id t = 0; t < Id(d.over2.size()); ++t) inv2[d.over2[t]] = t;
  Psfunctor R;
  R.src = F.src;
  R.tgt = im.bicat;
  for (Id x : F.f0) R.f0.push_back(im.from_target[x]);
  for (Id f : F.f1) R.f1.push_back(inv1[f]);
  for (Id t : F.f2) R.f2.push_back(inv2[t]);
  for (Id t : F.identitor) R.identitor.push_back(inv2[t]);
  for (const auto& [f, g, v] : F.compositor.entries()) R.compositor.set(f, g, inv2[v]);
  return R;
}

Psfunctor restrict_psfunctor(const Psfunctor& F) { return restrict_psfunctor(F, full_image(F)); }

}  // namespace bikernel
