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
#include "bikernel/algebra.hpp"

#include <map>

#include "layers.hpp"

namespace bikernel {

DispBicat alg_disp(const Psfunctor& F, Budget& budget) {
  if (!same_bicat(F.src, F.tgt)) Fail(ErrorCode::kTypeMismatch, "alg_disp: not an endo-pseudofunctor");
  const BicatPtr bp = F.src;
  const Bicat& B = *bp;
  ChaoticData data;
  struct One {
    Id f, ha, hb, cell;
  };
  std::vector<One> ones;
  for (Id a = 0; a < Id(B.size0()); ++a) {
    auto& toks = data.d0[B.name0(a)];
    for (Id h : B.hom1(F.obj(a), a)) toks.push_back(B.name1(h));
  }
  auto token = [&](Id ha, Id hb, Id cell) { return B.name1(ha) + ">" + B.name1(hb) + ":" + B.name2(cell); };
  for (Id f = 0; f < Id(B.size1()); ++f) {
    const Id a = B.src1(f), b = B.tgt1(f);
    for (Id ha : B.hom1(F.obj(a), a)) {
      for (Id hb : B.hom1(F.obj(b), b)) {
        for (Id c : B.hom2(B.comp(ha, f), B.comp(F.one(f), hb))) {
          budget.Spend();
          if (!B.is_invertible(c)) continue;
          data.d1.push_back({B.name1(f), token(ha, hb, c), B.name1(ha), B.name1(hb)});
          ones.push_back({f, ha, hb, c});
        }
      }
    }
  }
  for (Id a = 0; a < Id(B.size0()); ++a) {
    for (Id h : B.hom1(F.obj(a), a)) {
      const Id c = B.vchain({B.ru(h), B.lui(h), B.rw(F.gamma(a), h)});
      data.id[{B.name0(a), B.name1(h)}] = token(h, h, c);
    }
  }
  std::vector<std::vector<std::size_t>> by_src(B.size0());
  for (std::size_t i = 0; i < ones.size(); ++i) by_src[B.src1(ones[i].f)].push_back(i);
  for (const One& u : ones) {
    for (std::size_t j : by_src[B.tgt1(u.f)]) {
      const One& v = ones[j];
      if (v.ha != u.hb) continue;
      budget.Spend();
      const Id ff = F.one(u.f), fg = F.one(v.f);
      const Id c = B.vchain({B.la(u.ha, u.f, v.f), B.rw(u.cell, v.f), B.lai(ff, u.hb, v.f),
                             B.lw(ff, v.cell), B.la(ff, fg, v.hb), B.rw(F.delta(u.f, v.f), v.hb)});
      data.comp[{B.name1(u.f), token(u.ha, u.hb, u.cell), B.name1(v.f), token(v.ha, v.hb, v.cell)}] =
          token(u.ha, v.hb, c);
    }
  }
  return prop_disp(bp, data, [&](Id th, Id i, Id j) {
    const One& u = ones[i];
    const One& v = ones[j];
    const Id lhs = B.vcomp(B.lw(u.ha, th), v.cell);
    return lhs != kNone && lhs == B.vcomp(u.cell, B.rw(F.two(th), u.hb));
  });
}

DispBicat alg_disp(const Psfunctor& f) {
  Budget budget;
  return alg_disp(f, budget);
}

Id alg_structure(const DispBicat& alg, Id x) { return alg.base->find1(alg.local0[x]); }

Id alg_cell(const DispBicat& alg, Id u) {
  const std::string& l = alg.local1[u];
  const std::size_t skip = alg.local0[alg.total.src1(u)].size() + alg.local0[alg.total.tgt1(u)].size() + 2;
  return alg.base->find2(l.substr(skip));
}

DispBicat add2cell_disp(const DispPtr& d, const Psfunctor& s, const Pstrans& l, const Pstrans& r,
                        Budget& budget) {
  const BicatPtr e = total_ptr(d);
  const Psfunctor pi = projection_psfunctor(*d);
  const Psfunctor from = comp_psfunctor(pi, s);
  const Psfunctor to = comp_psfunctor(pi, id_psfunctor(d->base));
  for (const Pstrans* t : {&l, &r}) {
    if (!(t->from == from) || !(t->to == to)) {
      Fail(ErrorCode::kTypeMismatch, "add2cell_disp: endpoints are not π·S => π·id");
    }
  }
  const Bicat& B = *d->base;
  LawLayer layer = law_layer(
      e, [&](Id x) { return std::vector<std::vector<Id>>{B.hom2(l.eta0[x], r.eta0[x])}; },
      [&](Id u, const std::vector<Id>& a, const std::vector<Id>& b) {
        const Id lhs = B.vcomp(B.rw(a[0], to.one(u)), r.eta1[u]);
        return lhs != kNone && lhs == B.vcomp(l.eta1[u], B.lw(from.one(u), b[0]));
      },
      [&](const std::vector<Id>& v) { return B.name2(v[0]); }, budget);
  return std::move(layer.disp);
}

DispBicat add2cell_disp(const DispPtr& d, const Psfunctor& s, const Pstrans& l, const Pstrans& r) {
  Budget budget;
  return add2cell_disp(d, s, l, r, budget);
}

bool is_monad(const Bicat& B, const MonadStructure& s) {
  const Id m = s.m;
  if (m < 0 || B.src1(m) != s.carrier || B.tgt1(m) != s.carrier) return false;
  if (s.eta < 0 || B.src2(s.eta) != B.id1(s.carrier) || B.tgt2(s.eta) != m) return false;
  if (s.mu < 0 || B.src2(s.mu) != B.comp(m, m) || B.tgt2(s.mu) != m) return false;
  return B.vcomp(B.lw(m, s.eta), s.mu) == B.ru(m) && B.vcomp(B.rw(s.eta, m), s.mu) == B.lu(m) &&
         B.vcomp(B.lw(m, s.mu), s.mu) == B.vchain({B.la(m, m, m), B.rw(s.mu, m), s.mu});
}

bool is_monad_map(const Bicat& B, const MonadStructure& s, const MonadStructure& t, const MonadMap& x) {
  const Id f = x.f, n = x.n;
  if (f < 0 || B.src1(f) != s.carrier || B.tgt1(f) != t.carrier) return false;
  if (n < 0 || B.src2(n) != B.comp(s.m, f) || B.tgt2(n) != B.comp(f, t.m) || !B.is_invertible(n)) {
    return false;
  }
  const bool unit = B.vcomp(B.rw(s.eta, f), n) == B.vchain({B.lu(f), B.rui(f), B.lw(f, t.eta)});
  const bool mult = B.vcomp(B.rw(s.mu, f), n) ==
                    B.vchain({B.lai(s.m, s.m, f), B.lw(s.m, n), B.la(s.m, f, t.m), B.rw(n, t.m),
                              B.lai(f, t.m, t.m), B.lw(f, t.mu)});
  return unit && mult;
}

bool is_monad_cell(const Bicat& B, const MonadStructure& s, const MonadStructure& t,
                   const MonadMap& x, const MonadMap& y, Id theta) {
  if (theta < 0 || B.src2(theta) != x.f || B.tgt2(theta) != y.f) return false;
  const Id lhs = B.vcomp(B.lw(s.m, theta), y.n);
  return lhs != kNone && lhs == B.vcomp(x.n, B.rw(theta, t.m));
}

std::vector<MonadStructure> enumerate_monads(const Bicat& B, Budget& budget) {
  std::vector<MonadStructure> out;
  for (Id a = 0; a < Id(B.size0()); ++a) {
    for (Id m : B.hom1(a, a)) {
      for (Id eta : B.hom2(B.id1(a), m)) {
        for (Id mu : B.hom2(B.comp(m, m), m)) {
          budget.Spend();
          MonadStructure s{a, m, eta, mu};
          if (is_monad(B, s)) out.push_back(s);
        }
      }
    }
  }
  return out;
}

std::vector<MonadStructure> enumerate_monads(const Bicat& b) {
  Budget budget;
  return enumerate_monads(b, budget);
}

std::vector<MonadMap> enumerate_monad_maps(const Bicat& B, const MonadStructure& s,
                                           const MonadStructure& t) {
  std::vector<MonadMap> out;
  for (Id f : B.hom1(s.carrier, t.carrier)) {
    for (Id n : B.hom2(B.comp(s.m, f), B.comp(f, t.m))) {
      if (is_monad_map(B, s, t, {f, n})) out.push_back({f, n});
    }
  }
  return out;
}

MonadTower monad_tower(BicatPtr bp, Budget& budget) {
  const Bicat& B = *bp;
  require_lawful(B, "monad_tower");
  MonadTower t;
  const Psfunctor id = id_psfunctor(bp);
  t.alg = share(alg_disp(id, budget));
  const DispBicat& alg = *t.alg;
  const BicatPtr e1 = total_ptr(t.alg);
  const Bicat& E = *e1;
  t.projection = projection_psfunctor(alg);
  t.projection.src = e1;
  const Psfunctor from = comp_psfunctor(t.projection, id);
  const Psfunctor to = comp_psfunctor(t.projection, id);

  // r(a, h) = h with the algebra cell as naturality square.
  t.r = {from, to, {}, {}};
  t.l_unit = {from, to, {}, {}};
  for (Id x = 0; x < Id(E.size0()); ++x) {
    t.r.eta0.push_back(alg_structure(alg, x));
    t.l_unit.eta0.push_back(B.id1(alg.over0[x]));
  }
  for (Id u = 0; u < Id(E.size1()); ++u) {
    const Id f = alg.over1[u];
    t.r.eta1.push_back(alg_cell(alg, u));
    t.l_unit.eta1.push_back(B.vcomp(B.lu(f), B.rui(f)));
  }
  t.l_mult = comp_pstrans(t.r, t.r);
  for (const Pstrans* p : {&t.r, &t.l_unit, &t.l_mult}) {
    if (!check_pstrans(*p).pass()) {
      Fail(ErrorCode::kConstructionFailed, "monad_tower: endpoint transformation fails its laws");
    }
  }
  t.unit = share(add2cell_disp(t.alg, id, t.l_unit, t.r, budget));
  t.mult = share(add2cell_disp(t.alg, id, t.l_mult, t.r, budget));
  const DispBicat prod = prod_disp(*t.unit, *t.mult);
  t.m2 = share(sigma_disp(alg, prod));
  const DispBicat& m2 = *t.m2;

  const SigmaIndex in_m2 = sigma_index(alg, prod, m2);

  // Monad data of every object of ∫prod.
  std::vector<MonadStructure> data(prod.total.size0());
  for (Id o = 0; o < Id(prod.total.size0()); ++o) {
    const Id x = prod.over0[o];
    for (Id p : t.unit->fiber0(x)) {
      for (Id q : t.mult->fiber0(x)) {
        if ("(" + t.unit->local0[p] + "," + t.mult->local0[q] + ")" != prod.local0[o]) continue;
        data[o] = {alg.over0[x], alg_structure(alg, x), B.find2(t.unit->local0[p]),
                   B.find2(t.mult->local0[q])};
      }
    }
  }
  const BicatPtr e2 = total_ptr(t.m2);
  t.laws = share(fullsub_disp(e2, [&](Id o) { return is_monad(B, data[in_m2.obj[o]]); }));
  t.monads = share(sigma_disp(m2, *t.laws));
  const SigmaIndex in_laws = sigma_index(m2, *t.laws, *t.monads);
  t.bicat = total_bicat(*t.monads);
  for (Id o = 0; o < Id(t.bicat.size0()); ++o) {
    t.objects.push_back(data[in_m2.obj[t.laws->over0[in_laws.obj[o]]]]);
  }
  for (Id u = 0; u < Id(t.bicat.size1()); ++u) {
    const Id v = prod.over1[in_m2.one[t.laws->over1[in_laws.one[u]]]];
    t.one_cells.push_back({alg.over1[v], alg_cell(alg, v)});
  }
  return t;
}

MonadTower monad_tower(BicatPtr b) {
  Budget budget;
  return monad_tower(std::move(b), budget);
}

Bicat monad_bicat(BicatPtr b) { return monad_tower(std::move(b)).bicat; }

}  // namespace bikernel
