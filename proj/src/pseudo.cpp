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
// Pseudo(B, C) as a stack of displayed bicategories:
//
//   Base     C^{B0}
//   Map1D    F1 families over Base; 1-cells are invertible η1 families,
//            2-cells exist when the modification square commutes
//   MapId    identitors over ∫Map1D; 1-cells when the identity law holds
//   MapC     compositors over ∫Map1D; 1-cells when the composition law holds
//   Map2D    F2 families over ∫Map1D; 1-cells when naturality holds
//
// then ∫(MapId × MapC × Map2D), cut down to the pseudofunctor laws.
#include <map>

#include "bikernel/psfun.hpp"
#include "layers.hpp"
#include "odometer.hpp"

namespace bikernel {

namespace {

std::string join(const std::vector<std::string>& parts, char open, char close) {
  std::string s(1, open);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  return s + close;
}

template <typename Name>
std::string family(const std::vector<Id>& cells, Name name) {
  std::vector<std::string> parts;
  for (Id c : cells) parts.push_back(name(c));
  return join(parts, '{', '}');
}

// C^n with the components of every cell.
struct Power {
  Bicat b;
  std::vector<std::vector<Id>> c0, c1, c2;
};

Power make_power(const Bicat& c, int n, Budget& budget) {
  if (n < 0) Fail(ErrorCode::kPreconditionFailed, "power_bicat: negative exponent");
  Power pw;
  Bicat& b = pw.b;
  auto tuples = [&](std::size_t size) {
    std::vector<std::vector<Id>> all(n);
    for (auto& v : all) {
      for (Id i = 0; i < Id(size); ++i) v.push_back(i);
    }
    std::vector<std::vector<Id>> out;
    odometer(all, budget, [&](const std::vector<Id>& t) { out.push_back(t); });
    return out;
  };
  auto token = [&](const std::vector<Id>& t, auto name) {
    std::vector<std::string> parts;
    for (Id x : t) parts.push_back(name(x));
    return join(parts, '[', ']');
  };
  std::map<std::vector<Id>, Id> i0, i1, i2;
  for (auto& t : tuples(c.size0())) {
    i0[t] = b.add_object(token(t, [&](Id x) { return c.name0(x); }));
    pw.c0.push_back(t);
  }
  auto map_each = [&](const std::vector<Id>& t, auto fn) {
    std::vector<Id> out;
    for (std::size_t i = 0; i < t.size(); ++i) out.push_back(fn(i, t[i]));
    return out;
  };
  for (auto& t : tuples(c.size1())) {
    const Id s = i0.at(map_each(t, [&](std::size_t, Id f) { return c.src1(f); }));
    const Id g = i0.at(map_each(t, [&](std::size_t, Id f) { return c.tgt1(f); }));
    i1[t] = b.add_one_cell(token(t, [&](Id x) { return c.name1(x); }), s, g);
    pw.c1.push_back(t);
  }
  for (auto& t : tuples(c.size2())) {
    const Id s = i1.at(map_each(t, [&](std::size_t, Id x) { return c.src2(x); }));
    const Id g = i1.at(map_each(t, [&](std::size_t, Id x) { return c.tgt2(x); }));
    i2[t] = b.add_two_cell(token(t, [&](Id x) { return c.name2(x); }), s, g);
    pw.c2.push_back(t);
  }
  b.size_tables();
  // Componentwise lookup; kNone unless every component is defined.
  auto look = [](const std::map<std::vector<Id>, Id>& idx, const std::vector<Id>& t) {
    for (Id x : t) {
      if (x == kNone) return kNone;
    }
    auto it = idx.find(t);
    return it == idx.end() ? kNone : it->second;
  };
  auto unary1 = [&](Id u, Id (Bicat::*op)(Id) const) {
    return look(i2, map_each(pw.c1[u], [&](std::size_t, Id f) { return (c.*op)(f); }));
  };
  for (Id x = 0; x < Id(pw.c0.size()); ++x) {
    b.id1_tab[x] = look(i1, map_each(pw.c0[x], [&](std::size_t, Id a) { return c.id1(a); }));
  }
  std::vector<std::vector<Id>> out1(pw.c0.size()), from2(pw.c0.size()), into2(pw.c0.size()),
      out2(pw.c1.size());
  for (Id u = 0; u < Id(pw.c1.size()); ++u) {
    out1[b.one_cells[u].src].push_back(u);
    b.id2_tab[u] = unary1(u, &Bicat::id2);
    b.lunitor_tab[u] = unary1(u, &Bicat::lu);
    b.lunitor_inv_tab[u] = unary1(u, &Bicat::lui);
    b.runitor_tab[u] = unary1(u, &Bicat::ru);
    b.runitor_inv_tab[u] = unary1(u, &Bicat::rui);
  }
  for (Id m = 0; m < Id(pw.c2.size()); ++m) {
    const Cell& s = b.one_cells[b.two_cells[m].src];
    out2[b.two_cells[m].src].push_back(m);
    from2[s.src].push_back(m);
    into2[s.tgt].push_back(m);
  }
  auto set2 = [](PairTable& tab, Id a, Id c2, Id v) {
    if (v != kNone) tab.set(a, c2, v);
  };
  for (Id u = 0; u < Id(pw.c1.size()); ++u) {
    const auto& cu = pw.c1[u];
    const Id mid = b.one_cells[u].tgt;
    for (Id v : out1[mid]) {
      const auto& cv = pw.c1[v];
      set2(b.comp1_tab, u, v, look(i1, map_each(cu, [&](std::size_t i, Id f) { return c.comp(f, cv[i]); })));
      for (Id w : out1[b.one_cells[v].tgt]) {
        const auto& cw = pw.c1[w];
        budget.Spend();
        Id a = look(i2, map_each(cu, [&](std::size_t i, Id f) { return c.la(f, cv[i], cw[i]); }));
        if (a != kNone) b.lassoc_tab.set(u, v, w, a);
        a = look(i2, map_each(cu, [&](std::size_t i, Id f) { return c.lai(f, cv[i], cw[i]); }));
        if (a != kNone) b.lassoc_inv_tab.set(u, v, w, a);
      }
    }
    for (Id m : from2[mid]) {
      const auto& cm = pw.c2[m];
      set2(b.lwhisker_tab, u, m, look(i2, map_each(cu, [&](std::size_t i, Id f) { return c.lw(f, cm[i]); })));
    }
    for (Id m : into2[b.one_cells[u].src]) {
      const auto& cm = pw.c2[m];
      set2(b.rwhisker_tab, m, u, look(i2, map_each(cu, [&](std::size_t i, Id f) { return c.rw(cm[i], f); })));
    }
  }
  for (Id m = 0; m < Id(pw.c2.size()); ++m) {
    const auto& cm = pw.c2[m];
    for (Id k : out2[b.two_cells[m].tgt]) {
      const auto& ck = pw.c2[k];
      set2(b.vcomp_tab, m, k, look(i2, map_each(cm, [&](std::size_t i, Id x) { return c.vcomp(x, ck[i]); })));
    }
  }
  Permutation p = b.finalize();
  auto permute = [](std::vector<std::vector<Id>>& v, const std::vector<Id>& perm) {
    std::vector<std::vector<Id>> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = std::move(v[i]);
    v = std::move(out);
  };
  permute(pw.c0, p.obj);
  permute(pw.c1, p.one);
  permute(pw.c2, p.two);
  return pw;
}

struct Layered {
  Power base;
  BicatPtr base_ptr;
  DispBicat map1;
  // Map1D records, by displayed cell.
  std::vector<std::vector<Id>> f1_of;    // object -> F1
  std::vector<std::vector<Id>> eta1_of;  // 1-cell -> η1
  BicatPtr e1;
};

// F1 families over every base object.
void build_map1(Layered& L, const Bicat& B, const Bicat& C, Budget& budget) {
  const Power& pw = L.base;
  const Bicat& base = pw.b;
  ChaoticData data;
  // Per base object, the families and their tokens.
  std::vector<std::vector<std::vector<Id>>> fams(base.size0());
  std::map<std::pair<Id, std::string>, std::vector<Id>> fam_of;
  auto n1 = [&](Id f) { return C.name1(f); };
  auto n2 = [&](Id t) { return C.name2(t); };
  for (Id x = 0; x < Id(base.size0()); ++x) {
    const auto& cx = pw.c0[x];
    std::vector<std::vector<Id>> choice(B.size1());
    for (Id f = 0; f < Id(B.size1()); ++f) choice[f] = C.hom1(cx[B.src1(f)], cx[B.tgt1(f)]);
    auto& toks = data.d0[base.name0(x)];
    odometer(choice, budget, [&](const std::vector<Id>& f1) {
      fams[x].push_back(f1);
      toks.push_back(family(f1, n1));
      fam_of[{x, toks.back()}] = f1;
    });
  }
  struct One {
    Id e;
    std::vector<Id> from, to, eta1;
  };
  std::vector<One> ones;
  // η1 : η0(a)·G f => F f·η0(b), invertible.
  auto eta_choices = [&](const std::vector<Id>& e0, const std::vector<Id>& F,
                         const std::vector<Id>& G) {
    std::vector<std::vector<Id>> ch(B.size1());
    for (Id f = 0; f < Id(B.size1()); ++f) {
      const Id s = C.comp(e0[B.src1(f)], G[f]);
      const Id t = C.comp(F[f], e0[B.tgt1(f)]);
      if (s != kNone && t != kNone) {
        for (Id c : C.hom2(s, t)) {
          if (C.is_invertible(c)) ch[f].push_back(c);
        }
      }
    }
    return ch;
  };
  auto one_token = [&](const std::vector<Id>& F, const std::vector<Id>& G, const std::vector<Id>& e1) {
    return family(F, n1) + ">" + family(G, n1) + ":" + family(e1, n2);
  };
  for (Id e = 0; e < Id(base.size1()); ++e) {
    const auto& e0 = pw.c1[e];
    const Id x = base.src1(e), y = base.tgt1(e);
    for (const auto& F : fams[x]) {
      for (const auto& G : fams[y]) {
        odometer(eta_choices(e0, F, G), budget, [&](const std::vector<Id>& e1) {
          data.d1.push_back({base.name1(e), one_token(F, G, e1), family(F, n1), family(G, n1)});
          ones.push_back({e, F, G, e1});
        });
      }
    }
  }
  for (Id x = 0; x < Id(base.size0()); ++x) {
    for (const auto& F : fams[x]) {
      std::vector<Id> e1;
      for (Id f = 0; f < Id(B.size1()); ++f) e1.push_back(C.vcomp(C.lu(F[f]), C.rui(F[f])));
      data.id[{base.name0(x), family(F, n1)}] = one_token(F, F, e1);
    }
  }
  // Composites of consecutive displayed 1-cells.
  std::vector<std::vector<std::size_t>> by_src(base.size0());
  for (std::size_t i = 0; i < ones.size(); ++i) by_src[base.src1(ones[i].e)].push_back(i);
  for (const One& u : ones) {
    const Id y = base.tgt1(u.e);
    for (std::size_t j : by_src[y]) {
      const One& v = ones[j];
      if (v.from != u.to) continue;
      budget.Spend();
      const auto& ea = pw.c1[u.e];
      const auto& ta = pw.c1[v.e];
      std::vector<Id> e1;
      for (Id f = 0; f < Id(B.size1()); ++f) {
        const Id a = B.src1(f), b = B.tgt1(f);
        const Id Ff = u.from[f], Gf = u.to[f], Hf = v.to[f];
        e1.push_back(C.vchain({C.lai(ea[a], ta[a], Hf), C.lw(ea[a], v.eta1[f]),
                               C.la(ea[a], Gf, ta[b]), C.rw(u.eta1[f], ta[b]),
                               C.lai(Ff, ea[b], ta[b])}));
      }
      data.comp[{base.name1(u.e), one_token(u.from, u.to, u.eta1), base.name1(v.e),
                 one_token(v.from, v.to, v.eta1)}] = one_token(u.from, v.to, e1);
    }
  }
  const auto admits = [&](Id th, Id i, Id j) {
    const One& u = ones[i];
    const One& v = ones[j];
    const auto& g = pw.c2[th];
    for (Id f = 0; f < Id(B.size1()); ++f) {
      const Id a = B.src1(f), b = B.tgt1(f);
      const Id lhs = C.vcomp(C.rw(g[a], u.to[f]), v.eta1[f]);
      const Id rhs = C.vcomp(u.eta1[f], C.lw(u.from[f], g[b]));
      if (lhs == kNone || lhs != rhs) return false;
    }
    return true;
  };
  L.map1 = prop_disp(L.base_ptr, data, admits);
  const DispBicat& d = L.map1;
  for (Id x = 0; x < Id(d.total.size0()); ++x) L.f1_of.push_back(fam_of.at({d.over0[x], d.local0[x]}));
  std::map<std::string, std::vector<Id>> eta_of;
  for (const One& u : ones) eta_of[base.name1(u.e) + "|" + one_token(u.from, u.to, u.eta1)] = u.eta1;
  for (Id u = 0; u < Id(d.total.size1()); ++u) L.eta1_of.push_back(eta_of.at(d.total.name1(u)));
}

}  // namespace

Bicat power_bicat(const Bicat& c, int n) {
  Budget budget;
  return make_power(c, n, budget).b;
}

PseudoBicat build_pseudo(BicatPtr bp, BicatPtr cp, Budget& budget) {
  const Bicat& B = *bp;
  const Bicat& C = *cp;
  require_lawful(B, "build_pseudo source");
  require_lawful(C, "build_pseudo target");
  Layered L;
  L.base = make_power(C, int(B.size0()), budget);
  L.base_ptr = share(L.base.b);
  build_map1(L, B, C, budget);
  L.e1 = share(total_bicat(L.map1));
  const Bicat& E = *L.e1;
  const DispBicat& m1 = L.map1;
  const Power& pw = L.base;
  auto x0 = [&](Id X) { return pw.c0[m1.over0[X]]; };
  auto e0 = [&](Id U) { return pw.c1[m1.over1[U]]; };
  const auto pairs = B.comp1_tab.entries();

  const Token name2 = [&](const std::vector<Id>& v) { return family(v, [&](Id t) { return C.name2(t); }); };
  LawLayer gam = law_layer(
      L.e1,
      [&](Id X) {
        std::vector<std::vector<Id>> ch(B.size0());
        for (Id a = 0; a < Id(B.size0()); ++a) {
          ch[a] = C.hom2(C.id1(x0(X)[a]), L.f1_of[X][B.id1(a)]);
        }
        return ch;
      },
      [&](Id U, const std::vector<Id>& gf, const std::vector<Id>& gg) {
        const auto& eta0 = e0(U);
        const auto& eta1 = L.eta1_of[U];
        for (Id a = 0; a < Id(B.size0()); ++a) {
          const Id lhs = C.vchain({C.ru(eta0[a]), C.lui(eta0[a]), C.rw(gf[a], eta0[a])});
          const Id rhs = C.vcomp(C.lw(eta0[a], gg[a]), eta1[B.id1(a)]);
          if (lhs == kNone || lhs != rhs) return false;
        }
        return true;
      },
      name2, budget);

  LawLayer del = law_layer(
      L.e1,
      [&](Id X) {
        const auto& F = L.f1_of[X];
        std::vector<std::vector<Id>> ch;
        for (const auto& [f, g, fg] : pairs) ch.push_back(C.hom2(C.comp(F[f], F[g]), F[fg]));
        return ch;
      },
      [&](Id U, const std::vector<Id>& df, const std::vector<Id>& dg) {
        const auto& eta0 = e0(U);
        const auto& eta1 = L.eta1_of[U];
        const auto& F = L.f1_of[E.src1(U)];
        const auto& G = L.f1_of[E.tgt1(U)];
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          const auto [f, g, fg] = pairs[k];
          const Id a = B.src1(f), b = B.tgt1(f), c = B.tgt1(g);
          const Id lhs = C.vchain({C.la(eta0[a], G[f], G[g]), C.rw(eta1[f], G[g]),
                                   C.lai(F[f], eta0[b], G[g]), C.lw(F[f], eta1[g]),
                                   C.la(F[f], F[g], eta0[c]), C.rw(df[k], eta0[c])});
          const Id rhs = C.vcomp(C.lw(eta0[a], dg[k]), eta1[fg]);
          if (lhs == kNone || lhs != rhs) return false;
        }
        return true;
      },
      name2, budget);

  LawLayer two = law_layer(
      L.e1,
      [&](Id X) {
        const auto& F = L.f1_of[X];
        std::vector<std::vector<Id>> ch(B.size2());
        for (Id t = 0; t < Id(B.size2()); ++t) ch[t] = C.hom2(F[B.src2(t)], F[B.tgt2(t)]);
        return ch;
      },
      [&](Id U, const std::vector<Id>& ff, const std::vector<Id>& gg) {
        const auto& eta0 = e0(U);
        const auto& eta1 = L.eta1_of[U];
        for (Id t = 0; t < Id(B.size2()); ++t) {
          const Id f = B.src2(t), g = B.tgt2(t);
          const Id lhs = C.vcomp(C.lw(eta0[B.src1(f)], gg[t]), eta1[g]);
          const Id rhs = C.vcomp(eta1[f], C.rw(ff[t], eta0[B.tgt1(f)]));
          if (lhs == kNone || lhs != rhs) return false;
        }
        return true;
      },
      name2, budget);

  const DispBicat prod = prod_disp(prod_disp(gam.disp, del.disp), two.disp);
  const BicatPtr e2 = share(total_bicat(prod));

  // Decoded candidate pseudofunctor of every object of ∫(product).
  auto pair = [](const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; };
  std::map<std::pair<Id, std::string>, Psfunctor> cand;
  for (Id X = 0; X < Id(E.size0()); ++X) {
    for (Id g : gam.disp.fiber0(X)) {
      for (Id d : del.disp.fiber0(X)) {
        for (Id t : two.disp.fiber0(X)) {
          Psfunctor F;
          F.src = bp;
          F.tgt = cp;
          F.f0 = x0(X);
          F.f1 = L.f1_of[X];
          F.f2 = two.value.at({X, two.disp.local0[t]});
          F.identitor = gam.value.at({X, gam.disp.local0[g]});
          const auto& dv = del.value.at({X, del.disp.local0[d]});
          for (std::size_t k = 0; k < pairs.size(); ++k) {
            F.compositor.set(std::get<0>(pairs[k]), std::get<1>(pairs[k]), dv[k]);
          }
          const std::string local = pair(pair(gam.disp.local0[g], del.disp.local0[d]), two.disp.local0[t]);
          cand.emplace(std::make_pair(X, local), std::move(F));
        }
      }
    }
  }
  std::vector<const Psfunctor*> decoded(e2->size0());
  for (Id o = 0; o < Id(e2->size0()); ++o) decoded[o] = &cand.at({prod.over0[o], prod.local0[o]});

  const DispBicat laws = fullsub_disp(e2, [&](Id o) { return check_psfunctor(*decoded[o]).pass(); });

  PseudoBicat out;
  out.bicat = total_bicat(laws);
  const Bicat& P = out.bicat;
  for (Id o = 0; o < Id(P.size0()); ++o) out.objects.push_back(*decoded[laws.over0[o]]);
  // Down to ∫Map1D and Base through the over maps.
  auto to_e1 = [&](Id u) { return prod.over1[laws.over1[u]]; };
  for (Id u = 0; u < Id(P.size1()); ++u) {
    const Id U = to_e1(u);
    out.one_cells.push_back(
        {out.objects[P.src1(u)], out.objects[P.tgt1(u)], e0(U), L.eta1_of[U]});
  }
  for (Id m = 0; m < Id(P.size2()); ++m) {
    const Id th = m1.over2[prod.over2[laws.over2[m]]];
    out.two_cells.push_back({out.one_cells[P.src2(m)], out.one_cells[P.tgt2(m)], pw.c2[th]});
  }
  return out;
}

PseudoBicat build_pseudo(BicatPtr b, BicatPtr c) {
  Budget budget;
  return build_pseudo(std::move(b), std::move(c), budget);
}

Bicat build_pseudo_bicat(BicatPtr b, BicatPtr c) { return build_pseudo(std::move(b), std::move(c)).bicat; }

}  // namespace bikernel
