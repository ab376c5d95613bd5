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
#include "bikernel/core.hpp"

#include <algorithm>

namespace bikernel {

FiniteCategory hom_category(const Bicat& p, Id a, Id b) {
  if (a < 0 || b < 0 || std::size_t(a) >= p.size0() || std::size_t(b) >= p.size0()) {
    Fail(ErrorCode::kDanglingReference, "hom_category: unknown object");
  }
  FiniteCategory c;
  c.name = p.name0(a) + "," + p.name0(b);
  const std::vector<Id>& ones = p.hom1(a, b);
  std::vector<Id> local(p.size1(), kNone);
  for (Id f : ones) local[f] = c.add_object(p.name1(f));
  std::vector<Id> local2(p.size2(), kNone);
  for (Id f : ones) {
    for (Id g : ones) {
      for (Id t : p.hom2(f, g)) local2[t] = c.add_morphism(p.name2(t), local[f], local[g]);
    }
  }
  for (Id f : ones) c.identity[local[f]] = local2[p.id2(f)];
  for (Id f : ones) {
    for (Id t : p.out2(f)) {
      for (Id u : p.out2(p.tgt2(t))) {
        Id v = p.vcomp(t, u);
        if (v != kNone) c.compose.set(local2[t], local2[u], local2[v]);
      }
    }
  }
  c.index();
  return c;
}

Bicat op_bicat(const Bicat& p) {
  Bicat o;
  o.objects = p.objects;
  o.one_cells = p.one_cells;
  for (Cell& c : o.one_cells) std::swap(c.src, c.tgt);
  o.two_cells = p.two_cells;
  o.id1_tab = p.id1_tab;
  o.id2_tab = p.id2_tab;
  for (const auto& [f, g, v] : p.comp1_tab.entries()) o.comp1_tab.set(g, f, v);
  o.vcomp_tab = p.vcomp_tab;
  for (const auto& [f, t, v] : p.lwhisker_tab.entries()) o.rwhisker_tab.set(t, f, v);
  for (const auto& [t, h, v] : p.rwhisker_tab.entries()) o.lwhisker_tab.set(h, t, v);
  o.lunitor_tab = p.runitor_tab;
  o.lunitor_inv_tab = p.runitor_inv_tab;
  o.runitor_tab = p.lunitor_tab;
  o.runitor_inv_tab = p.lunitor_inv_tab;
  for (const auto& [f, g, h, v] : p.lassoc_tab.entries()) o.lassoc_inv_tab.set(h, g, f, v);
  for (const auto& [f, g, h, v] : p.lassoc_inv_tab.entries()) o.lassoc_tab.set(h, g, f, v);
  o.finalize();
  return o;
}

std::vector<Inv2Cell> invertible_2cells(const Bicat& p, Id f, Id g) {
  if (p.src1(f) != p.src1(g) || p.tgt1(f) != p.tgt1(g)) {
    Fail(ErrorCode::kTypeMismatch,
         "invertible_2cells: " + p.name1(f) + " and " + p.name1(g) + " are not parallel");
  }
  std::vector<Inv2Cell> out;
  for (Id t : p.hom2(f, g)) {
    Id inv = p.inverse(t);
    if (inv != kNone) out.push_back({t, inv});
  }
  return out;
}

namespace {

bool is_inverse_pair(const Bicat& p, Id t, Id u) {
  if (t < 0 || u < 0) return false;
  return p.vcomp(t, u) == p.id2(p.src2(t)) && p.vcomp(u, t) == p.id2(p.tgt2(t)) &&
         p.src2(u) == p.tgt2(t) && p.tgt2(u) == p.src2(t);
}

// The two triangle identities for (f, g, η, ε).
bool triangles_hold(const Bicat& p, Id f, Id g, Id eta, Id eps) {
  const Id t1 = p.vchain({p.lui(f), p.rw(eta, f), p.lai(f, g, f), p.lw(f, eps), p.ru(f)});
  if (t1 == kNone || t1 != p.id2(f)) return false;
  const Id t2 = p.vchain({p.rui(g), p.lw(g, eta), p.la(g, f, g), p.rw(eps, g), p.lu(g)});
  return t2 != kNone && t2 == p.id2(g);
}

// Every (g, η, ε) completing f, with g ranging over hom(b, a).
void structures_on(const Bicat& p, Id f, Budget& budget, std::vector<AdjEquiv>& out) {
  const Id a = p.src1(f), b = p.tgt1(f);
  const Id ia = p.id1(a), ib = p.id1(b);
  for (Id g : p.hom1(b, a)) {
    const Id fg = p.comp(f, g), gf = p.comp(g, f);
    // Pruning: both composites must be isomorphic to identities at all.
    std::vector<Id> etas, epss;
    for (Id t : p.hom2(ia, fg)) {
      if (p.is_invertible(t)) etas.push_back(t);
    }
    if (etas.empty()) continue;
    for (Id t : p.hom2(gf, ib)) {
      if (p.is_invertible(t)) epss.push_back(t);
    }
    for (Id eta : etas) {
      for (Id eps : epss) {
        budget.Spend();
        if (triangles_hold(p, f, g, eta, eps)) {
          out.push_back({f, g, {eta, p.inverse(eta)}, {eps, p.inverse(eps)}});
        }
      }
    }
  }
}

}  // namespace

bool is_adjoint_equivalence(const Bicat& p, const AdjEquiv& e) {
  const Id n1 = Id(p.size1());
  if (e.f < 0 || e.g < 0 || e.f >= n1 || e.g >= n1) return false;
  const Id a = p.src1(e.f), b = p.tgt1(e.f);
  if (p.src1(e.g) != b || p.tgt1(e.g) != a) return false;
  const Id n2 = Id(p.size2());
  for (Id c : {e.eta.theta, e.eta.theta_inv, e.eps.theta, e.eps.theta_inv}) {
    if (c < 0 || c >= n2) return false;
  }
  if (p.src2(e.eta.theta) != p.id1(a) || p.tgt2(e.eta.theta) != p.comp(e.f, e.g)) return false;
  if (p.src2(e.eps.theta) != p.comp(e.g, e.f) || p.tgt2(e.eps.theta) != p.id1(b)) return false;
  if (!is_inverse_pair(p, e.eta.theta, e.eta.theta_inv)) return false;
  if (!is_inverse_pair(p, e.eps.theta, e.eps.theta_inv)) return false;
  return triangles_hold(p, e.f, e.g, e.eta.theta, e.eps.theta);
}

AdjEquiv identity_adjequiv(const Bicat& p, Id a) {
  const Id i = p.id1(a);
  return {i, i, {p.lui(i), p.lu(i)}, {p.lu(i), p.lui(i)}};
}

std::vector<AdjEquiv> adjoint_equivalences(const Bicat& p, Id a, Id b, Budget& budget) {
  if (a < 0 || b < 0 || std::size_t(a) >= p.size0() || std::size_t(b) >= p.size0()) {
    Fail(ErrorCode::kDanglingReference, "adjoint_equivalences: unknown object");
  }
  std::vector<AdjEquiv> out;
  for (Id f : p.hom1(a, b)) structures_on(p, f, budget, out);
  return out;
}

std::vector<AdjEquiv> adjoint_equivalences(const Bicat& p, Id a, Id b) {
  Budget budget;
  return adjoint_equivalences(p, a, b, budget);
}

std::vector<AdjEquiv> adjequiv_structures(const Bicat& p, Id f, Budget& budget) {
  std::vector<AdjEquiv> out;
  structures_on(p, f, budget, out);
  return out;
}

BiinitialReport is_biinitial(const Bicat& p, Id a) {
  BiinitialReport r;
  for (Id b = 0; b < Id(p.size0()); ++b) {
    const std::vector<Id>& ones = p.hom1(a, b);
    bool ok = !ones.empty();
    for (Id f : ones) {
      for (Id g : ones) {
        if (p.hom2(f, g).size() != 1) ok = false;
      }
    }
    if (!ok) {
      r.biinitial = false;
      r.failing.push_back(b);
    }
  }
  return r;
}

StrictReport check_strict(const Bicat& p) {
  StrictReport r;
  auto fail = [&](const char* law, std::vector<std::string> cells, Id lhs, Id rhs) {
    r.one_strict = false;
    r.failures.push_back({law, std::move(cells), lhs < 0 ? "undefined" : p.name1(lhs),
                          rhs < 0 ? "undefined" : p.name1(rhs)});
  };
  for (Id f = 0; f < Id(p.size1()); ++f) {
    const Id l = p.comp(p.id1(p.src1(f)), f);
    if (l != f) fail("left-unit", {p.name1(f)}, l, f);
    const Id r1 = p.comp(f, p.id1(p.tgt1(f)));
    if (r1 != f) fail("right-unit", {p.name1(f)}, r1, f);
    for (Id g : p.out1(p.tgt1(f))) {
      for (Id h : p.out1(p.tgt1(g))) {
        const Id x = p.comp(f, p.comp(g, h)), y = p.comp(p.comp(f, g), h);
        if (x != y) fail("assoc", {p.name1(f), p.name1(g), p.name1(h)}, x, y);
      }
    }
  }
  return r;
}

TwoCat strict_to_two_cat(const Bicat& p) {
  StrictReport s = check_strict(p);
  if (!s.one_strict) {
    Fail(ErrorCode::kNotStrict, "strict_to_two_cat: " + s.failures[0].law +
                                    " fails at " + s.failures[0].cells[0]);
  }
  TwoCat c;
  c.objects = p.objects;
  c.one_cells = p.one_cells;
  c.two_cells = p.two_cells;
  c.id1 = p.id1_tab;
  c.id2 = p.id2_tab;
  c.comp1 = p.comp1_tab;
  c.vcomp = p.vcomp_tab;
  c.lwhisker = p.lwhisker_tab;
  c.rwhisker = p.rwhisker_tab;
  return c;
}

Report check_two_cat(const TwoCat& c) {
  // A 2-category is the bicategory whose structural cells are identities.
  Bicat b;
  b.objects = c.objects;
  b.one_cells = c.one_cells;
  b.two_cells = c.two_cells;
  b.id1_tab = c.id1;
  b.id2_tab = c.id2;
  b.comp1_tab = c.comp1;
  b.vcomp_tab = c.vcomp;
  b.lwhisker_tab = c.lwhisker;
  b.rwhisker_tab = c.rwhisker;
  b.finalize();
  Report r;
  StrictReport s = check_strict(b);
  for (const Violation& v : s.failures) r.add(v);
  if (!r.pass()) return r;
  for (Id f = 0; f < Id(b.size1()); ++f) {
    b.lunitor_tab[f] = b.lunitor_inv_tab[f] = b.id2(f);
    b.runitor_tab[f] = b.runitor_inv_tab[f] = b.id2(f);
    for (Id g : b.out1(b.tgt1(f))) {
      for (Id h : b.out1(b.tgt1(g))) {
        const Id i = b.id2(b.comp(f, b.comp(g, h)));
        b.lassoc_tab.set(f, g, h, i);
        b.lassoc_inv_tab.set(f, g, h, i);
      }
    }
  }
  r.absorb(validate_presentation(b));
  if (r.pass()) r.absorb(check_laws(b));
  return r;
}

}  // namespace bikernel
