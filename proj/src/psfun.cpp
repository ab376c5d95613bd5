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
#include "bikernel/psfun.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "odometer.hpp"
#include "bikernel/univalence.hpp"

namespace bikernel {

bool Psfunctor::operator==(const Psfunctor& o) const {
  return same_bicat(src, o.src) && same_bicat(tgt, o.tgt) && f0 == o.f0 && f1 == o.f1 &&
         f2 == o.f2 && identitor == o.identitor && compositor == o.compositor;
}

bool Pstrans::operator==(const Pstrans& o) const {
  return from == o.from && to == o.to && eta0 == o.eta0 && eta1 == o.eta1;
}

bool Modification::operator==(const Modification& o) const {
  return from == o.from && to == o.to && gamma == o.gamma;
}

namespace {

class Checker {
 public:
  Checker(const Bicat& c, Report& r) : c_(c), r_(r) {}

  void eq(const char* law, std::vector<std::string> cells, Id lhs, Id rhs) {
    ++r_.instantiations[law];
    if (lhs == kNone || lhs != rhs) r_.add({law, std::move(cells), name(lhs), name(rhs)});
  }
  void fail(const char* law, std::vector<std::string> cells, std::string lhs, std::string rhs) {
    r_.add({law, std::move(cells), std::move(lhs), std::move(rhs)});
  }
  std::string name(Id t) const { return t < 0 || std::size_t(t) >= c_.size2() ? "undefined" : c_.name2(t); }

 private:
  const Bicat& c_;
  Report& r_;
};

bool in_range(Id x, std::size_t n) { return x >= 0 && std::size_t(x) < n; }

// Well-typedness of a pseudofunctor's data; adds "psfun:typing" violations.
void type_psfunctor(const Psfunctor& F, Checker& ck) {
  const Bicat& B = *F.src;
  const Bicat& C = *F.tgt;
  if (F.f0.size() != B.size0() || F.f1.size() != B.size1() || F.f2.size() != B.size2() ||
      F.identitor.size() != B.size0()) {
    ck.fail("psfun:typing", {}, "table sizes", "tiers of the source");
    return;
  }
  for (Id a = 0; a < Id(B.size0()); ++a) {
    if (!in_range(F.f0[a], C.size0())) ck.fail("psfun:typing", {B.name0(a)}, "F0", "object");
  }
  for (Id f = 0; f < Id(B.size1()); ++f) {
    const Id g = F.f1[f];
    if (!in_range(g, C.size1()) || !in_range(F.f0[B.src1(f)], C.size0()) ||
        !in_range(F.f0[B.tgt1(f)], C.size0()) || C.src1(g) != F.f0[B.src1(f)] ||
        C.tgt1(g) != F.f0[B.tgt1(f)]) {
      ck.fail("psfun:typing", {B.name1(f)}, "F1", "1-cell over F0");
    }
  }
  for (Id t = 0; t < Id(B.size2()); ++t) {
    const Id u = F.f2[t];
    if (!in_range(u, C.size2()) || C.src2(u) != F.f1[B.src2(t)] || C.tgt2(u) != F.f1[B.tgt2(t)]) {
      ck.fail("psfun:typing", {B.name2(t)}, "F2", "2-cell over F1");
    }
  }
  for (Id a = 0; a < Id(B.size0()); ++a) {
    const Id g = F.identitor[a];
    if (!in_range(F.f0[a], C.size0()) || !in_range(g, C.size2()) ||
        C.src2(g) != C.id1(F.f0[a]) || C.tgt2(g) != F.f1[B.id1(a)]) {
      ck.fail("psfun:typing", {B.name0(a)}, "identitor", "id1(F a) => F(id1 a)");
    }
  }
  for (const auto& [f, g, fg] : B.comp1_tab.entries()) {
    const Id d = F.delta(f, g);
    if (!in_range(d, C.size2()) || C.src2(d) != C.comp(F.f1[f], F.f1[g]) ||
        C.tgt2(d) != F.f1[fg]) {
      ck.fail("psfun:typing", {B.name1(f), B.name1(g)}, "compositor", "F f · F g => F(f·g)");
    }
  }
}

void type_pstrans(const Pstrans& t, Checker& ck) {
  const Psfunctor& F = t.from;
  const Psfunctor& G = t.to;
  if (!same_bicat(F.src, G.src) || !same_bicat(F.tgt, G.tgt)) {
    ck.fail("pstrans:typing", {}, "endpoints", "parallel pseudofunctors");
    return;
  }
  const Bicat& B = *F.src;
  const Bicat& C = *F.tgt;
  if (t.eta0.size() != B.size0() || t.eta1.size() != B.size1()) {
    ck.fail("pstrans:typing", {}, "table sizes", "tiers of the source");
    return;
  }
  for (Id a = 0; a < Id(B.size0()); ++a) {
    const Id e = t.eta0[a];
    if (!in_range(e, C.size1()) || C.src1(e) != F.obj(a) || C.tgt1(e) != G.obj(a)) {
      ck.fail("pstrans:typing", {B.name0(a)}, "eta0", "F a -> G a");
    }
  }
  for (Id f = 0; f < Id(B.size1()); ++f) {
    const Id e = t.eta1[f];
    const Id a = B.src1(f), b = B.tgt1(f);
    if (!in_range(e, C.size2()) || C.src2(e) != C.comp(t.eta0[a], G.one(f)) ||
        C.tgt2(e) != C.comp(F.one(f), t.eta0[b])) {
      ck.fail("pstrans:typing", {B.name1(f)}, "eta1", "eta0(a)·G f => F f·eta0(b)");
    }
  }
}

}  // namespace

Report check_psfunctor(const Psfunctor& F) {
  Report r;
  const Bicat& B = *F.src;
  const Bicat& C = *F.tgt;
  Checker ck(C, r);
  type_psfunctor(F, ck);
  if (!r.pass()) return r;

  for (Id a = 0; a < Id(B.size0()); ++a) {
    ++r.instantiations["psfun:invertible"];
    if (!C.is_invertible(F.gamma(a))) ck.fail("psfun:invertible", {B.name0(a)}, ck.name(F.gamma(a)), "invertible");
  }
  for (const auto& [f, g, fg] : B.comp1_tab.entries()) {
    ++r.instantiations["psfun:invertible"];
    if (!C.is_invertible(F.delta(f, g))) {
      ck.fail("psfun:invertible", {B.name1(f), B.name1(g)}, ck.name(F.delta(f, g)), "invertible");
    }
  }
  for (Id f = 0; f < Id(B.size1()); ++f) {
    ck.eq("psfun:id2", {B.name1(f)}, F.two(B.id2(f)), C.id2(F.one(f)));
  }
  for (const auto& [s, t, v] : B.vcomp_tab.entries()) {
    ck.eq("psfun:vcomp", {B.name2(s), B.name2(t)}, F.two(v), C.vcomp(F.two(s), F.two(t)));
  }
  for (const auto& [f, t, v] : B.lwhisker_tab.entries()) {
    const Id lhs = C.vcomp(C.lw(F.one(f), F.two(t)), F.delta(f, B.tgt2(t)));
    const Id rhs = C.vcomp(F.delta(f, B.src2(t)), F.two(v));
    ck.eq("psfun:left-natural", {B.name1(f), B.name2(t)}, lhs, rhs);
  }
  for (const auto& [t, h, v] : B.rwhisker_tab.entries()) {
    const Id lhs = C.vcomp(C.rw(F.two(t), F.one(h)), F.delta(B.tgt2(t), h));
    const Id rhs = C.vcomp(F.delta(B.src2(t), h), F.two(v));
    ck.eq("psfun:right-natural", {B.name2(t), B.name1(h)}, lhs, rhs);
  }
  for (Id f = 0; f < Id(B.size1()); ++f) {
    const Id a = B.src1(f), b = B.tgt1(f);
    const Id ff = F.one(f);
    ck.eq("psfun:lunitor", {B.name1(f)}, C.lu(ff),
          C.vchain({C.rw(F.gamma(a), ff), F.delta(B.id1(a), f), F.two(B.lu(f))}));
    ck.eq("psfun:runitor", {B.name1(f)}, C.ru(ff),
          C.vchain({C.lw(ff, F.gamma(b)), F.delta(f, B.id1(b)), F.two(B.ru(f))}));
  }
  for (const auto& [f, g, h, v] : B.lassoc_tab.entries()) {
    const Id ff = F.one(f), fg = F.one(g), fh = F.one(h);
    const Id lhs = C.vchain({C.lw(ff, F.delta(g, h)), F.delta(f, B.comp(g, h)), F.two(v)});
    const Id rhs = C.vchain({C.la(ff, fg, fh), C.rw(F.delta(f, g), fh), F.delta(B.comp(f, g), h)});
    ck.eq("psfun:assoc", {B.name1(f), B.name1(g), B.name1(h)}, lhs, rhs);
  }
  return r;
}

Report check_pstrans(const Pstrans& t) {
  Report r;
  const Psfunctor& F = t.from;
  const Psfunctor& G = t.to;
  const Bicat& C = *F.tgt;
  Checker ck(C, r);
  type_pstrans(t, ck);
  if (!r.pass()) return r;
  const Bicat& B = *F.src;
  auto e0 = [&](Id a) { return t.eta0[a]; };
  auto e1 = [&](Id f) { return t.eta1[f]; };

  for (Id f = 0; f < Id(B.size1()); ++f) {
    ++r.instantiations["pstrans:invertible"];
    if (!C.is_invertible(e1(f))) ck.fail("pstrans:invertible", {B.name1(f)}, ck.name(e1(f)), "invertible");
  }
  for (Id a = 0; a < Id(B.size0()); ++a) {
    const Id lhs = C.vchain({C.ru(e0(a)), C.lui(e0(a)), C.rw(F.gamma(a), e0(a))});
    const Id rhs = C.vcomp(C.lw(e0(a), G.gamma(a)), e1(B.id1(a)));
    ck.eq("pstrans:identity", {B.name0(a)}, lhs, rhs);
  }
  for (const auto& [f, g, fg] : B.comp1_tab.entries()) {
    const Id a = B.src1(f), b = B.tgt1(f), c = B.tgt1(g);
    const Id lhs = C.vchain({C.la(e0(a), G.one(f), G.one(g)), C.rw(e1(f), G.one(g)),
                             C.lai(F.one(f), e0(b), G.one(g)), C.lw(F.one(f), e1(g)),
                             C.la(F.one(f), F.one(g), e0(c)), C.rw(F.delta(f, g), e0(c))});
    const Id rhs = C.vcomp(C.lw(e0(a), G.delta(f, g)), e1(fg));
    ck.eq("pstrans:composition", {B.name1(f), B.name1(g)}, lhs, rhs);
  }
  for (Id th = 0; th < Id(B.size2()); ++th) {
    const Id f = B.src2(th), g = B.tgt2(th);
    const Id a = B.src1(f), b = B.tgt1(f);
    const Id lhs = C.vcomp(C.lw(e0(a), G.two(th)), e1(g));
    const Id rhs = C.vcomp(e1(f), C.rw(F.two(th), e0(b)));
    ck.eq("pstrans:naturality", {B.name2(th)}, lhs, rhs);
  }
  return r;
}

Report check_modification(const Modification& m) {
  Report r;
  const Bicat& C = *m.from.from.tgt;
  Checker ck(C, r);
  if (!(m.from.from == m.to.from) || !(m.from.to == m.to.to)) {
    ck.fail("modif:typing", {}, "endpoints", "parallel pseudotransformations");
    return r;
  }
  const Bicat& B = *m.from.from.src;
  if (m.gamma.size() != B.size0() || m.from.eta0.size() != B.size0() ||
      m.to.eta0.size() != B.size0() || m.from.eta1.size() != B.size1() ||
      m.to.eta1.size() != B.size1()) {
    ck.fail("modif:typing", {}, "table sizes", "objects of the source");
    return r;
  }
  for (Id a = 0; a < Id(B.size0()); ++a) {
    const Id g = m.gamma[a];
    if (!in_range(g, C.size2()) || C.src2(g) != m.from.eta0[a] || C.tgt2(g) != m.to.eta0[a]) {
      ck.fail("modif:typing", {B.name0(a)}, ck.name(g), "eta(a) => theta(a)");
    }
  }
  if (!r.pass()) return r;
  const Psfunctor& F = m.from.from;
  const Psfunctor& G = m.from.to;
  for (Id f = 0; f < Id(B.size1()); ++f) {
    const Id a = B.src1(f), b = B.tgt1(f);
    const Id lhs = C.vcomp(C.rw(m.gamma[a], G.one(f)), m.to.eta1[f]);
    const Id rhs = C.vcomp(m.from.eta1[f], C.lw(F.one(f), m.gamma[b]));
    ck.eq("modif:square", {B.name1(f)}, lhs, rhs);
  }
  return r;
}

Psfunctor id_psfunctor(BicatPtr p) {
  Psfunctor F;
  const Bicat& B = *p;
  F.src = p;
  F.tgt = p;
  for (Id a = 0; a < Id(B.size0()); ++a) {
    F.f0.push_back(a);
    F.identitor.push_back(B.id2(B.id1(a)));
  }
  for (Id f = 0; f < Id(B.size1()); ++f) F.f1.push_back(f);
  for (Id t = 0; t < Id(B.size2()); ++t) F.f2.push_back(t);
  for (const auto& [f, g, fg] : B.comp1_tab.entries()) F.compositor.set(f, g, B.id2(fg));
  return F;
}

Psfunctor comp_psfunctor(const Psfunctor& F, const Psfunctor& G) {
  if (!same_bicat(F.tgt, G.src)) {
    Fail(ErrorCode::kTypeMismatch, "comp_psfunctor: target of F is not the source of G");
  }
  const Bicat& B = *F.src;
  const Bicat& D = *G.tgt;
  Psfunctor H;
  H.src = F.src;
  H.tgt = G.tgt;
  for (Id a = 0; a < Id(B.size0()); ++a) {
    H.f0.push_back(G.obj(F.obj(a)));
    H.identitor.push_back(D.vcomp(G.gamma(F.obj(a)), G.two(F.gamma(a))));
  }
  for (Id f = 0; f < Id(B.size1()); ++f) H.f1.push_back(G.one(F.one(f)));
  for (Id t = 0; t < Id(B.size2()); ++t) H.f2.push_back(G.two(F.two(t)));
  for (const auto& [f, g, fg] : B.comp1_tab.entries()) {
    H.compositor.set(f, g, D.vcomp(G.delta(F.one(f), F.one(g)), G.two(F.delta(f, g))));
  }
  return H;
}

Pstrans id_pstrans(const Psfunctor& F) {
  const Bicat& B = *F.src;
  const Bicat& C = *F.tgt;
  Pstrans t;
  t.from = F;
  t.to = F;
  for (Id a = 0; a < Id(B.size0()); ++a) t.eta0.push_back(C.id1(F.obj(a)));
  for (Id f = 0; f < Id(B.size1()); ++f) t.eta1.push_back(C.vcomp(C.lu(F.one(f)), C.rui(F.one(f))));
  return t;
}

Pstrans comp_pstrans(const Pstrans& eta, const Pstrans& theta) {
  if (!(eta.to == theta.from)) {
    Fail(ErrorCode::kTypeMismatch, "comp_pstrans: transformations are not composable");
  }
  const Psfunctor& F = eta.from;
  const Psfunctor& G = eta.to;
  const Psfunctor& H = theta.to;
  const Bicat& B = *F.src;
  const Bicat& C = *F.tgt;
  Pstrans t;
  t.from = F;
  t.to = H;
  for (Id a = 0; a < Id(B.size0()); ++a) t.eta0.push_back(C.comp(eta.eta0[a], theta.eta0[a]));
  for (Id f = 0; f < Id(B.size1()); ++f) {
    const Id a = B.src1(f), b = B.tgt1(f);
    const Id ea = eta.eta0[a], eb = eta.eta0[b], ta = theta.eta0[a], tb = theta.eta0[b];
    t.eta1.push_back(C.vchain({C.lai(ea, ta, H.one(f)), C.lw(ea, theta.eta1[f]),
                               C.la(ea, G.one(f), tb), C.rw(eta.eta1[f], tb),
                               C.lai(F.one(f), eb, tb)}));
  }
  return t;
}

Modification id_modification(const Pstrans& t) {
  const Bicat& C = *t.from.tgt;
  Modification m;
  m.from = t;
  m.to = t;
  for (Id e : t.eta0) m.gamma.push_back(C.id2(e));
  return m;
}

Modification vcomp_modification(const Modification& a, const Modification& b) {
  if (!(a.to == b.from)) Fail(ErrorCode::kTypeMismatch, "vcomp_modification: not composable");
  const Bicat& C = *a.from.from.tgt;
  Modification m;
  m.from = a.from;
  m.to = b.to;
  for (std::size_t i = 0; i < a.gamma.size(); ++i) m.gamma.push_back(C.vcomp(a.gamma[i], b.gamma[i]));
  return m;
}

bool is_invertible_modification(const Modification& m) {
  const Bicat& C = *m.from.from.tgt;
  for (Id g : m.gamma) {
    if (!C.is_invertible(g)) return false;
  }
  return true;
}

Psfunctor projection_psfunctor(const DispBicat& d) {
  Psfunctor F;
  const Bicat& B = *d.base;
  F.src = share(d.total);
  F.tgt = d.base;
  F.f0 = d.over0;
  F.f1 = d.over1;
  F.f2 = d.over2;
  for (Id x = 0; x < Id(d.total.size0()); ++x) F.identitor.push_back(B.id2(B.id1(d.over0[x])));
  for (const auto& [u, v, uv] : d.total.comp1_tab.entries()) {
    F.compositor.set(u, v, B.id2(B.comp(d.over1[u], d.over1[v])));
  }
  return F;
}

Psfunctor constant_psfunctor(BicatPtr src, BicatPtr tgt, Id t) {
  const Bicat& B = *src;
  const Bicat& C = *tgt;
  const Id i = C.id1(t);
  Psfunctor F;
  F.f0.assign(B.size0(), t);
  F.f1.assign(B.size1(), i);
  F.f2.assign(B.size2(), C.id2(i));
  F.identitor.assign(B.size0(), C.id2(i));
  for (const auto& [f, g, fg] : B.comp1_tab.entries()) F.compositor.set(f, g, C.lu(i));
  F.src = std::move(src);
  F.tgt = std::move(tgt);
  return F;
}

AdjEquiv psfunctor_image_adjequiv(const Psfunctor& F, const AdjEquiv& e) {
  const Bicat& B = *F.src;
  const Bicat& C = *F.tgt;
  if (!is_adjoint_equivalence(B, e)) {
    Fail(ErrorCode::kPreconditionFailed, "psfunctor_image_adjequiv: not an adjoint equivalence");
  }
  const Id a = B.src1(e.f), b = B.tgt1(e.f);
  AdjEquiv r;
  r.f = F.one(e.f);
  r.g = F.one(e.g);
  const Id eta = C.vchain({F.gamma(a), F.two(e.eta.theta), C.inverse(F.delta(e.f, e.g))});
  const Id eps = C.vchain({F.delta(e.g, e.f), F.two(e.eps.theta), C.inverse(F.gamma(b))});
  r.eta = {eta, C.inverse(eta)};
  r.eps = {eps, C.inverse(eps)};
  if (!is_adjoint_equivalence(C, r)) {
    Fail(ErrorCode::kConstructionFailed, "psfunctor_image_adjequiv: image fails the triangles");
  }
  return r;
}

Report check_biequivalence(const Biequivalence& q) {
  Report r;
  auto endpoint = [&](const std::string& what) { r.add({what + ":endpoints", {}, "mismatch", "declared type"}); };
  r.absorb(check_psfunctor(q.l), "L:");
  r.absorb(check_psfunctor(q.r), "R:");
  if (!r.pass()) return r;
  if (!same_bicat(q.l.src, q.r.tgt) || !same_bicat(q.l.tgt, q.r.src)) {
    endpoint("L");
    return r;
  }
  const BicatPtr B = q.l.src, C = q.l.tgt;
  const Psfunctor rl = comp_psfunctor(q.r, q.l);
  const Psfunctor lr = comp_psfunctor(q.l, q.r);
  const Psfunctor idb = id_psfunctor(B), idc = id_psfunctor(C);
  struct T {
    const char* name;
    const Pstrans& t;
    const Psfunctor& from;
    const Psfunctor& to;
  };
  bool typed = true;
  for (const T& t : {T{"eta", q.eta, rl, idc}, T{"eta_i", q.eta_i, idc, rl},
                     T{"eps", q.eps, lr, idb}, T{"eps_i", q.eps_i, idb, lr}}) {
    if (!(t.t.from == t.from) || !(t.t.to == t.to)) {
      endpoint(t.name);
      typed = false;
      continue;
    }
    r.absorb(check_pstrans(t.t), std::string(t.name) + ":");
  }
  if (!typed || !r.pass()) return r;
  struct M {
    const char* name;
    const Modification& m;
    Pstrans from, to;
  };
  for (const M& m : {M{"m1", q.m1, comp_pstrans(q.eta, q.eta_i), id_pstrans(rl)},
                     M{"m2", q.m2, comp_pstrans(q.eta_i, q.eta), id_pstrans(idc)},
                     M{"m3", q.m3, comp_pstrans(q.eps, q.eps_i), id_pstrans(lr)},
                     M{"m4", q.m4, comp_pstrans(q.eps_i, q.eps), id_pstrans(idb)}}) {
    if (!(m.m.from == m.from) || !(m.m.to == m.to)) {
      endpoint(m.name);
      continue;
    }
    r.absorb(check_modification(m.m), std::string(m.name) + ":");
    if (!is_invertible_modification(m.m)) {
      r.add({std::string(m.name) + ":invertible", {}, "non-invertible component", "invertible"});
    }
  }
  if (r.pass() && check_univalent(*B).pass() && check_univalent(*C).pass()) {
    std::set<Id> image(q.l.f0.begin(), q.l.f0.end());
    ++r.instantiations["object-bijection"];
    if (image.size() != B->size0() || image.size() != C->size0()) {
      r.add({"object-bijection", {}, std::to_string(image.size()) + " images",
             std::to_string(C->size0()) + " objects"});
    }
  }
  return r;
}

Biequivalence identity_biequivalence(BicatPtr p) {
  const Bicat& B = *p;
  Biequivalence q;
  q.l = id_psfunctor(p);
  q.r = id_psfunctor(p);
  const Psfunctor rl = comp_psfunctor(q.r, q.l);
  const Psfunctor id = id_psfunctor(p);
  auto trans = [&](const Psfunctor& from, const Psfunctor& to) {
    Pstrans t = id_pstrans(from);
    t.to = to;
    return t;
  };
  q.eta = trans(rl, id);
  q.eta_i = trans(id, rl);
  q.eps = trans(rl, id);
  q.eps_i = trans(id, rl);
  auto mod = [&](const Pstrans& x, const Pstrans& y, const Psfunctor& target) {
    Modification m;
    m.from = comp_pstrans(x, y);
    m.to = id_pstrans(target);
    for (Id a = 0; a < Id(B.size0()); ++a) m.gamma.push_back(B.lu(B.id1(a)));
    return m;
  };
  q.m1 = mod(q.eta, q.eta_i, rl);
  q.m2 = mod(q.eta_i, q.eta, id);
  q.m3 = mod(q.eps, q.eps_i, rl);
  q.m4 = mod(q.eps_i, q.eps, id);
  return q;
}

Functor hom_functor(const Psfunctor& F, Id a, Id b) {
  const Bicat& B = *F.src;
  const Bicat& C = *F.tgt;
  FiniteCategory s = hom_category(B, a, b);
  FiniteCategory t = hom_category(C, F.obj(a), F.obj(b));
  Functor fn;
  for (const std::string& o : s.objects) fn.obj.push_back(t.find_object(C.name1(F.one(B.find1(o)))));
  for (const Cell& m : s.morphisms) fn.mor.push_back(t.find_morphism(C.name2(F.two(B.find2(m.name)))));
  return fn;
}

bool is_local_equivalence(const Psfunctor& F) {
  const Bicat& B = *F.src;
  const Bicat& C = *F.tgt;
  for (Id a = 0; a < Id(B.size0()); ++a) {
    for (Id b = 0; b < Id(B.size0()); ++b) {
      if (!is_equivalence(hom_category(B, a, b), hom_category(C, F.obj(a), F.obj(b)),
                          hom_functor(F, a, b))) {
        return false;
      }
    }
  }
  return true;
}

bool is_essentially_surjective(const Psfunctor& F) {
  const Bicat& B = *F.src;
  const Bicat& C = *F.tgt;
  Budget budget;
  for (Id y = 0; y < Id(C.size0()); ++y) {
    bool hit = false;
    for (Id x = 0; x < Id(B.size0()) && !hit; ++x) {
      hit = !adjoint_equivalences(C, F.obj(x), y, budget).empty();
    }
    if (!hit) return false;
  }
  return true;
}

bool is_weak_equivalence(const Psfunctor& F) {
  return is_local_equivalence(F) && is_essentially_surjective(F);
}

namespace {

std::vector<Id> invertible_in(const Bicat& C, Id f, Id g) {
  std::vector<Id> out;
  if (f < 0 || g < 0) return out;
  for (Id t : C.hom2(f, g)) {
    if (C.is_invertible(t)) out.push_back(t);
  }
  return out;
}

// All F2 assignments with F2(id2) = id2 and F2 preserving vcomp.
std::vector<std::vector<Id>> functorial_f2(const Bicat& B, const Bicat& C,
                                          const std::vector<Id>& f1, Budget& budget) {
  const Id n = Id(B.size2());
  std::vector<std::vector<Id>> choice(n);
  std::vector<bool> is_id(n, false);
  for (Id f = 0; f < Id(B.size1()); ++f) is_id[B.id2(f)] = true;
  for (Id t = 0; t < n; ++t) {
    if (is_id[t]) {
      choice[t] = {C.id2(f1[B.src2(t)])};
    } else {
      choice[t] = C.hom2(f1[B.src2(t)], f1[B.tgt2(t)]);
    }
  }
  // vcomp entries checked once their largest index is assigned.
  std::vector<std::vector<std::tuple<Id, Id, Id>>> due(n);
  for (const auto& e : B.vcomp_tab.entries()) {
    const auto [s, t, v] = e;
    due[std::max({s, t, v})].push_back(e);
  }
  std::vector<std::vector<Id>> out;
  std::vector<Id> cur(n, kNone);
  std::function<void(Id)> go = [&](Id k) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (Id c : choice[k]) {
      budget.Spend();
      cur[k] = c;
      bool ok = true;
      for (const auto& [s, t, v] : due[k]) {
        if (C.vcomp(cur[s], cur[t]) != cur[v]) {
          ok = false;
          break;
        }
      }
      if (ok) go(k + 1);
    }
    cur[k] = kNone;
  };
  go(0);
  return out;
}

}  // namespace

std::vector<Psfunctor> enumerate_psfunctors(BicatPtr bp, BicatPtr cp, Budget& budget) {
  const Bicat& B = *bp;
  const Bicat& C = *cp;
  std::vector<Psfunctor> out;
  const auto pairs = B.comp1_tab.entries();
  std::vector<std::vector<Id>> objs(B.size0());
  for (auto& v : objs) {
    for (Id x = 0; x < Id(C.size0()); ++x) v.push_back(x);
  }
  odometer(objs, budget, [&](const std::vector<Id>& f0) {
    std::vector<std::vector<Id>> ones(B.size1());
    for (Id f = 0; f < Id(B.size1()); ++f) ones[f] = C.hom1(f0[B.src1(f)], f0[B.tgt1(f)]);
    odometer(ones, budget, [&](const std::vector<Id>& f1) {
      std::vector<std::vector<Id>> gammas(B.size0());
      for (Id a = 0; a < Id(B.size0()); ++a) {
        gammas[a] = invertible_in(C, C.id1(f0[a]), f1[B.id1(a)]);
        if (gammas[a].empty()) return;
      }
      std::vector<std::vector<Id>> deltas(pairs.size());
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [f, g, fg] = pairs[k];
        deltas[k] = invertible_in(C, C.comp(f1[f], f1[g]), f1[fg]);
        if (deltas[k].empty()) return;
      }
      for (const std::vector<Id>& f2 : functorial_f2(B, C, f1, budget)) {
        odometer(gammas, budget, [&](const std::vector<Id>& gam) {
          odometer(deltas, budget, [&](const std::vector<Id>& del) {
            Psfunctor F;
            F.src = bp;
            F.tgt = cp;
            F.f0 = f0;
            F.f1 = f1;
            F.f2 = f2;
            F.identitor = gam;
            for (std::size_t k = 0; k < pairs.size(); ++k) {
              F.compositor.set(std::get<0>(pairs[k]), std::get<1>(pairs[k]), del[k]);
            }
            if (check_psfunctor(F).pass()) out.push_back(std::move(F));
          });
        });
      }
    });
  });
  return out;
}

std::vector<Psfunctor> enumerate_psfunctors(BicatPtr b, BicatPtr c) {
  Budget budget;
  return enumerate_psfunctors(std::move(b), std::move(c), budget);
}

std::vector<Pstrans> enumerate_pstrans(const Psfunctor& F, const Psfunctor& G, Budget& budget) {
  if (!same_bicat(F.src, G.src) || !same_bicat(F.tgt, G.tgt)) {
    Fail(ErrorCode::kTypeMismatch, "enumerate_pstrans: pseudofunctors are not parallel");
  }
  const Bicat& B = *F.src;
  const Bicat& C = *F.tgt;
  std::vector<Pstrans> out;
  std::vector<std::vector<Id>> comps(B.size0());
  for (Id a = 0; a < Id(B.size0()); ++a) comps[a] = C.hom1(F.obj(a), G.obj(a));
  odometer(comps, budget, [&](const std::vector<Id>& e0) {
    std::vector<std::vector<Id>> cells(B.size1());
    for (Id f = 0; f < Id(B.size1()); ++f) {
      cells[f] = invertible_in(C, C.comp(e0[B.src1(f)], G.one(f)), C.comp(F.one(f), e0[B.tgt1(f)]));
      if (cells[f].empty()) return;
    }
    odometer(cells, budget, [&](const std::vector<Id>& e1) {
      Pstrans t{F, G, e0, e1};
      if (check_pstrans(t).pass()) out.push_back(std::move(t));
    });
  });
  return out;
}

std::vector<Pstrans> enumerate_pstrans(const Psfunctor& F, const Psfunctor& G) {
  Budget budget;
  return enumerate_pstrans(F, G, budget);
}

std::vector<Modification> enumerate_modifications(const Pstrans& a, const Pstrans& b) {
  const Bicat& B = *a.from.src;
  const Bicat& C = *a.from.tgt;
  Budget budget;
  std::vector<Modification> out;
  std::vector<std::vector<Id>> comps(B.size0());
  for (Id x = 0; x < Id(B.size0()); ++x) comps[x] = C.hom2(a.eta0[x], b.eta0[x]);
  odometer(comps, budget, [&](const std::vector<Id>& g) {
    Modification m{a, b, g};
    if (check_modification(m).pass()) out.push_back(std::move(m));
  });
  return out;
}

}  // namespace bikernel
