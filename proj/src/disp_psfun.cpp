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
#include "bikernel/disp_psfun.hpp"

#include <set>

namespace bikernel {

BicatPtr total_ptr(const DispPtr& d) { return BicatPtr(d, &d->total); }

namespace {

bool same_disp(const DispPtr& a, const DispPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_bicat(a->base, b->base) && a->total.same_tables(b->total) && a->over0 == b->over0 &&
         a->over1 == b->over1 && a->over2 == b->over2;
}

[[noreturn]] void not_over(const std::string& what) {
  Fail(ErrorCode::kTypeMismatch, "displayed data not over its base: " + what);
}

bool in_range(Id x, std::size_t n) { return x >= 0 && std::size_t(x) < n; }

// `cells[i]` must be a total cell of `d` lying over want(i).
template <typename Want>
void check_tier(const std::vector<Id>& cells, std::size_t expected, const std::vector<Id>& over,
                Want want, const char* what) {
  if (cells.size() != expected) not_over(std::string(what) + " has the wrong size");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!in_range(cells[i], over.size()) || over[cells[i]] != want(Id(i))) not_over(what);
  }
}

void require_over(const DispPsfunctor& f) {
  const DispBicat& s = *f.src;
  const DispBicat& t = *f.tgt;
  const Psfunctor& F = f.base;
  if (!same_bicat(F.src, s.base) || !same_bicat(F.tgt, t.base)) not_over("pseudofunctor endpoints");
  check_tier(f.f0, s.total.size0(), t.over0, [&](Id x) { return F.obj(s.over0[x]); }, "F0");
  check_tier(f.f1, s.total.size1(), t.over1, [&](Id u) { return F.one(s.over1[u]); }, "F1");
  check_tier(f.f2, s.total.size2(), t.over2, [&](Id m) { return F.two(s.over2[m]); }, "F2");
  check_tier(f.identitor, s.total.size0(), t.over2, [&](Id x) { return F.gamma(s.over0[x]); },
             "identitor");
  for (const auto& [u, v, uv] : s.total.comp1_tab.entries()) {
    const Id d = f.compositor.get(u, v);
    if (!in_range(d, t.over2.size()) || t.over2[d] != F.delta(s.over1[u], s.over1[v])) {
      not_over("compositor");
    }
  }
}

void require_over(const DispPstrans& t) {
  require_over(t.from);
  require_over(t.to);
  if (!(t.from.base == t.base.from) || !(t.to.base == t.base.to)) not_over("transformation endpoints");
  const DispBicat& s = *t.from.src;
  const DispBicat& d = *t.from.tgt;
  check_tier(t.eta0, s.total.size0(), d.over1, [&](Id x) { return t.base.eta0[s.over0[x]]; }, "eta0");
  check_tier(t.eta1, s.total.size1(), d.over2, [&](Id u) { return t.base.eta1[s.over1[u]]; }, "eta1");
}

void require_over(const DispInvModification& m) {
  require_over(m.from);
  require_over(m.to);
  if (!(m.from.base == m.base.from) || !(m.to.base == m.base.to)) not_over("modification endpoints");
  const DispBicat& s = *m.from.from.src;
  const DispBicat& d = *m.from.from.tgt;
  check_tier(m.gamma, s.total.size0(), d.over2, [&](Id x) { return m.base.gamma[s.over0[x]]; },
             "modification components");
}

Report modification_report(const DispInvModification& m) {
  const DispBicat& d = *m.from.from.tgt;
  const bool propositional = is_locally_propositional(d);
  const bool groupoidal = is_locally_groupoidal(d);
  Report r;
  const Modification total = total_invmodification(m);
  if (!propositional) {
    r = check_modification(total);
  } else {
    // Typing only: both sides of a square lie over the same base 2-cell
    // between the same displayed 1-cells.
    const Bicat& t = d.total;
    for (std::size_t x = 0; x < m.gamma.size(); ++x) {
      if (m.from.eta0.size() != m.gamma.size() || m.to.eta0.size() != m.gamma.size() ||
          t.src2(m.gamma[x]) != m.from.eta0[x] || t.tgt2(m.gamma[x]) != m.to.eta0[x]) {
        r.add({"modif:typing", {}, "endpoints", "eta(x) => theta(x)"});
      }
    }
    r.instantiations["modif:square:discharged"] += m.from.from.src->total.size1();
  }
  if (groupoidal) {
    r.instantiations["modif:invertible:discharged"] += m.gamma.size();
  } else {
    for (Id g : m.gamma) {
      ++r.instantiations["modif:invertible"];
      if (!d.total.is_invertible(g)) r.add({"modif:invertible", {d.total.name2(g)}, d.total.name2(g), "invertible"});
    }
  }
  return r;
}

}  // namespace

bool DispPsfunctor::operator==(const DispPsfunctor& o) const {
  return same_disp(src, o.src) && same_disp(tgt, o.tgt) && base == o.base && f0 == o.f0 &&
         f1 == o.f1 && f2 == o.f2 && identitor == o.identitor && compositor == o.compositor;
}

bool DispPstrans::operator==(const DispPstrans& o) const {
  return from == o.from && to == o.to && base == o.base && eta0 == o.eta0 && eta1 == o.eta1;
}

bool DispInvModification::operator==(const DispInvModification& o) const {
  return from == o.from && to == o.to && base == o.base && gamma == o.gamma;
}

Psfunctor total_psfunctor(const DispPsfunctor& f) {
  return {total_ptr(f.src), total_ptr(f.tgt), f.f0, f.f1, f.f2, f.identitor, f.compositor};
}

Pstrans total_pstrans(const DispPstrans& t) {
  return {total_psfunctor(t.from), total_psfunctor(t.to), t.eta0, t.eta1};
}

Modification total_invmodification(const DispInvModification& m) {
  return {total_pstrans(m.from), total_pstrans(m.to), m.gamma};
}

Report check_disp_psfunctor(const DispPsfunctor& f) {
  require_over(f);
  Report r;
  r.absorb(check_psfunctor(total_psfunctor(f)), "disp:");
  return r;
}

Report check_disp_pstrans(const DispPstrans& t) {
  require_over(t);
  Report r;
  r.absorb(check_pstrans(total_pstrans(t)), "disp:");
  return r;
}

Report check_disp_invmodification(const DispInvModification& m) {
  require_over(m);
  Report r;
  r.absorb(modification_report(m), "disp:");
  return r;
}

DispPsfunctor disp_over(const Psfunctor& total, const Psfunctor& base, DispPtr src, DispPtr tgt) {
  DispPsfunctor f{std::move(src), std::move(tgt), base, total.f0, total.f1, total.f2,
                  total.identitor, total.compositor};
  require_over(f);
  return f;
}

DispPstrans disp_over(const Pstrans& total, const DispPsfunctor& from, const DispPsfunctor& to,
                      const Pstrans& base) {
  DispPstrans t{from, to, base, total.eta0, total.eta1};
  require_over(t);
  return t;
}

DispInvModification disp_over(const Modification& total, const DispPstrans& from,
                              const DispPstrans& to, const Modification& base) {
  DispInvModification m{from, to, base, total.gamma};
  require_over(m);
  return m;
}

DispPsfunctor disp_id_psfunctor(const DispPtr& d) {
  return disp_over(id_psfunctor(total_ptr(d)), id_psfunctor(d->base), d, d);
}

DispPsfunctor disp_comp_psfunctor(const DispPsfunctor& f, const DispPsfunctor& g) {
  if (!same_disp(f.tgt, g.src)) {
    Fail(ErrorCode::kTypeMismatch, "disp_comp_psfunctor: target of F̄ is not the source of Ḡ");
  }
  return disp_over(comp_psfunctor(total_psfunctor(f), total_psfunctor(g)),
                   comp_psfunctor(f.base, g.base), f.src, g.tgt);
}

DispPstrans disp_id_pstrans(const DispPsfunctor& f) {
  return disp_over(id_pstrans(total_psfunctor(f)), f, f, id_pstrans(f.base));
}

DispPstrans disp_comp_pstrans(const DispPstrans& eta, const DispPstrans& theta) {
  if (!(eta.to == theta.from)) {
    Fail(ErrorCode::kTypeMismatch, "disp_comp_pstrans: transformations are not composable");
  }
  return disp_over(comp_pstrans(total_pstrans(eta), total_pstrans(theta)), eta.from, theta.to,
                   comp_pstrans(eta.base, theta.base));
}

DispInvModification disp_id_invmodification(const DispPstrans& t) {
  return disp_over(id_modification(total_pstrans(t)), t, t, id_modification(t.base));
}

Biequivalence DispBiequivalence::base() const {
  return {l.base,      r.base,      eta.base, eta_i.base, eps.base, eps_i.base,
          m1.base,     m2.base,     m3.base,  m4.base};
}

Biequivalence total_biequivalence(const DispBiequivalence& b) {
  return {total_psfunctor(b.l),         total_psfunctor(b.r),         total_pstrans(b.eta),
          total_pstrans(b.eta_i),       total_pstrans(b.eps),         total_pstrans(b.eps_i),
          total_invmodification(b.m1),  total_invmodification(b.m2),  total_invmodification(b.m3),
          total_invmodification(b.m4)};
}

Report check_disp_biequivalence(const DispBiequivalence& b) {
  Report r;
  auto endpoint = [&](const std::string& what) {
    r.add({"disp:" + what + ":endpoints", {}, "mismatch", "declared type"});
  };
  require_over(b.l);
  require_over(b.r);
  r.absorb(check_psfunctor(total_psfunctor(b.l)), "disp:L:");
  r.absorb(check_psfunctor(total_psfunctor(b.r)), "disp:R:");
  if (!r.pass()) return r;
  if (!same_disp(b.l.src, b.r.tgt) || !same_disp(b.l.tgt, b.r.src)) {
    endpoint("L");
    return r;
  }
  const DispPsfunctor rl = disp_comp_psfunctor(b.r, b.l);
  const DispPsfunctor lr = disp_comp_psfunctor(b.l, b.r);
  const DispPsfunctor idb = disp_id_psfunctor(b.l.src);
  const DispPsfunctor idc = disp_id_psfunctor(b.l.tgt);
  struct T {
    const char* name;
    const DispPstrans& t;
    const DispPsfunctor& from;
    const DispPsfunctor& to;
  };
  bool typed = true;
  for (const T& t : {T{"eta", b.eta, rl, idc}, T{"eta_i", b.eta_i, idc, rl}, T{"eps", b.eps, lr, idb},
                     T{"eps_i", b.eps_i, idb, lr}}) {
    if (!(t.t.from == t.from) || !(t.t.to == t.to)) {
      endpoint(t.name);
      typed = false;
      continue;
    }
    require_over(t.t);
    r.absorb(check_pstrans(total_pstrans(t.t)), std::string("disp:") + t.name + ":");
  }
  if (!typed || !r.pass()) return r;
  struct M {
    const char* name;
    const DispInvModification& m;
    DispPstrans from, to;
  };
  for (const M& m : {M{"m1", b.m1, disp_comp_pstrans(b.eta, b.eta_i), disp_id_pstrans(rl)},
                     M{"m2", b.m2, disp_comp_pstrans(b.eta_i, b.eta), disp_id_pstrans(idc)},
                     M{"m3", b.m3, disp_comp_pstrans(b.eps, b.eps_i), disp_id_pstrans(lr)},
                     M{"m4", b.m4, disp_comp_pstrans(b.eps_i, b.eps), disp_id_pstrans(idb)}}) {
    if (!(m.m.from == m.from) || !(m.m.to == m.to)) {
      endpoint(m.name);
      continue;
    }
    require_over(m.m);
    r.absorb(modification_report(m.m), std::string("disp:") + m.name + ":");
  }
  return r;
}

DispBiequivalence disp_identity_biequivalence(const DispPtr& d) {
  const Biequivalence t = identity_biequivalence(total_ptr(d));
  const Biequivalence b = identity_biequivalence(d->base);
  DispBiequivalence q;
  q.l = disp_over(t.l, b.l, d, d);
  q.r = disp_over(t.r, b.r, d, d);
  const DispPsfunctor rl = disp_comp_psfunctor(q.r, q.l);
  const DispPsfunctor id = disp_id_psfunctor(d);
  q.eta = disp_over(t.eta, rl, id, b.eta);
  q.eta_i = disp_over(t.eta_i, id, rl, b.eta_i);
  q.eps = disp_over(t.eps, rl, id, b.eps);
  q.eps_i = disp_over(t.eps_i, id, rl, b.eps_i);
  q.m1 = disp_over(t.m1, disp_comp_pstrans(q.eta, q.eta_i), disp_id_pstrans(rl), b.m1);
  q.m2 = disp_over(t.m2, disp_comp_pstrans(q.eta_i, q.eta), disp_id_pstrans(id), b.m2);
  q.m3 = disp_over(t.m3, disp_comp_pstrans(q.eps, q.eps_i), disp_id_pstrans(rl), b.m3);
  q.m4 = disp_over(t.m4, disp_comp_pstrans(q.eps_i, q.eps), disp_id_pstrans(id), b.m4);
  return q;
}

DispPsfunctor disp_lift_psfunctor(DispPtr src, DispPtr tgt, const Psfunctor& base,
                                  std::vector<Id> f0, std::vector<Id> f1) {
  const DispBicat& S = *src;
  const DispBicat& T = *tgt;
  auto lift = [&](Id over, Id u, Id v, const std::string& what) {
    Id found = kNone;
    for (Id c : T.total.hom2(u, v)) {
      if (T.over2[c] != over) continue;
      if (found != kNone) Fail(ErrorCode::kConstructionFailed, "disp_lift_psfunctor: two lifts of " + what);
      found = c;
    }
    if (found == kNone) Fail(ErrorCode::kConstructionFailed, "disp_lift_psfunctor: no lift of " + what);
    return found;
  };
  Psfunctor t;
  t.src = total_ptr(src);
  t.tgt = total_ptr(tgt);
  t.f0 = std::move(f0);
  t.f1 = std::move(f1);
  if (t.f0.size() != S.total.size0() || t.f1.size() != S.total.size1()) {
    Fail(ErrorCode::kTypeMismatch, "disp_lift_psfunctor: assignment sizes");
  }
  for (Id m = 0; m < Id(S.total.size2()); ++m) {
    t.f2.push_back(lift(base.two(S.over2[m]), t.f1[S.total.src2(m)], t.f1[S.total.tgt2(m)],
                        S.total.name2(m)));
  }
  for (Id x = 0; x < Id(S.total.size0()); ++x) {
    t.identitor.push_back(lift(base.gamma(S.over0[x]), T.total.id1(t.f0[x]), t.f1[S.total.id1(x)],
                               "the identitor at " + S.total.name0(x)));
  }
  for (const auto& [u, v, uv] : S.total.comp1_tab.entries()) {
    t.compositor.set(u, v, lift(base.delta(S.over1[u], S.over1[v]), T.total.comp(t.f1[u], t.f1[v]),
                                t.f1[uv], "the compositor at " + S.total.name1(u) + ", " + S.total.name1(v)));
  }
  return disp_over(t, base, std::move(src), std::move(tgt));
}

DispBiequivalence disp_inverse_biequivalence(const DispPsfunctor& l, const DispPsfunctor& r) {
  const DispPtr& d1 = l.src;
  const DispPtr& d2 = l.tgt;
  if (!(disp_comp_psfunctor(l, r) == disp_id_psfunctor(d1)) ||
      !(disp_comp_psfunctor(r, l) == disp_id_psfunctor(d2))) {
    Fail(ErrorCode::kConstructionFailed, "disp_inverse_biequivalence: not mutually inverse");
  }
  const DispBiequivalence one = disp_identity_biequivalence(d1);
  const DispBiequivalence two = disp_identity_biequivalence(d2);
  DispBiequivalence q;
  q.l = l;
  q.r = r;
  q.eta = two.eta;
  q.eta_i = two.eta_i;
  q.m1 = two.m1;
  q.m2 = two.m2;
  q.eps = one.eps;
  q.eps_i = one.eps_i;
  q.m3 = one.m3;
  q.m4 = one.m4;
  return q;
}

}  // namespace bikernel
