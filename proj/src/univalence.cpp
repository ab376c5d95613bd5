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
#include "bikernel/univalence.hpp"

namespace bikernel {

UnivalenceReport check_local_univalence(const Bicat& p, Budget& budget) {
  UnivalenceReport r;
  r.local_checked = true;
  for (Id a = 0; a < Id(p.size0()); ++a) {
    for (Id b = 0; b < Id(p.size0()); ++b) {
      const std::vector<Id>& hom = p.hom1(a, b);
      for (Id f : hom) {
        for (Id g : hom) {
          budget.Spend();
          std::vector<Inv2Cell> inv = invertible_2cells(p, f, g);
          const std::size_t expected = f == g ? 1 : 0;
          if (inv.size() != expected) {
            r.local.push_back({{p.name1(f), p.name1(g)}, inv.size(), false});
          } else if (f == g && inv[0].theta != p.id2(f)) {
            r.local.push_back({{p.name1(f), p.name1(g)}, 1, true});
          }
        }
      }
    }
  }
  return r;
}

UnivalenceReport check_global_univalence(const Bicat& p, Budget& budget) {
  UnivalenceReport r;
  r.global_checked = true;
  for (Id a = 0; a < Id(p.size0()); ++a) {
    for (Id b = 0; b < Id(p.size0()); ++b) {
      std::vector<AdjEquiv> es = adjoint_equivalences(p, a, b, budget);
      const std::size_t expected = a == b ? 1 : 0;
      if (es.size() != expected) {
        r.global.push_back({{p.name0(a), p.name0(b)}, es.size(), false});
      } else if (a == b && !(es[0] == identity_adjequiv(p, a))) {
        r.global.push_back({{p.name0(a), p.name0(b)}, 1, true});
      }
    }
  }
  return r;
}

UnivalenceReport check_univalent(const Bicat& p, Budget& budget) {
  UnivalenceReport r = check_local_univalence(p, budget);
  UnivalenceReport g = check_global_univalence(p, budget);
  r.global_checked = true;
  r.global = std::move(g.global);
  return r;
}

UnivalenceReport check_local_univalence(const Bicat& p) {
  Budget b;
  return check_local_univalence(p, b);
}
UnivalenceReport check_global_univalence(const Bicat& p) {
  Budget b;
  return check_global_univalence(p, b);
}
UnivalenceReport check_univalent(const Bicat& p) {
  Budget b;
  return check_univalent(p, b);
}

std::size_t adjequiv_structure_count(const Bicat& p, Id f) {
  Budget b;
  return adjequiv_structures(p, f, b).size();
}

AdjEquiv compose_adjequiv(const Bicat& p, const AdjEquiv& e1, const AdjEquiv& e2) {
  if (p.tgt1(e1.f) != p.src1(e2.f)) {
    Fail(ErrorCode::kTypeMismatch, "compose_adjequiv: " + p.name1(e1.f) + " and " +
                                       p.name1(e2.f) + " are not composable");
  }
  const Id f1 = e1.f, g1 = e1.g, f2 = e2.f, g2 = e2.g;
  AdjEquiv e;
  e.f = p.comp(f1, f2);
  e.g = p.comp(g2, g1);
  // id ⇒ f1·g1 ⇒ f1·(id·g1) ⇒ f1·((f2·g2)·g1) ⇒ f1·(f2·(g2·g1)) ⇒ (f1·f2)·(g2·g1)
  const Id eta = p.vchain({e1.eta.theta, p.lw(f1, p.lui(g1)), p.lw(f1, p.rw(e2.eta.theta, g1)),
                           p.lw(f1, p.lai(f2, g2, g1)), p.la(f1, f2, p.comp(g2, g1))});
  // (g2·g1)·(f1·f2) ⇒ g2·(g1·(f1·f2)) ⇒ g2·((g1·f1)·f2) ⇒ g2·(id·f2) ⇒ g2·f2 ⇒ id
  const Id eps = p.vchain({p.lai(g2, g1, p.comp(f1, f2)), p.lw(g2, p.la(g1, f1, f2)),
                           p.lw(g2, p.rw(e1.eps.theta, f2)), p.lw(g2, p.lu(f2)),
                           e2.eps.theta});
  e.eta = {eta, p.inverse(eta)};
  e.eps = {eps, p.inverse(eps)};
  if (!is_adjoint_equivalence(p, e)) {
    Fail(ErrorCode::kConstructionFailed, "compose_adjequiv: composite fails the triangles");
  }
  return e;
}

AdjEquiv transport_adjequiv(const Bicat& p, const AdjEquiv& e, const Inv2Cell& theta) {
  if (p.src2(theta.theta) != e.f || p.vcomp(theta.theta, theta.theta_inv) != p.id2(e.f)) {
    Fail(ErrorCode::kTypeMismatch, "transport_adjequiv: 2-cell does not start at f");
  }
  AdjEquiv t;
  t.f = p.tgt2(theta.theta);
  t.g = e.g;
  const Id eta = p.vcomp(e.eta.theta, p.rw(theta.theta, e.g));
  const Id eps = p.vcomp(p.lw(e.g, theta.theta_inv), e.eps.theta);
  t.eta = {eta, p.inverse(eta)};
  t.eps = {eps, p.inverse(eps)};
  if (!is_adjoint_equivalence(p, t)) {
    Fail(ErrorCode::kConstructionFailed, "transport_adjequiv: result fails the triangles");
  }
  return t;
}

bool biinitial_uniqueness_check(const Bicat& p) {
  if (!check_univalent(p).pass()) {
    Fail(ErrorCode::kPreconditionFailed, "biinitial_uniqueness_check: not univalent");
  }
  int count = 0;
  for (Id a = 0; a < Id(p.size0()); ++a) {
    if (is_biinitial(p, a).biinitial) ++count;
  }
  return count <= 1;
}

bool invertibles_are_identities(const Bicat& p) {
  for (Id t = 0; t < Id(p.size2()); ++t) {
    if (!p.is_invertible(t)) continue;
    if (p.src2(t) != p.tgt2(t) || p.id2(p.src2(t)) != t) return false;
  }
  return true;
}

bool adjequivs_are_identities(const Bicat& p) {
  Budget budget;
  for (Id a = 0; a < Id(p.size0()); ++a) {
    for (Id b = 0; b < Id(p.size0()); ++b) {
      for (const AdjEquiv& e : adjoint_equivalences(p, a, b, budget)) {
        if (a != b || !(e == identity_adjequiv(p, a))) return false;
      }
    }
  }
  return true;
}

}  // namespace bikernel
