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
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bikernel/fincat.hpp"
#include "bikernel/disp_psfun.hpp"
#include "bikernel/psfun.hpp"

namespace bikernel {

// A pseudofunctor op(B) -> Cat with actual finite categories as values.
// Cells are indexed by the cells of B (op_bicat keeps the ids), so for
// f : a -> b in B, one[f] is a functor cat[b] -> cat[a] and for θ : f => g,
// two[θ] : one[f] => one[g].
//
// identitor[a] : Id => one[id1 a]. compositor[(f, g)] is defined for f, g
// composable in op(B), i.e. g·f in B, and goes one[f]·one[g] => one[g·f]
// (functors composed diagrammatically).
struct CatValuedPsfunctor {
  BicatPtr base;
  BicatPtr op;  // op_bicat(*base)
  std::vector<FiniteCategory> cat;
  std::vector<Functor> one;
  std::vector<NatTrans> two;
  std::vector<NatTrans> identitor;
  std::map<std::pair<Id, Id>, NatTrans> compositor;

  const NatTrans& delta(Id f, Id g) const { return compositor.at({f, g}); }
};

// A pseudotransformation P => Q: component[a] : P(a) -> Q(a) and, for
// f : x -> y in op(B), naturality[f] : component[x]·Q(f) => P(f)·component[y].
struct CatPstrans {
  std::vector<Functor> component;
  std::vector<NatTrans> naturality;
  bool operator==(const CatPstrans&) const = default;
};

// component[a] : η(a) => σ(a).
struct CatModification {
  std::vector<NatTrans> component;
  bool operator==(const CatModification&) const = default;
};

// Tags "catpsfun:typing", "catpsfun:invertible", "catpsfun:id2",
// "catpsfun:vcomp", "catpsfun:left-natural", "catpsfun:right-natural",
// "catpsfun:lunitor", "catpsfun:runitor", "catpsfun:assoc". Equalities are
// decided componentwise.
Report check_cat_psfunctor(const CatValuedPsfunctor& p);
// Tags "catpstrans:typing", "catpstrans:invertible", "catpstrans:identity",
// "catpstrans:composition", "catpstrans:naturality".
Report check_cat_pstrans(const CatValuedPsfunctor& p, const CatValuedPsfunctor& q,
                         const CatPstrans& t);
// Tags "catmodif:typing", "catmodif:square".
Report check_cat_modification(const CatValuedPsfunctor& p, const CatValuedPsfunctor& q,
                              const CatPstrans& from, const CatPstrans& to,
                              const CatModification& m);

std::vector<CatPstrans> enumerate_cat_pstrans(const CatValuedPsfunctor& p,
                                              const CatValuedPsfunctor& q, Budget& budget);
std::vector<CatModification> enumerate_cat_modifications(const CatValuedPsfunctor& p,
                                                         const CatValuedPsfunctor& q,
                                                         const CatPstrans& from,
                                                         const CatPstrans& to, Budget& budget);

// hom_category(B, b, a) together with the position of each cell of B in it.
struct HomIndex {
  FiniteCategory cat;
  std::vector<Id> obj, mor;      // cell of B -> local id, or kNone
  std::vector<Id> cell1, cell2;  // local id -> cell of B
};
HomIndex hom_index(const Bicat& b, Id x, Id y);

// Rep0(a) sends b to B(b, a), f to g ↦ f·g and θ to h ↦ θ ▷ h; identitor
// h ↦ λ⁻¹(h), compositor h ↦ α(g, f, h).
// Throws PreconditionFailed unless B is locally univalent.
CatValuedPsfunctor representable0(BicatPtr b, Id a);
// Rep1(f) : Rep0(a) => Rep0(b) for f : a -> b: g ↦ g·f with naturality
// h ↦ α(g, h, f).
CatPstrans representable1(const Bicat& b, Id f);
// Rep2(θ) : Rep1(f) => Rep1(g): h ↦ h ◁ θ.
CatModification representable2(const Bicat& b, Id theta);

// The category of pseudotransformations y(a) => P with modifications,
// the functors F (τ ↦ τ(a)(id1 a)) and G (z ↦ (f ↦ P(f)(z))), the unit
// id => F·G and counit G·F => id. Tags "yoneda:F", "yoneda:G",
// "yoneda:unit", "yoneda:counit", "yoneda:invertible", "yoneda:triangle".
struct YonedaCheck {
  FiniteCategory pstrans_cat;
  std::vector<CatPstrans> objects;
  std::vector<CatModification> morphisms;
  Functor f, g;
  NatTrans unit, counit;
  Report report;
  bool pass() const { return report.pass(); }
};
YonedaCheck yoneda_check(BicatPtr b, const CatValuedPsfunctor& p, Id a, Budget& budget);
YonedaCheck yoneda_check(BicatPtr b, const CatValuedPsfunctor& p, Id a);

// The category of pseudotransformations P => Q.
struct PstransCategory {
  FiniteCategory cat;
  std::vector<CatPstrans> objects;
  std::vector<CatModification> morphisms;
};
PstransCategory pstrans_category(const CatValuedPsfunctor& p, const CatValuedPsfunctor& q,
                                 Budget& budget);

// The functor B(a, b) -> Pstrans(y(a), y(b)) given by Rep1 and Rep2, and
// whether it is an equivalence.
struct YonedaHom {
  HomIndex hom;
  PstransCategory target;
  Functor functor;
  bool equivalence = false;
};
YonedaHom yoneda_hom(BicatPtr b, Id a, Id c, Budget& budget);

// The full subbicategory of F's target on the objects F hits, and F with
// its target restricted to it.
struct FullImage {
  DispPtr disp;
  BicatPtr bicat;                 // ∫disp
  std::vector<Id> from_target;    // object of F.tgt -> object of bicat, or kNone
};
FullImage full_image(const Psfunctor& f);
Psfunctor restrict_psfunctor(const Psfunctor& f, const FullImage& im);
Psfunctor restrict_psfunctor(const Psfunctor& f);

}  // namespace bikernel
