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
#include <string>
#include <utility>
#include <vector>

#include "bikernel/algebra.hpp"
#include "bikernel/fincat.hpp"

namespace bikernel {

// The bicategory whose objects are the given categories, 1-cells all
// functors and 2-cells all natural transformations. It is strict.
//
// Object tokens are the category names; a functor from C to D is
// "C>D:[objects;morphisms]" in D's names and a transformation is
// "F=>G:[components]".
struct Fragment {
  BicatPtr bicat;
  std::vector<FiniteCategory> cats;  // per object of bicat
  std::vector<Functor> functors;     // per 1-cell
  std::vector<NatTrans> nats;        // per 2-cell

  const FiniteCategory& cat(Id a) const { return cats[a]; }
  Id one_cell(Id a, Id b, const Functor& f) const;
  Id two_cell(Id f, Id g, const NatTrans& n) const;
  Id object(const std::string& name) const { return bicat->find0(name); }
};

// Throws PreconditionFailed on an invalid category or a repeated name.
Fragment fincat_fragment(const std::vector<FiniteCategory>& cats, Budget& budget);
Fragment fincat_fragment(const std::vector<FiniteCategory>& cats);
Bicat fincat_fragment_bicat(const std::vector<FiniteCategory>& cats);

// ---------------------------------------------------------------------------
// Kleisli triples

// star[(b, f)] = f* : M a -> M b for every f : a -> M b. The index b is
// kept because M need not be injective.
struct KleisliTriple {
  std::vector<Id> m;
  std::vector<Id> eta;
  std::map<std::pair<Id, Id>, Id> star;
  bool operator==(const KleisliTriple&) const = default;
};

// Tags "kleisli:shape", "kleisli:unit-star" (η(a)* = id),
// "kleisli:unit-left" (η(a)·f* = f), "kleisli:assoc" (f*·g* = (f·g*)*).
Report check_kleisli(const FiniteCategory& c, const KleisliTriple& t);
std::vector<KleisliTriple> enumerate_kleisli(const FiniteCategory& c, Budget& budget);
std::string kleisli_token(const FiniteCategory& c, const KleisliTriple& t);

// Monads in a fragment are functors with transformations; these move
// between the two presentations.
KleisliTriple kleisli_of_monad(const Fragment& frag, const MonadStructure& s);
// Throws TypeMismatch if the triple is not on the carrier category.
MonadStructure monad_of_kleisli(const Fragment& frag, Id carrier, const KleisliTriple& t);

// Objects over C are Kleisli triples on C. A 1-cell over F : C -> D is an
// iso family F_M(a) : M_D(F a) -> F(M_C a) with
//   η_D(F a)·F_M(a) = F(η_C a)
//   (F f·F_M(b)⁻¹)*·F_M(b) = F_M(a)·F(f*)     for f : a -> M_C b.
// A 2-cell over n : F => G exists when F_M(a)·n(M_C a) = M_D(n a)·G_M(a),
// with M_D(h) = (h·η)*.
struct KleisliDisp {
  DispPtr disp;
  std::vector<KleisliTriple> objects;           // per object of ∫disp
  std::vector<std::vector<Id>> one_cells;       // F_M per 1-cell of ∫disp
};
KleisliDisp kleisli_disp(const Fragment& frag, Budget& budget);
KleisliDisp kleisli_disp(const Fragment& frag);
Bicat kleisli_bicat(const Fragment& frag);

// The displayed biequivalence between the monad tower of the fragment and
// kleisli_disp over the identity biequivalence. Monads (m, η, μ) go to
// (m, η, f ↦ m(f)·μ); 1-cells (F, n) go to (F, n⁻¹).
struct MonadKleisli {
  MonadTower monads;
  KleisliDisp kleisli;
  std::vector<Id> to_kleisli;  // per object of ∫monads
  std::vector<Id> to_monad;    // per object of ∫kleisli
  DispBiequivalence biequivalence;
};
MonadKleisli monad_kleisli_biequiv(const Fragment& frag, Budget& budget);
MonadKleisli monad_kleisli_biequiv(const Fragment& frag);

// ---------------------------------------------------------------------------
// Pointed groupoids

// Objects over G are objects of G (token: the object's name); 1-cells over
// F from x to y are the morphisms F x -> y (token "x>y:morphism"); a 2-cell
// over n from q1 to q2 exists when n(x)·q2 = q1. Throws NotAGroupoid.
DispBicat pointed_groupoid_disp(const Fragment& frag);

// ---------------------------------------------------------------------------
// Presheaves and categories with families

// A presheaf with values in {0, ..., size-1}: action[f] for f : x -> y is a
// map from P(y) to P(x).
struct Presheaf {
  std::vector<int> size;
  std::vector<std::vector<int>> action;
  bool operator==(const Presheaf&) const = default;
};

// A family of maps, one per object x; component[x] maps T(x) to T'(F x).
struct PresheafMap {
  std::vector<std::vector<int>> component;
  bool operator==(const PresheafMap&) const = default;
};

Report check_presheaf(const FiniteCategory& c, const Presheaf& p);
// All presheaves with every value of size at most `bound`.
std::vector<Presheaf> enumerate_presheaves(const FiniteCategory& c, int bound, Budget& budget);
std::string presheaf_token(const Presheaf& p);

// Naturality of β : T => F^op·T', or of p : T => T' when F is the identity.
bool is_presheaf_map(const FiniteCategory& c, const FiniteCategory& d, const Functor& f,
                     const Presheaf& t, const Presheaf& u, const PresheafMap& b);
std::vector<PresheafMap> enumerate_presheaf_maps(const FiniteCategory& c, const FiniteCategory& d,
                                                 const Functor& f, const Presheaf& t,
                                                 const Presheaf& u, Budget& budget);

// Objects over C are the presheaves in per_object[C] (all presheaves up to
// `bound` when that list is missing). 1-cells over F from T to T' are the
// maps T => F^op·T'; a 2-cell over γ : F => G from β to β' exists when
// β = β'•(γ^op▷T').
struct PresheafDisp {
  DispPtr disp;
  std::vector<Presheaf> objects;       // per object of ∫disp
  std::vector<PresheafMap> one_cells;  // per 1-cell of ∫disp
};
PresheafDisp presheaf_disp(const Fragment& frag, int bound, Budget& budget,
                           const std::map<std::string, std::vector<Presheaf>>& per_object = {});

// A comprehension for (Γ, A): the object Γ.A, π : Γ.A -> Γ and a term t.
struct Comprehension {
  Id gamma = kNone, a = -1;
  Id ext = kNone, pi = kNone;
  int t = -1;
};

struct CwfRepresentation {
  bool ok = false;
  std::vector<Comprehension> witnesses;             // one per (Γ, A) when ok
  std::vector<std::pair<Id, int>> missing;          // (Γ, A) without one
};

// For each Γ and A ∈ Ty(Γ), searches Γ.A, π and t ∈ Tm(Γ.A) with
// p(t) = Ty(π)(A) such that every f : Δ -> Γ and s ∈ Tm(Δ) with
// p(s) = Ty(f)(A) factor through a unique g : Δ -> Γ.A with g·π = f and
// Tm(g)(t) = s. p[x] maps Tm(x) to Ty(x).
CwfRepresentation check_cwf_representation(const FiniteCategory& c, const Presheaf& ty,
                                           const Presheaf& tm, const std::vector<std::vector<int>>& p);

struct CwfData {
  Id category = kNone;
  Presheaf ty, tm;
  std::vector<std::vector<int>> p;
  bool operator==(const CwfData&) const = default;
};

// pshd   presheaves over the fragment
// pair   pshd × pshd, read as (Ty, Tm)
// p      over ∫pair: p : Tm => Ty; one 1-cell over (F, β, β') when
//        p•β = β'•(F^op◁p'); chaotic 2-cells
// cwf2   sigma(pair, p)
// is_cwf full sub of ∫cwf2 on check_cwf_representation
// cwf    sigma(cwf2, is_cwf)
struct CwfTower {
  PresheafDisp pshd;
  DispPtr pair, p, cwf2, is_cwf, cwf;
  Bicat bicat;
  std::vector<CwfData> objects;  // per object of bicat
};
CwfTower cwf_tower(const Fragment& frag, int bound, Budget& budget);
CwfTower cwf_tower(const Fragment& frag, int bound);
Bicat cwf_bicat(const Fragment& frag, int bound);

}  // namespace bikernel
