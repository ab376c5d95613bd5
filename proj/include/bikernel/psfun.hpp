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

#include <vector>

#include "bikernel/core.hpp"
#include "bikernel/display.hpp"

namespace bikernel {

// A pseudofunctor src -> tgt. identitor[a] : id1(F a) => F(id1 a),
// compositor(f, g) : F f · F g => F(f·g).
struct Psfunctor {
  BicatPtr src, tgt;
  std::vector<Id> f0, f1, f2;
  std::vector<Id> identitor;
  PairTable compositor;

  Id obj(Id a) const { return f0[a]; }
  Id one(Id f) const { return f1[f]; }
  Id two(Id t) const { return f2[t]; }
  Id gamma(Id a) const { return identitor[a]; }
  Id delta(Id f, Id g) const { return compositor.get(f, g); }

  bool operator==(const Psfunctor& o) const;
};

// A pseudotransformation from -> to. eta1[f] : η0(a)·G(f) => F(f)·η0(b)
// for f : a -> b, F = from, G = to.
struct Pstrans {
  Psfunctor from, to;
  std::vector<Id> eta0;
  std::vector<Id> eta1;

  bool operator==(const Pstrans& o) const;
};

// gamma[a] : from.eta0[a] => to.eta0[a].
struct Modification {
  Pstrans from, to;
  std::vector<Id> gamma;

  bool operator==(const Modification& o) const;
};

// Tags: "psfun:typing", "psfun:invertible", "psfun:id2", "psfun:vcomp",
// "psfun:left-natural", "psfun:right-natural", "psfun:lunitor",
// "psfun:runitor", "psfun:assoc".
Report check_psfunctor(const Psfunctor& f);
// Tags: "pstrans:typing", "pstrans:invertible", "pstrans:identity",
// "pstrans:composition", "pstrans:naturality".
Report check_pstrans(const Pstrans& t);
// Tags: "modif:typing", "modif:square".
Report check_modification(const Modification& m);

Psfunctor id_psfunctor(BicatPtr p);
// F then G.
Psfunctor comp_psfunctor(const Psfunctor& f, const Psfunctor& g);
Pstrans id_pstrans(const Psfunctor& f);
// η then θ.
Pstrans comp_pstrans(const Pstrans& eta, const Pstrans& theta);
Modification id_modification(const Pstrans& t);
// Componentwise vertical composite.
Modification vcomp_modification(const Modification& a, const Modification& b);
bool is_invertible_modification(const Modification& m);

Psfunctor projection_psfunctor(const DispBicat& d);
// Everything to the object t of tgt; compositors are λ(id1 t).
Psfunctor constant_psfunctor(BicatPtr src, BicatPtr tgt, Id t);

// The image of an adjoint equivalence: (F f, F g, δ⁻¹ after F η after γ, ...).
AdjEquiv psfunctor_image_adjequiv(const Psfunctor& f, const AdjEquiv& e);

// L : B -> C, R : C -> B, eta : R·L => id(C), eta_i : id(C) => R·L,
// eps : L·R => id(B), eps_i : id(B) => L·R and invertible modifications
// m1 : eta•eta_i => id(R·L), m2 : eta_i•eta => id(id C),
// m3 : eps•eps_i => id(L·R), m4 : eps_i•eps => id(id B).
struct Biequivalence {
  Psfunctor l, r;
  Pstrans eta, eta_i, eps, eps_i;
  Modification m1, m2, m3, m4;
};

// Component reports are prefixed "L:", "R:", "eta:", ..., "m4:"; typing of
// the declared endpoints is tagged "<component>:endpoints" and
// non-invertible modifications "<m>:invertible". When both bicategories are
// univalent, "object-bijection" fires unless L0 is a bijection.
Report check_biequivalence(const Biequivalence& b);
Biequivalence identity_biequivalence(BicatPtr p);

// Local equivalence: every induced functor on hom-categories is an
// equivalence. Essential surjectivity: every object of the target is
// adjoint equivalent to an image object.
bool is_local_equivalence(const Psfunctor& f);
bool is_essentially_surjective(const Psfunctor& f);
bool is_weak_equivalence(const Psfunctor& f);
// The induced functor hom(a, b) -> hom(F a, F b).
Functor hom_functor(const Psfunctor& f, Id a, Id b);

std::vector<Psfunctor> enumerate_psfunctors(BicatPtr b, BicatPtr c, Budget& budget);
std::vector<Psfunctor> enumerate_psfunctors(BicatPtr b, BicatPtr c);
std::vector<Pstrans> enumerate_pstrans(const Psfunctor& f, const Psfunctor& g, Budget& budget);
std::vector<Pstrans> enumerate_pstrans(const Psfunctor& f, const Psfunctor& g);
std::vector<Modification> enumerate_modifications(const Pstrans& a, const Pstrans& b);

// Pseudo(B, C) built by displayed layering over Base(B, C), with the
// decoded pseudofunctor / transformation / modification of every cell.
struct PseudoBicat {
  Bicat bicat;
  std::vector<Psfunctor> objects;
  std::vector<Pstrans> one_cells;
  std::vector<Modification> two_cells;
};

PseudoBicat build_pseudo(BicatPtr b, BicatPtr c, Budget& budget);
PseudoBicat build_pseudo(BicatPtr b, BicatPtr c);
Bicat build_pseudo_bicat(BicatPtr b, BicatPtr c);

// Base(B, C): the objects of C^{B0} with componentwise structure. Tokens
// are "[x0,x1,...]" in object order of B.
Bicat power_bicat(const Bicat& c, int n);

}  // namespace bikernel
