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

#include "bikernel/disp_psfun.hpp"

namespace bikernel {

// Algebras for an endo-pseudofunctor F. Objects over a are 1-cells
// h : F a -> a (local token: the name of h); 1-cells over f are invertible
// 2-cells h_a·f => F f·h_b (local token "h_a>h_b:cell"); 2-cells over θ
// exist when (h_a◁θ)•h_g = h_f•(F θ▷h_b).
DispBicat alg_disp(const Psfunctor& f, Budget& budget);
DispBicat alg_disp(const Psfunctor& f);

// The 2-cell of a displayed 1-cell of alg_disp(f).
Id alg_cell(const DispBicat& alg, Id u);
// The structure 1-cell h of a displayed object of alg_disp(f).
Id alg_structure(const DispBicat& alg, Id x);

// Add2Cell(D, l, r) over ∫D for l, r : π·S => π·id. Objects over x are the
// 2-cells l(x) => r(x) (local token: the 2-cell's name); the single 1-cell
// over u from α to β exists when (α▷u)•r(u) = l(u)•(S u◁β); 2-cells are
// chaotic. Throws TypeMismatch unless l and r have those endpoints.
DispBicat add2cell_disp(const DispPtr& d, const Psfunctor& s, const Pstrans& l, const Pstrans& r,
                        Budget& budget);
DispBicat add2cell_disp(const DispPtr& d, const Psfunctor& s, const Pstrans& l, const Pstrans& r);

// A monad on `carrier`: m : a -> a, eta : id1(a) => m, mu : m·m => m.
struct MonadStructure {
  Id carrier = kNone, m = kNone, eta = kNone, mu = kNone;
  bool operator==(const MonadStructure&) const = default;
};

// n : m_a·f => f·m_b, invertible.
struct MonadMap {
  Id f = kNone, n = kNone;
  bool operator==(const MonadMap&) const = default;
};

// Direct checks of the monad diagrams, used as the oracle for the tower.
bool is_monad(const Bicat& b, const MonadStructure& s);
bool is_monad_map(const Bicat& b, const MonadStructure& s, const MonadStructure& t, const MonadMap& x);
bool is_monad_cell(const Bicat& b, const MonadStructure& s, const MonadStructure& t,
                   const MonadMap& x, const MonadMap& y, Id theta);
std::vector<MonadStructure> enumerate_monads(const Bicat& b, Budget& budget);
std::vector<MonadStructure> enumerate_monads(const Bicat& b);
std::vector<MonadMap> enumerate_monad_maps(const Bicat& b, const MonadStructure& s,
                                           const MonadStructure& t);

// The layered construction:
//   alg    Alg(id) over B
//   unit   Add2Cell(alg, l_unit, r), l_unit(a, h) = id1(a), r(a, h) = h
//   mult   Add2Cell(alg, l_mult, r), l_mult = r·r
//   m2     sigma(alg, unit × mult) over B
//   laws   full sub of ∫m2 on the monad diagrams
//   monads sigma(m2, laws) over B
struct MonadTower {
  DispPtr alg;
  Psfunctor projection;
  Pstrans l_unit, l_mult, r;
  DispPtr unit, mult, m2, laws, monads;
  Bicat bicat;  // ∫monads
  std::vector<MonadStructure> objects;
  std::vector<MonadMap> one_cells;
};

MonadTower monad_tower(BicatPtr b, Budget& budget);
MonadTower monad_tower(BicatPtr b);
Bicat monad_bicat(BicatPtr b);

}  // namespace bikernel
