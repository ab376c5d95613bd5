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

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bikernel/core.hpp"
#include "bikernel/univalence.hpp"

namespace bikernel {

// A displayed bicategory over a finite base.
//
// The displayed cells are stored together with the base cell they lie over,
// i.e. as the cells of the total bicategory, whose tokens are
// "<base token>|<local token>". A displayed table entry such as
// disp_comp1(ū, v̄) over (f, g) is the total entry comp(ū, v̄); it must lie
// over comp(f, g). Because base laws hold on the nose, the displayed laws
// need no transport and amount to the laws of the total tables.
struct DispBicat {
  BicatPtr base;
  Bicat total;
  std::vector<Id> over0, over1, over2;
  std::vector<std::string> local0, local1, local2;

  // src and tgt are total (displayed) cells.
  Id add_object(Id a, std::string local);
  Id add_one_cell(Id f, std::string local, Id src, Id tgt);
  Id add_two_cell(Id theta, std::string local, Id src, Id tgt);

  // Finalizes the total bicategory and rebuilds the fiber indices.
  void finalize();

  const std::vector<Id>& fiber0(Id a) const { return fib0_[a]; }
  std::vector<Id> fiber1(Id f, Id x, Id y) const;
  std::vector<Id> fiber2(Id theta, Id u, Id v) const;

 private:
  std::vector<std::vector<Id>> fib0_, fib1_, fib2_;
};

// Over-consistency ("disp:<item>:over") followed by well-typedness and
// totality of the displayed tables (core tags prefixed with "disp:").
Report validate_disp(const DispBicat& d);

// Requires a lawful base. Throws TypeMismatch on an entry over the wrong
// base cell; returns the validation report if the tables are not total;
// otherwise the displayed laws.
Report check_disp_laws(const DispBicat& d);

Bicat total_bicat(const DispBicat& d);

DispBicat fullsub_disp(BicatPtr base, const std::function<bool(Id)>& pred);
DispBicat fullsub_disp(BicatPtr base, const std::vector<std::string>& objects);
DispBicat prod_disp(const DispBicat& d1, const DispBicat& d2);
// e must be displayed over the total bicategory of d.
DispBicat sigma_disp(const DispBicat& d, const DispBicat& e);
// For p = prod_disp(d1, d2): the pair of displayed cells behind each cell of ∫p.
struct ProdIndex {
  std::vector<std::pair<Id, Id>> obj, one, two;
};
ProdIndex prod_index(const DispBicat& d1, const DispBicat& d2, const DispBicat& p);
// For s = sigma_disp(d, e): the cell of ∫e underlying each cell of ∫s.
struct SigmaIndex {
  std::vector<Id> obj, one, two;
};
SigmaIndex sigma_index(const DispBicat& d, const DispBicat& e, const DispBicat& s);
DispBicat trivial_disp(BicatPtr base, const Bicat& q);

// Chaotic displayed bicategory: given displayed objects and 1-cells with
// identity and composition tables, and exactly one displayed 2-cell over
// each θ between every parallel pair of displayed 1-cells.
struct ChaoticData {
  struct OneCell {
    std::string over, local, src, tgt;  // src/tgt: local object tokens
  };
  std::map<std::string, std::vector<std::string>> d0;             // base object -> tokens
  std::vector<OneCell> d1;
  std::map<std::pair<std::string, std::string>, std::string> id;   // (a, x) -> token
  std::map<std::array<std::string, 4>, std::string> comp;          // (f, u, g, v) -> token
};
DispBicat chaotic_disp(BicatPtr base, const ChaoticData& data);
// As chaotic_disp, but the 2-cell over θ from u to v exists only when
// admits(θ, u, v); u and v are positions in data.d1. The structural cells
// and every composite must be admitted.
DispBicat prop_disp(BicatPtr base, const ChaoticData& data,
                    const std::function<bool(Id, Id, Id)>& admits);

// Displayed invertible 2-cells over `base_cell` from u to v, and displayed
// adjoint equivalences over `base_e` from x to y. Cells are total cells.
std::vector<Inv2Cell> disp_invertible_2cells(const DispBicat& d, const Inv2Cell& base_cell,
                                             Id u, Id v);
std::vector<AdjEquiv> disp_adjoint_equivalences(const DispBicat& d, const AdjEquiv& base_e,
                                                Id x, Id y, Budget& budget);
std::vector<AdjEquiv> disp_adjoint_equivalences(const DispBicat& d, const AdjEquiv& base_e,
                                                Id x, Id y);

// Fiberwise univalence (over identities only). Witness cells are total tokens.
UnivalenceReport check_disp_univalence(const DispBicat& d, Budget& budget);
UnivalenceReport check_disp_univalence(const DispBicat& d);

bool is_locally_groupoidal(const DispBicat& d);
bool is_locally_propositional(const DispBicat& d);

}  // namespace bikernel
