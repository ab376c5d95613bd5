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

#include <memory>
#include <vector>

#include "bikernel/display.hpp"
#include "bikernel/psfun.hpp"

namespace bikernel {

using DispPtr = std::shared_ptr<const DispBicat>;

inline DispPtr share(DispBicat d) { return std::make_shared<const DispBicat>(std::move(d)); }

// The total bicategory of d, sharing ownership with d.
BicatPtr total_ptr(const DispPtr& d);

// Displayed cells are total cells, as in DispBicat: f0[x] is the total
// object (F a, F̄ x) for x over a, and so on. identitor and compositor are
// total 2-cells lying over the base identitor and compositor.
struct DispPsfunctor {
  DispPtr src, tgt;
  Psfunctor base;
  std::vector<Id> f0, f1, f2;
  std::vector<Id> identitor;
  PairTable compositor;

  bool operator==(const DispPsfunctor& o) const;
};

struct DispPstrans {
  DispPsfunctor from, to;
  Pstrans base;
  std::vector<Id> eta0, eta1;

  bool operator==(const DispPstrans& o) const;
};

// Only invertible displayed modifications are modelled.
struct DispInvModification {
  DispPstrans from, to;
  Modification base;
  std::vector<Id> gamma;

  bool operator==(const DispInvModification& o) const;
};

// Throw TypeMismatch when a displayed cell does not lie over the matching
// base cell (or the base component lives over other bicategories).
// Otherwise the report is the total check with tags prefixed "disp:".
//
// For a locally propositional target the modification squares hold
// automatically; they are then counted under "disp:modif:square:discharged"
// and not instantiated. Locally groupoidal targets likewise discharge
// "disp:modif:invertible".
Report check_disp_psfunctor(const DispPsfunctor& f);
Report check_disp_pstrans(const DispPstrans& t);
Report check_disp_invmodification(const DispInvModification& m);

DispPsfunctor disp_id_psfunctor(const DispPtr& d);
DispPsfunctor disp_comp_psfunctor(const DispPsfunctor& f, const DispPsfunctor& g);
DispPstrans disp_id_pstrans(const DispPsfunctor& f);
DispPstrans disp_comp_pstrans(const DispPstrans& eta, const DispPstrans& theta);
DispInvModification disp_id_invmodification(const DispPstrans& t);

Psfunctor total_psfunctor(const DispPsfunctor& f);
Pstrans total_pstrans(const DispPstrans& t);
Modification total_invmodification(const DispInvModification& m);

// Reassembles displayed data from a total structure lying over `base`.
// Throws TypeMismatch when it does not.
DispPsfunctor disp_over(const Psfunctor& total, const Psfunctor& base, DispPtr src, DispPtr tgt);
DispPstrans disp_over(const Pstrans& total, const DispPsfunctor& from, const DispPsfunctor& to,
                      const Pstrans& base);
DispInvModification disp_over(const Modification& total, const DispPstrans& from,
                              const DispPstrans& to, const Modification& base);

struct DispBiequivalence {
  DispPsfunctor l, r;
  DispPstrans eta, eta_i, eps, eps_i;
  DispInvModification m1, m2, m3, m4;

  Biequivalence base() const;
};

// Component reports carry the check_biequivalence prefixes after "disp:".
// Throws TypeMismatch for components not over their base.
Report check_disp_biequivalence(const DispBiequivalence& b);
Biequivalence total_biequivalence(const DispBiequivalence& b);
// Over identity_biequivalence(d.base).
DispBiequivalence disp_identity_biequivalence(const DispPtr& d);

// Completes object and 1-cell assignments over `base` to a displayed
// pseudofunctor by choosing, for every 2-cell, identitor and compositor, the
// displayed 2-cell of tgt over the required base cell. Throws
// ConstructionFailed when that cell is missing or not unique.
DispPsfunctor disp_lift_psfunctor(DispPtr src, DispPtr tgt, const Psfunctor& base,
                                  std::vector<Id> f0, std::vector<Id> f1);

// For l : D1 -> D2 and r : D2 -> D1 over identity pseudofunctors with
// l·r and r·l equal to the identities on the nose; the transformations and
// modifications are identities. Throws ConstructionFailed otherwise.
DispBiequivalence disp_inverse_biequivalence(const DispPsfunctor& l, const DispPsfunctor& r);

}  // namespace bikernel
