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

#include <string>
#include <vector>

#include "bikernel/bicat.hpp"
#include "bikernel/error.hpp"
#include "bikernel/fincat.hpp"
#include "bikernel/report.hpp"

namespace bikernel {

// Well-typedness and totality of every table. Violations are tagged
// "<item>:missing", "<item>:typing" or "<item>:extra", where item is the
// number of the table in the list of bicategory data (4 = id1, 5 = comp1,
// ..., 12 = lassoc).
Report validate_presentation(const Bicat& p);

// Every instantiation of every coherence law. Tags are "12" (vcomp unit
// and associativity), "13"/"14" (whiskering preserves id2 and •), "15".."19"
// (naturality of λ, ρ, α), "20".."22" (inverse laws), "23" (triangle),
// "24" (pentagon) and "interchange".
Report check_laws(const Bicat& p, std::uint64_t budget = DefaultBudget());

// The law family tags checked by check_laws, in order.
const std::vector<std::string>& law_families();

// Throws PreconditionFailed unless p validates and passes check_laws.
void require_lawful(const Bicat& p, const std::string& what);

FiniteCategory hom_category(const Bicat& p, Id a, Id b);

Bicat op_bicat(const Bicat& p);

struct Inv2Cell {
  Id theta = kNone;
  Id theta_inv = kNone;
  bool operator==(const Inv2Cell&) const = default;
};

struct AdjEquiv {
  Id f = kNone;
  Id g = kNone;
  Inv2Cell eta;  // id1(a) => f·g
  Inv2Cell eps;  // g·f => id1(b)
  bool operator==(const AdjEquiv&) const = default;
};

std::vector<Inv2Cell> invertible_2cells(const Bicat& p, Id f, Id g);

// Both triangle identities, typing of all four cells and the inverse laws.
bool is_adjoint_equivalence(const Bicat& p, const AdjEquiv& e);

// (id1 a, id1 a, λ(id1 a)⁻¹, λ(id1 a)).
AdjEquiv identity_adjequiv(const Bicat& p, Id a);

std::vector<AdjEquiv> adjoint_equivalences(const Bicat& p, Id a, Id b,
                                           Budget& budget);
std::vector<AdjEquiv> adjoint_equivalences(const Bicat& p, Id a, Id b);

// All (g, η, ε) completing f to an adjoint equivalence.
std::vector<AdjEquiv> adjequiv_structures(const Bicat& p, Id f, Budget& budget);

struct BiinitialReport {
  bool biinitial = true;
  std::vector<Id> failing;  // objects b whose hom(a, b) is not unit-like
};
BiinitialReport is_biinitial(const Bicat& p, Id a);

struct StrictReport {
  bool locally_strict = true;
  bool one_strict = true;
  std::vector<Violation> failures;
};
StrictReport check_strict(const Bicat& p);

// A 2-category: the presentation without unitor and associator tables.
struct TwoCat {
  std::vector<std::string> objects;
  std::vector<Cell> one_cells, two_cells;
  std::vector<Id> id1, id2;
  PairTable comp1, vcomp, lwhisker, rwhisker;
};
TwoCat strict_to_two_cat(const Bicat& p);
// Strict unit/associativity of comp1 and the 2-cell laws of the 2-category.
Report check_two_cat(const TwoCat& c);

}  // namespace bikernel
