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

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bikernel/disp_psfun.hpp"

namespace bikernel {

// Local objects over a are "0".."k-1"; there is one displayed 1-cell
// "x>y" over every f : a -> b whenever rel(x, y). rel must be reflexive
// and transitive.
enum class Relation { kLeq, kGeq, kEq, kAll };
DispBicat relation_chaotic(BicatPtr base, const std::vector<int>& sizes, Relation rel);

// A lawful base bicategory with its name, e.g. "op(D(bool))".
struct FuzzBase {
  std::string name;
  BicatPtr bicat;
  bool univalent = false;
};

// Seed families: discrete, chaotic, monoid deloopings, two-cell deloopings
// and finite-category fragments.
std::vector<FuzzBase> fuzz_seeds();

// Closes the seeds under op, product, total of a chaotic displayed
// bicategory and full subbicategories; sizes are capped so that every
// check stays cheap.
FuzzBase random_base(std::mt19937_64& rng);

struct FuzzInstance {
  std::string name;
  FuzzBase base;
  DispPtr disp;
};

// A random displayed bicategory over `base`: a full subbicategory, a
// trivial one, a relation-chaotic one, algebras of a pseudofunctor, or a
// product or sigma of those.
FuzzInstance random_instance(std::mt19937_64& rng, const FuzzBase& base);

// One counter per property. An instance counts as `instances` when the
// hypotheses hold and as `verified` when the conclusion holds too.
struct PropertyCount {
  std::uint64_t instances = 0;
  std::uint64_t verified = 0;
};

struct FuzzSummary {
  std::uint64_t seed = 0;
  int count = 0;
  std::map<std::string, PropertyCount> properties;
  std::vector<std::string> failures;  // instance names with the property
  bool pass() const { return failures.empty(); }
};

// Properties:
//   total-univalence    univalent base, displayed-univalent D => ∫D univalent
//   fullsub             full subbicategories of univalent bases are univalent
//   product             products of displayed-univalent D1, D2 are displayed univalent
//   sigma               univalent D1, D2 over B and ∫D1 => ∫(Σ D1 D2) univalent
//   sigma-displayed     ... also locally propositional and groupoidal => Σ displayed univalent
//   chaotic             antisymmetric relation-chaotic over a univalent base is displayed univalent
//   algebras            alg_disp(F) over a univalent base is displayed univalent
FuzzSummary run_fuzz(std::uint64_t seed, int count);

}  // namespace bikernel
