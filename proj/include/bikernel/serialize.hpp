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

#include "bikernel/catinst.hpp"
#include "bikernel/disp_psfun.hpp"
#include "bikernel/io.hpp"
#include "bikernel/univalence.hpp"
#include "bikernel/yoneda.hpp"

namespace bikernel {

// Documents for the structures above the presentation level. Cells are
// always referred to by token; keys of composite entries join tokens with
// ';'. Readers reject unknown keys and name the offending key path.

json to_json(const UnivalenceReport& r);

// {"base": <presentation or path>, "d0": {"a|x": "a"},
//  "d1": {"f|u": {"over": "f", "src": "a|x", "tgt": "b|y"}},
//  "d2": {"θ|m": {"over": "θ", "src": ..., "tgt": ...}}, "id1": ..., ...}
// Keys of d0/d1/d2 are "<base token>|<local token>"; the displayed tables
// use the presentation keys over these tokens. A relative base path is
// resolved against base_dir.
json to_json(const DispBicat& d);
DispBicat disp_from_json(const json& j, const std::string& base_dir = ".");

// {"obj": {x: F x}, "mor": {m: F m}}
json functor_to_json(const FiniteCategory& c, const FiniteCategory& d, const Functor& f);
Functor functor_from_json(const FiniteCategory& c, const FiniteCategory& d, const json& j,
                          const std::string& path = "$");
// {"component": {x: n x}}
json nat_to_json(const FiniteCategory& c, const FiniteCategory& d, const NatTrans& n);
NatTrans nat_from_json(const FiniteCategory& c, const FiniteCategory& d, const json& j,
                       const std::string& path = "$");

// {"size": {x: n}, "action": {m: [...]}}
json presheaf_to_json(const FiniteCategory& c, const Presheaf& p);
Presheaf presheaf_from_json(const FiniteCategory& c, const json& j, const std::string& path = "$");

// {"m": {x: M x}, "eta": {x: η x}, "star": {"b;f": f*}}
json kleisli_to_json(const FiniteCategory& c, const KleisliTriple& t);
KleisliTriple kleisli_from_json(const FiniteCategory& c, const json& j, const std::string& path = "$");

// A standalone CwF candidate: {"category": ..., "ty": ..., "tm": ..., "p": {x: [...]}}.
struct CwfDocument {
  FiniteCategory category;
  Presheaf ty, tm;
  std::vector<std::vector<int>> p;
};
json to_json(const CwfDocument& d);
CwfDocument cwf_from_json(const json& j);
json to_json(const CwfRepresentation& r, const FiniteCategory& c);

// {"f0": {a: x}, "f1": {f: g}, "f2": {θ: τ}, "identitor": {a: τ},
//  "compositor": {"f;g": τ}}
json to_json(const Psfunctor& f);
Psfunctor psfunctor_from_json(BicatPtr src, BicatPtr tgt, const json& j, const std::string& path = "$");
// {"eta0": {a: f}, "eta1": {f: θ}}
json to_json(const Pstrans& t);
Pstrans pstrans_from_json(const Psfunctor& from, const Psfunctor& to, const json& j,
                          const std::string& path = "$");
// {"gamma": {a: θ}}
json to_json(const Modification& m);
Modification modification_from_json(const Pstrans& from, const Pstrans& to, const json& j,
                                    const std::string& path = "$");

// {"d1", "d2", "base": {"l", "r", "eta", ..., "m4"}, "total": {...}}: the
// base biequivalence between the bases and the total components, from
// which the displayed components are recovered.
json to_json(const DispBiequivalence& b);
DispBiequivalence disp_biequivalence_from_json(const json& j, const std::string& base_dir = ".");

// {"cat": {a: category}, "one": {f: functor}, "two": {θ: transformation},
//  "identitor": {a: transformation}, "compositor": {"f;g": transformation}}
// where f;g is composable in op(B).
json to_json(const CatValuedPsfunctor& p);
CatValuedPsfunctor cat_psfunctor_from_json(BicatPtr base, const json& j);

json to_json(const YonedaCheck& y, const FiniteCategory& pa);

}  // namespace bikernel
