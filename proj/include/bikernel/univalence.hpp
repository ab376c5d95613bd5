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

#include "bikernel/core.hpp"

namespace bikernel {

// A failure of univalence at a pair of cells. Either the count of
// invertible 2-cells / adjoint equivalences is wrong (expected is 1 on the
// diagonal and 0 off it), or the count is right but the single element is
// not the identity one.
struct UnivalenceWitness {
  std::vector<std::string> cells;  // (f, g) or (a, b)
  std::size_t count = 0;
  bool non_canonical = false;
};

struct UnivalenceReport {
  bool local_checked = false;
  bool global_checked = false;
  std::vector<UnivalenceWitness> local;
  std::vector<UnivalenceWitness> global;

  bool local_pass() const { return local.empty(); }
  bool global_pass() const { return global.empty(); }
  bool pass() const { return local_pass() && global_pass(); }
};

UnivalenceReport check_local_univalence(const Bicat& p, Budget& budget);
UnivalenceReport check_global_univalence(const Bicat& p, Budget& budget);
UnivalenceReport check_univalent(const Bicat& p, Budget& budget);
UnivalenceReport check_local_univalence(const Bicat& p);
UnivalenceReport check_global_univalence(const Bicat& p);
UnivalenceReport check_univalent(const Bicat& p);

std::size_t adjequiv_structure_count(const Bicat& p, Id f);

// Composite (f1·f2, g2·g1) of adjoint equivalences with the standard
// composite unit and counit. Throws TypeMismatch or ConstructionFailed.
AdjEquiv compose_adjequiv(const Bicat& p, const AdjEquiv& e1, const AdjEquiv& e2);
// The adjoint equivalence on tgt(θ) obtained by conjugating with θ.
AdjEquiv transport_adjequiv(const Bicat& p, const AdjEquiv& e, const Inv2Cell& theta);

// At most one biinitial object. Requires p univalent (PreconditionFailed).
bool biinitial_uniqueness_check(const Bicat& p);

// Finite-model consequences of univalence: every invertible 2-cell is an
// identity; every adjoint equivalence is an identity one.
bool invertibles_are_identities(const Bicat& p);
bool adjequivs_are_identities(const Bicat& p);

}  // namespace bikernel
