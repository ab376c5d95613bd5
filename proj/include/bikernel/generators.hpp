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

namespace bikernel {

// A finite monoid (or group) by its multiplication table.
struct Monoid {
  std::vector<std::string> elements;
  Id unit = 0;
  std::vector<std::vector<Id>> mult;  // mult[x][y] = x*y
};

// Throws InvalidMonoid unless the table is total, associative and unital.
void validate_monoid(const Monoid& m);

Monoid cyclic_group(int n);         // Z/n, elements "0".."n-1" (additive)
Monoid zmod2_named();               // Z/2 as {"1", "s"}
Monoid bool_mult_monoid();          // {0,1} under multiplication
Monoid trivial_monoid();            // {"i"}
// {1, a, b} with x*y = x for x, y ∈ {a, b}; a non-commutative monoid.
Monoid left_zero_monoid();
Monoid opposite_monoid(const Monoid& m);

// Object names used by the generators: "a", "b", ... for small n.
std::string object_token(int i);

Bicat terminal_bicat();                 // *, i, e
Bicat discrete_bicat(int n);            // objects a.., 1-cells 1_a, 2-cells e_a
Bicat chaotic_bicat(int n);             // one 1-cell and one 2-cell per pair
Bicat monoid_delooping(const Monoid& m);
// One object, 1-cells from m, and the abelian group g of 2-cells on the
// identity 1-cell; every other 1-cell carries only its identity 2-cell.
// Requires the unit to be the only invertible element of m.
Bicat two_cell_delooping(const Monoid& m, const Monoid& g);

// Δ₂: one 1-cell i with 2-cells {e, t}, t•t = e.
Bicat delta2();

// One 1-cell i with 2-cells {e, z}, z•z = z; z is not invertible.
Bicat idempotent_bicat();

// Cartesian product; cells are pairs with tokens "(x,y)".
Bicat product_bicat(const Bicat& p, const Bicat& q);
std::string pair_token(const std::string& x, const std::string& y);

}  // namespace bikernel
