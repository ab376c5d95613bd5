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

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bikernel/bicat.hpp"
#include "bikernel/error.hpp"
#include "bikernel/report.hpp"

namespace bikernel {

// A finite category given by tables. compose(f, g) is "f then g".
class FiniteCategory {
 public:
  std::string name;
  std::vector<std::string> objects;
  std::vector<Cell> morphisms;  // src/tgt index objects
  std::vector<Id> identity;     // object -> morphism
  PairTable compose;

  Id add_object(std::string n);
  Id add_morphism(std::string n, Id src, Id tgt);

  // Builds the hom and name indices. Call after editing the tables.
  void index();

  std::size_t size0() const { return objects.size(); }
  std::size_t size1() const { return morphisms.size(); }
  Id src(Id m) const { return morphisms[m].src; }
  Id tgt(Id m) const { return morphisms[m].tgt; }
  Id id(Id x) const { return identity[x]; }
  Id comp(Id f, Id g) const { return f < 0 || g < 0 ? kNone : compose.get(f, g); }
  const std::vector<Id>& hom(Id x, Id y) const;
  Id find_object(const std::string& n) const;
  Id find_morphism(const std::string& n) const;

  // Two-sided inverse of m, or kNone.
  Id inverse(Id m) const;

  bool operator==(const FiniteCategory& o) const {
    return objects == o.objects && morphisms == o.morphisms &&
           identity == o.identity && compose == o.compose;
  }

 private:
  std::unordered_map<std::uint64_t, std::vector<Id>> hom_;
  std::unordered_map<std::string, Id> obj_by_name_, mor_by_name_;
};

struct Functor {
  std::vector<Id> obj;
  std::vector<Id> mor;
  bool operator==(const Functor&) const = default;
  bool operator<(const Functor& o) const {
    return std::tie(obj, mor) < std::tie(o.obj, o.mor);
  }
};

struct NatTrans {
  std::vector<Id> component;  // per object of the source category
  bool operator==(const NatTrans&) const = default;
  bool operator<(const NatTrans& o) const { return component < o.component; }
};

Report validate_category(const FiniteCategory& c);
Report validate_functor(const FiniteCategory& c, const FiniteCategory& d,
                        const Functor& f);
Report validate_nat_trans(const FiniteCategory& c, const FiniteCategory& d,
                          const Functor& f, const Functor& g,
                          const NatTrans& n);

// Small named categories.
FiniteCategory empty_category();
FiniteCategory terminal_category();
FiniteCategory discrete_category(int n);
// The chain 0 < 1 < ... < n-1 as a category.
FiniteCategory poset_category(int n);
// Exactly one morphism between every ordered pair of objects.
FiniteCategory chaotic_category(int n);

std::vector<Functor> enumerate_functors(const FiniteCategory& c,
                                        const FiniteCategory& d,
                                        Budget& budget);
std::vector<NatTrans> enumerate_nat_trans(const FiniteCategory& c,
                                          const FiniteCategory& d,
                                          const Functor& f, const Functor& g,
                                          Budget& budget);

Functor identity_functor(const FiniteCategory& c);
// "f then g": the composite C -> D -> E.
Functor compose_functors(const Functor& f, const Functor& g);
Id apply_obj(const Functor& f, Id x);
Id apply_mor(const Functor& f, Id m);

NatTrans identity_nat(const FiniteCategory& c, const FiniteCategory& d,
                      const Functor& f);
NatTrans vcomp_nat(const FiniteCategory& d, const NatTrans& a,
                   const NatTrans& b);
// f ◁ a for f: C -> D and a: G => H with G, H: D -> E.
NatTrans lwhisker_nat(const Functor& f, const NatTrans& a);
// a ▷ h for a: F => G with F, G: C -> D and h: D -> E.
NatTrans rwhisker_nat(const NatTrans& a, const Functor& h);
// Componentwise inverse, if every component is invertible.
std::optional<NatTrans> invert_nat(const FiniteCategory& d, const NatTrans& a);

bool is_groupoid(const FiniteCategory& c);
bool is_gaunt(const FiniteCategory& c);

bool is_full(const FiniteCategory& c, const FiniteCategory& d, const Functor& f);
bool is_faithful(const FiniteCategory& c, const FiniteCategory& d, const Functor& f);
bool is_essentially_surjective(const FiniteCategory& c, const FiniteCategory& d,
                               const Functor& f);
// Full, faithful and essentially surjective.
bool is_equivalence(const FiniteCategory& c, const FiniteCategory& d,
                    const Functor& f);

// A quasi-inverse with unit/counit natural isomorphisms. The unit goes
// id => f·g and the counit g·f => id, both in diagrammatic order.
struct CategoryEquivalence {
  Functor f, g;
  NatTrans unit, counit;
};
std::optional<CategoryEquivalence> promote_equivalence(const FiniteCategory& c,
                                                       const FiniteCategory& d,
                                                       const Functor& f);

}  // namespace bikernel
