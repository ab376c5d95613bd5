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
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace bikernel {

// Cells are referred to by dense indices into their tier. After
// Bicat::finalize() the index order is the lexicographic token order.
using Id = std::int32_t;
inline constexpr Id kNone = -1;

// Finite partial map (Id, Id) -> Id.
class PairTable {
 public:
  Id get(Id a, Id b) const {
    auto it = map_.find(key(a, b));
    return it == map_.end() ? kNone : it->second;
  }
  bool contains(Id a, Id b) const { return map_.count(key(a, b)) != 0; }
  void set(Id a, Id b, Id v) { map_[key(a, b)] = v; }
  void erase(Id a, Id b) { map_.erase(key(a, b)); }
  std::size_t size() const { return map_.size(); }
  void clear() { map_.clear(); }

  // Entries (a, b, value) in ascending key order.
  std::vector<std::tuple<Id, Id, Id>> entries() const;

  // Applies index maps to keys and values. kNone in a map drops the entry.
  PairTable remapped(const std::vector<Id>& ka, const std::vector<Id>& kb,
                     const std::vector<Id>& v) const;

  bool operator==(const PairTable& o) const { return map_ == o.map_; }

 private:
  static std::uint64_t key(Id a, Id b) {
    return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
  }
  std::unordered_map<std::uint64_t, Id> map_;
};

// Finite partial map (Id, Id, Id) -> Id. Indices are limited to 21 bits.
class TripleTable {
 public:
  static constexpr Id kMaxIndex = (1 << 21) - 1;

  Id get(Id a, Id b, Id c) const {
    auto it = map_.find(key(a, b, c));
    return it == map_.end() ? kNone : it->second;
  }
  bool contains(Id a, Id b, Id c) const {
    return map_.count(key(a, b, c)) != 0;
  }
  void set(Id a, Id b, Id c, Id v);
  void erase(Id a, Id b, Id c) { map_.erase(key(a, b, c)); }
  std::size_t size() const { return map_.size(); }

  std::vector<std::tuple<Id, Id, Id, Id>> entries() const;
  TripleTable remapped(const std::vector<Id>& k, const std::vector<Id>& v) const;

  bool operator==(const TripleTable& o) const { return map_ == o.map_; }

 private:
  static std::uint64_t key(Id a, Id b, Id c) {
    return (std::uint64_t(std::uint32_t(a) & 0x1fffff) << 42) |
           (std::uint64_t(std::uint32_t(b) & 0x1fffff) << 21) |
           std::uint64_t(std::uint32_t(c) & 0x1fffff);
  }
  std::unordered_map<std::uint64_t, Id> map_;
};

struct Cell {
  std::string name;
  Id src = kNone;
  Id tgt = kNone;
  bool operator==(const Cell&) const = default;
};

// Index maps produced by Bicat::finalize(): old index -> new index.
struct Permutation {
  std::vector<Id> obj, one, two;
};

// A finitely presented bicategory: three tiers of named cells and total
// operation tables. Composition is diagrammatic: comp(f, g) is "f then g",
// vcomp(a, b) is "a then b".
//
// Builders write the public tables directly and then call finalize(),
// which sorts every tier by token and builds the lookup indices. The value
// is treated as immutable afterwards.
class Bicat {
 public:
  std::vector<std::string> objects;
  std::vector<Cell> one_cells;
  std::vector<Cell> two_cells;

  std::vector<Id> id1_tab;         // object -> 1-cell
  PairTable comp1_tab;             // (f, g) -> f·g
  std::vector<Id> id2_tab;         // 1-cell -> 2-cell
  PairTable vcomp_tab;             // (a, b) -> a•b
  PairTable lwhisker_tab;          // (f, a) -> f◁a
  PairTable rwhisker_tab;          // (a, h) -> a▷h
  std::vector<Id> lunitor_tab, lunitor_inv_tab;
  std::vector<Id> runitor_tab, runitor_inv_tab;
  TripleTable lassoc_tab, lassoc_inv_tab;

  // Adds a cell and returns its (pre-finalize) index.
  Id add_object(std::string name);
  Id add_one_cell(std::string name, Id src, Id tgt);
  Id add_two_cell(std::string name, Id src, Id tgt);

  // Sizes the unary tables to the tiers (filling kNone).
  void size_tables();

  Permutation finalize();

  std::size_t size0() const { return objects.size(); }
  std::size_t size1() const { return one_cells.size(); }
  std::size_t size2() const { return two_cells.size(); }

  const std::string& name0(Id a) const { return objects[a]; }
  const std::string& name1(Id f) const { return one_cells[f].name; }
  const std::string& name2(Id t) const { return two_cells[t].name; }

  Id find0(std::string_view name) const;
  Id find1(std::string_view name) const;
  Id find2(std::string_view name) const;

  Id src1(Id f) const { return one_cells[f].src; }
  Id tgt1(Id f) const { return one_cells[f].tgt; }
  Id src2(Id t) const { return two_cells[t].src; }
  Id tgt2(Id t) const { return two_cells[t].tgt; }

  // Table lookups; kNone on undefined entries or kNone arguments.
  Id id1(Id a) const { return at(id1_tab, a); }
  Id comp(Id f, Id g) const { return f < 0 || g < 0 ? kNone : comp1_tab.get(f, g); }
  Id id2(Id f) const { return at(id2_tab, f); }
  Id vcomp(Id a, Id b) const { return a < 0 || b < 0 ? kNone : vcomp_tab.get(a, b); }
  Id lw(Id f, Id a) const { return f < 0 || a < 0 ? kNone : lwhisker_tab.get(f, a); }
  Id rw(Id a, Id h) const { return a < 0 || h < 0 ? kNone : rwhisker_tab.get(a, h); }
  Id lu(Id f) const { return at(lunitor_tab, f); }
  Id lui(Id f) const { return at(lunitor_inv_tab, f); }
  Id ru(Id f) const { return at(runitor_tab, f); }
  Id rui(Id f) const { return at(runitor_inv_tab, f); }
  Id la(Id f, Id g, Id h) const {
    return f < 0 || g < 0 || h < 0 ? kNone : lassoc_tab.get(f, g, h);
  }
  Id lai(Id f, Id g, Id h) const {
    return f < 0 || g < 0 || h < 0 ? kNone : lassoc_inv_tab.get(f, g, h);
  }

  // Vertical composite of a chain; kNone if any step is undefined.
  Id vchain(std::initializer_list<Id> cells) const;

  // Horizontal composite a ★ b = (a ▷ src b) • (tgt a ◁ b).
  Id hcomp(Id a, Id b) const;

  // Indices built by finalize().
  const std::vector<Id>& hom1(Id a, Id b) const;
  const std::vector<Id>& hom2(Id f, Id g) const;
  const std::vector<Id>& out1(Id a) const { return out1_[a]; }
  const std::vector<Id>& out2(Id f) const { return out2_[f]; }
  Id inverse(Id t) const { return t < 0 ? kNone : inverse_[t]; }
  bool is_invertible(Id t) const { return inverse(t) != kNone; }

  // Entrywise equality of tiers and tables.
  bool same_tables(const Bicat& o) const;

 private:
  static Id at(const std::vector<Id>& v, Id i) {
    return i < 0 || static_cast<std::size_t>(i) >= v.size() ? kNone : v[i];
  }
  void build_indices();

  std::unordered_map<std::string, Id> by_name0_, by_name1_, by_name2_;
  std::unordered_map<std::uint64_t, std::vector<Id>> hom1_, hom2_;
  std::vector<std::vector<Id>> out1_, out2_;
  std::vector<Id> inverse_;
};

using BicatPtr = std::shared_ptr<const Bicat>;

inline BicatPtr share(Bicat b) { return std::make_shared<const Bicat>(std::move(b)); }

// Identity test used when two structures must live over the same
// presentation: pointer identity or identical tables.
bool same_bicat(const BicatPtr& a, const BicatPtr& b);

}  // namespace bikernel
