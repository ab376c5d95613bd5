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
#include "bikernel/bicat.hpp"

#include <algorithm>
#include <numeric>

#include "bikernel/error.hpp"

namespace bikernel {

std::vector<std::tuple<Id, Id, Id>> PairTable::entries() const {
  std::vector<std::tuple<Id, Id, Id>> out;
  out.reserve(map_.size());
  for (const auto& [k, v] : map_) {
    out.emplace_back(Id(std::uint32_t(k >> 32)), Id(std::uint32_t(k)), v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PairTable PairTable::remapped(const std::vector<Id>& ka,
                              const std::vector<Id>& kb,
                              const std::vector<Id>& v) const {
  PairTable out;
  for (const auto& [k, val] : map_) {
    Id a = Id(std::uint32_t(k >> 32));
    Id b = Id(std::uint32_t(k));
    Id na = ka[a], nb = kb[b], nv = val < 0 ? kNone : v[val];
    if (na == kNone || nb == kNone || nv == kNone) continue;
    out.set(na, nb, nv);
  }
  return out;
}

void TripleTable::set(Id a, Id b, Id c, Id v) {
  if (a > kMaxIndex || b > kMaxIndex || c > kMaxIndex) {
    Fail(ErrorCode::kEnumerationBudgetExceeded,
         "1-cell index exceeds the associator table capacity");
  }
  map_[key(a, b, c)] = v;
}

std::vector<std::tuple<Id, Id, Id, Id>> TripleTable::entries() const {
  std::vector<std::tuple<Id, Id, Id, Id>> out;
  out.reserve(map_.size());
  for (const auto& [k, v] : map_) {
    out.emplace_back(Id((k >> 42) & 0x1fffff), Id((k >> 21) & 0x1fffff),
                     Id(k & 0x1fffff), v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TripleTable TripleTable::remapped(const std::vector<Id>& k,
                                  const std::vector<Id>& v) const {
  TripleTable out;
  for (const auto& [a, b, c, val] : entries()) {
    Id na = k[a], nb = k[b], nc = k[c], nv = val < 0 ? kNone : v[val];
    if (na == kNone || nb == kNone || nc == kNone || nv == kNone) continue;
    out.set(na, nb, nc, nv);
  }
  return out;
}

Id Bicat::add_object(std::string name) {
  objects.push_back(std::move(name));
  return Id(objects.size() - 1);
}

Id Bicat::add_one_cell(std::string name, Id src, Id tgt) {
  one_cells.push_back({std::move(name), src, tgt});
  return Id(one_cells.size() - 1);
}

Id Bicat::add_two_cell(std::string name, Id src, Id tgt) {
  two_cells.push_back({std::move(name), src, tgt});
  return Id(two_cells.size() - 1);
}

void Bicat::size_tables() {
  id1_tab.resize(objects.size(), kNone);
  id2_tab.resize(one_cells.size(), kNone);
  lunitor_tab.resize(one_cells.size(), kNone);
  lunitor_inv_tab.resize(one_cells.size(), kNone);
  runitor_tab.resize(one_cells.size(), kNone);
  runitor_inv_tab.resize(one_cells.size(), kNone);
}

namespace {

template <class Name>
std::vector<Id> sort_order(std::size_t n, Name name, const char* tier) {
  std::vector<Id> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Id a, Id b) { return name(a) < name(b); });
  for (std::size_t i = 1; i < n; ++i) {
    if (name(order[i - 1]) == name(order[i])) {
      Fail(ErrorCode::kDuplicateId,
           std::string(tier) + " token '" + name(order[i]) + "'");
    }
  }
  std::vector<Id> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[order[i]] = Id(i);
  return perm;
}

void check_ref(Id x, std::size_t n, const char* what) {
  if (x == kNone) return;
  if (x < 0 || std::size_t(x) >= n) {
    Fail(ErrorCode::kDanglingReference,
         std::string(what) + " index " + std::to_string(x));
  }
}

std::vector<Id> permute_unary(const std::vector<Id>& tab,
                              const std::vector<Id>& key,
                              const std::vector<Id>& val) {
  std::vector<Id> out(tab.size(), kNone);
  for (std::size_t i = 0; i < tab.size(); ++i) {
    out[key[i]] = tab[i] < 0 ? kNone : val[tab[i]];
  }
  return out;
}

}  // namespace

Permutation Bicat::finalize() {
  size_tables();
  const std::size_t n0 = objects.size(), n1 = one_cells.size(),
                    n2 = two_cells.size();
  for (const Cell& c : one_cells) {
    check_ref(c.src, n0, "object");
    check_ref(c.tgt, n0, "object");
  }
  for (const Cell& c : two_cells) {
    check_ref(c.src, n1, "1-cell");
    check_ref(c.tgt, n1, "1-cell");
  }
  for (Id v : id1_tab) check_ref(v, n1, "1-cell");
  for (auto* t : {&id2_tab, &lunitor_tab, &lunitor_inv_tab, &runitor_tab,
                  &runitor_inv_tab}) {
    for (Id v : *t) check_ref(v, n2, "2-cell");
  }

  Permutation p;
  p.obj = sort_order(n0, [&](Id i) -> const std::string& { return objects[i]; },
                     "object");
  p.one = sort_order(n1, [&](Id i) -> const std::string& { return one_cells[i].name; },
                     "1-cell");
  p.two = sort_order(n2, [&](Id i) -> const std::string& { return two_cells[i].name; },
                     "2-cell");

  std::vector<std::string> objs(n0);
  for (std::size_t i = 0; i < n0; ++i) objs[p.obj[i]] = std::move(objects[i]);
  std::vector<Cell> ones(n1);
  for (std::size_t i = 0; i < n1; ++i) {
    Cell c = std::move(one_cells[i]);
    c.src = c.src < 0 ? kNone : p.obj[c.src];
    c.tgt = c.tgt < 0 ? kNone : p.obj[c.tgt];
    ones[p.one[i]] = std::move(c);
  }
  std::vector<Cell> twos(n2);
  for (std::size_t i = 0; i < n2; ++i) {
    Cell c = std::move(two_cells[i]);
    c.src = c.src < 0 ? kNone : p.one[c.src];
    c.tgt = c.tgt < 0 ? kNone : p.one[c.tgt];
    twos[p.two[i]] = std::move(c);
  }
  objects = std::move(objs);
  one_cells = std::move(ones);
  two_cells = std::move(twos);

  id1_tab = permute_unary(id1_tab, p.obj, p.one);
  id2_tab = permute_unary(id2_tab, p.one, p.two);
  lunitor_tab = permute_unary(lunitor_tab, p.one, p.two);
  lunitor_inv_tab = permute_unary(lunitor_inv_tab, p.one, p.two);
  runitor_tab = permute_unary(runitor_tab, p.one, p.two);
  runitor_inv_tab = permute_unary(runitor_inv_tab, p.one, p.two);

  // Keys outside the tier are dangling references too.
  auto check_pair = [&](const PairTable& t, std::size_t na, std::size_t nb,
                        std::size_t nv, const char* what) {
    for (const auto& [a, b, v] : t.entries()) {
      check_ref(a, na, what);
      check_ref(b, nb, what);
      check_ref(v, nv, what);
    }
  };
  check_pair(comp1_tab, n1, n1, n1, "comp1 entry");
  check_pair(vcomp_tab, n2, n2, n2, "vcomp entry");
  check_pair(lwhisker_tab, n1, n2, n2, "lwhisker entry");
  check_pair(rwhisker_tab, n2, n1, n2, "rwhisker entry");
  for (const auto* t : {&lassoc_tab, &lassoc_inv_tab}) {
    for (const auto& [a, b, c, v] : t->entries()) {
      check_ref(a, n1, "lassoc entry");
      check_ref(b, n1, "lassoc entry");
      check_ref(c, n1, "lassoc entry");
      check_ref(v, n2, "lassoc entry");
    }
  }

  comp1_tab = comp1_tab.remapped(p.one, p.one, p.one);
  vcomp_tab = vcomp_tab.remapped(p.two, p.two, p.two);
  lwhisker_tab = lwhisker_tab.remapped(p.one, p.two, p.two);
  rwhisker_tab = rwhisker_tab.remapped(p.two, p.one, p.two);
  lassoc_tab = lassoc_tab.remapped(p.one, p.two);
  lassoc_inv_tab = lassoc_inv_tab.remapped(p.one, p.two);

  build_indices();
  return p;
}

namespace {
std::uint64_t pair_key(Id a, Id b) {
  return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
}
const std::vector<Id> kEmpty;
}  // namespace

void Bicat::build_indices() {
  by_name0_.clear();
  by_name1_.clear();
  by_name2_.clear();
  hom1_.clear();
  hom2_.clear();
  for (std::size_t i = 0; i < objects.size(); ++i) by_name0_[objects[i]] = Id(i);
  for (std::size_t i = 0; i < one_cells.size(); ++i) by_name1_[one_cells[i].name] = Id(i);
  for (std::size_t i = 0; i < two_cells.size(); ++i) by_name2_[two_cells[i].name] = Id(i);

  out1_.assign(objects.size(), {});
  out2_.assign(one_cells.size(), {});
  for (std::size_t i = 0; i < one_cells.size(); ++i) {
    const Cell& c = one_cells[i];
    if (c.src < 0 || c.tgt < 0) continue;
    hom1_[pair_key(c.src, c.tgt)].push_back(Id(i));
    out1_[c.src].push_back(Id(i));
  }
  for (std::size_t i = 0; i < two_cells.size(); ++i) {
    const Cell& c = two_cells[i];
    if (c.src < 0 || c.tgt < 0) continue;
    hom2_[pair_key(c.src, c.tgt)].push_back(Id(i));
    out2_[c.src].push_back(Id(i));
  }

  inverse_.assign(two_cells.size(), kNone);
  for (std::size_t i = 0; i < two_cells.size(); ++i) {
    const Cell& c = two_cells[i];
    if (c.src < 0 || c.tgt < 0) continue;
    Id idf = id2(c.src), idg = id2(c.tgt);
    if (idf < 0 || idg < 0) continue;
    for (Id g : hom2(c.tgt, c.src)) {
      if (vcomp(Id(i), g) == idf && vcomp(g, Id(i)) == idg) {
        inverse_[i] = g;
        break;
      }
    }
  }
}

Id Bicat::find0(std::string_view name) const {
  auto it = by_name0_.find(std::string(name));
  return it == by_name0_.end() ? kNone : it->second;
}
Id Bicat::find1(std::string_view name) const {
  auto it = by_name1_.find(std::string(name));
  return it == by_name1_.end() ? kNone : it->second;
}
Id Bicat::find2(std::string_view name) const {
  auto it = by_name2_.find(std::string(name));
  return it == by_name2_.end() ? kNone : it->second;
}

const std::vector<Id>& Bicat::hom1(Id a, Id b) const {
  auto it = hom1_.find(pair_key(a, b));
  return it == hom1_.end() ? kEmpty : it->second;
}

const std::vector<Id>& Bicat::hom2(Id f, Id g) const {
  auto it = hom2_.find(pair_key(f, g));
  return it == hom2_.end() ? kEmpty : it->second;
}

Id Bicat::vchain(std::initializer_list<Id> cells) const {
  Id acc = kNone;
  bool first = true;
  for (Id c : cells) {
    if (first) {
      acc = c;
      first = false;
    } else {
      acc = vcomp(acc, c);
    }
    if (acc == kNone) return kNone;
  }
  return acc;
}

Id Bicat::hcomp(Id a, Id b) const {
  if (a < 0 || b < 0) return kNone;
  return vcomp(rw(a, src2(b)), lw(tgt2(a), b));
}

bool Bicat::same_tables(const Bicat& o) const {
  return objects == o.objects && one_cells == o.one_cells &&
         two_cells == o.two_cells && id1_tab == o.id1_tab &&
         comp1_tab == o.comp1_tab && id2_tab == o.id2_tab &&
         vcomp_tab == o.vcomp_tab && lwhisker_tab == o.lwhisker_tab &&
         rwhisker_tab == o.rwhisker_tab && lunitor_tab == o.lunitor_tab &&
         lunitor_inv_tab == o.lunitor_inv_tab &&
         runitor_tab == o.runitor_tab &&
         runitor_inv_tab == o.runitor_inv_tab && lassoc_tab == o.lassoc_tab &&
         lassoc_inv_tab == o.lassoc_inv_tab;
}

bool same_bicat(const BicatPtr& a, const BicatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_tables(*b);
}

}  // namespace bikernel
