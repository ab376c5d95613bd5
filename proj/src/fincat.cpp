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
#include "bikernel/fincat.hpp"

#include <algorithm>
#include <set>

namespace bikernel {

namespace {

std::uint64_t hkey(Id a, Id b) {
  return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
}
const std::vector<Id> kNoMorphisms;

std::string show(const FiniteCategory& c, Id m) {
  return m < 0 ? std::string("undefined") : c.morphisms[m].name;
}

}  // namespace

std::vector<std::string> Report::failed_laws() const {
  std::set<std::string> tags;
  for (const Violation& v : violations) tags.insert(v.law);
  return {tags.begin(), tags.end()};
}

Id FiniteCategory::add_object(std::string n) {
  objects.push_back(std::move(n));
  identity.push_back(kNone);
  return Id(objects.size() - 1);
}

Id FiniteCategory::add_morphism(std::string n, Id s, Id t) {
  morphisms.push_back({std::move(n), s, t});
  return Id(morphisms.size() - 1);
}

void FiniteCategory::index() {
  identity.resize(objects.size(), kNone);
  hom_.clear();
  obj_by_name_.clear();
  mor_by_name_.clear();
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (!obj_by_name_.emplace(objects[i], Id(i)).second) {
      Fail(ErrorCode::kDuplicateId, "object '" + objects[i] + "' in " + name);
    }
  }
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const Cell& m = morphisms[i];
    if (!mor_by_name_.emplace(m.name, Id(i)).second) {
      Fail(ErrorCode::kDuplicateId, "morphism '" + m.name + "' in " + name);
    }
    if (m.src < 0 || m.tgt < 0 || std::size_t(m.src) >= objects.size() ||
        std::size_t(m.tgt) >= objects.size()) {
      Fail(ErrorCode::kDanglingReference, "endpoint of morphism '" + m.name + "'");
    }
    hom_[hkey(m.src, m.tgt)].push_back(Id(i));
  }
}

const std::vector<Id>& FiniteCategory::hom(Id x, Id y) const {
  auto it = hom_.find(hkey(x, y));
  return it == hom_.end() ? kNoMorphisms : it->second;
}

Id FiniteCategory::find_object(const std::string& n) const {
  auto it = obj_by_name_.find(n);
  return it == obj_by_name_.end() ? kNone : it->second;
}

Id FiniteCategory::find_morphism(const std::string& n) const {
  auto it = mor_by_name_.find(n);
  return it == mor_by_name_.end() ? kNone : it->second;
}

Id FiniteCategory::inverse(Id m) const {
  Id x = src(m), y = tgt(m);
  for (Id k : hom(y, x)) {
    if (comp(m, k) == id(x) && comp(k, m) == id(y)) return k;
  }
  return kNone;
}

Report validate_category(const FiniteCategory& c) {
  Report r;
  for (std::size_t x = 0; x < c.size0(); ++x) {
    Id i = c.identity[x];
    r.instantiations["identity"]++;
    if (i < 0 || c.src(i) != Id(x) || c.tgt(i) != Id(x)) {
      r.add({"identity", {c.objects[x]}, show(c, i), "endomorphism"});
    }
  }
  for (std::size_t f = 0; f < c.size1(); ++f) {
    Id x = c.src(Id(f)), y = c.tgt(Id(f));
    for (std::size_t g = 0; g < c.size1(); ++g) {
      Id h = c.comp(Id(f), Id(g));
      bool composable = c.src(Id(g)) == y;
      if (!composable) {
        if (h != kNone) r.add({"compose-extra", {show(c, Id(f)), show(c, Id(g))}, show(c, h), "undefined"});
        continue;
      }
      r.instantiations["compose"]++;
      if (h < 0 || c.src(h) != x || c.tgt(h) != c.tgt(Id(g))) {
        r.add({"compose", {show(c, Id(f)), show(c, Id(g))}, show(c, h), "typed composite"});
      }
    }
  }
  if (!r.pass()) return r;
  for (std::size_t f = 0; f < c.size1(); ++f) {
    Id x = c.src(Id(f)), y = c.tgt(Id(f));
    r.instantiations["unit"]++;
    if (c.comp(c.id(x), Id(f)) != Id(f)) r.add({"unit", {show(c, Id(f))}, show(c, c.comp(c.id(x), Id(f))), show(c, Id(f))});
    if (c.comp(Id(f), c.id(y)) != Id(f)) r.add({"unit", {show(c, Id(f))}, show(c, c.comp(Id(f), c.id(y))), show(c, Id(f))});
    for (std::size_t z = 0; z < c.size0(); ++z) {
      for (Id g : c.hom(y, Id(z))) {
        for (std::size_t w = 0; w < c.size0(); ++w) {
          for (Id h : c.hom(Id(z), Id(w))) {
            r.instantiations["assoc"]++;
            Id lhs = c.comp(Id(f), c.comp(g, h));
            Id rhs = c.comp(c.comp(Id(f), g), h);
            if (lhs != rhs) r.add({"assoc", {show(c, Id(f)), show(c, g), show(c, h)}, show(c, lhs), show(c, rhs)});
          }
        }
      }
    }
  }
  return r;
}

Report validate_functor(const FiniteCategory& c, const FiniteCategory& d,
                        const Functor& f) {
  Report r;
  if (f.obj.size() != c.size0() || f.mor.size() != c.size1()) {
    r.add({"functor-shape", {}, "", ""});
    return r;
  }
  for (Id o : f.obj) {
    if (o < 0 || std::size_t(o) >= d.size0()) {
      r.add({"functor-object", {}, std::to_string(o), "object of " + d.name});
      return r;
    }
  }
  for (std::size_t m = 0; m < c.size1(); ++m) {
    Id fm = f.mor[m];
    r.instantiations["functor-typing"]++;
    if (fm < 0 || std::size_t(fm) >= d.size1() ||
        d.src(fm) != f.obj[c.src(Id(m))] || d.tgt(fm) != f.obj[c.tgt(Id(m))]) {
      r.add({"functor-typing", {c.morphisms[m].name}, std::to_string(fm), ""});
    }
  }
  if (!r.pass()) return r;
  for (std::size_t x = 0; x < c.size0(); ++x) {
    r.instantiations["functor-identity"]++;
    if (f.mor[c.id(Id(x))] != d.id(f.obj[x])) {
      r.add({"functor-identity", {c.objects[x]}, show(d, f.mor[c.id(Id(x))]), show(d, d.id(f.obj[x]))});
    }
  }
  for (const auto& [a, b, ab] : c.compose.entries()) {
    r.instantiations["functor-compose"]++;
    Id lhs = f.mor[ab];
    Id rhs = d.comp(f.mor[a], f.mor[b]);
    if (lhs != rhs) r.add({"functor-compose", {show(c, a), show(c, b)}, show(d, lhs), show(d, rhs)});
  }
  return r;
}

Report validate_nat_trans(const FiniteCategory& c, const FiniteCategory& d,
                          const Functor& f, const Functor& g,
                          const NatTrans& n) {
  Report r;
  if (n.component.size() != c.size0()) {
    r.add({"nat-shape", {}, "", ""});
    return r;
  }
  for (std::size_t x = 0; x < c.size0(); ++x) {
    Id k = n.component[x];
    r.instantiations["nat-typing"]++;
    if (k < 0 || std::size_t(k) >= d.size1() || d.src(k) != f.obj[x] ||
        d.tgt(k) != g.obj[x]) {
      r.add({"nat-typing", {c.objects[x]}, std::to_string(k), ""});
    }
  }
  if (!r.pass()) return r;
  for (std::size_t m = 0; m < c.size1(); ++m) {
    Id x = c.src(Id(m)), y = c.tgt(Id(m));
    r.instantiations["naturality"]++;
    Id lhs = d.comp(f.mor[m], n.component[y]);
    Id rhs = d.comp(n.component[x], g.mor[m]);
    if (lhs != rhs) r.add({"naturality", {c.morphisms[m].name}, show(d, lhs), show(d, rhs)});
  }
  return r;
}

namespace {

std::string obj_name(int i) { return std::to_string(i); }

}  // namespace

FiniteCategory empty_category() {
  FiniteCategory c;
  c.name = "0";
  c.index();
  return c;
}

FiniteCategory terminal_category() {
  FiniteCategory c;
  c.name = "1";
  Id x = c.add_object("*");
  c.identity[x] = c.add_morphism("id*", x, x);
  c.compose.set(0, 0, 0);
  c.index();
  return c;
}

FiniteCategory discrete_category(int n) {
  FiniteCategory c;
  c.name = "D" + std::to_string(n);
  for (int i = 0; i < n; ++i) c.add_object(obj_name(i));
  for (int i = 0; i < n; ++i) {
    c.identity[i] = c.add_morphism("id" + obj_name(i), i, i);
    c.compose.set(i, i, i);
  }
  c.index();
  return c;
}

FiniteCategory poset_category(int n) {
  FiniteCategory c;
  c.name = "P" + std::to_string(n);
  for (int i = 0; i < n; ++i) c.add_object(obj_name(i));
  std::vector<std::vector<Id>> le(n, std::vector<Id>(n, kNone));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      le[i][j] = c.add_morphism(obj_name(i) + "<=" + obj_name(j), i, j);
    }
    c.identity[i] = le[i][i];
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) c.compose.set(le[i][j], le[j][k], le[i][k]);
  c.index();
  return c;
}

FiniteCategory chaotic_category(int n) {
  FiniteCategory c;
  c.name = "I" + std::to_string(n);
  for (int i = 0; i < n; ++i) c.add_object(obj_name(i));
  std::vector<std::vector<Id>> m(n, std::vector<Id>(n, kNone));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[i][j] = c.add_morphism(obj_name(i) + ">" + obj_name(j), i, j);
    }
    c.identity[i] = m[i][i];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c.compose.set(m[i][j], m[j][k], m[i][k]);
  c.index();
  return c;
}

std::vector<Functor> enumerate_functors(const FiniteCategory& c,
                                        const FiniteCategory& d,
                                        Budget& budget) {
  std::vector<Functor> out;
  const std::size_t n0 = c.size0(), n1 = c.size1();
  if (n0 > 0 && d.size0() == 0) return out;

  // Composition constraints, indexed by the largest morphism involved.
  std::vector<std::vector<std::tuple<Id, Id, Id>>> checks(n1);
  for (const auto& [a, b, ab] : c.compose.entries()) {
    checks[std::max({a, b, ab})].emplace_back(a, b, ab);
  }

  Functor f;
  f.obj.assign(n0, 0);
  f.mor.assign(n1, kNone);
  std::vector<bool> is_identity(n1, false);
  for (std::size_t x = 0; x < n0; ++x) is_identity[c.id(Id(x))] = true;

  // Recursion over morphisms for a fixed object map.
  auto assign = [&](auto&& self, std::size_t k) -> void {
    budget.Spend();
    if (k == n1) {
      out.push_back(f);
      return;
    }
    Id x = f.obj[c.src(Id(k))], y = f.obj[c.tgt(Id(k))];
    for (Id cand : d.hom(x, y)) {
      if (is_identity[k] && cand != d.id(x)) continue;
      f.mor[k] = cand;
      bool ok = true;
      for (const auto& [a, b, ab] : checks[k]) {
        if (d.comp(f.mor[a], f.mor[b]) != f.mor[ab]) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, k + 1);
    }
    f.mor[k] = kNone;
  };

  // Odometer over object maps.
  while (true) {
    assign(assign, 0);
    std::size_t i = 0;
    while (i < n0 && ++f.obj[i] == Id(d.size0())) f.obj[i++] = 0;
    if (i == n0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NatTrans> enumerate_nat_trans(const FiniteCategory& c,
                                          const FiniteCategory& d,
                                          const Functor& f, const Functor& g,
                                          Budget& budget) {
  std::vector<NatTrans> out;
  const std::size_t n0 = c.size0();
  NatTrans n;
  n.component.assign(n0, kNone);
  auto rec = [&](auto&& self, std::size_t x) -> void {
    budget.Spend();
    if (x == n0) {
      for (std::size_t m = 0; m < c.size1(); ++m) {
        Id s = c.src(Id(m)), t = c.tgt(Id(m));
        if (d.comp(f.mor[m], n.component[t]) != d.comp(n.component[s], g.mor[m])) return;
      }
      out.push_back(n);
      return;
    }
    for (Id k : d.hom(f.obj[x], g.obj[x])) {
      n.component[x] = k;
      self(self, x + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Functor identity_functor(const FiniteCategory& c) {
  Functor f;
  for (std::size_t x = 0; x < c.size0(); ++x) f.obj.push_back(Id(x));
  for (std::size_t m = 0; m < c.size1(); ++m) f.mor.push_back(Id(m));
  return f;
}

Functor compose_functors(const Functor& f, const Functor& g) {
  Functor h;
  h.obj.reserve(f.obj.size());
  for (Id x : f.obj) h.obj.push_back(g.obj[x]);
  h.mor.reserve(f.mor.size());
  for (Id m : f.mor) h.mor.push_back(g.mor[m]);
  return h;
}

Id apply_obj(const Functor& f, Id x) { return f.obj[x]; }
Id apply_mor(const Functor& f, Id m) { return f.mor[m]; }

NatTrans identity_nat(const FiniteCategory& c, const FiniteCategory& d,
                      const Functor& f) {
  NatTrans n;
  for (std::size_t x = 0; x < c.size0(); ++x) n.component.push_back(d.id(f.obj[x]));
  return n;
}

NatTrans vcomp_nat(const FiniteCategory& d, const NatTrans& a,
                   const NatTrans& b) {
  NatTrans n;
  for (std::size_t x = 0; x < a.component.size(); ++x) {
    n.component.push_back(d.comp(a.component[x], b.component[x]));
  }
  return n;
}

NatTrans lwhisker_nat(const Functor& f, const NatTrans& a) {
  NatTrans n;
  for (Id x : f.obj) n.component.push_back(a.component[x]);
  return n;
}

NatTrans rwhisker_nat(const NatTrans& a, const Functor& h) {
  NatTrans n;
  for (Id m : a.component) n.component.push_back(h.mor[m]);
  return n;
}

std::optional<NatTrans> invert_nat(const FiniteCategory& d, const NatTrans& a) {
  NatTrans n;
  for (Id m : a.component) {
    Id k = d.inverse(m);
    if (k < 0) return std::nullopt;
    n.component.push_back(k);
  }
  return n;
}

bool is_groupoid(const FiniteCategory& c) {
  for (std::size_t m = 0; m < c.size1(); ++m) {
    if (c.inverse(Id(m)) < 0) return false;
  }
  return true;
}

bool is_gaunt(const FiniteCategory& c) {
  for (std::size_t m = 0; m < c.size1(); ++m) {
    if (c.inverse(Id(m)) >= 0 && c.id(c.src(Id(m))) != Id(m)) return false;
  }
  return true;
}

bool is_full(const FiniteCategory& c, const FiniteCategory& d, const Functor& f) {
  for (std::size_t x = 0; x < c.size0(); ++x) {
    for (std::size_t y = 0; y < c.size0(); ++y) {
      std::set<Id> image;
      for (Id m : c.hom(Id(x), Id(y))) image.insert(f.mor[m]);
      if (image.size() != d.hom(f.obj[x], f.obj[y]).size()) return false;
    }
  }
  return true;
}

bool is_faithful(const FiniteCategory& c, const FiniteCategory&, const Functor& f) {
  for (std::size_t x = 0; x < c.size0(); ++x) {
    for (std::size_t y = 0; y < c.size0(); ++y) {
      std::set<Id> image;
      for (Id m : c.hom(Id(x), Id(y))) image.insert(f.mor[m]);
      if (image.size() != c.hom(Id(x), Id(y)).size()) return false;
    }
  }
  return true;
}

bool is_essentially_surjective(const FiniteCategory& c, const FiniteCategory& d,
                               const Functor& f) {
  for (std::size_t y = 0; y < d.size0(); ++y) {
    bool hit = false;
    for (std::size_t x = 0; x < c.size0() && !hit; ++x) {
      for (Id m : d.hom(f.obj[x], Id(y))) {
        if (d.inverse(m) >= 0) {
          hit = true;
          break;
        }
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool is_equivalence(const FiniteCategory& c, const FiniteCategory& d,
                    const Functor& f) {
  return is_full(c, d, f) && is_faithful(c, d, f) &&
         is_essentially_surjective(c, d, f);
}

std::optional<CategoryEquivalence> promote_equivalence(const FiniteCategory& c,
                                                       const FiniteCategory& d,
                                                       const Functor& f) {
  if (!is_equivalence(c, d, f)) return std::nullopt;
  CategoryEquivalence e;
  e.f = f;
  // For each y pick the first x with an iso phi_y : F x -> y.
  std::vector<Id> phi(d.size0(), kNone);
  e.g.obj.assign(d.size0(), kNone);
  for (std::size_t y = 0; y < d.size0(); ++y) {
    for (std::size_t x = 0; x < c.size0() && phi[y] < 0; ++x) {
      for (Id m : d.hom(f.obj[x], Id(y))) {
        if (d.inverse(m) >= 0) {
          phi[y] = m;
          e.g.obj[y] = Id(x);
          break;
        }
      }
    }
  }
  // The unique preimage of a morphism F x -> F x'.
  auto preimage = [&](Id x, Id x2, Id target) {
    for (Id u : c.hom(x, x2)) {
      if (f.mor[u] == target) return u;
    }
    return kNone;
  };
  e.g.mor.assign(d.size1(), kNone);
  for (std::size_t m = 0; m < d.size1(); ++m) {
    Id y = d.src(Id(m)), y2 = d.tgt(Id(m));
    Id target = d.comp(d.comp(phi[y], Id(m)), d.inverse(phi[y2]));
    e.g.mor[m] = preimage(e.g.obj[y], e.g.obj[y2], target);
  }
  for (std::size_t x = 0; x < c.size0(); ++x) {
    Id y = f.obj[x];
    e.unit.component.push_back(preimage(Id(x), e.g.obj[y], d.inverse(phi[y])));
  }
  e.counit.component = phi;
  if (!validate_functor(d, c, e.g).pass()) return std::nullopt;
  Functor fg = compose_functors(e.f, e.g), gf = compose_functors(e.g, e.f);
  if (!validate_nat_trans(c, c, identity_functor(c), fg, e.unit).pass()) return std::nullopt;
  if (!validate_nat_trans(d, d, gf, identity_functor(d), e.counit).pass()) return std::nullopt;
  return e;
}

}  // namespace bikernel
