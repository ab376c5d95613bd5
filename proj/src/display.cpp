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
#include "bikernel/display.hpp"

#include <algorithm>
#include <unordered_map>

#include "bikernel/generators.hpp"

namespace bikernel {

namespace {

std::string joined(const std::string& base, const std::string& local) {
  return base + "|" + local;
}

template <typename T>
std::vector<T> permuted(std::vector<T> v, const std::vector<Id>& perm) {
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = std::move(v[i]);
  return out;
}

std::uint64_t key2(Id a, Id b) { return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b); }

}  // namespace

Id DispBicat::add_object(Id a, std::string local) {
  Id x = total.add_object(joined(base->name0(a), local));
  over0.push_back(a);
  local0.push_back(std::move(local));
  return x;
}

Id DispBicat::add_one_cell(Id f, std::string local, Id src, Id tgt) {
  Id u = total.add_one_cell(joined(base->name1(f), local), src, tgt);
  over1.push_back(f);
  local1.push_back(std::move(local));
  return u;
}

Id DispBicat::add_two_cell(Id theta, std::string local, Id src, Id tgt) {
  Id m = total.add_two_cell(joined(base->name2(theta), local), src, tgt);
  over2.push_back(theta);
  local2.push_back(std::move(local));
  return m;
}

void DispBicat::finalize() {
  Permutation p = total.finalize();
  over0 = permuted(std::move(over0), p.obj);
  over1 = permuted(std::move(over1), p.one);
  over2 = permuted(std::move(over2), p.two);
  local0 = permuted(std::move(local0), p.obj);
  local1 = permuted(std::move(local1), p.one);
  local2 = permuted(std::move(local2), p.two);
  fib0_.assign(base->size0(), {});
  fib1_.assign(base->size1(), {});
  fib2_.assign(base->size2(), {});
  for (Id x = 0; x < Id(over0.size()); ++x) {
    if (over0[x] >= 0 && std::size_t(over0[x]) < fib0_.size()) fib0_[over0[x]].push_back(x);
  }
  for (Id u = 0; u < Id(over1.size()); ++u) {
    if (over1[u] >= 0 && std::size_t(over1[u]) < fib1_.size()) fib1_[over1[u]].push_back(u);
  }
  for (Id m = 0; m < Id(over2.size()); ++m) {
    if (over2[m] >= 0 && std::size_t(over2[m]) < fib2_.size()) fib2_[over2[m]].push_back(m);
  }
}

std::vector<Id> DispBicat::fiber1(Id f, Id x, Id y) const {
  std::vector<Id> out;
  for (Id u : fib1_[f]) {
    if (total.src1(u) == x && total.tgt1(u) == y) out.push_back(u);
  }
  return out;
}

std::vector<Id> DispBicat::fiber2(Id theta, Id u, Id v) const {
  std::vector<Id> out;
  for (Id m : fib2_[theta]) {
    if (total.src2(m) == u && total.tgt2(m) == v) out.push_back(m);
  }
  return out;
}

Report validate_disp(const DispBicat& d) {
  const Bicat& b = *d.base;
  const Bicat& t = d.total;
  Report r;
  auto over = [&](const char* item, std::vector<std::string> cells, const std::string& lhs,
                  const std::string& rhs) {
    r.add({std::string("disp:") + item + ":over", std::move(cells), lhs, rhs});
  };
  auto n1 = [&](Id f) { return f < 0 ? std::string("undefined") : b.name1(f); };
  auto n2 = [&](Id f) { return f < 0 ? std::string("undefined") : b.name2(f); };
  auto o1 = [&](Id u) { return u < 0 ? kNone : d.over1[u]; };
  auto o2 = [&](Id m) { return m < 0 ? kNone : d.over2[m]; };

  for (Id x = 0; x < Id(t.size0()); ++x) {
    if (d.over0[x] < 0 || std::size_t(d.over0[x]) >= b.size0()) {
      over("1", {t.name0(x)}, "undefined", "object");
    }
  }
  for (Id u = 0; u < Id(t.size1()); ++u) {
    const Id f = d.over1[u];
    if (f < 0 || std::size_t(f) >= b.size1()) {
      over("2", {t.name1(u)}, "undefined", "1-cell");
      continue;
    }
    if (d.over0[t.src1(u)] != b.src1(f) || d.over0[t.tgt1(u)] != b.tgt1(f)) {
      over("2", {t.name1(u)}, t.name0(t.src1(u)) + "->" + t.name0(t.tgt1(u)), b.name1(f));
    }
  }
  for (Id m = 0; m < Id(t.size2()); ++m) {
    const Id th = d.over2[m];
    if (th < 0 || std::size_t(th) >= b.size2()) {
      over("3", {t.name2(m)}, "undefined", "2-cell");
      continue;
    }
    if (d.over1[t.src2(m)] != b.src2(th) || d.over1[t.tgt2(m)] != b.tgt2(th)) {
      over("3", {t.name2(m)}, t.name1(t.src2(m)) + "=>" + t.name1(t.tgt2(m)), b.name2(th));
    }
  }
  if (!r.pass()) return r;

  for (Id x = 0; x < Id(t.size0()); ++x) {
    const Id v = t.id1(x), want = b.id1(d.over0[x]);
    if (v >= 0 && o1(v) != want) over("4", {t.name0(x)}, n1(o1(v)), n1(want));
  }
  for (const auto& [u, w, v] : t.comp1_tab.entries()) {
    const Id want = b.comp(o1(u), o1(w));
    if (o1(v) != want) over("5", {t.name1(u), t.name1(w)}, n1(o1(v)), n1(want));
  }
  for (Id u = 0; u < Id(t.size1()); ++u) {
    const Id f = d.over1[u];
    struct Unary {
      const char* item;
      Id got, want;
    };
    for (const Unary& q : {Unary{"6", t.id2(u), b.id2(f)}, Unary{"10", t.lu(u), b.lu(f)},
                           Unary{"10", t.lui(u), b.lui(f)}, Unary{"11", t.ru(u), b.ru(f)},
                           Unary{"11", t.rui(u), b.rui(f)}}) {
      if (q.got >= 0 && o2(q.got) != q.want) over(q.item, {t.name1(u)}, n2(o2(q.got)), n2(q.want));
    }
  }
  for (const auto& [m, n, v] : t.vcomp_tab.entries()) {
    const Id want = b.vcomp(o2(m), o2(n));
    if (o2(v) != want) over("7", {t.name2(m), t.name2(n)}, n2(o2(v)), n2(want));
  }
  for (const auto& [u, m, v] : t.lwhisker_tab.entries()) {
    const Id want = b.lw(o1(u), o2(m));
    if (o2(v) != want) over("8", {t.name1(u), t.name2(m)}, n2(o2(v)), n2(want));
  }
  for (const auto& [m, u, v] : t.rwhisker_tab.entries()) {
    const Id want = b.rw(o2(m), o1(u));
    if (o2(v) != want) over("9", {t.name2(m), t.name1(u)}, n2(o2(v)), n2(want));
  }
  for (const auto& [u, w, z, v] : t.lassoc_tab.entries()) {
    const Id want = b.la(o1(u), o1(w), o1(z));
    if (o2(v) != want) over("12", {t.name1(u), t.name1(w), t.name1(z)}, n2(o2(v)), n2(want));
  }
  for (const auto& [u, w, z, v] : t.lassoc_inv_tab.entries()) {
    const Id want = b.lai(o1(u), o1(w), o1(z));
    if (o2(v) != want) over("12", {t.name1(u), t.name1(w), t.name1(z)}, n2(o2(v)), n2(want));
  }
  r.absorb(validate_presentation(t), "disp:");
  return r;
}

Report check_disp_laws(const DispBicat& d) {
  require_lawful(*d.base, "check_disp_laws base");
  Report v = validate_disp(d);
  for (const Violation& x : v.violations) {
    if (x.law.size() > 5 && x.law.compare(x.law.size() - 5, 5, ":over") == 0) {
      Fail(ErrorCode::kTypeMismatch, "check_disp_laws: " + x.cells[0] + " lies over " + x.lhs +
                                         " instead of " + x.rhs);
    }
  }
  if (!v.pass()) return v;
  return check_laws(d.total);
}

Bicat total_bicat(const DispBicat& d) {
  require_lawful(*d.base, "total_bicat base");
  Report r = check_disp_laws(d);
  if (!r.pass()) {
    Fail(ErrorCode::kPreconditionFailed,
         "total_bicat: displayed laws fail (" + r.violations.front().law + ")");
  }
  return d.total;
}

namespace {

// Builds a displayed bicategory whose total is `t` (tables filled, any
// names) with the given over maps and local tokens.
DispBicat assemble(BicatPtr base, Bicat t, std::vector<Id> o0, std::vector<Id> o1,
                   std::vector<Id> o2, std::vector<std::string> l0,
                   std::vector<std::string> l1, std::vector<std::string> l2) {
  DispBicat d;
  for (std::size_t i = 0; i < t.objects.size(); ++i) t.objects[i] = joined(base->name0(o0[i]), l0[i]);
  for (std::size_t i = 0; i < t.one_cells.size(); ++i)
    t.one_cells[i].name = joined(base->name1(o1[i]), l1[i]);
  for (std::size_t i = 0; i < t.two_cells.size(); ++i)
    t.two_cells[i].name = joined(base->name2(o2[i]), l2[i]);
  d.base = std::move(base);
  d.total = std::move(t);
  d.over0 = std::move(o0);
  d.over1 = std::move(o1);
  d.over2 = std::move(o2);
  d.local0 = std::move(l0);
  d.local1 = std::move(l1);
  d.local2 = std::move(l2);
  d.finalize();
  return d;
}

struct Over {
  const std::vector<Id>& o0;
  const std::vector<Id>& o1;
  const std::vector<Id>& o2;
};

// Pairs (x, y) of cells of s and t lying over the same cell, with
// componentwise tables. comps* record the components of each pair.
struct FiberProduct {
  Bicat b;
  std::vector<std::pair<Id, Id>> c0, c1, c2;
};

FiberProduct fiber_product(const Bicat& s, const Over& so, const Bicat& t, const Over& to) {
  FiberProduct fp;
  Bicat& b = fp.b;
  std::unordered_map<std::uint64_t, Id> i0, i1, i2;
  auto same = [](const std::vector<Id>& a, Id x, const std::vector<Id>& c, Id y) {
    return a[x] == c[y];
  };
  for (Id x = 0; x < Id(s.size0()); ++x)
    for (Id y = 0; y < Id(t.size0()); ++y)
      if (same(so.o0, x, to.o0, y)) {
        i0[key2(x, y)] = b.add_object("");
        fp.c0.push_back({x, y});
      }
  std::vector<std::vector<Id>> out1(fp.c0.size());
  for (Id u = 0; u < Id(s.size1()); ++u)
    for (Id v = 0; v < Id(t.size1()); ++v)
      if (same(so.o1, u, to.o1, v)) {
        const Id src = i0.at(key2(s.src1(u), t.src1(v)));
        const Id tgt = i0.at(key2(s.tgt1(u), t.tgt1(v)));
        const Id c = b.add_one_cell("", src, tgt);
        i1[key2(u, v)] = c;
        fp.c1.push_back({u, v});
        out1[src].push_back(c);
      }
  std::vector<std::vector<Id>> out2(fp.c1.size()), from2(fp.c0.size()), into2(fp.c0.size());
  for (Id m = 0; m < Id(s.size2()); ++m)
    for (Id n = 0; n < Id(t.size2()); ++n)
      if (same(so.o2, m, to.o2, n)) {
        const Id src = i1.at(key2(s.src2(m), t.src2(n)));
        const Id tgt = i1.at(key2(s.tgt2(m), t.tgt2(n)));
        const Id c = b.add_two_cell("", src, tgt);
        i2[key2(m, n)] = c;
        fp.c2.push_back({m, n});
        out2[src].push_back(c);
        from2[b.one_cells[src].src].push_back(c);
        into2[b.one_cells[src].tgt].push_back(c);
      }
  b.size_tables();
  auto one = [&](Id u, Id v) {
    auto it = i1.find(key2(u, v));
    return it == i1.end() ? kNone : it->second;
  };
  auto two = [&](Id m, Id n) {
    auto it = i2.find(key2(m, n));
    return it == i2.end() ? kNone : it->second;
  };
  for (Id x = 0; x < Id(fp.c0.size()); ++x) {
    b.id1_tab[x] = one(s.id1(fp.c0[x].first), t.id1(fp.c0[x].second));
  }
  for (Id c = 0; c < Id(fp.c1.size()); ++c) {
    const auto [u, v] = fp.c1[c];
    b.id2_tab[c] = two(s.id2(u), t.id2(v));
    b.lunitor_tab[c] = two(s.lu(u), t.lu(v));
    b.lunitor_inv_tab[c] = two(s.lui(u), t.lui(v));
    b.runitor_tab[c] = two(s.ru(u), t.ru(v));
    b.runitor_inv_tab[c] = two(s.rui(u), t.rui(v));
  }
  auto set2 = [](PairTable& tab, Id a, Id c, Id v) {
    if (v != kNone) tab.set(a, c, v);
  };
  for (Id c = 0; c < Id(fp.c1.size()); ++c) {
    const auto [u, v] = fp.c1[c];
    const Id mid = b.one_cells[c].tgt;
    for (Id c2 : out1[mid]) {
      const auto [u2, v2] = fp.c1[c2];
      set2(b.comp1_tab, c, c2, one(s.comp(u, u2), t.comp(v, v2)));
      for (Id c3 : out1[b.one_cells[c2].tgt]) {
        const auto [u3, v3] = fp.c1[c3];
        Id a = two(s.la(u, u2, u3), t.la(v, v2, v3));
        if (a != kNone) b.lassoc_tab.set(c, c2, c3, a);
        a = two(s.lai(u, u2, u3), t.lai(v, v2, v3));
        if (a != kNone) b.lassoc_inv_tab.set(c, c2, c3, a);
      }
    }
    // Whiskering by this 1-cell on either side.
    for (Id m : from2[mid]) {
      const auto [s2, t2] = fp.c2[m];
      set2(b.lwhisker_tab, c, m, two(s.lw(u, s2), t.lw(v, t2)));
    }
    for (Id m : into2[b.one_cells[c].src]) {
      const auto [s2, t2] = fp.c2[m];
      set2(b.rwhisker_tab, m, c, two(s.rw(s2, u), t.rw(t2, v)));
    }
  }
  for (Id m = 0; m < Id(fp.c2.size()); ++m) {
    const auto [s2, t2] = fp.c2[m];
    for (Id n : out2[b.two_cells[m].tgt]) {
      const auto [s3, t3] = fp.c2[n];
      set2(b.vcomp_tab, m, n, two(s.vcomp(s2, s3), t.vcomp(t2, t3)));
    }
  }
  return fp;
}

std::string pair_local(const std::string& x, const std::string& y) {
  return "(" + x + "," + y + ")";
}

}  // namespace

DispBicat fullsub_disp(BicatPtr base, const std::function<bool(Id)>& pred) {
  const Bicat& p = *base;
  DispBicat d;
  d.base = base;
  std::vector<Id> o(p.size0(), kNone), one(p.size1(), kNone), two(p.size2(), kNone);
  for (Id a = 0; a < Id(p.size0()); ++a) {
    if (pred(a)) o[a] = d.add_object(a, "*");
  }
  for (Id f = 0; f < Id(p.size1()); ++f) {
    if (o[p.src1(f)] != kNone && o[p.tgt1(f)] != kNone)
      one[f] = d.add_one_cell(f, "*", o[p.src1(f)], o[p.tgt1(f)]);
  }
  for (Id t = 0; t < Id(p.size2()); ++t) {
    if (one[p.src2(t)] != kNone) two[t] = d.add_two_cell(t, "*", one[p.src2(t)], one[p.tgt2(t)]);
  }
  Bicat& b = d.total;
  b.size_tables();
  for (Id a = 0; a < Id(p.size0()); ++a)
    if (o[a] != kNone) b.id1_tab[o[a]] = one[p.id1(a)];
  for (Id f = 0; f < Id(p.size1()); ++f) {
    if (one[f] == kNone) continue;
    b.id2_tab[one[f]] = two[p.id2(f)];
    b.lunitor_tab[one[f]] = two[p.lu(f)];
    b.lunitor_inv_tab[one[f]] = two[p.lui(f)];
    b.runitor_tab[one[f]] = two[p.ru(f)];
    b.runitor_inv_tab[one[f]] = two[p.rui(f)];
  }
  for (const auto& [f, g, v] : p.comp1_tab.entries())
    if (one[f] != kNone && one[g] != kNone) b.comp1_tab.set(one[f], one[g], one[v]);
  for (const auto& [s, t, v] : p.vcomp_tab.entries())
    if (two[s] != kNone && two[t] != kNone) b.vcomp_tab.set(two[s], two[t], two[v]);
  for (const auto& [f, t, v] : p.lwhisker_tab.entries())
    if (one[f] != kNone && two[t] != kNone) b.lwhisker_tab.set(one[f], two[t], two[v]);
  for (const auto& [t, h, v] : p.rwhisker_tab.entries())
    if (two[t] != kNone && one[h] != kNone) b.rwhisker_tab.set(two[t], one[h], two[v]);
  for (const auto& [f, g, h, v] : p.lassoc_tab.entries())
    if (one[f] != kNone && one[g] != kNone && one[h] != kNone)
      b.lassoc_tab.set(one[f], one[g], one[h], two[v]);
  for (const auto& [f, g, h, v] : p.lassoc_inv_tab.entries())
    if (one[f] != kNone && one[g] != kNone && one[h] != kNone)
      b.lassoc_inv_tab.set(one[f], one[g], one[h], two[v]);
  d.finalize();
  return d;
}

DispBicat fullsub_disp(BicatPtr base, const std::vector<std::string>& objects) {
  std::vector<bool> keep(base->size0(), false);
  for (const std::string& o : objects) {
    Id a = base->find0(o);
    if (a == kNone) Fail(ErrorCode::kDanglingReference, "fullsub_disp: unknown object " + o);
    keep[a] = true;
  }
  return fullsub_disp(std::move(base), [&](Id a) { return bool(keep[a]); });
}

DispBicat prod_disp(const DispBicat& d1, const DispBicat& d2) {
  if (!same_bicat(d1.base, d2.base)) {
    Fail(ErrorCode::kTypeMismatch, "prod_disp: displayed over different bases");
  }
  FiberProduct fp = fiber_product(d1.total, {d1.over0, d1.over1, d1.over2}, d2.total,
                                  {d2.over0, d2.over1, d2.over2});
  std::vector<Id> o0, o1, o2;
  std::vector<std::string> l0, l1, l2;
  for (auto [x, y] : fp.c0) {
    o0.push_back(d1.over0[x]);
    l0.push_back(pair_local(d1.local0[x], d2.local0[y]));
  }
  for (auto [x, y] : fp.c1) {
    o1.push_back(d1.over1[x]);
    l1.push_back(pair_local(d1.local1[x], d2.local1[y]));
  }
  for (auto [x, y] : fp.c2) {
    o2.push_back(d1.over2[x]);
    l2.push_back(pair_local(d1.local2[x], d2.local2[y]));
  }
  return assemble(d1.base, std::move(fp.b), std::move(o0), std::move(o1), std::move(o2),
                  std::move(l0), std::move(l1), std::move(l2));
}

DispBicat sigma_disp(const DispBicat& d, const DispBicat& e) {
  if (!e.base->same_tables(d.total)) {
    Fail(ErrorCode::kTypeMismatch, "sigma_disp: second argument is not over the total of the first");
  }
  std::vector<Id> o0, o1, o2;
  std::vector<std::string> l0, l1, l2;
  for (Id x = 0; x < Id(e.total.size0()); ++x) {
    const Id y = e.over0[x];
    o0.push_back(d.over0[y]);
    l0.push_back(pair_local(d.local0[y], e.local0[x]));
  }
  for (Id x = 0; x < Id(e.total.size1()); ++x) {
    const Id y = e.over1[x];
    o1.push_back(d.over1[y]);
    l1.push_back(pair_local(d.local1[y], e.local1[x]));
  }
  for (Id x = 0; x < Id(e.total.size2()); ++x) {
    const Id y = e.over2[x];
    o2.push_back(d.over2[y]);
    l2.push_back(pair_local(d.local2[y], e.local2[x]));
  }
  return assemble(d.base, e.total, std::move(o0), std::move(o1), std::move(o2), std::move(l0),
                  std::move(l1), std::move(l2));
}

ProdIndex prod_index(const DispBicat& d1, const DispBicat& d2, const DispBicat& p) {
  ProdIndex ix;
  const Bicat& b = *d1.base;
  ix.obj.assign(p.total.size0(), {kNone, kNone});
  ix.one.assign(p.total.size1(), {kNone, kNone});
  ix.two.assign(p.total.size2(), {kNone, kNone});
  for (Id x = 0; x < Id(d1.total.size0()); ++x) {
    for (Id y : d2.fiber0(d1.over0[x])) {
      const Id z = p.total.find0(joined(b.name0(d1.over0[x]), pair_local(d1.local0[x], d2.local0[y])));
      if (z != kNone) ix.obj[z] = {x, y};
    }
  }
  for (Id x = 0; x < Id(d1.total.size1()); ++x) {
    for (Id y = 0; y < Id(d2.total.size1()); ++y) {
      if (d2.over1[y] != d1.over1[x]) continue;
      const Id z = p.total.find1(joined(b.name1(d1.over1[x]), pair_local(d1.local1[x], d2.local1[y])));
      if (z != kNone) ix.one[z] = {x, y};
    }
  }
  for (Id x = 0; x < Id(d1.total.size2()); ++x) {
    for (Id y = 0; y < Id(d2.total.size2()); ++y) {
      if (d2.over2[y] != d1.over2[x]) continue;
      const Id z = p.total.find2(joined(b.name2(d1.over2[x]), pair_local(d1.local2[x], d2.local2[y])));
      if (z != kNone) ix.two[z] = {x, y};
    }
  }
  return ix;
}

SigmaIndex sigma_index(const DispBicat& d, const DispBicat& e, const DispBicat& s) {
  SigmaIndex ix;
  const Bicat& b = *d.base;
  ix.obj.assign(s.total.size0(), kNone);
  ix.one.assign(s.total.size1(), kNone);
  ix.two.assign(s.total.size2(), kNone);
  for (Id x = 0; x < Id(e.total.size0()); ++x) {
    const Id y = e.over0[x];
    const Id z = s.total.find0(joined(b.name0(d.over0[y]), pair_local(d.local0[y], e.local0[x])));
    if (z != kNone) ix.obj[z] = x;
  }
  for (Id x = 0; x < Id(e.total.size1()); ++x) {
    const Id y = e.over1[x];
    const Id z = s.total.find1(joined(b.name1(d.over1[y]), pair_local(d.local1[y], e.local1[x])));
    if (z != kNone) ix.one[z] = x;
  }
  for (Id x = 0; x < Id(e.total.size2()); ++x) {
    const Id y = e.over2[x];
    const Id z = s.total.find2(joined(b.name2(d.over2[y]), pair_local(d.local2[y], e.local2[x])));
    if (z != kNone) ix.two[z] = x;
  }
  return ix;
}

DispBicat trivial_disp(BicatPtr base, const Bicat& q) {
  const Bicat& p = *base;
  // Both sides over a point: the fiber product is the plain product.
  std::vector<Id> z0p(p.size0(), 0), z1p(p.size1(), 0), z2p(p.size2(), 0);
  std::vector<Id> z0q(q.size0(), 0), z1q(q.size1(), 0), z2q(q.size2(), 0);
  FiberProduct fp = fiber_product(p, {z0p, z1p, z2p}, q, {z0q, z1q, z2q});
  std::vector<Id> o0, o1, o2;
  std::vector<std::string> l0, l1, l2;
  for (auto [x, y] : fp.c0) {
    o0.push_back(x);
    l0.push_back(q.name0(y));
  }
  for (auto [x, y] : fp.c1) {
    o1.push_back(x);
    l1.push_back(q.name1(y));
  }
  for (auto [x, y] : fp.c2) {
    o2.push_back(x);
    l2.push_back(q.name2(y));
  }
  return assemble(base, std::move(fp.b), std::move(o0), std::move(o1), std::move(o2),
                  std::move(l0), std::move(l1), std::move(l2));
}

DispBicat chaotic_disp(BicatPtr base, const ChaoticData& data) {
  return prop_disp(std::move(base), data, [](Id, Id, Id) { return true; });
}

DispBicat prop_disp(BicatPtr base, const ChaoticData& data,
                    const std::function<bool(Id, Id, Id)>& admits) {
  const Bicat& p = *base;
  auto violation = [](const std::string& what) {
    Fail(ErrorCode::kChaoticClosureViolation, "chaotic_disp: " + what);
  };
  DispBicat d;
  d.base = base;
  // (base object, local) -> displayed object
  std::map<std::pair<Id, std::string>, Id> obj;
  for (const auto& [a_name, locals] : data.d0) {
    const Id a = p.find0(a_name);
    if (a == kNone) Fail(ErrorCode::kDanglingReference, "chaotic_disp: unknown object " + a_name);
    for (const std::string& l : locals) {
      if (obj.count({a, l})) Fail(ErrorCode::kDuplicateId, "chaotic_disp: duplicate " + l);
      obj[{a, l}] = d.add_object(a, l);
    }
  }
  std::map<std::pair<Id, std::string>, Id> one;
  for (const ChaoticData::OneCell& c : data.d1) {
    const Id f = p.find1(c.over);
    if (f == kNone) Fail(ErrorCode::kDanglingReference, "chaotic_disp: unknown 1-cell " + c.over);
    auto s = obj.find({p.src1(f), c.src});
    auto t = obj.find({p.tgt1(f), c.tgt});
    if (s == obj.end() || t == obj.end()) {
      Fail(ErrorCode::kDanglingReference, "chaotic_disp: bad endpoints for " + c.local);
    }
    if (one.count({f, c.local})) Fail(ErrorCode::kDuplicateId, "chaotic_disp: duplicate " + c.local);
    one[{f, c.local}] = d.add_one_cell(f, c.local, s->second, t->second);
  }
  const std::size_t n1 = d.total.one_cells.size();
  std::vector<std::vector<Id>> by_base(p.size1());
  for (Id u = 0; u < Id(n1); ++u) by_base[d.over1[u]].push_back(u);
  // One 2-cell over θ for every parallel pair (u over src θ, v over tgt θ).
  std::map<std::tuple<Id, Id, Id>, Id> two;
  for (Id th = 0; th < Id(p.size2()); ++th) {
    for (Id u : by_base[p.src2(th)]) {
      for (Id v : by_base[p.tgt2(th)]) {
        const Cell& cu = d.total.one_cells[u];
        const Cell& cv = d.total.one_cells[v];
        if (cu.src != cv.src || cu.tgt != cv.tgt || !admits(th, u, v)) continue;
        two[{th, u, v}] = d.add_two_cell(th, "<" + d.local1[u] + "," + d.local1[v] + ">", u, v);
      }
    }
  }
  Bicat& b = d.total;
  b.size_tables();
  for (const auto& [key, x] : obj) {
    auto it = data.id.find({p.name0(key.first), key.second});
    if (it == data.id.end()) violation("no identity on " + key.second);
    auto u = one.find({p.id1(key.first), it->second});
    if (u == one.end() || b.one_cells[u->second].src != x || b.one_cells[u->second].tgt != x) {
      violation("identity on " + key.second + " is not a displayed endo-1-cell over id1");
    }
    b.id1_tab[x] = u->second;
  }
  for (Id u = 0; u < Id(n1); ++u) {
    for (Id v = 0; v < Id(n1); ++v) {
      if (b.one_cells[u].tgt != b.one_cells[v].src) continue;
      const Id f = d.over1[u], g = d.over1[v];
      auto it = data.comp.find({p.name1(f), d.local1[u], p.name1(g), d.local1[v]});
      if (it == data.comp.end()) violation("no composite of " + d.local1[u] + " and " + d.local1[v]);
      auto w = one.find({p.comp(f, g), it->second});
      if (w == one.end() || b.one_cells[w->second].src != b.one_cells[u].src ||
          b.one_cells[w->second].tgt != b.one_cells[v].tgt) {
        violation("composite of " + d.local1[u] + " and " + d.local1[v] + " is ill-typed");
      }
      b.comp1_tab.set(u, v, w->second);
    }
  }
  auto cell = [&](Id th, Id u, Id v) {
    auto it = two.find({th, u, v});
    if (it != two.end()) return it->second;
    if (th != kNone) violation("no displayed 2-cell over " + p.name2(th));
    return kNone;
  };
  const std::size_t n2 = b.two_cells.size();
  for (Id u = 0; u < Id(n1); ++u) {
    const Id f = d.over1[u];
    const Id iu = b.id1_tab[b.one_cells[u].src], ui = b.id1_tab[b.one_cells[u].tgt];
    b.id2_tab[u] = cell(p.id2(f), u, u);
    b.lunitor_tab[u] = cell(p.lu(f), b.comp1_tab.get(iu, u), u);
    b.lunitor_inv_tab[u] = cell(p.lui(f), u, b.comp1_tab.get(iu, u));
    b.runitor_tab[u] = cell(p.ru(f), b.comp1_tab.get(u, ui), u);
    b.runitor_inv_tab[u] = cell(p.rui(f), u, b.comp1_tab.get(u, ui));
  }
  for (Id m = 0; m < Id(n2); ++m) {
    const Cell& cm = b.two_cells[m];
    const Id th = d.over2[m];
    for (Id n = 0; n < Id(n2); ++n) {
      const Cell& cn = b.two_cells[n];
      if (cn.src == cm.tgt) {
        const Id v = cell(p.vcomp(th, d.over2[n]), cm.src, cn.tgt);
        if (v != kNone) b.vcomp_tab.set(m, n, v);
      }
    }
    for (Id u = 0; u < Id(n1); ++u) {
      const Cell& cu = b.one_cells[u];
      if (cu.tgt == b.one_cells[cm.src].src) {
        const Id v = cell(p.lw(d.over1[u], th), b.comp1_tab.get(u, cm.src),
                          b.comp1_tab.get(u, cm.tgt));
        if (v != kNone) b.lwhisker_tab.set(u, m, v);
      }
      if (cu.src == b.one_cells[cm.src].tgt) {
        const Id v = cell(p.rw(th, d.over1[u]), b.comp1_tab.get(cm.src, u),
                          b.comp1_tab.get(cm.tgt, u));
        if (v != kNone) b.rwhisker_tab.set(m, u, v);
      }
    }
  }
  for (Id u = 0; u < Id(n1); ++u) {
    for (Id v = 0; v < Id(n1); ++v) {
      if (b.one_cells[u].tgt != b.one_cells[v].src) continue;
      const Id uv = b.comp1_tab.get(u, v);
      for (Id w = 0; w < Id(n1); ++w) {
        if (b.one_cells[v].tgt != b.one_cells[w].src) continue;
        const Id l = b.comp1_tab.get(u, b.comp1_tab.get(v, w));
        const Id r = b.comp1_tab.get(uv, w);
        const Id f = d.over1[u], g = d.over1[v], h = d.over1[w];
        Id c = cell(p.la(f, g, h), l, r);
        if (c != kNone) b.lassoc_tab.set(u, v, w, c);
        c = cell(p.lai(f, g, h), r, l);
        if (c != kNone) b.lassoc_inv_tab.set(u, v, w, c);
      }
    }
  }
  d.finalize();
  return d;
}

std::vector<Inv2Cell> disp_invertible_2cells(const DispBicat& d, const Inv2Cell& base_cell,
                                             Id u, Id v) {
  const Bicat& p = *d.base;
  const Bicat& t = d.total;
  if (p.vcomp(base_cell.theta, base_cell.theta_inv) != p.id2(p.src2(base_cell.theta)) ||
      p.vcomp(base_cell.theta_inv, base_cell.theta) != p.id2(p.tgt2(base_cell.theta))) {
    Fail(ErrorCode::kPreconditionFailed, "disp_invertible_2cells: base cell is not invertible");
  }
  if (d.over1[u] != p.src2(base_cell.theta) || d.over1[v] != p.tgt2(base_cell.theta)) {
    Fail(ErrorCode::kTypeMismatch, "disp_invertible_2cells: endpoints not over the base cell");
  }
  std::vector<Inv2Cell> out;
  if (t.src1(u) != t.src1(v) || t.tgt1(u) != t.tgt1(v)) return out;
  for (Id m : d.fiber2(base_cell.theta, u, v)) {
    for (Id n : d.fiber2(base_cell.theta_inv, v, u)) {
      if (t.vcomp(m, n) == t.id2(u) && t.vcomp(n, m) == t.id2(v)) out.push_back({m, n});
    }
  }
  return out;
}

std::vector<AdjEquiv> disp_adjoint_equivalences(const DispBicat& d, const AdjEquiv& base_e,
                                                Id x, Id y, Budget& budget) {
  const Bicat& p = *d.base;
  if (!is_adjoint_equivalence(p, base_e)) {
    Fail(ErrorCode::kPreconditionFailed, "disp_adjoint_equivalences: base is not an adjoint equivalence");
  }
  if (d.over0[x] != p.src1(base_e.f) || d.over0[y] != p.tgt1(base_e.f)) {
    Fail(ErrorCode::kTypeMismatch, "disp_adjoint_equivalences: endpoints not over the base");
  }
  std::vector<AdjEquiv> out;
  for (Id u : d.fiber1(base_e.f, x, y)) {
    for (const AdjEquiv& e : adjequiv_structures(d.total, u, budget)) {
      if (d.over1[e.g] == base_e.g && d.over2[e.eta.theta] == base_e.eta.theta &&
          d.over2[e.eps.theta] == base_e.eps.theta) {
        out.push_back(e);
      }
    }
  }
  return out;
}

std::vector<AdjEquiv> disp_adjoint_equivalences(const DispBicat& d, const AdjEquiv& base_e,
                                                Id x, Id y) {
  Budget budget;
  return disp_adjoint_equivalences(d, base_e, x, y, budget);
}

UnivalenceReport check_disp_univalence(const DispBicat& d, Budget& budget) {
  const Bicat& p = *d.base;
  const Bicat& t = d.total;
  UnivalenceReport r;
  r.local_checked = r.global_checked = true;
  for (Id f = 0; f < Id(p.size1()); ++f) {
    const Inv2Cell id{p.id2(f), p.id2(f)};
    for (Id x : d.fiber0(p.src1(f))) {
      for (Id y : d.fiber0(p.tgt1(f))) {
        const std::vector<Id> fib = d.fiber1(f, x, y);
        for (Id u : fib) {
          for (Id v : fib) {
            budget.Spend();
            std::vector<Inv2Cell> inv = disp_invertible_2cells(d, id, u, v);
            if (inv.size() != std::size_t(u == v)) {
              r.local.push_back({{t.name1(u), t.name1(v)}, inv.size(), false});
            } else if (u == v && inv[0].theta != t.id2(u)) {
              r.local.push_back({{t.name1(u), t.name1(v)}, 1, true});
            }
          }
        }
      }
    }
  }
  for (Id a = 0; a < Id(p.size0()); ++a) {
    const AdjEquiv ida = identity_adjequiv(p, a);
    for (Id x : d.fiber0(a)) {
      for (Id y : d.fiber0(a)) {
        std::vector<AdjEquiv> es = disp_adjoint_equivalences(d, ida, x, y, budget);
        if (es.size() != std::size_t(x == y)) {
          r.global.push_back({{t.name0(x), t.name0(y)}, es.size(), false});
        } else if (x == y && !(es[0] == identity_adjequiv(t, x))) {
          r.global.push_back({{t.name0(x), t.name0(y)}, 1, true});
        }
      }
    }
  }
  return r;
}

UnivalenceReport check_disp_univalence(const DispBicat& d) {
  Budget budget;
  return check_disp_univalence(d, budget);
}

bool is_locally_groupoidal(const DispBicat& d) {
  for (Id m = 0; m < Id(d.total.size2()); ++m) {
    if (d.base->is_invertible(d.over2[m]) && !d.total.is_invertible(m)) return false;
  }
  return true;
}

bool is_locally_propositional(const DispBicat& d) {
  std::map<std::tuple<Id, Id, Id>, int> seen;
  for (Id m = 0; m < Id(d.total.size2()); ++m) {
    if (++seen[{d.over2[m], d.total.src2(m), d.total.tgt2(m)}] > 1) return false;
  }
  return true;
}

}  // namespace bikernel
