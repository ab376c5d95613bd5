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
// Validation of presentations and the exhaustive coherence-law checker.

#include <utility>

#include "bikernel/core.hpp"

namespace bikernel {

namespace {

// A witness cell: tier (1 or 2) plus index. Names are only rendered when a
// check fails.
struct W {
  int tier;
  Id id;
};
W c0(Id a) { return {0, a}; }
W c1(Id f) { return {1, f}; }
W c2(Id t) { return {2, t}; }

class Checker {
 public:
  Checker(const Bicat& p, Report& r, Budget* budget)
      : p_(p), r_(r), budget_(budget) {}

  std::string name(W w) const {
    if (w.id < 0) return "undefined";
    switch (w.tier) {
      case 0: return p_.name0(w.id);
      case 1: return p_.name1(w.id);
      default: return p_.name2(w.id);
    }
  }

  void eq(const char* law, Id lhs, Id rhs, std::initializer_list<W> cells) {
    r_.instantiations[law]++;
    if (budget_ != nullptr) budget_->Spend();
    if (lhs != kNone && lhs == rhs) return;
    Violation v;
    v.law = law;
    for (W w : cells) v.cells.push_back(name(w));
    v.lhs = name(c2(lhs));
    v.rhs = name(c2(rhs));
    r_.add(std::move(v));
  }

  // Records a validation failure.
  void bad(const std::string& tag, std::initializer_list<W> cells,
           std::string got, std::string want) {
    Violation v;
    v.law = tag;
    for (W w : cells) v.cells.push_back(name(w));
    v.lhs = std::move(got);
    v.rhs = std::move(want);
    r_.add(std::move(v));
  }

  // A 2-cell entry must exist and go s => t.
  void typed2(const std::string& item, Id cell, Id s, Id t,
              std::initializer_list<W> key) {
    r_.instantiations[item]++;
    if (cell == kNone) {
      bad(item + ":missing", key, "undefined", "entry");
      return;
    }
    if (s == kNone || t == kNone) return;  // reported at the 1-cell level
    if (p_.src2(cell) != s || p_.tgt2(cell) != t) {
      bad(item + ":typing", key,
          name(c2(cell)) + " : " + name(c1(p_.src2(cell))) + " => " +
              name(c1(p_.tgt2(cell))),
          name(c1(s)) + " => " + name(c1(t)));
    }
  }

 private:
  const Bicat& p_;
  Report& r_;
  Budget* budget_;
};

}  // namespace

Report validate_presentation(const Bicat& p) {
  Report r;
  Checker ck(p, r, nullptr);
  const Id n0 = Id(p.size0()), n1 = Id(p.size1()), n2 = Id(p.size2());

  for (Id f = 0; f < n1; ++f) {
    if (p.src1(f) == kNone || p.tgt1(f) == kNone) {
      ck.bad("2:typing", {c1(f)}, "missing endpoint", "object");
    }
  }
  for (Id t = 0; t < n2; ++t) {
    Id s = p.src2(t), u = p.tgt2(t);
    if (s == kNone || u == kNone) {
      ck.bad("3:typing", {c2(t)}, "missing endpoint", "1-cell");
    } else if (p.src1(s) != p.src1(u) || p.tgt1(s) != p.tgt1(u)) {
      ck.bad("3:typing", {c2(t)}, ck.name(c1(s)) + " => " + ck.name(c1(u)),
             "parallel 1-cells");
    }
  }
  if (!r.pass()) return r;

  for (Id a = 0; a < n0; ++a) {
    Id i = p.id1(a);
    r.instantiations["4"]++;
    if (i == kNone) {
      ck.bad("4:missing", {c0(a)}, "undefined", "entry");
    } else if (p.src1(i) != a || p.tgt1(i) != a) {
      ck.bad("4:typing", {c0(a)}, ck.name(c1(i)), "endo-1-cell");
    }
  }

  auto comp_ok = [&](Id f, Id g) { return p.tgt1(f) == p.src1(g); };
  for (Id f = 0; f < n1; ++f) {
    for (Id g : p.out1(p.tgt1(f))) {
      Id fg = p.comp(f, g);
      r.instantiations["5"]++;
      if (fg == kNone) {
        ck.bad("5:missing", {c1(f), c1(g)}, "undefined", "entry");
      } else if (p.src1(fg) != p.src1(f) || p.tgt1(fg) != p.tgt1(g)) {
        ck.bad("5:typing", {c1(f), c1(g)}, ck.name(c1(fg)), "1-cell src(f) -> tgt(g)");
      }
    }
  }
  for (const auto& [f, g, v] : p.comp1_tab.entries()) {
    if (!comp_ok(f, g)) ck.bad("5:extra", {c1(f), c1(g)}, ck.name(c1(v)), "undefined");
  }
  if (!r.pass()) return r;

  for (Id f = 0; f < n1; ++f) {
    ck.typed2("6", p.id2(f), f, f, {c1(f)});
  }
  for (Id t = 0; t < n2; ++t) {
    for (Id u : p.out2(p.tgt2(t))) {
      ck.typed2("7", p.vcomp(t, u), p.src2(t), p.tgt2(u), {c2(t), c2(u)});
    }
  }
  for (const auto& [t, u, v] : p.vcomp_tab.entries()) {
    if (p.tgt2(t) != p.src2(u)) ck.bad("7:extra", {c2(t), c2(u)}, ck.name(c2(v)), "undefined");
  }
  // f ◁ θ for f: a -> b and θ: g => h with g, h: b -> c.
  for (Id f = 0; f < n1; ++f) {
    for (Id g : p.out1(p.tgt1(f))) {
      for (Id t : p.out2(g)) {
        ck.typed2("8", p.lw(f, t), p.comp(f, g), p.comp(f, p.tgt2(t)), {c1(f), c2(t)});
      }
    }
  }
  for (const auto& [f, t, v] : p.lwhisker_tab.entries()) {
    if (p.tgt1(f) != p.src1(p.src2(t))) ck.bad("8:extra", {c1(f), c2(t)}, ck.name(c2(v)), "undefined");
  }
  for (Id t = 0; t < n2; ++t) {
    Id f = p.src2(t), g = p.tgt2(t);
    for (Id h : p.out1(p.tgt1(f))) {
      ck.typed2("9", p.rw(t, h), p.comp(f, h), p.comp(g, h), {c2(t), c1(h)});
    }
  }
  for (const auto& [t, h, v] : p.rwhisker_tab.entries()) {
    if (p.tgt1(p.src2(t)) != p.src1(h)) ck.bad("9:extra", {c2(t), c1(h)}, ck.name(c2(v)), "undefined");
  }
  for (Id f = 0; f < n1; ++f) {
    Id l = p.comp(p.id1(p.src1(f)), f);
    Id r1 = p.comp(f, p.id1(p.tgt1(f)));
    ck.typed2("10", p.lu(f), l, f, {c1(f)});
    ck.typed2("10", p.lui(f), f, l, {c1(f)});
    ck.typed2("11", p.ru(f), r1, f, {c1(f)});
    ck.typed2("11", p.rui(f), f, r1, {c1(f)});
  }
  for (Id f = 0; f < n1; ++f) {
    for (Id g : p.out1(p.tgt1(f))) {
      for (Id h : p.out1(p.tgt1(g))) {
        Id s = p.comp(f, p.comp(g, h));
        Id t = p.comp(p.comp(f, g), h);
        ck.typed2("12", p.la(f, g, h), s, t, {c1(f), c1(g), c1(h)});
        ck.typed2("12", p.lai(f, g, h), t, s, {c1(f), c1(g), c1(h)});
      }
    }
  }
  for (const auto* tab : {&p.lassoc_tab, &p.lassoc_inv_tab}) {
    for (const auto& [f, g, h, v] : tab->entries()) {
      if (!comp_ok(f, g) || !comp_ok(g, h)) {
        ck.bad("12:extra", {c1(f), c1(g), c1(h)}, ck.name(c2(v)), "undefined");
      }
    }
  }
  return r;
}

const std::vector<std::string>& law_families() {
  static const std::vector<std::string> kFamilies = {
      "12", "13", "14", "15", "16", "17", "18", "19",
      "20", "21", "22", "23", "24", "interchange"};
  return kFamilies;
}

Report check_laws(const Bicat& p, std::uint64_t budget_limit) {
  Report r;
  Budget budget(budget_limit);
  Checker ck(p, r, &budget);
  const Id n1 = Id(p.size1()), n2 = Id(p.size2());
  for (const std::string& f : law_families()) r.instantiations[f] = 0;

  // Per 2-cell θ: f => g with f, g: a -> b.
  for (Id t = 0; t < n2; ++t) {
    const Id f = p.src2(t), g = p.tgt2(t);
    const Id a = p.src1(f), b = p.tgt1(f);

    ck.eq("12", p.vcomp(p.id2(f), t), t, {c2(t)});
    ck.eq("12", p.vcomp(t, p.id2(g)), t, {c2(t)});
    for (Id u : p.out2(g)) {
      for (Id v : p.out2(p.tgt2(u))) {
        ck.eq("12", p.vcomp(t, p.vcomp(u, v)), p.vcomp(p.vcomp(t, u), v),
              {c2(t), c2(u), c2(v)});
      }
    }

    ck.eq("15", p.vcomp(p.lw(p.id1(a), t), p.lu(g)), p.vcomp(p.lu(f), t), {c2(t)});
    ck.eq("16", p.vcomp(p.rw(t, p.id1(b)), p.ru(g)), p.vcomp(p.ru(f), t), {c2(t)});

    for (Id h : p.out1(b)) {
      // (θ • γ) ▷ h
      for (Id u : p.out2(g)) {
        ck.eq("14", p.rw(p.vcomp(t, u), h), p.vcomp(p.rw(t, h), p.rw(u, h)),
              {c2(t), c2(u), c1(h)});
      }
      // Interchange with every γ: h => i.
      for (Id u : p.out2(h)) {
        const Id i = p.tgt2(u);
        ck.eq("interchange", p.vcomp(p.rw(t, h), p.lw(g, u)),
              p.vcomp(p.lw(f, u), p.rw(t, i)), {c2(t), c2(u)});
      }
      for (Id i : p.out1(p.tgt1(h))) {
        ck.eq("19", p.vcomp(p.rw(t, p.comp(h, i)), p.la(g, h, i)),
              p.vcomp(p.la(f, h, i), p.rw(p.rw(t, h), i)), {c2(t), c1(h), c1(i)});
      }
    }
  }

  // Per 1-cell f: a -> b.
  for (Id f = 0; f < n1; ++f) {
    const Id a = p.src1(f), b = p.tgt1(f);
    ck.eq("20", p.vcomp(p.lu(f), p.lui(f)), p.id2(p.comp(p.id1(a), f)), {c1(f)});
    ck.eq("20", p.vcomp(p.lui(f), p.lu(f)), p.id2(f), {c1(f)});
    ck.eq("21", p.vcomp(p.ru(f), p.rui(f)), p.id2(p.comp(f, p.id1(b))), {c1(f)});
    ck.eq("21", p.vcomp(p.rui(f), p.ru(f)), p.id2(f), {c1(f)});

    for (Id g : p.out1(b)) {
      const Id fg = p.comp(f, g);
      ck.eq("13", p.lw(f, p.id2(g)), p.id2(fg), {c1(f), c1(g)});
      ck.eq("14", p.rw(p.id2(f), g), p.id2(fg), {c1(f), c1(g)});
      ck.eq("23", p.vcomp(p.la(f, p.id1(b), g), p.rw(p.ru(f), g)), p.lw(f, p.lu(g)),
            {c1(f), c1(g)});

      // f ◁ (θ • γ) for θ: g => h, γ: h => i.
      for (Id t : p.out2(g)) {
        for (Id u : p.out2(p.tgt2(t))) {
          ck.eq("13", p.lw(f, p.vcomp(t, u)), p.vcomp(p.lw(f, t), p.lw(f, u)),
                {c1(f), c2(t), c2(u)});
        }
        // f ◁ (θ ▷ i) for θ: g => h on b -> c and i: c -> d.
        const Id h = p.tgt2(t);
        for (Id i : p.out1(p.tgt1(g))) {
          ck.eq("18", p.vcomp(p.lw(f, p.rw(t, i)), p.la(f, h, i)),
                p.vcomp(p.la(f, g, i), p.rw(p.lw(f, t), i)), {c1(f), c2(t), c1(i)});
        }
      }

      for (Id h : p.out1(p.tgt1(g))) {
        const Id gh = p.comp(g, h);
        ck.eq("22", p.vcomp(p.la(f, g, h), p.lai(f, g, h)),
              p.id2(p.comp(f, gh)), {c1(f), c1(g), c1(h)});
        ck.eq("22", p.vcomp(p.lai(f, g, h), p.la(f, g, h)),
              p.id2(p.comp(fg, h)), {c1(f), c1(g), c1(h)});

        // f ◁ (g ◁ θ) for θ: h => i.
        for (Id t : p.out2(h)) {
          const Id i = p.tgt2(t);
          ck.eq("17", p.vcomp(p.lw(f, p.lw(g, t)), p.la(f, g, i)),
                p.vcomp(p.la(f, g, h), p.lw(fg, t)), {c1(f), c1(g), c2(t)});
        }

        for (Id i : p.out1(p.tgt1(h))) {
          const Id lhs = p.vcomp(p.la(f, g, p.comp(h, i)), p.la(fg, h, i));
          const Id rhs = p.vchain({p.lw(f, p.la(g, h, i)), p.la(f, gh, i),
                                   p.rw(p.la(f, g, h), i)});
          ck.eq("24", lhs, rhs, {c1(f), c1(g), c1(h), c1(i)});
        }
      }
    }
  }
  return r;
}

void require_lawful(const Bicat& p, const std::string& what) {
  Report v = validate_presentation(p);
  if (!v.pass()) {
    Fail(ErrorCode::kPreconditionFailed,
         what + ": presentation is not well-typed (" + v.violations[0].law + ")");
  }
  Report l = check_laws(p);
  if (!l.pass()) {
    Fail(ErrorCode::kPreconditionFailed,
         what + ": law " + l.violations[0].law + " fails");
  }
}

}  // namespace bikernel
