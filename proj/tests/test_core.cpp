// Core: presentation validation, coherence laws, hom-categories, op,
// cell searches, biinitiality and strictness.

#include <doctest.h>

#include <algorithm>

#include "bikernel/core.hpp"
#include "bikernel/generators.hpp"
#include "bikernel/io.hpp"

using namespace bikernel;

namespace {

bool lawful(const Bicat& p) {
  return validate_presentation(p).pass() && check_laws(p).pass();
}

Id one(const Bicat& p, const char* n) {
  Id f = p.find1(n);
  REQUIRE(f != kNone);
  return f;
}

Id two(const Bicat& p, const char* n) {
  Id t = p.find2(n);
  REQUIRE(t != kNone);
  return t;
}

// The indiscrete monoidal category on {u, v} with every tensor equal to v,
// seen as a one-object bicategory. id·f = v for every f, so the unit is weak.
Bicat weak_unit_bicat() {
  Bicat b;
  Id x = b.add_object("*");
  Id u = b.add_one_cell("u", x, x);
  Id v = b.add_one_cell("v", x, x);
  b.size_tables();
  b.id1_tab[x] = u;
  for (Id f : {u, v})
    for (Id g : {u, v}) b.comp1_tab.set(f, g, v);
  Id cell[2][2];
  for (Id f : {u, v})
    for (Id g : {u, v}) cell[f][g] = b.add_two_cell(b.one_cells[f].name + "~" + b.one_cells[g].name, f, g);
  b.size_tables();
  for (Id f : {u, v}) {
    b.id2_tab[f] = cell[f][f];
    b.lunitor_tab[f] = cell[v][f];
    b.lunitor_inv_tab[f] = cell[f][v];
    b.runitor_tab[f] = cell[v][f];
    b.runitor_inv_tab[f] = cell[f][v];
    for (Id g : {u, v})
      for (Id h : {u, v}) {
        b.vcomp_tab.set(cell[f][g], cell[g][h], cell[f][h]);
        b.lassoc_tab.set(f, g, h, cell[v][v]);
        b.lassoc_inv_tab.set(f, g, h, cell[v][v]);
      }
  }
  for (Id f : {u, v})
    for (Id g : {u, v})
      for (Id h : {u, v}) {
        b.lwhisker_tab.set(f, cell[g][h], cell[v][v]);
        b.rwhisker_tab.set(cell[g][h], f, cell[v][v]);
      }
  b.finalize();
  return b;
}

}  // namespace

TEST_CASE("generator tier counts") {
  Bicat d3 = discrete_bicat(3);
  CHECK(d3.size0() == 3);
  CHECK(d3.size1() == 3);
  CHECK(d3.size2() == 3);
  Bicat z2 = monoid_delooping(zmod2_named());
  CHECK(z2.size0() == 1);
  CHECK(z2.size1() == 2);
  CHECK(z2.size2() == 2);
  Bicat c2 = chaotic_bicat(2);
  CHECK(c2.size0() == 2);
  CHECK(c2.size1() == 4);
  CHECK(c2.size2() == 4);
  Bicat d2 = delta2();
  CHECK(d2.size1() == 1);
  CHECK(d2.size2() == 2);
}

TEST_CASE("non-associative monoid is rejected") {
  Monoid m;
  m.elements = {"1", "x", "y"};
  m.unit = 0;
  m.mult = {{0, 1, 2}, {1, 2, 1}, {2, 2, 2}};  // (x*x)*x = y*x = y, x*(x*x) = x*y = x
  CHECK_THROWS_AS(monoid_delooping(m), Error);
  try {
    monoid_delooping(m);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidMonoid);
  }
}

TEST_CASE("validation of the terminal presentation and its mutations") {
  Bicat t = terminal_bicat();
  CHECK(validate_presentation(t).pass());

  Bicat missing = terminal_bicat();
  missing.comp1_tab.erase(0, 0);
  missing.finalize();
  Report r = validate_presentation(missing);
  REQUIRE_FALSE(r.pass());
  CHECK(r.violations[0].law == "5:missing");
  CHECK(r.violations[0].cells == std::vector<std::string>{"i", "i"});

  // In Δ(Z/2), λ(1) pointed at the identity of s is not parallel.
  Bicat z2 = monoid_delooping(zmod2_named());
  z2.lunitor_tab[one(z2, "1")] = two(z2, "e_s");
  z2.finalize();
  Report r2 = validate_presentation(z2);
  REQUIRE_FALSE(r2.pass());
  CHECK(r2.failed_laws() == std::vector<std::string>{"10:typing"});
}

TEST_CASE("duplicate and dangling tokens") {
  json j = to_json(terminal_bicat());
  j["objects"].push_back("*");
  CHECK_THROWS_AS(bicat_from_json(j), Error);
  json k = to_json(terminal_bicat());
  k["comp1"]["i;i"] = "nope";
  try {
    bicat_from_json(k);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDanglingReference);
    CHECK(std::string(e.what()).find("comp1") != std::string::npos);
  }
  json u = to_json(terminal_bicat());
  u["extra"] = 1;
  try {
    bicat_from_json(u);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParseError);
  }
}

TEST_CASE("lawful generators pass every law family") {
  Report r = check_laws(terminal_bicat());
  CHECK(r.pass());
  for (const std::string& fam : law_families()) {
    CAPTURE(fam);
    CHECK(r.instantiations[fam] >= 1);
  }
  for (int n = 0; n <= 3; ++n) CHECK(lawful(discrete_bicat(n)));
  CHECK(lawful(chaotic_bicat(2)));
  CHECK(lawful(chaotic_bicat(3)));
  CHECK(lawful(monoid_delooping(bool_mult_monoid())));
  CHECK(lawful(monoid_delooping(zmod2_named())));
  CHECK(lawful(monoid_delooping(left_zero_monoid())));
  CHECK(lawful(delta2()));
  CHECK(lawful(weak_unit_bicat()));
  CHECK(lawful(product_bicat(monoid_delooping(zmod2_named()), delta2())));
}

TEST_CASE("wrong associator in the delooping of Z/2 is caught") {
  Bicat z2 = monoid_delooping(zmod2_named());
  Id s = one(z2, "s");
  z2.lassoc_tab.set(s, s, s, two(z2, "e_1"));
  z2.finalize();
  Report v = validate_presentation(z2);
  REQUIRE_FALSE(v.pass());
  CHECK(v.violations[0].law == "12:typing");
  CHECK(v.violations[0].cells == std::vector<std::string>{"s", "s", "s"});
  Report l = check_laws(z2);
  auto laws = l.failed_laws();
  CHECK(std::find(laws.begin(), laws.end(), "24") != laws.end());
  bool named = false;
  for (const Violation& x : l.violations) {
    if (x.law == "22" && x.cells == std::vector<std::string>{"s", "s", "s"}) named = true;
  }
  CHECK(named);
}

TEST_CASE("hom categories") {
  FiniteCategory t = hom_category(terminal_bicat(), 0, 0);
  CHECK(t.size0() == 1);
  CHECK(t.size1() == 1);
  CHECK(validate_category(t).pass());

  FiniteCategory b = hom_category(monoid_delooping(bool_mult_monoid()), 0, 0);
  CHECK(b.size0() == 2);
  CHECK(b.size1() == 2);
  CHECK(validate_category(b).pass());

  FiniteCategory d = hom_category(delta2(), 0, 0);
  CHECK(d.size0() == 1);
  CHECK(d.size1() == 2);
  Id tt = d.find_morphism("t");
  CHECK(d.comp(tt, tt) == d.find_morphism("e"));

  CHECK_THROWS_AS(hom_category(terminal_bicat(), 0, 3), Error);
}

TEST_CASE("op construction") {
  Bicat t = terminal_bicat();
  CHECK(op_bicat(t).same_tables(t));
  for (const Bicat& p : {chaotic_bicat(2), delta2(), monoid_delooping(left_zero_monoid()),
                         weak_unit_bicat(), product_bicat(monoid_delooping(zmod2_named()), delta2())}) {
    Bicat o = op_bicat(p);
    CHECK(lawful(o));
    CHECK(op_bicat(o).same_tables(p));
  }
  Monoid lz = left_zero_monoid();
  CHECK(op_bicat(monoid_delooping(lz)).same_tables(monoid_delooping(opposite_monoid(lz))));
  // In the op of the left-zero monoid a·b = b.
  Bicat o = op_bicat(monoid_delooping(lz));
  CHECK(o.comp(one(o, "a"), one(o, "b")) == one(o, "b"));
}

TEST_CASE("invertible 2-cells") {
  Bicat t = terminal_bicat();
  auto a = invertible_2cells(t, 0, 0);
  REQUIRE(a.size() == 1);
  CHECK(t.name2(a[0].theta) == "e");

  Bicat d = delta2();
  auto b = invertible_2cells(d, 0, 0);
  REQUIRE(b.size() == 2);
  CHECK(d.name2(b[0].theta) == "e");
  CHECK(d.name2(b[1].theta) == "t");
  CHECK(b[1].theta_inv == b[1].theta);

  Bicat z2 = monoid_delooping(zmod2_named());
  CHECK(invertible_2cells(z2, one(z2, "1"), one(z2, "s")).empty());

  Bicat c = chaotic_bicat(2);
  CHECK_THROWS_AS(invertible_2cells(c, one(c, "a>a"), one(c, "a>b")), Error);
}

TEST_CASE("adjoint equivalences") {
  Bicat t = terminal_bicat();
  auto a = adjoint_equivalences(t, 0, 0);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == identity_adjequiv(t, 0));

  Bicat z2 = monoid_delooping(zmod2_named());
  auto b = adjoint_equivalences(z2, 0, 0);
  REQUIRE(b.size() == 2);
  CHECK(z2.name1(b[0].f) == "1");
  CHECK(z2.name1(b[1].f) == "s");

  Bicat c = chaotic_bicat(2);
  CHECK(adjoint_equivalences(c, c.find0("a"), c.find0("b")).size() == 1);

  // Every result re-checks, and identities are always present.
  for (const Bicat& p : {t, z2, c, delta2(), weak_unit_bicat(), monoid_delooping(bool_mult_monoid())}) {
    for (Id x = 0; x < Id(p.size0()); ++x) {
      for (Id y = 0; y < Id(p.size0()); ++y) {
        auto es = adjoint_equivalences(p, x, y);
        for (const AdjEquiv& e : es) CHECK(is_adjoint_equivalence(p, e));
        if (x == y) {
          CHECK(std::find(es.begin(), es.end(), identity_adjequiv(p, x)) != es.end());
        }
      }
    }
  }

  Budget tiny(1);
  CHECK_THROWS_AS(adjoint_equivalences(z2, 0, 0, tiny), Error);
}

TEST_CASE("inverses are unique") {
  for (const Bicat& p : {delta2(), weak_unit_bicat(), product_bicat(delta2(), delta2())}) {
    for (Id t = 0; t < Id(p.size2()); ++t) {
      int count = 0;
      for (Id u : p.hom2(p.tgt2(t), p.src2(t))) {
        if (p.vcomp(t, u) == p.id2(p.src2(t)) && p.vcomp(u, t) == p.id2(p.tgt2(t))) ++count;
      }
      CHECK(count <= 1);
    }
  }
}

TEST_CASE("biinitial objects") {
  CHECK(is_biinitial(terminal_bicat(), 0).biinitial);
  Bicat d2 = discrete_bicat(2);
  BiinitialReport r = is_biinitial(d2, 0);
  CHECK_FALSE(r.biinitial);
  CHECK(r.failing == std::vector<Id>{1});
  Bicat c2 = chaotic_bicat(2);
  CHECK(is_biinitial(c2, 0).biinitial);
  CHECK(is_biinitial(c2, 1).biinitial);
}

TEST_CASE("strictness") {
  CHECK(check_strict(monoid_delooping(zmod2_named())).one_strict);
  CHECK(check_strict(monoid_delooping(left_zero_monoid())).one_strict);
  StrictReport w = check_strict(weak_unit_bicat());
  CHECK(w.locally_strict);
  CHECK_FALSE(w.one_strict);
  Bicat wb = weak_unit_bicat();
  CHECK(wb.lu(one(wb, "u")) != wb.id2(one(wb, "u")));
  CHECK(wb.is_invertible(wb.lu(one(wb, "u"))));
  CHECK_THROWS_AS(strict_to_two_cat(wb), Error);

  TwoCat c = strict_to_two_cat(monoid_delooping(bool_mult_monoid()));
  CHECK(c.objects.size() == 1);
  CHECK(c.one_cells.size() == 2);
  CHECK(c.two_cells.size() == 2);
  CHECK(check_two_cat(c).pass());
}

TEST_CASE("json round trip") {
  for (const Bicat& p : {terminal_bicat(), chaotic_bicat(2), delta2(), weak_unit_bicat()}) {
    json j = to_json(p);
    Bicat q = bicat_from_json(j);
    CHECK(q.same_tables(p));
    CHECK(to_json(q) == j);
  }
  Bicat empty;
  empty.finalize();
  CHECK(lawful(empty));
  CHECK(bicat_from_json(to_json(empty)).size0() == 0);
}
