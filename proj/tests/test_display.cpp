// Displayed bicategories: constructions, displayed laws and displayed
// univalence.

#include <doctest.h>

#include "bikernel/display.hpp"
#include "bikernel/generators.hpp"

using namespace bikernel;

namespace {

// Over 𝟙: one displayed object x whose displayed 1-cells over i are the
// elements of m, composed by m.
DispBicat chaotic_group_over_terminal(const Monoid& m) {
  BicatPtr one = share(terminal_bicat());
  ChaoticData c;
  c.d0["*"] = {"x"};
  for (const std::string& e : m.elements) c.d1.push_back({"i", e, "x", "x"});
  c.id[{"*", "x"}] = m.elements[m.unit];
  for (std::size_t a = 0; a < m.elements.size(); ++a)
    for (std::size_t b = 0; b < m.elements.size(); ++b)
      c.comp[{"i", m.elements[a], "i", m.elements[b]}] = m.elements[m.mult[a][b]];
  return chaotic_disp(one, c);
}

// Over 𝟙: displayed objects with only identity displayed 1-cells.
DispBicat chaotic_discrete_over_terminal(int n) {
  BicatPtr one = share(terminal_bicat());
  ChaoticData c;
  for (int k = 0; k < n; ++k) {
    const std::string x = object_token(k);
    c.d0["*"].push_back(x);
    c.d1.push_back({"i", "1" + x, x, x});
    c.id[{"*", x}] = "1" + x;
    c.comp[{"i", "1" + x, "i", "1" + x}] = "1" + x;
  }
  return chaotic_disp(one, c);
}

bool total_univalent(const DispBicat& d) { return check_univalent(d.total).pass(); }

}  // namespace

TEST_CASE("chaotic displayed bicategories satisfy the laws") {
  CHECK(check_disp_laws(chaotic_group_over_terminal(zmod2_named())).pass());
  CHECK(check_disp_laws(chaotic_discrete_over_terminal(2)).pass());
  DispBicat d = chaotic_discrete_over_terminal(1);
  Bicat t = total_bicat(d);
  CHECK(t.size0() == 1);
  CHECK(t.size1() == 1);
  CHECK(t.size2() == 1);
  CHECK(check_laws(t).pass());
}

TEST_CASE("chaotic closure is validated") {
  BicatPtr one = share(terminal_bicat());
  ChaoticData c;
  c.d0["*"] = {"x"};
  c.d1.push_back({"i", "u", "x", "x"});
  c.d1.push_back({"i", "v", "x", "x"});
  c.id[{"*", "x"}] = "u";
  c.comp[{"i", "u", "i", "u"}] = "u";
  c.comp[{"i", "u", "i", "v"}] = "v";
  c.comp[{"i", "v", "i", "u"}] = "v";
  try {
    chaotic_disp(one, c);
    FAIL("expected ChaoticClosureViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kChaoticClosureViolation);
  }
  c.comp[{"i", "v", "i", "v"}] = "w";
  CHECK_THROWS_AS(chaotic_disp(one, c), Error);
  c.comp[{"i", "v", "i", "v"}] = "u";
  c.id.clear();
  CHECK_THROWS_AS(chaotic_disp(one, c), Error);
}

TEST_CASE("full subbicategory as a displayed bicategory") {
  BicatPtr d2 = share(discrete_bicat(2));
  DispBicat fs = fullsub_disp(d2, std::vector<std::string>{"a"});
  CHECK(check_disp_laws(fs).pass());
  Bicat t = total_bicat(fs);
  CHECK(t.size0() == 1);
  CHECK(t.size1() == 1);
  CHECK(t.size2() == 1);
  CHECK(t.name0(0) == "a|*");
  CHECK(fs.fiber0(d2->find0("b")).empty());

  // Against the direct full subbicategory: discrete(1) up to renaming.
  Bicat d1 = discrete_bicat(1);
  CHECK(check_laws(t).pass());
  CHECK(check_univalent(t).pass() == check_univalent(d1).pass());

  // Every object of Chaotic3 except c: the total is Chaotic2 up to tokens.
  BicatPtr c3 = share(chaotic_bicat(3));
  DispBicat fs2 = fullsub_disp(c3, [&](Id a) { return c3->name0(a) != "c"; });
  Bicat c2 = chaotic_bicat(2);
  CHECK(fs2.total.size0() == c2.size0());
  CHECK(fs2.total.size1() == c2.size1());
  CHECK(fs2.total.size2() == c2.size2());
  CHECK(fs2.total.comp1_tab.size() == c2.comp1_tab.size());
}

TEST_CASE("products of displayed bicategories") {
  BicatPtr d3 = share(discrete_bicat(3));
  DispBicat p = fullsub_disp(d3, std::vector<std::string>{"a", "b"});
  DispBicat q = fullsub_disp(d3, std::vector<std::string>{"b", "c"});
  DispBicat pq = prod_disp(p, q);
  CHECK(check_disp_laws(pq).pass());
  CHECK(pq.fiber0(d3->find0("a")).empty());
  CHECK(pq.fiber0(d3->find0("b")).size() == 1);
  CHECK(pq.fiber0(d3->find0("c")).empty());
  CHECK(pq.total.name0(0) == "b|(*,*)");

  // Cell counts multiply fiberwise.
  BicatPtr one = share(terminal_bicat());
  DispBicat g = chaotic_group_over_terminal(zmod2_named());
  DispBicat h = chaotic_discrete_over_terminal(2);
  DispBicat gh = prod_disp(g, h);
  CHECK(check_disp_laws(gh).pass());
  CHECK(gh.total.size0() == g.total.size0() * h.total.size0());
  CHECK(gh.total.size1() == g.total.size1() * h.total.size1());
  CHECK(gh.total.size2() == g.total.size2() * h.total.size2());

  DispBicat other = fullsub_disp(share(discrete_bicat(3)), std::vector<std::string>{"a"});
  CHECK(prod_disp(p, other).total.size0() == 1);  // identical tables count as the same base
  CHECK_THROWS_AS(prod_disp(p, g), Error);
}

TEST_CASE("trivial displayed bicategory has the product as total") {
  BicatPtr base = share(chaotic_bicat(2));
  Bicat q = monoid_delooping(zmod2_named());
  DispBicat t = trivial_disp(base, q);
  CHECK(check_disp_laws(t).pass());
  CHECK(t.total.size0() == base->size0() * q.size0());
  CHECK(t.total.size1() == base->size1() * q.size1());
  CHECK(t.total.size2() == base->size2() * q.size2());
  Bicat prod = product_bicat(*base, q);
  CHECK(t.total.comp1_tab.size() == prod.comp1_tab.size());
  CHECK(t.total.lassoc_tab.size() == prod.lassoc_tab.size());
  CHECK(check_univalent(t.total).pass() == check_univalent(prod).pass());
}

TEST_CASE("sigma of iterated full subbicategories") {
  BicatPtr d2 = share(discrete_bicat(2));
  DispBicat first = fullsub_disp(d2, [](Id) { return true; });
  BicatPtr mid = share(first.total);
  DispBicat second = fullsub_disp(mid, std::vector<std::string>{"b|*"});
  DispBicat s = sigma_disp(first, second);
  CHECK(check_disp_laws(s).pass());
  CHECK(s.fiber0(d2->find0("a")).empty());
  REQUIRE(s.fiber0(d2->find0("b")).size() == 1);
  CHECK(s.local0[s.fiber0(d2->find0("b"))[0]] == "(*,*)");
  CHECK(s.total.name0(0) == "b|(*,*)");
  CHECK_THROWS_AS(sigma_disp(second, first), Error);
}

TEST_CASE("over-inconsistent entries are type errors") {
  BicatPtr z2 = share(monoid_delooping(zmod2_named()));
  DispBicat d = trivial_disp(z2, terminal_bicat());
  CHECK(check_disp_laws(d).pass());
  DispBicat bad = d;
  // Move the composite of the two s-cells over s instead of over 1.
  const Id s = bad.total.find1("s|i"), one = bad.total.find1("1|i");
  REQUIRE(s != kNone);
  REQUIRE(one != kNone);
  REQUIRE(bad.total.comp(s, s) == one);
  bad.total.comp1_tab.set(s, s, s);
  try {
    check_disp_laws(bad);
    FAIL("expected TypeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTypeMismatch);
  }
  Report v = validate_disp(bad);
  REQUIRE_FALSE(v.pass());
  CHECK(v.violations[0].law == "disp:5:over");
}

TEST_CASE("displayed invertible 2-cells and adjoint equivalences") {
  DispBicat g = chaotic_group_over_terminal(zmod2_named());
  const Bicat& b = *g.base;
  const Id i = b.find1("i");
  const Inv2Cell id{b.id2(i), b.id2(i)};
  for (Id u = 0; u < Id(g.total.size1()); ++u)
    for (Id v = 0; v < Id(g.total.size1()); ++v)
      CHECK(disp_invertible_2cells(g, id, u, v).size() == 1);

  BicatPtr d2 = share(discrete_bicat(2));
  DispBicat fs = fullsub_disp(d2, [](Id) { return true; });
  for (Id a = 0; a < 2; ++a) {
    const Id x = fs.fiber0(a)[0];
    std::vector<AdjEquiv> es = disp_adjoint_equivalences(fs, identity_adjequiv(*d2, a), x, x);
    REQUIRE(es.size() == 1);
    CHECK(es[0] == identity_adjequiv(fs.total, x));
  }

  // Δ₂ over 𝟙 has two invertible 2-cells on i; the product has four.
  BicatPtr one = share(terminal_bicat());
  DispBicat t = trivial_disp(one, delta2());
  DispBicat tt = prod_disp(t, t);
  const Id e = one->find2("e");
  const Id ti = t.total.find1("i|i"), tti = tt.total.find1("i|(i,i)");
  CHECK(disp_invertible_2cells(t, {e, e}, ti, ti).size() == 2);
  CHECK(disp_invertible_2cells(tt, {e, e}, tti, tti).size() == 4);
}

TEST_CASE("displayed univalence") {
  for (Bicat b : {discrete_bicat(3), monoid_delooping(bool_mult_monoid()), chaotic_bicat(2),
                  terminal_bicat()}) {
    BicatPtr p = share(std::move(b));
    DispBicat fs = fullsub_disp(p, [](Id a) { return a % 2 == 0; });
    CHECK(check_disp_univalence(fs).pass());
  }

  UnivalenceReport g = check_disp_univalence(chaotic_group_over_terminal(zmod2_named()));
  CHECK_FALSE(g.global_pass());
  REQUIRE(g.global.size() == 1);
  // Both displayed 1-cells over i, each with both choices of inverse.
  CHECK(g.global[0].count == 4);

  DispBicat h = chaotic_discrete_over_terminal(2);
  CHECK(check_disp_univalence(h).pass());
  CHECK(check_disp_univalence(prod_disp(h, h)).pass());

  BicatPtr d3 = share(discrete_bicat(3));
  DispBicat p = fullsub_disp(d3, std::vector<std::string>{"a", "b"});
  DispBicat q = fullsub_disp(d3, std::vector<std::string>{"b", "c"});
  CHECK(check_disp_univalence(prod_disp(p, q)).pass());

  // Trivial over 𝟙 with a non-univalent fiber.
  DispBicat t = trivial_disp(share(terminal_bicat()), delta2());
  CHECK_FALSE(check_disp_univalence(t).local_pass());
}

TEST_CASE("local groupoidality and propositionality") {
  DispBicat g = chaotic_group_over_terminal(zmod2_named());
  CHECK(is_locally_groupoidal(g));
  CHECK(is_locally_propositional(g));
  DispBicat fs = fullsub_disp(share(discrete_bicat(2)), [](Id) { return true; });
  CHECK(is_locally_groupoidal(fs));
  CHECK(is_locally_propositional(fs));
  DispBicat t = trivial_disp(share(terminal_bicat()), delta2());
  CHECK_FALSE(is_locally_propositional(t));
  CHECK(is_locally_groupoidal(t));
  DispBicat m = trivial_disp(share(terminal_bicat()), idempotent_bicat());
  CHECK_FALSE(is_locally_groupoidal(m));
}

TEST_CASE("total of univalent displayed over univalent base is univalent") {
  std::vector<BicatPtr> bases = {share(terminal_bicat()), share(discrete_bicat(2)),
                                 share(monoid_delooping(bool_mult_monoid())),
                                 share(monoid_delooping(left_zero_monoid()))};
  int checked = 0;
  for (const BicatPtr& b : bases) {
    std::vector<DispBicat> ds;
    ds.push_back(fullsub_disp(b, [](Id a) { return a == 0; }));
    ds.push_back(trivial_disp(b, discrete_bicat(2)));
    ds.push_back(trivial_disp(b, monoid_delooping(bool_mult_monoid())));
    ds.push_back(prod_disp(ds[0], ds[1]));
    for (const DispBicat& d : ds) {
      REQUIRE(check_disp_laws(d).pass());
      if (check_univalent(*b).pass() && check_disp_univalence(d).pass()) {
        CHECK(total_univalent(d));
        ++checked;
      }
    }
  }
  CHECK(checked >= 12);
}
