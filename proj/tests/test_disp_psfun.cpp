// Displayed pseudofunctors, transformations, invertible modifications and
// displayed biequivalences.

#include <doctest.h>

#include "bikernel/disp_psfun.hpp"
#include "bikernel/generators.hpp"

using namespace bikernel;

namespace {

DispPtr chaotic_group_over_terminal(const Monoid& m) {
  ChaoticData c;
  c.d0["*"] = {"x"};
  for (const std::string& e : m.elements) c.d1.push_back({"i", e, "x", "x"});
  c.id[{"*", "x"}] = m.elements[m.unit];
  for (std::size_t a = 0; a < m.elements.size(); ++a)
    for (std::size_t b = 0; b < m.elements.size(); ++b)
      c.comp[{"i", m.elements[a], "i", m.elements[b]}] = m.elements[m.mult[a][b]];
  return share(chaotic_disp(share(terminal_bicat()), c));
}

std::vector<DispPtr> corpus() {
  BicatPtr c2 = share(chaotic_bicat(2));
  return {share(fullsub_disp(share(terminal_bicat()), [](Id) { return true; })),
          share(fullsub_disp(c2, std::vector<std::string>{"a"})),
          share(fullsub_disp(c2, [](Id) { return true; })),
          share(trivial_disp(share(discrete_bicat(2)), delta2())),
          share(trivial_disp(share(terminal_bicat()), idempotent_bicat())),
          chaotic_group_over_terminal(zmod2_named()),
          chaotic_group_over_terminal(bool_mult_monoid())};
}

// The swap of Chaotic2 lifted to the full sub on both objects.
DispPsfunctor swap_over_fullsub(const DispPtr& d) {
  const Bicat& C = *d->base;
  Psfunctor F;
  F.src = F.tgt = d->base;
  F.f0 = {1, 0};
  for (Id f = 0; f < Id(C.size1()); ++f) F.f1.push_back(C.hom1(F.f0[C.src1(f)], F.f0[C.tgt1(f)]).at(0));
  for (Id t = 0; t < Id(C.size2()); ++t) F.f2.push_back(C.hom2(F.f1[C.src2(t)], F.f1[C.tgt2(t)]).at(0));
  for (Id a = 0; a < 2; ++a) F.identitor.push_back(C.id2(C.id1(F.f0[a])));
  for (const auto& [f, g, fg] : C.comp1_tab.entries()) F.compositor.set(f, g, C.id2(F.f1[fg]));
  // Fibers are singletons, so the displayed data is forced.
  const DispBicat& D = *d;
  Psfunctor T;
  T.src = T.tgt = total_ptr(d);
  for (Id x = 0; x < Id(D.total.size0()); ++x) T.f0.push_back(D.fiber0(F.obj(D.over0[x])).at(0));
  for (Id u = 0; u < Id(D.total.size1()); ++u) {
    T.f1.push_back(D.fiber1(F.one(D.over1[u]), T.f0[D.total.src1(u)], T.f0[D.total.tgt1(u)]).at(0));
  }
  for (Id m = 0; m < Id(D.total.size2()); ++m) {
    T.f2.push_back(D.fiber2(F.two(D.over2[m]), T.f1[D.total.src2(m)], T.f1[D.total.tgt2(m)]).at(0));
  }
  for (Id x = 0; x < Id(D.total.size0()); ++x) T.identitor.push_back(D.total.id2(D.total.id1(T.f0[x])));
  for (const auto& [u, v, uv] : D.total.comp1_tab.entries()) T.compositor.set(u, v, D.total.id2(T.f1[uv]));
  return disp_over(T, F, d, d);
}

}  // namespace

TEST_CASE("displayed identities and composites") {
  for (const DispPtr& d : corpus()) {
    DispPsfunctor id = disp_id_psfunctor(d);
    CHECK(check_disp_psfunctor(id).pass());
    CHECK(disp_comp_psfunctor(id, id) == id);
    DispPstrans t = disp_id_pstrans(id);
    CHECK(check_disp_pstrans(t).pass());
    CHECK(check_disp_pstrans(disp_comp_pstrans(t, t)).pass());
    CHECK(check_disp_invmodification(disp_id_invmodification(t)).pass());
    CHECK(total_psfunctor(id) == id_psfunctor(total_ptr(d)));
  }
}

TEST_CASE("displayed swap over the full sub of Chaotic2") {
  DispPtr d = share(fullsub_disp(share(chaotic_bicat(2)), [](Id) { return true; }));
  DispPsfunctor s = swap_over_fullsub(d);
  CHECK(check_disp_psfunctor(s).pass());
  DispPsfunctor ss = disp_comp_psfunctor(s, s);
  CHECK(check_disp_psfunctor(ss).pass());
  CHECK(ss == disp_id_psfunctor(d));
  CHECK(total_psfunctor(ss) == comp_psfunctor(total_psfunctor(s), total_psfunctor(s)));

  DispPstrans t = disp_id_pstrans(s);
  DispPstrans tt = disp_comp_pstrans(t, t);
  CHECK(total_pstrans(tt) == comp_pstrans(total_pstrans(t), total_pstrans(t)));
}

TEST_CASE("displayed violations") {
  DispPtr t = share(trivial_disp(share(terminal_bicat()), delta2()));
  DispPtr p = share(prod_disp(*t, *t));
  DispPsfunctor id = disp_id_psfunctor(p);
  const Bicat& T = p->total;
  const Id u = T.find1("i|(i,i)");
  REQUIRE(u != kNone);
  DispPsfunctor bad = id;
  // Same base cell, other displayed cell.
  bad.compositor.set(u, u, T.find2("e|(t,e)"));
  Report r = check_disp_psfunctor(bad);
  CHECK_FALSE(r.pass());
  for (const std::string& tag : r.failed_laws()) CHECK(tag.rfind("disp:psfun:", 0) == 0);

  // A displayed object sent into the wrong fiber.
  DispPtr d2 = share(trivial_disp(share(discrete_bicat(2)), delta2()));
  DispPsfunctor wrong = disp_id_psfunctor(d2);
  std::swap(wrong.f0[0], wrong.f0[1]);
  CHECK_THROWS_AS(check_disp_psfunctor(wrong), Error);

  CHECK_THROWS_AS(disp_comp_psfunctor(disp_id_psfunctor(t), disp_id_psfunctor(d2)), Error);
}

TEST_CASE("displayed identity biequivalence") {
  for (const DispPtr& d : corpus()) {
    DispBiequivalence q = disp_identity_biequivalence(d);
    CHECK(check_disp_biequivalence(q).pass());
    CHECK(check_biequivalence(total_biequivalence(q)).pass());
    CHECK(check_biequivalence(q.base()).pass());
    Biequivalence id = identity_biequivalence(total_ptr(d));
    Biequivalence tot = total_biequivalence(q);
    CHECK(tot.l == id.l);
    CHECK(tot.eta == id.eta);
    CHECK(tot.m4 == id.m4);
  }
}

TEST_CASE("locally propositional targets discharge modification laws") {
  DispPtr d = chaotic_group_over_terminal(zmod2_named());
  REQUIRE(is_locally_propositional(*d));
  REQUIRE(is_locally_groupoidal(*d));
  Report r = check_disp_biequivalence(disp_identity_biequivalence(d));
  CHECK(r.pass());
  for (const char* m : {"m1", "m2", "m3", "m4"}) {
    const std::string p = std::string("disp:") + m + ":modif:";
    CHECK(r.instantiations.count(p + "square") == 0);
    CHECK(r.instantiations.count(p + "invertible") == 0);
    CHECK(r.instantiations.at(p + "square:discharged") > 0);
  }

  DispPtr t = share(trivial_disp(share(terminal_bicat()), idempotent_bicat()));
  REQUIRE_FALSE(is_locally_propositional(*t));
  Report s = check_disp_biequivalence(disp_identity_biequivalence(t));
  CHECK(s.instantiations.at("disp:m1:modif:square") > 0);
}

TEST_CASE("a non-invertible displayed modification is rejected") {
  DispPtr t = share(trivial_disp(share(terminal_bicat()), idempotent_bicat()));
  DispBiequivalence q = disp_identity_biequivalence(t);
  q.m1.gamma[0] = t->total.find2("e|z");
  REQUIRE(q.m1.gamma[0] != kNone);
  CHECK(check_disp_biequivalence(q).failed_laws() == std::vector<std::string>{"disp:m1:modif:invertible"});
}
