// Categories as a bicategory, Kleisli triples, pointed groupoids, presheaves
// and categories with families.

#include <doctest.h>

#include <algorithm>
#include <set>

#include "bikernel/catinst.hpp"
#include "bikernel/generators.hpp"
#include "bikernel/univalence.hpp"

using namespace bikernel;

namespace {

FiniteCategory renamed(FiniteCategory c, const std::string& name) {
  c.name = name;
  return c;
}

// Z/2 as a one-object groupoid.
FiniteCategory z2_groupoid() {
  FiniteCategory c;
  c.name = "BZ2";
  const Id x = c.add_object("*");
  const Id e = c.add_morphism("e", x, x);
  const Id s = c.add_morphism("s", x, x);
  c.identity[x] = e;
  c.compose.set(e, e, e);
  c.compose.set(e, s, s);
  c.compose.set(s, e, s);
  c.compose.set(s, s, e);
  c.index();
  return c;
}

// Monotone, inflationary, idempotent maps on the chain: the closure
// operators, which are the monads on a poset.
std::size_t closure_operators(const FiniteCategory& p) {
  const Id n = Id(p.size0());
  std::size_t count = 0;
  std::vector<Id> m(n, 0);
  auto le = [&](Id a, Id b) { return !p.hom(a, b).empty(); };
  while (true) {
    bool ok = true;
    for (Id a = 0; a < n; ++a) {
      ok = ok && le(a, m[a]) && m[m[a]] == m[a];
      for (Id b = 0; b < n; ++b) ok = ok && (!le(a, b) || le(m[a], m[b]));
    }
    count += ok;
    Id k = n;
    while (k > 0 && ++m[k - 1] == n) m[--k] = 0;
    if (k == 0) break;
  }
  return count;
}

}  // namespace

TEST_CASE("fragment bicategories") {
  Fragment one = fincat_fragment({terminal_category()});
  CHECK(one.bicat->size0() == 1);
  CHECK(one.bicat->size1() == 1);
  CHECK(one.bicat->size2() == 1);
  CHECK(check_laws(*one.bicat).pass());

  Fragment p2 = fincat_fragment({poset_category(2)});
  const Bicat& P = *p2.bicat;
  CHECK(check_laws(P).pass());
  CHECK(check_strict(P).one_strict);
  CHECK(P.size1() == 3);
  // Pointwise order on the three monotone maps: 00 <= 01 <= 11.
  std::size_t le = 0;
  for (Id f = 0; f < 3; ++f)
    for (Id g = 0; g < 3; ++g) {
      bool pointwise = true;
      for (Id x = 0; x < 2; ++x) pointwise = pointwise && p2.functors[f].obj[x] <= p2.functors[g].obj[x];
      le += pointwise;
      CHECK(P.hom2(f, g).size() == std::size_t(pointwise));
    }
  CHECK(P.size2() == le);
  CHECK(le == 6);

  Fragment d2 = fincat_fragment({discrete_category(2)});
  CHECK(adjoint_equivalences(*d2.bicat, 0, 0).size() == 2);

  CHECK_THROWS_AS(fincat_fragment({terminal_category(), terminal_category()}), Error);
}

TEST_CASE("invertible 2-cells are natural isomorphisms and equivalences match") {
  const std::vector<std::vector<FiniteCategory>> frags = {
      {terminal_category(), chaotic_category(2)},
      {discrete_category(2), poset_category(2)},
      {z2_groupoid(), terminal_category()},
  };
  for (const auto& cats : frags) {
    Fragment fr = fincat_fragment(cats);
    const Bicat& B = *fr.bicat;
    REQUIRE(check_laws(B).pass());
    for (Id t = 0; t < Id(B.size2()); ++t) {
      const FiniteCategory& d = fr.cat(B.tgt1(B.src2(t)));
      CHECK(B.is_invertible(t) == invert_nat(d, fr.nats[t]).has_value());
    }
    for (Id a = 0; a < Id(B.size0()); ++a) {
      for (Id b = 0; b < Id(B.size0()); ++b) {
        std::set<Id> left;
        for (const AdjEquiv& e : adjoint_equivalences(B, a, b)) left.insert(e.f);
        std::set<Id> direct;
        for (Id f : B.hom1(a, b)) {
          if (is_equivalence(fr.cat(a), fr.cat(b), fr.functors[f])) direct.insert(f);
        }
        CHECK(left == direct);
      }
    }
  }
}

TEST_CASE("gaunt categories") {
  CHECK(is_gaunt(poset_category(2)));
  CHECK_FALSE(is_gaunt(chaotic_category(2)));
  CHECK(is_gaunt(terminal_category()));
}

TEST_CASE("univalence of fragments") {
  // Oracle: gaunt members, no equivalence between distinct members and no
  // automorphism other than the identity.
  auto expected = [](const std::vector<FiniteCategory>& cats) {
    Budget budget;
    for (const FiniteCategory& c : cats) {
      if (!is_gaunt(c)) return false;
    }
    for (std::size_t i = 0; i < cats.size(); ++i) {
      for (std::size_t j = 0; j < cats.size(); ++j) {
        for (const Functor& f : enumerate_functors(cats[i], cats[j], budget)) {
          if (!is_equivalence(cats[i], cats[j], f)) continue;
          if (i != j || !(f == identity_functor(cats[i]))) return false;
        }
      }
    }
    return true;
  };
  const std::vector<std::vector<FiniteCategory>> frags = {
      {terminal_category()},
      {poset_category(2)},
      {empty_category(), terminal_category(), poset_category(2)},
      {poset_category(3)},
      {discrete_category(2)},
      {terminal_category(), renamed(terminal_category(), "1'")},
      {chaotic_category(2)},
      {z2_groupoid()},
      {chaotic_category(2), terminal_category()},
  };
  for (const auto& cats : frags) {
    Fragment fr = fincat_fragment(cats);
    CHECK(check_univalent(*fr.bicat).pass() == expected(cats));
  }
}

TEST_CASE("the empty category is biinitial") {
  Fragment fr = fincat_fragment({empty_category(), terminal_category(), poset_category(2)});
  const Id e = fr.object("0");
  CHECK(is_biinitial(*fr.bicat, e).biinitial);
  CHECK_FALSE(is_biinitial(*fr.bicat, fr.object("1")).biinitial);
}

TEST_CASE("Kleisli triples") {
  Budget budget;
  CHECK(enumerate_kleisli(terminal_category(), budget).size() == 1);
  for (int n : {2, 3}) {
    const FiniteCategory p = poset_category(n);
    CHECK(enumerate_kleisli(p, budget).size() == closure_operators(p));
  }
  CHECK(enumerate_kleisli(poset_category(2), budget).size() == 2);

  // A broken unit.
  const FiniteCategory p = poset_category(2);
  KleisliTriple t = enumerate_kleisli(p, budget).at(0);
  REQUIRE(check_kleisli(p, t).pass());
  for (auto& [key, s] : t.star) {
    if (key.second == t.eta[key.first]) s = kNone;
  }
  CHECK_FALSE(check_kleisli(p, t).pass());
}

TEST_CASE("Kleisli displayed bicategory") {
  Fragment p2 = fincat_fragment({poset_category(2)});
  KleisliDisp k = kleisli_disp(p2);
  CHECK(check_disp_laws(*k.disp).pass());
  CHECK(k.disp->fiber0(0).size() == 2);
  CHECK(is_locally_propositional(*k.disp));
  CHECK(kleisli_disp(fincat_fragment({terminal_category()})).disp->total.size0() == 1);
  for (Id x = 0; x < Id(k.disp->total.size0()); ++x) CHECK(check_kleisli(p2.cat(0), k.objects[x]).pass());
}

TEST_CASE("monads in the fragment of the chain") {
  Fragment p2 = fincat_fragment({poset_category(2)});
  Bicat m = monad_bicat(p2.bicat);
  CHECK(m.size0() == 2);
  CHECK(m.size0() == closure_operators(poset_category(2)));
  CHECK(enumerate_monads(*p2.bicat).size() == 2);
}

TEST_CASE("monads and Kleisli triples are biequivalent") {
  for (const auto& cats : std::vector<std::vector<FiniteCategory>>{
           {terminal_category()}, {poset_category(2)}, {terminal_category(), poset_category(2)},
           {discrete_category(2)}, {chaotic_category(2)}, {z2_groupoid()}}) {
    Fragment fr = fincat_fragment(cats);
    MonadKleisli mk = monad_kleisli_biequiv(fr);
    const DispBiequivalence& q = mk.biequivalence;
    CHECK(check_disp_biequivalence(q).pass());
    Biequivalence tot = total_biequivalence(q);
    CHECK(check_biequivalence(tot).pass());
    const std::size_t n = mk.monads.bicat.size0();
    CHECK(n == mk.kleisli.disp->total.size0());
    for (Id x = 0; x < Id(n); ++x) {
      CHECK(mk.to_monad[mk.to_kleisli[x]] == x);
      CHECK(mk.to_kleisli[mk.to_monad[x]] == x);
      CHECK(tot.l.obj(x) == mk.to_kleisli[x]);
    }
    CHECK(mk.monads.bicat.size1() == mk.kleisli.disp->total.size1());
    CHECK(mk.monads.bicat.size2() == mk.kleisli.disp->total.size2());
  }
}

TEST_CASE("pointed groupoids") {
  Fragment fr = fincat_fragment({terminal_category(), discrete_category(2), z2_groupoid()});
  DispBicat d = pointed_groupoid_disp(fr);
  CHECK(check_disp_laws(d).pass());
  CHECK(d.fiber0(fr.object("D2")).size() == 2);
  CHECK(d.fiber0(fr.object("1")).size() == 1);

  // Agreement with algebras for the constant pseudofunctor at the terminal
  // category, fiber by fiber.
  const Psfunctor k = constant_psfunctor(fr.bicat, fr.bicat, fr.object("1"));
  REQUIRE(check_psfunctor(k).pass());
  DispBicat alg = alg_disp(k);
  const Bicat& B = *fr.bicat;
  for (Id a = 0; a < Id(B.size0()); ++a) CHECK(d.fiber0(a).size() == alg.fiber0(a).size());
  auto count1 = [](const DispBicat& x, Id f) {
    return std::count(x.over1.begin(), x.over1.end(), f);
  };
  auto count2 = [](const DispBicat& x, Id t) {
    return std::count(x.over2.begin(), x.over2.end(), t);
  };
  for (Id f = 0; f < Id(B.size1()); ++f) CHECK(count1(d, f) == count1(alg, f));
  for (Id t = 0; t < Id(B.size2()); ++t) CHECK(count2(d, t) == count2(alg, t));

  CHECK_THROWS_AS(pointed_groupoid_disp(fincat_fragment({poset_category(2)})), Error);

  // Displayed univalence holds exactly when every groupoid is gaunt.
  for (const FiniteCategory& g : {terminal_category(), discrete_category(2), z2_groupoid(), chaotic_category(2)}) {
    Fragment f1 = fincat_fragment({g});
    CHECK(check_disp_univalence(pointed_groupoid_disp(f1)).pass() == is_gaunt(g));
  }
}

TEST_CASE("presheaves") {
  Budget budget;
  // On the terminal category a presheaf is a set.
  CHECK(enumerate_presheaves(terminal_category(), 2, budget).size() == 3);
  // On 0 <= 1: sizes (a, b) and any map b -> a.
  for (int bound : {1, 2, 3}) {
    std::size_t expected = 0;
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; b <= bound; ++b) {
        std::size_t maps = 1;
        for (int i = 0; i < b; ++i) maps *= a;
        expected += maps;
      }
    CHECK(enumerate_presheaves(poset_category(2), bound, budget).size() == expected);
  }

  Fragment fr = fincat_fragment({terminal_category(), poset_category(2)});
  PresheafDisp d = presheaf_disp(fr, 1, budget);
  CHECK(check_disp_laws(*d.disp).pass());
  CHECK(is_locally_propositional(*d.disp));
  for (Id u = 0; u < Id(d.disp->total.size1()); ++u) {
    const Id f = d.disp->over1[u];
    const Bicat& B = *fr.bicat;
    CHECK(is_presheaf_map(fr.cat(B.src1(f)), fr.cat(B.tgt1(f)), fr.functors[f],
                          d.objects[d.disp->total.src1(u)], d.objects[d.disp->total.tgt1(u)], d.one_cells[u]));
  }
}

TEST_CASE("representations") {
  const FiniteCategory one = terminal_category();
  Presheaf ty{{1}, {{0}}};
  Presheaf tm{{1}, {{0}}};
  CwfRepresentation r = check_cwf_representation(one, ty, tm, {{0}});
  CHECK(r.ok);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].ext == 0);
  CHECK(r.witnesses[0].pi == one.id(0));

  Presheaf empty{{0}, {{}}};
  CwfRepresentation e = check_cwf_representation(one, ty, empty, {{}});
  CHECK_FALSE(e.ok);
  CHECK(e.missing.size() == 1);

  // Two terms over one type: the factorisation is not unique.
  Presheaf two{{2}, {{0, 1}}};
  CHECK_FALSE(check_cwf_representation(one, ty, two, {{0, 0}}).ok);
  // No types: vacuous.
  CHECK(check_cwf_representation(one, empty, empty, {{}}).ok);
}

TEST_CASE("categories with families") {
  CwfTower small = cwf_tower(fincat_fragment({poset_category(2)}), 1);
  for (const DispPtr& d : {small.pshd.disp, small.pair, small.p, small.cwf2, small.is_cwf, small.cwf}) {
    CHECK(check_disp_laws(*d).pass());
  }
  CHECK(check_laws(small.bicat).pass());

  Fragment fr = fincat_fragment({terminal_category()});
  CwfTower t = cwf_tower(fr, 2);
  CHECK(check_laws(t.bicat).pass());
  // Over a point, a CwF is a bijection p : Tm -> Ty.
  CHECK(t.bicat.size0() == 1 + 1 + 2);
  for (const CwfData& d : t.objects) {
    CHECK(d.ty.size == d.tm.size);
    CHECK(check_cwf_representation(fr.cat(d.category), d.ty, d.tm, d.p).ok);
  }

  // With values of size at most one the sets involved have no automorphisms.
  for (const auto& cats : std::vector<std::vector<FiniteCategory>>{
           {terminal_category()}, {poset_category(2)}, {empty_category(), terminal_category()}}) {
    Fragment f = fincat_fragment(cats);
    REQUIRE(check_univalent(*f.bicat).pass());
    CHECK(check_univalent(cwf_bicat(f, 1)).pass());
  }
  // Two-element sets have a swap, which is an equivalence other than the identity.
  CHECK_FALSE(check_univalent(t.bicat).pass());
}

TEST_CASE("cwf_bicat univalence needs presheaf values of size at most one") {
  Fragment fr = fincat_fragment({terminal_category()});
  CHECK(check_univalent(cwf_bicat(fr, 1)).pass());
  // With bound 2 the two bijections of a 2-element set are distinct but
  // equivalent objects, swapped by the non-identity automorphism.
  const UnivalenceReport r = check_univalent(cwf_bicat(fr, 2));
  CHECK(r.local_pass());
  CHECK(r.global.size() == 4);
  for (const UnivalenceWitness& w : r.global) CHECK(w.count == 2);
}
