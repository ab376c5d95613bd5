// Representables, the Yoneda check and full images.

#include <doctest.h>

#include <algorithm>
#include <set>

#include "bikernel/catinst.hpp"
#include "bikernel/generators.hpp"
#include "bikernel/univalence.hpp"
#include "bikernel/yoneda.hpp"

using namespace bikernel;

namespace {

std::vector<BicatPtr> locally_univalent_corpus() {
  return {share(terminal_bicat()),
          share(discrete_bicat(2)),
          share(chaotic_bicat(2)),
          share(monoid_delooping(bool_mult_monoid())),
          share(monoid_delooping(zmod2_named())),
          share(monoid_delooping(left_zero_monoid())),
          fincat_fragment({poset_category(2)}).bicat};
}

// Constant at c: every functor, transformation and structure cell is an
// identity.
CatValuedPsfunctor constant_at(BicatPtr b, const FiniteCategory& c) {
  CatValuedPsfunctor p;
  p.base = b;
  p.op = share(op_bicat(*b));
  const Functor id = identity_functor(c);
  const NatTrans one = identity_nat(c, c, id);
  p.cat.assign(b->size0(), c);
  p.one.assign(b->size1(), id);
  p.two.assign(b->size2(), one);
  p.identitor.assign(b->size0(), one);
  for (const auto& [f, g, v] : p.op->comp1_tab.entries()) {
    (void)v;
    p.compositor[{f, g}] = one;
  }
  return p;
}

}  // namespace

TEST_CASE("representable over the terminal bicategory") {
  BicatPtr b = share(terminal_bicat());
  CatValuedPsfunctor y = representable0(b, 0);
  CHECK(check_cat_psfunctor(y).pass());
  REQUIRE(y.cat.size() == 1);
  CHECK(y.cat[0].size0() == 1);
  CHECK(y.cat[0].size1() == 1);
}

TEST_CASE("representable over the delooping of ({0,1}, ·)") {
  const Monoid m = bool_mult_monoid();
  BicatPtr b = share(monoid_delooping(m));
  CatValuedPsfunctor y = representable0(b, 0);
  CHECK(check_cat_psfunctor(y).pass());
  const FiniteCategory& c = y.cat[0];
  CHECK(c.size0() == 2);
  CHECK(c.size1() == 2);
  // Oracle from the multiplication table: the functor of x sends g to x*g.
  for (Id x = 0; x < Id(m.elements.size()); ++x) {
    const Id f = b->find1(m.elements[x]);
    REQUIRE(f != kNone);
    for (Id g = 0; g < Id(m.elements.size()); ++g) {
      const Id local = c.find_object(m.elements[g]);
      REQUIRE(local != kNone);
      CHECK(c.objects[y.one[f].obj[local]] == m.elements[m.mult[x][g]]);
    }
  }
}

TEST_CASE("representables satisfy the semantic laws") {
  for (const BicatPtr& bp : locally_univalent_corpus()) {
    const Bicat& B = *bp;
    for (Id a = 0; a < Id(B.size0()); ++a) {
      CHECK(check_cat_psfunctor(representable0(bp, a)).pass());
    }
    for (Id f = 0; f < Id(B.size1()); ++f) {
      const CatValuedPsfunctor ya = representable0(bp, B.src1(f));
      const CatValuedPsfunctor yb = representable0(bp, B.tgt1(f));
      const Report r = check_cat_pstrans(ya, yb, representable1(B, f));
      CHECK_MESSAGE(r.pass(), B.name1(f));
    }
    for (Id t = 0; t < Id(B.size2()); ++t) {
      const Id f = B.src2(t), g = B.tgt2(t);
      const CatValuedPsfunctor ya = representable0(bp, B.src1(f));
      const CatValuedPsfunctor yb = representable0(bp, B.tgt1(f));
      CHECK(check_cat_modification(ya, yb, representable1(B, f), representable1(B, g),
                                   representable2(B, t))
                .pass());
    }
    // Rep2 of an identity is the identity modification.
    for (Id f = 0; f < Id(B.size1()); ++f) {
      const CatValuedPsfunctor ya = representable0(bp, B.src1(f));
      const CatValuedPsfunctor yb = representable0(bp, B.tgt1(f));
      const CatPstrans t = representable1(B, f);
      const CatModification m = representable2(B, B.id2(f));
      for (Id c = 0; c < Id(B.size0()); ++c) {
        CHECK(m.component[c] == identity_nat(ya.cat[c], yb.cat[c], t.component[c]));
      }
    }
  }
}

TEST_CASE("representables need local univalence") {
  CHECK_THROWS_AS(representable0(share(delta2()), 0), Error);
  try {
    representable0(share(delta2()), 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPreconditionFailed);
  }
}

TEST_CASE("a broken presheaf is rejected") {
  BicatPtr b = share(monoid_delooping(bool_mult_monoid()));
  CatValuedPsfunctor y = representable0(b, 0);
  // Make the functor of 0 the identity: composition is no longer preserved.
  const Id zero = b->find1("0");
  y.one[zero] = identity_functor(y.cat[0]);
  const Report r = check_cat_psfunctor(y);
  CHECK_FALSE(r.pass());
  y = representable0(b, 0);
  y.identitor[0].component[0] = kNone;
  CHECK(check_cat_psfunctor(y).failed_laws() == std::vector<std::string>{"catpsfun:typing"});
}

TEST_CASE("yoneda over the terminal bicategory") {
  BicatPtr b = share(terminal_bicat());
  YonedaCheck y = yoneda_check(b, representable0(b, 0), 0);
  CHECK(y.pass());
  CHECK(y.pstrans_cat.size0() == 1);
  CHECK(y.pstrans_cat.size1() == 1);
  CHECK(compose_functors(y.f, y.g) == identity_functor(y.pstrans_cat));
}

TEST_CASE("yoneda over the delooping of ({0,1}, ·)") {
  BicatPtr b = share(monoid_delooping(bool_mult_monoid()));
  CatValuedPsfunctor p = representable0(b, 0);
  YonedaCheck y = yoneda_check(b, p, 0);
  CHECK(y.pass());
  CHECK(y.pstrans_cat.size0() == 2);
  // Oracle: a transformation of y(*) is fixed by z = τ(1) with τ(g) = g*z,
  // and every z works since the monoid is commutative.
  const FiniteCategory& c = p.cat[0];
  std::set<Id> hit;
  for (Id i = 0; i < Id(y.objects.size()); ++i) {
    const Id z = y.f.obj[i];
    hit.insert(z);
    for (Id g = 0; g < Id(c.size0()); ++g) {
      const Id gz = p.one[b->find1(c.objects[g])].obj[z];
      CHECK(y.objects[i].component[0].obj[g] == gz);
    }
  }
  CHECK(hit.size() == 2);
}

TEST_CASE("yoneda on representables across the corpus") {
  for (const BicatPtr& bp : locally_univalent_corpus()) {
    for (Id a = 0; a < Id(bp->size0()); ++a) {
      for (Id c = 0; c < Id(bp->size0()); ++c) {
        YonedaCheck y = yoneda_check(bp, representable0(bp, c), a);
        CHECK_MESSAGE(y.pass(), (bp->name0(a) + " " + bp->name0(c)));
        // Independent count: Pstrans(y(a), y(c)) is equivalent to B(a, c),
        // and with a gaunt target both are skeletal.
        CHECK(is_equivalence(y.pstrans_cat, representable0(bp, c).cat[a], y.f));
      }
    }
  }
}

TEST_CASE("yoneda on constant presheaves") {
  for (const BicatPtr& bp : locally_univalent_corpus()) {
    for (const FiniteCategory& c : {terminal_category(), discrete_category(2), poset_category(2),
                                    chaotic_category(2)}) {
      CatValuedPsfunctor p = constant_at(bp, c);
      REQUIRE(check_cat_psfunctor(p).pass());
      for (Id a = 0; a < Id(bp->size0()); ++a) {
        YonedaCheck y = yoneda_check(bp, p, a);
        CHECK(y.pass());
      }
    }
  }
}

TEST_CASE("the yoneda embedding is a local equivalence") {
  for (const BicatPtr& bp : locally_univalent_corpus()) {
    for (Id a = 0; a < Id(bp->size0()); ++a) {
      for (Id c = 0; c < Id(bp->size0()); ++c) {
        Budget budget;
        YonedaHom h = yoneda_hom(bp, a, c, budget);
        CHECK(h.equivalence);
        CHECK(h.target.cat.size0() == h.hom.cat.size0());
      }
    }
  }
}

TEST_CASE("full image and restriction") {
  BicatPtr d2 = share(discrete_bicat(2));
  FullImage whole = full_image(id_psfunctor(d2));
  CHECK(whole.bicat->size0() == 2);
  CHECK(whole.bicat->size1() == d2->size1());
  CHECK(whole.bicat->size2() == d2->size2());

  BicatPtr d1 = share(discrete_bicat(1));
  for (const Psfunctor& f : enumerate_psfunctors(d1, d2)) {
    FullImage im = full_image(f);
    CHECK(im.bicat->size0() == 1);
    CHECK(im.bicat->size1() == 1);
    CHECK(im.bicat->size2() == 1);
  }

  std::size_t tried = 0;
  for (const BicatPtr& src : locally_univalent_corpus()) {
    for (const BicatPtr& tgt : locally_univalent_corpus()) {
      if (src->size1() > 3 || tgt->size1() > 3) continue;
      const bool univalent = check_univalent(*tgt).pass();
      for (const Psfunctor& f : enumerate_psfunctors(src, tgt)) {
        ++tried;
        FullImage im = full_image(f);
        const Psfunctor r = restrict_psfunctor(f, im);
        CHECK(check_psfunctor(r).pass());
        CHECK(is_essentially_surjective(r));
        CHECK(check_laws(*im.bicat).pass());
        if (univalent) CHECK(check_univalent(*im.bicat).pass());
      }
    }
  }
  CHECK(tried > 20);
}
