// Algebras, Add2Cell and the bicategory of internal monads.

#include <doctest.h>

#include <algorithm>

#include "bikernel/algebra.hpp"
#include "bikernel/generators.hpp"
#include "bikernel/univalence.hpp"

using namespace bikernel;

namespace {

std::vector<BicatPtr> corpus() {
  return {share(terminal_bicat()),
          share(discrete_bicat(2)),
          share(chaotic_bicat(2)),
          share(delta2()),
          share(idempotent_bicat()),
          share(monoid_delooping(bool_mult_monoid())),
          share(monoid_delooping(left_zero_monoid())),
          share(monoid_delooping(zmod2_named()))};
}

}  // namespace

TEST_CASE("algebras for the identity") {
  BicatPtr b = share(monoid_delooping(bool_mult_monoid()));
  DispBicat alg = alg_disp(id_psfunctor(b));
  CHECK(check_disp_laws(alg).pass());
  std::vector<std::string> tokens;
  for (Id x : alg.fiber0(0)) tokens.push_back(alg.local0[x]);
  std::sort(tokens.begin(), tokens.end());
  CHECK(tokens == std::vector<std::string>{"0", "1"});
  for (Id x : alg.fiber0(0)) CHECK(b->name1(alg_structure(alg, x)) == alg.local0[x]);

  DispBicat one = alg_disp(id_psfunctor(share(terminal_bicat())));
  CHECK(one.total.size0() == 1);
  CHECK(one.total.size1() == 1);
  CHECK(one.total.size2() == 1);
}

TEST_CASE("algebra 1-cells are the invertible squares") {
  for (const BicatPtr& bp : corpus()) {
    const Bicat& B = *bp;
    DispBicat alg = alg_disp(id_psfunctor(bp));
    REQUIRE(check_disp_laws(alg).pass());
    // Oracle: count (f, h_a, h_b, invertible c : h_a·f => f·h_b) directly.
    std::size_t expected = 0;
    for (Id f = 0; f < Id(B.size1()); ++f)
      for (Id ha : B.hom1(B.src1(f), B.src1(f)))
        for (Id hb : B.hom1(B.tgt1(f), B.tgt1(f)))
          for (Id c : B.hom2(B.comp(ha, f), B.comp(f, hb))) expected += B.is_invertible(c);
    CHECK(alg.total.size1() == expected);
    for (Id u = 0; u < Id(alg.total.size1()); ++u) {
      const Id c = alg_cell(alg, u);
      REQUIRE(c != kNone);
      CHECK(B.is_invertible(c));
      CHECK(B.src2(c) == B.comp(alg_structure(alg, alg.total.src1(u)), alg.over1[u]));
    }
  }
}

TEST_CASE("algebras of a univalent bicategory are univalent") {
  std::size_t univalent = 0;
  for (const BicatPtr& bp : corpus()) {
    if (!check_univalent(*bp).pass()) continue;
    ++univalent;
    for (const Psfunctor& F : enumerate_psfunctors(bp, bp)) {
      DispBicat alg = alg_disp(F);
      REQUIRE(check_disp_laws(alg).pass());
      CHECK(check_disp_univalence(alg).pass());
      CHECK(check_univalent(alg.total).pass());
    }
  }
  CHECK(univalent >= 3);
}

TEST_CASE("add2cell rejects mismatched endpoints") {
  BicatPtr b = share(terminal_bicat());
  DispPtr alg = share(alg_disp(id_psfunctor(b)));
  MonadTower t = monad_tower(b);
  Pstrans wrong = id_pstrans(id_psfunctor(total_ptr(alg)));
  CHECK_THROWS_AS(add2cell_disp(alg, id_psfunctor(b), wrong, t.r), Error);
}

TEST_CASE("monad tower layers") {
  for (const BicatPtr& bp : corpus()) {
    const Bicat& B = *bp;
    MonadTower t = monad_tower(bp);
    CHECK(check_pstrans(t.l_unit).pass());
    CHECK(check_pstrans(t.l_mult).pass());
    CHECK(check_pstrans(t.r).pass());
    for (const DispPtr& d : {t.unit, t.mult, t.m2, t.laws, t.monads}) CHECK(check_disp_laws(*d).pass());
    // Unit fibers over (a, h) are the 2-cells id1(a) => h.
    for (Id x = 0; x < Id(t.alg->total.size0()); ++x) {
      const Id a = t.alg->over0[x];
      const Id h = alg_structure(*t.alg, x);
      CHECK(t.unit->fiber0(x).size() == B.hom2(B.id1(a), h).size());
      CHECK(t.mult->fiber0(x).size() == B.hom2(B.comp(h, h), h).size());
    }
    if (check_univalent(B).pass()) {
      CHECK(check_disp_univalence(*t.alg).pass());
      CHECK(check_disp_univalence(*t.unit).pass());
      CHECK(check_disp_univalence(*t.mult).pass());
    }
  }
}

TEST_CASE("unit fibers over a one-object bicategory are nonempty only on the identity") {
  BicatPtr b = share(monoid_delooping(left_zero_monoid()));
  const Bicat& B = *b;
  MonadTower t = monad_tower(b);
  for (Id x = 0; x < Id(t.alg->total.size0()); ++x) {
    const bool is_id = alg_structure(*t.alg, x) == B.id1(0);
    CHECK(t.unit->fiber0(x).empty() == !is_id);
  }
}

TEST_CASE("monads agree with the direct enumeration") {
  for (const BicatPtr& bp : corpus()) {
    const Bicat& B = *bp;
    MonadTower t = monad_tower(bp);
    CHECK(check_laws(t.bicat).pass());
    std::vector<MonadStructure> direct = enumerate_monads(B);
    REQUIRE(t.objects.size() == t.bicat.size0());
    CHECK(t.objects.size() == direct.size());
    for (const MonadStructure& s : t.objects) {
      CHECK(is_monad(B, s));
      CHECK(std::count(t.objects.begin(), t.objects.end(), s) == 1);
      CHECK(std::find(direct.begin(), direct.end(), s) != direct.end());
    }
    // 1-cells between each pair of objects.
    for (Id x = 0; x < Id(t.bicat.size0()); ++x) {
      for (Id y = 0; y < Id(t.bicat.size0()); ++y) {
        const std::vector<Id> hom = t.bicat.hom1(x, y);
        std::vector<MonadMap> maps = enumerate_monad_maps(B, t.objects[x], t.objects[y]);
        CHECK(hom.size() == maps.size());
        for (Id u : hom) {
          CHECK(is_monad_map(B, t.objects[x], t.objects[y], t.one_cells[u]));
          for (Id v : t.bicat.hom1(x, y)) {
            std::size_t cells = 0;
            for (Id th : B.hom2(t.one_cells[u].f, t.one_cells[v].f)) {
              cells += is_monad_cell(B, t.objects[x], t.objects[y], t.one_cells[u], t.one_cells[v], th);
            }
            CHECK(t.bicat.hom2(u, v).size() == cells);
          }
        }
      }
    }
  }
}

TEST_CASE("small monad bicategories") {
  CHECK(monad_bicat(share(terminal_bicat())).size0() == 1);
  // With only identity 2-cells the unit forces m = id.
  for (const Monoid& m : {bool_mult_monoid(), left_zero_monoid(), zmod2_named()}) {
    CHECK(monad_bicat(share(monoid_delooping(m))).size0() == 1);
  }
  // Two objects, each with the identity monad only.
  CHECK(monad_bicat(share(discrete_bicat(2))).size0() == 2);
}

TEST_CASE("monads of a univalent bicategory are univalent") {
  for (const BicatPtr& bp : corpus()) {
    if (!check_univalent(*bp).pass()) continue;
    CHECK(check_univalent(monad_bicat(bp)).pass());
  }
}
