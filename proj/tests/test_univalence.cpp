// Univalence decision procedures and their finite consequences.

#include <doctest.h>

#include "bikernel/generators.hpp"
#include "bikernel/univalence.hpp"

using namespace bikernel;

namespace {

std::vector<Bicat> corpus() {
  std::vector<Bicat> out;
  out.push_back(terminal_bicat());
  for (int n = 0; n <= 3; ++n) out.push_back(discrete_bicat(n));
  out.push_back(chaotic_bicat(2));
  out.push_back(monoid_delooping(zmod2_named()));
  out.push_back(monoid_delooping(bool_mult_monoid()));
  out.push_back(monoid_delooping(left_zero_monoid()));
  out.push_back(monoid_delooping(cyclic_group(3)));
  out.push_back(delta2());
  out.push_back(two_cell_delooping(bool_mult_monoid(), cyclic_group(2)));
  out.push_back(product_bicat(discrete_bicat(2), monoid_delooping(bool_mult_monoid())));
  return out;
}

// Brute-force oracle for local univalence straight from the vcomp table.
bool local_oracle(const Bicat& p) {
  for (Id x = 0; x < Id(p.size2()); ++x) {
    for (Id y = 0; y < Id(p.size2()); ++y) {
      if (p.src2(x) != p.tgt2(y) || p.tgt2(x) != p.src2(y)) continue;
      if (p.vcomp(x, y) == p.id2(p.src2(x)) && p.vcomp(y, x) == p.id2(p.tgt2(x))) {
        if (x != p.id2(p.src2(x))) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("local univalence") {
  CHECK(check_local_univalence(discrete_bicat(3)).pass());
  CHECK(check_local_univalence(chaotic_bicat(2)).pass());

  Bicat d2 = delta2();
  UnivalenceReport r = check_local_univalence(d2);
  REQUIRE(r.local.size() == 1);
  CHECK(r.local[0].cells == std::vector<std::string>{"i", "i"});
  CHECK(r.local[0].count == 2);
  CHECK(r.global_pass());
}

TEST_CASE("global univalence") {
  CHECK(check_global_univalence(monoid_delooping(bool_mult_monoid())).pass());

  UnivalenceReport z2 = check_global_univalence(monoid_delooping(zmod2_named()));
  REQUIRE(z2.global.size() == 1);
  CHECK(z2.global[0].cells == std::vector<std::string>{"*", "*"});
  CHECK(z2.global[0].count == 2);

  UnivalenceReport ch = check_global_univalence(chaotic_bicat(2));
  CHECK_FALSE(ch.pass());
  bool cross = false;
  for (const UnivalenceWitness& w : ch.global)
    if (w.cells == std::vector<std::string>{"a", "b"}) cross = w.count == 1;
  CHECK(cross);
}

TEST_CASE("full univalence") {
  for (int n = 0; n <= 3; ++n) CHECK(check_univalent(discrete_bicat(n)).pass());
  CHECK(check_univalent(terminal_bicat()).pass());
  UnivalenceReport z2 = check_univalent(monoid_delooping(zmod2_named()));
  CHECK(z2.local_pass());
  CHECK_FALSE(z2.global_pass());
  CHECK_FALSE(z2.pass());
}

TEST_CASE("local check agrees with a table oracle") {
  for (const Bicat& p : corpus()) CHECK(check_local_univalence(p).pass() == local_oracle(p));
}

TEST_CASE("adjoint equivalence structures are unique when locally univalent") {
  Bicat one = terminal_bicat();
  CHECK(adjequiv_structure_count(one, one.id1(0)) == 1);
  Bicat z2 = monoid_delooping(zmod2_named());
  CHECK(adjequiv_structure_count(z2, z2.find1("s")) == 1);
  Bicat b = monoid_delooping(bool_mult_monoid());
  CHECK(adjequiv_structure_count(b, b.find1("0")) == 0);

  for (const Bicat& p : corpus()) {
    if (!check_local_univalence(p).pass()) continue;
    for (Id f = 0; f < Id(p.size1()); ++f) CHECK(adjequiv_structure_count(p, f) <= 1);
  }
}

TEST_CASE("consequences of univalence hold on the univalent corpus") {
  for (const Bicat& p : corpus()) {
    UnivalenceReport r = check_univalent(p);
    if (r.local_pass()) CHECK(invertibles_are_identities(p));
    if (r.pass()) {
      CHECK(adjequivs_are_identities(p));
      CHECK(biinitial_uniqueness_check(p));
    }
  }
}

TEST_CASE("witnesses re-verify") {
  for (const Bicat& p : corpus()) {
    UnivalenceReport r = check_univalent(p);
    for (const UnivalenceWitness& w : r.local) {
      Id f = p.find1(w.cells[0]), g = p.find1(w.cells[1]);
      std::vector<Inv2Cell> inv = invertible_2cells(p, f, g);
      CHECK(inv.size() == w.count);
      if (!w.non_canonical) CHECK(inv.size() != std::size_t(f == g));
    }
    for (const UnivalenceWitness& w : r.global) {
      Id a = p.find0(w.cells[0]), b = p.find0(w.cells[1]);
      CHECK(adjoint_equivalences(p, a, b).size() == w.count);
    }
  }
}

TEST_CASE("composition and transport of adjoint equivalences") {
  Bicat z2 = monoid_delooping(zmod2_named());
  AdjEquiv id = identity_adjequiv(z2, 0);
  CHECK(compose_adjequiv(z2, id, id) == id);
  CHECK(transport_adjequiv(z2, id, {z2.id2(id.f), z2.id2(id.f)}) == id);

  Id s = z2.find1("s");
  Budget budget;
  std::vector<AdjEquiv> es = adjequiv_structures(z2, s, budget);
  REQUIRE(es.size() == 1);
  AdjEquiv ss = compose_adjequiv(z2, es[0], es[0]);
  CHECK(z2.name1(ss.f) == "1");
  CHECK(is_adjoint_equivalence(z2, ss));

  // Composites across two objects of the chaotic bicategory.
  Bicat ch = chaotic_bicat(2);
  Id a = ch.find0("a"), b = ch.find0("b");
  std::vector<AdjEquiv> ab = adjoint_equivalences(ch, a, b);
  std::vector<AdjEquiv> ba = adjoint_equivalences(ch, b, a);
  REQUIRE(ab.size() == 1);
  REQUIRE(ba.size() == 1);
  AdjEquiv round = compose_adjequiv(ch, ab[0], ba[0]);
  CHECK(round == identity_adjequiv(ch, a));

  // Transport along the non-identity invertible 2-cell of Δ₂.
  Bicat d2 = delta2();
  Id t = d2.find2("t");
  AdjEquiv di = identity_adjequiv(d2, 0);
  AdjEquiv moved = transport_adjequiv(d2, di, {t, t});
  CHECK(is_adjoint_equivalence(d2, moved));
  CHECK(moved.f == di.f);
  CHECK_FALSE(moved == di);

  CHECK_THROWS_AS(compose_adjequiv(ch, ab[0], ab[0]), Error);
}

TEST_CASE("biinitial uniqueness") {
  CHECK(biinitial_uniqueness_check(discrete_bicat(1)));
  CHECK(biinitial_uniqueness_check(discrete_bicat(2)));
  try {
    biinitial_uniqueness_check(chaotic_bicat(2));
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPreconditionFailed);
  }
}
