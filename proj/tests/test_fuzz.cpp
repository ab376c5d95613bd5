// Seeded corpus generation and the univalence properties it exercises.

#include <doctest.h>

#include "bikernel/fuzz.hpp"
#include "bikernel/generators.hpp"
#include "bikernel/univalence.hpp"

using namespace bikernel;

TEST_CASE("relation-chaotic displayed bicategories") {
  BicatPtr one = share(terminal_bicat());
  for (Relation rel : {Relation::kLeq, Relation::kGeq, Relation::kEq}) {
    DispBicat d = relation_chaotic(one, {3}, rel);
    CHECK(check_disp_laws(d).pass());
    CHECK(check_disp_univalence(d).pass());
  }
  // Mutual 1-cells over the identity between distinct objects.
  DispBicat all = relation_chaotic(one, {2}, Relation::kAll);
  CHECK(check_disp_laws(all).pass());
  CHECK_FALSE(check_disp_univalence(all).global_pass());
  CHECK(all.total.size1() == 4);

  BicatPtr p = share(monoid_delooping(bool_mult_monoid()));
  DispBicat leq = relation_chaotic(p, {2}, Relation::kLeq);
  // Three related pairs over each of the two 1-cells.
  CHECK(leq.total.size1() == 6);
  CHECK(check_univalent(leq.total).pass());
}

TEST_CASE("seeds are lawful and flagged correctly") {
  std::size_t univalent = 0;
  for (const FuzzBase& b : fuzz_seeds()) {
    CHECK(check_laws(*b.bicat).pass());
    CHECK(b.univalent == check_univalent(*b.bicat).pass());
    univalent += b.univalent;
  }
  CHECK(univalent >= 8);
}

TEST_CASE("generation is seed-deterministic") {
  std::mt19937_64 a(11), b(11);
  for (int i = 0; i < 30; ++i) {
    FuzzBase x = random_base(a);
    FuzzBase y = random_base(b);
    CHECK(x.name == y.name);
    CHECK(x.bicat->same_tables(*y.bicat));
    FuzzInstance u = random_instance(a, x);
    FuzzInstance v = random_instance(b, y);
    CHECK(u.name == v.name);
    CHECK(u.disp->total.same_tables(v.disp->total));
  }
  FuzzSummary s1 = run_fuzz(3, 50);
  FuzzSummary s2 = run_fuzz(3, 50);
  for (const auto& [k, c] : s1.properties) {
    CHECK(c.instances == s2.properties[k].instances);
  }
}

TEST_CASE("fuzz corpus") {
  FuzzSummary s = run_fuzz(7, 200);
  for (const std::string& f : s.failures) MESSAGE(f);
  CHECK(s.pass());
  CHECK(s.properties["total-univalence"].instances == 200);
  for (const auto& [k, c] : s.properties) {
    CHECK_MESSAGE(c.instances > 0, k);
    CHECK(c.verified == c.instances);
  }
}
