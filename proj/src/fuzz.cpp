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
#include "bikernel/fuzz.hpp"

#include "bikernel/algebra.hpp"
#include "bikernel/catinst.hpp"
#include "bikernel/generators.hpp"
#include "bikernel/univalence.hpp"

namespace bikernel {

namespace {

constexpr std::size_t kMaxOne = 12;
constexpr std::size_t kMaxTwo = 16;

int pick(std::mt19937_64& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

bool related(Relation rel, int x, int y) {
  switch (rel) {
    case Relation::kLeq: return x <= y;
    case Relation::kGeq: return x >= y;
    case Relation::kEq: return x == y;
    default: return true;
  }
}

const char* relation_name(Relation rel) {
  switch (rel) {
    case Relation::kLeq: return "leq";
    case Relation::kGeq: return "geq";
    case Relation::kEq: return "eq";
    default: return "all";
  }
}

bool small(const Bicat& b) { return b.size1() <= kMaxOne && b.size2() <= kMaxTwo; }

FuzzBase make_base(std::string name, Bicat b) {
  FuzzBase out;
  out.name = std::move(name);
  out.bicat = share(std::move(b));
  out.univalent = check_univalent(*out.bicat).pass();
  return out;
}

// A nonempty random subset of the objects of b.
std::vector<bool> random_subset(std::mt19937_64& rng, const Bicat& b) {
  std::vector<bool> keep(b.size0());
  bool any = false;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    keep[a] = pick(rng, 2) == 1;
    any = any || keep[a];
  }
  if (!any && !keep.empty()) keep[pick(rng, int(keep.size()))] = true;
  return keep;
}

std::string subset_name(const std::vector<bool>& keep) {
  std::string s;
  for (bool k : keep) s.push_back(k ? '1' : '0');
  return s;
}

std::vector<int> random_sizes(std::mt19937_64& rng, const Bicat& b) {
  std::vector<int> sizes(b.size0());
  for (int& k : sizes) k = 1 + pick(rng, 2);
  return sizes;
}

std::string sizes_name(const std::vector<int>& sizes) {
  std::string s;
  for (int k : sizes) s += std::to_string(k);
  return s;
}

// A displayed instance together with how it was built, so that the
// properties can be stated against its parts.
struct Built {
  std::string name;
  std::string kind;  // fullsub, trivial, chaotic, algebras, product, sigma
  DispPtr disp;
  Relation rel = Relation::kAll;
  std::vector<Built> parts;
};

Built leaf(std::mt19937_64& rng, const BicatPtr& base, bool allow_alg) {
  const Bicat& B = *base;
  static const std::vector<FuzzBase> seeds = fuzz_seeds();
  Built out;
  int kind = pick(rng, allow_alg ? 4 : 3);
  if (kind == 3) {
    Budget budget(200000);
    try {
      std::vector<Psfunctor> fs = enumerate_psfunctors(base, base, budget);
      if (!fs.empty()) {
        const int i = pick(rng, int(fs.size()));
        out.kind = "algebras";
        out.name = "alg#" + std::to_string(i);
        out.disp = share(alg_disp(fs[i]));
        return out;
      }
    } catch (const Error&) {
    }
    kind = 0;
  }
  if (kind == 0) {
    std::vector<bool> keep = random_subset(rng, B);
    out.kind = "fullsub";
    out.name = "fullsub[" + subset_name(keep) + "]";
    out.disp = share(fullsub_disp(base, [&](Id a) { return bool(keep[a]); }));
  } else if (kind == 1) {
    std::vector<const FuzzBase*> fibers;
    for (const FuzzBase& s : seeds) {
      if (s.bicat->size1() <= 2 && s.bicat->size2() <= 2) fibers.push_back(&s);
    }
    const FuzzBase& q = *fibers[pick(rng, int(fibers.size()))];
    out.kind = "trivial";
    out.name = "trivial(" + q.name + ")";
    out.disp = share(trivial_disp(base, *q.bicat));
  } else {
    out.rel = Relation(pick(rng, 4));
    std::vector<int> sizes = random_sizes(rng, B);
    out.kind = "chaotic";
    out.name = std::string("chaotic(") + relation_name(out.rel) + "," + sizes_name(sizes) + ")";
    out.disp = share(relation_chaotic(base, sizes, out.rel));
  }
  return out;
}

Built build(std::mt19937_64& rng, const BicatPtr& base) {
  const int kind = pick(rng, 6);
  if (kind < 4) return leaf(rng, base, true);
  if (kind == 4) {
    Built a = leaf(rng, base, false);
    Built b = leaf(rng, base, false);
    Built out;
    out.kind = "product";
    out.name = "prod(" + a.name + "," + b.name + ")";
    out.disp = share(prod_disp(*a.disp, *b.disp));
    out.parts = {std::move(a), std::move(b)};
    return out;
  }
  Built a = leaf(rng, base, false);
  Built b = leaf(rng, total_ptr(a.disp), false);
  Built out;
  out.kind = "sigma";
  out.name = "sigma(" + a.name + "," + b.name + ")";
  out.disp = share(sigma_disp(*a.disp, *b.disp));
  out.parts = {std::move(a), std::move(b)};
  return out;
}

}  // namespace

DispBicat relation_chaotic(BicatPtr base, const std::vector<int>& sizes, Relation rel) {
  const Bicat& B = *base;
  if (sizes.size() != B.size0()) Fail(ErrorCode::kTypeMismatch, "relation_chaotic: one size per object");
  auto tok = [](int x) { return std::to_string(x); };
  auto arrow = [&](int x, int y) { return tok(x) + ">" + tok(y); };
  ChaoticData c;
  for (Id a = 0; a < Id(B.size0()); ++a) {
    auto& objs = c.d0[B.name0(a)];
    for (int x = 0; x < sizes[a]; ++x) objs.push_back(tok(x));
    for (int x = 0; x < sizes[a]; ++x) c.id[{B.name0(a), tok(x)}] = arrow(x, x);
  }
  for (Id f = 0; f < Id(B.size1()); ++f) {
    for (int x = 0; x < sizes[B.src1(f)]; ++x)
      for (int y = 0; y < sizes[B.tgt1(f)]; ++y)
        if (related(rel, x, y)) c.d1.push_back({B.name1(f), arrow(x, y), tok(x), tok(y)});
  }
  for (const auto& [f, g, fg] : B.comp1_tab.entries()) {
    (void)fg;
    for (int x = 0; x < sizes[B.src1(f)]; ++x)
      for (int y = 0; y < sizes[B.tgt1(f)]; ++y)
        for (int z = 0; z < sizes[B.tgt1(g)]; ++z)
          if (related(rel, x, y) && related(rel, y, z))
            c.comp[{B.name1(f), arrow(x, y), B.name1(g), arrow(y, z)}] = arrow(x, z);
  }
  return chaotic_disp(std::move(base), c);
}

std::vector<FuzzBase> fuzz_seeds() {
  std::vector<FuzzBase> s;
  s.push_back(make_base("1", terminal_bicat()));
  for (int n = 1; n <= 3; ++n) s.push_back(make_base("discrete(" + std::to_string(n) + ")", discrete_bicat(n)));
  s.push_back(make_base("chaotic(2)", chaotic_bicat(2)));
  s.push_back(make_base("D(bool)", monoid_delooping(bool_mult_monoid())));
  s.push_back(make_base("D(leftzero)", monoid_delooping(left_zero_monoid())));
  s.push_back(make_base("D(leftzero^op)", monoid_delooping(opposite_monoid(left_zero_monoid()))));
  s.push_back(make_base("D(Z/2)", monoid_delooping(zmod2_named())));
  s.push_back(make_base("D2(1,Z/2)", two_cell_delooping(trivial_monoid(), zmod2_named())));
  s.push_back(make_base("frag(P2)", fincat_fragment_bicat({poset_category(2)})));
  s.push_back(make_base("frag(0,1)", fincat_fragment_bicat({empty_category(), terminal_category()})));
  return s;
}

FuzzBase random_base(std::mt19937_64& rng) {
  static const std::vector<FuzzBase> seeds = fuzz_seeds();
  std::vector<const FuzzBase*> good, all;
  for (const FuzzBase& s : seeds) {
    all.push_back(&s);
    if (s.univalent) good.push_back(&s);
  }
  auto seed = [&]() -> const FuzzBase& {
    return pick(rng, 5) == 0 ? *all[pick(rng, int(all.size()))] : *good[pick(rng, int(good.size()))];
  };
  FuzzBase cur = seed();
  const int steps = pick(rng, 3);
  for (int i = 0; i < steps; ++i) {
    const int op = pick(rng, 4);
    Bicat next;
    std::string name;
    if (op == 0) {
      next = op_bicat(*cur.bicat);
      name = "op(" + cur.name + ")";
    } else if (op == 1) {
      const FuzzBase& other = seed();
      next = product_bicat(*cur.bicat, *other.bicat);
      name = cur.name + "x" + other.name;
    } else if (op == 2) {
      std::vector<int> sizes = random_sizes(rng, *cur.bicat);
      const Relation rel = pick(rng, 2) == 0 ? Relation::kLeq : Relation::kEq;
      next = relation_chaotic(cur.bicat, sizes, rel).total;
      name = std::string("total(") + cur.name + "," + relation_name(rel) + sizes_name(sizes) + ")";
    } else {
      std::vector<bool> keep = random_subset(rng, *cur.bicat);
      next = fullsub_disp(cur.bicat, [&](Id a) { return bool(keep[a]); }).total;
      name = "sub(" + cur.name + "," + subset_name(keep) + ")";
    }
    if (!small(next)) break;
    cur = make_base(std::move(name), std::move(next));
  }
  return cur;
}

FuzzInstance random_instance(std::mt19937_64& rng, const FuzzBase& base) {
  Built b = build(rng, base.bicat);
  return {b.name, base, b.disp};
}

FuzzSummary run_fuzz(std::uint64_t seed, int count) {
  FuzzSummary s;
  s.seed = seed;
  s.count = count;
  for (const char* p : {"total-univalence", "fullsub", "product", "sigma", "sigma-displayed", "chaotic",
                        "algebras"}) {
    s.properties[p];
  }
  std::mt19937_64 rng(seed);
  auto record = [&](const char* prop, bool ok, const std::string& name) {
    PropertyCount& c = s.properties[prop];
    ++c.instances;
    if (ok) {
      ++c.verified;
    } else {
      s.failures.push_back(std::string(prop) + ": " + name);
    }
  };
  auto du = [](const DispPtr& d) { return check_disp_univalence(*d).pass(); };

  const int max_attempts = 20 * count + 100;
  for (int attempt = 0; attempt < max_attempts && int(s.properties["total-univalence"].instances) < count;
       ++attempt) {
    const FuzzBase base = random_base(rng);
    const Built b = build(rng, base.bicat);
    const std::string name = base.name + " / " + b.name;
    if (!check_disp_laws(*b.disp).pass()) {
      s.failures.push_back("laws: " + name);
      continue;
    }
    if (!base.univalent) continue;
    const bool d_univ = du(b.disp);
    if (b.kind == "fullsub") record("fullsub", d_univ && check_univalent(b.disp->total).pass(), name);
    if (b.kind == "chaotic" && b.rel != Relation::kAll) record("chaotic", d_univ, name);
    if (b.kind == "algebras") record("algebras", d_univ, name);
    if (b.kind == "product" && du(b.parts[0].disp) && du(b.parts[1].disp)) record("product", d_univ, name);
    if (b.kind == "sigma" && du(b.parts[0].disp) && du(b.parts[1].disp)) {
      record("sigma", check_univalent(b.disp->total).pass(), name);
      const bool props = is_locally_propositional(*b.parts[0].disp) && is_locally_groupoidal(*b.parts[0].disp) &&
                         is_locally_propositional(*b.parts[1].disp) && is_locally_groupoidal(*b.parts[1].disp);
      if (props) record("sigma-displayed", d_univ, name);
    }
    if (d_univ) record("total-univalence", check_univalent(b.disp->total).pass(), name);
  }
  if (int(s.properties["total-univalence"].instances) < count) {
    s.failures.push_back("total-univalence: only " +
                         std::to_string(s.properties["total-univalence"].instances) + " instances");
  }
  return s;
}

}  // namespace bikernel
