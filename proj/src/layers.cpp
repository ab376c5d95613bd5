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
#include "layers.hpp"

#include "odometer.hpp"

namespace bikernel {

LawLayer law_layer(BicatPtr base, const Choices& choices, const Law& law, const Token& token,
                   Budget& budget) {
  const Bicat& E = *base;
  LawLayer out;
  ChaoticData data;
  std::vector<std::vector<std::vector<Id>>> vals(E.size0());
  for (Id X = 0; X < Id(E.size0()); ++X) {
    auto& toks = data.d0[E.name0(X)];
    odometer(choices(X), budget, [&](const std::vector<Id>& v) {
      vals[X].push_back(v);
      toks.push_back(token(v));
      out.value[{X, toks.back()}] = v;
    });
  }
  auto tok = [&](const std::vector<Id>& s, const std::vector<Id>& t) { return token(s) + ">" + token(t); };
  struct One {
    Id u;
    const std::vector<Id>* s;
    const std::vector<Id>* t;
  };
  std::vector<std::vector<One>> by_src(E.size0());
  for (Id U = 0; U < Id(E.size1()); ++U) {
    for (const auto& s : vals[E.src1(U)]) {
      for (const auto& t : vals[E.tgt1(U)]) {
        budget.Spend();
        if (!law(U, s, t)) continue;
        data.d1.push_back({E.name1(U), tok(s, t), token(s), token(t)});
        by_src[E.src1(U)].push_back({U, &s, &t});
      }
    }
  }
  for (Id X = 0; X < Id(E.size0()); ++X) {
    for (const auto& s : vals[X]) data.id[{E.name0(X), token(s)}] = tok(s, s);
  }
  for (Id X = 0; X < Id(E.size0()); ++X) {
    for (const One& a : by_src[X]) {
      for (const One& b : by_src[E.tgt1(a.u)]) {
        if (*b.s != *a.t) continue;
        data.comp[{E.name1(a.u), tok(*a.s, *a.t), E.name1(b.u), tok(*b.s, *b.t)}] = tok(*a.s, *b.t);
      }
    }
  }
  out.disp = chaotic_disp(std::move(base), data);
  return out;
}

}  // namespace bikernel
