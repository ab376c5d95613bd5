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
#include "bikernel/generators.hpp"

#include "bikernel/error.hpp"

namespace bikernel {

void validate_monoid(const Monoid& m) {
  const Id n = Id(m.elements.size());
  if (n == 0) Fail(ErrorCode::kInvalidMonoid, "empty carrier");
  if (m.unit < 0 || m.unit >= n) Fail(ErrorCode::kInvalidMonoid, "unit out of range");
  if (Id(m.mult.size()) != n) Fail(ErrorCode::kInvalidMonoid, "table has wrong size");
  for (const auto& row : m.mult) {
    if (Id(row.size()) != n) Fail(ErrorCode::kInvalidMonoid, "table has wrong size");
    for (Id v : row) {
      if (v < 0 || v >= n) Fail(ErrorCode::kInvalidMonoid, "product out of range");
    }
  }
  for (Id x = 0; x < n; ++x) {
    if (m.mult[m.unit][x] != x || m.mult[x][m.unit] != x) {
      Fail(ErrorCode::kInvalidMonoid, "unit law fails at " + m.elements[x]);
    }
    for (Id y = 0; y < n; ++y) {
      for (Id z = 0; z < n; ++z) {
        if (m.mult[x][m.mult[y][z]] != m.mult[m.mult[x][y]][z]) {
          Fail(ErrorCode::kInvalidMonoid, "associativity fails at (" + m.elements[x] +
                                              "," + m.elements[y] + "," + m.elements[z] + ")");
        }
      }
    }
  }
}

Monoid cyclic_group(int n) {
  Monoid m;
  for (int i = 0; i < n; ++i) m.elements.push_back(std::to_string(i));
  m.unit = 0;
  m.mult.assign(n, std::vector<Id>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.mult[i][j] = (i + j) % n;
  return m;
}

Monoid zmod2_named() {
  Monoid m;
  m.elements = {"1", "s"};
  m.unit = 0;
  m.mult = {{0, 1}, {1, 0}};
  return m;
}

Monoid bool_mult_monoid() {
  Monoid m;
  m.elements = {"0", "1"};
  m.unit = 1;
  m.mult = {{0, 0}, {0, 1}};
  return m;
}

Monoid trivial_monoid() {
  Monoid m;
  m.elements = {"i"};
  m.unit = 0;
  m.mult = {{0}};
  return m;
}

Monoid left_zero_monoid() {
  Monoid m;
  m.elements = {"1", "a", "b"};
  m.unit = 0;
  m.mult = {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
  return m;
}

Monoid opposite_monoid(const Monoid& m) {
  Monoid o = m;
  for (std::size_t x = 0; x < m.elements.size(); ++x)
    for (std::size_t y = 0; y < m.elements.size(); ++y) o.mult[x][y] = m.mult[y][x];
  return o;
}

std::string object_token(int i) {
  if (i < 26) return std::string(1, char('a' + i));
  return "o" + std::to_string(i);
}

namespace {

// Fills every structural table with identity 2-cells. Valid whenever the
// 1-cell composition is strictly unital and associative.
void strict_structure(Bicat& b) {
  b.size_tables();
  for (Id f = 0; f < Id(b.size1()); ++f) {
    b.lunitor_tab[f] = b.lunitor_inv_tab[f] = b.id2_tab[f];
    b.runitor_tab[f] = b.runitor_inv_tab[f] = b.id2_tab[f];
  }
  const Id n1 = Id(b.size1());
  for (Id f = 0; f < n1; ++f) {
    for (Id g = 0; g < n1; ++g) {
      if (b.one_cells[f].tgt != b.one_cells[g].src) continue;
      for (Id h = 0; h < n1; ++h) {
        if (b.one_cells[g].tgt != b.one_cells[h].src) continue;
        const Id i = b.id2_tab[b.comp1_tab.get(f, b.comp1_tab.get(g, h))];
        b.lassoc_tab.set(f, g, h, i);
        b.lassoc_inv_tab.set(f, g, h, i);
      }
    }
  }
}

// Identity 2-cells only: whiskers and vcomp are forced.
void identity_two_cells(Bicat& b) {
  b.id2_tab.assign(b.size1(), kNone);
  for (Id f = 0; f < Id(b.size1()); ++f) {
    b.id2_tab[f] = b.add_two_cell("e_" + b.one_cells[f].name, f, f);
  }
  for (Id f = 0; f < Id(b.size1()); ++f) {
    b.vcomp_tab.set(b.id2_tab[f], b.id2_tab[f], b.id2_tab[f]);
    for (Id g = 0; g < Id(b.size1()); ++g) {
      if (b.one_cells[f].tgt != b.one_cells[g].src) continue;
      const Id fg = b.comp1_tab.get(f, g);
      b.lwhisker_tab.set(f, b.id2_tab[g], b.id2_tab[fg]);
      b.rwhisker_tab.set(b.id2_tab[f], g, b.id2_tab[fg]);
    }
  }
}

}  // namespace

Bicat terminal_bicat() {
  Bicat b;
  Id x = b.add_object("*");
  Id i = b.add_one_cell("i", x, x);
  b.size_tables();
  b.id1_tab[x] = i;
  b.comp1_tab.set(i, i, i);
  Id e = b.add_two_cell("e", i, i);
  b.id2_tab = {e};
  b.vcomp_tab.set(e, e, e);
  b.lwhisker_tab.set(i, e, e);
  b.rwhisker_tab.set(e, i, e);
  strict_structure(b);
  b.finalize();
  return b;
}

Bicat discrete_bicat(int n) {
  Bicat b;
  for (int k = 0; k < n; ++k) b.add_object(object_token(k));
  for (int k = 0; k < n; ++k) b.add_one_cell("1_" + object_token(k), k, k);
  b.size_tables();
  for (int k = 0; k < n; ++k) {
    b.id1_tab[k] = k;
    b.comp1_tab.set(k, k, k);
  }
  identity_two_cells(b);
  strict_structure(b);
  b.finalize();
  return b;
}

Bicat chaotic_bicat(int n) {
  Bicat b;
  for (int k = 0; k < n; ++k) b.add_object(object_token(k));
  std::vector<std::vector<Id>> cell(n, std::vector<Id>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      cell[x][y] = b.add_one_cell(object_token(x) + ">" + object_token(y), x, y);
  b.size_tables();
  for (int x = 0; x < n; ++x) {
    b.id1_tab[x] = cell[x][x];
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) b.comp1_tab.set(cell[x][y], cell[y][z], cell[x][z]);
  }
  identity_two_cells(b);
  strict_structure(b);
  b.finalize();
  return b;
}

Bicat monoid_delooping(const Monoid& m) {
  validate_monoid(m);
  Bicat b;
  Id x = b.add_object("*");
  for (const std::string& e : m.elements) b.add_one_cell(e, x, x);
  b.size_tables();
  b.id1_tab[x] = m.unit;
  for (Id p = 0; p < Id(m.elements.size()); ++p)
    for (Id q = 0; q < Id(m.elements.size()); ++q) b.comp1_tab.set(p, q, m.mult[p][q]);
  identity_two_cells(b);
  strict_structure(b);
  b.finalize();
  return b;
}

Bicat two_cell_delooping(const Monoid& m, const Monoid& g) {
  validate_monoid(m);
  validate_monoid(g);
  const Id nm = Id(m.elements.size()), ng = Id(g.elements.size());
  for (Id x = 0; x < ng; ++x)
    for (Id y = 0; y < ng; ++y)
      if (g.mult[x][y] != g.mult[y][x]) Fail(ErrorCode::kInvalidMonoid, "2-cell group is not abelian");
  for (Id x = 0; x < ng; ++x) {
    bool unit = false;
    for (Id y = 0; y < ng; ++y) unit = unit || g.mult[x][y] == g.unit;
    if (!unit) Fail(ErrorCode::kInvalidMonoid, "2-cell monoid is not a group");
  }
  for (Id x = 0; x < nm; ++x) {
    if (x == m.unit) continue;
    for (Id y = 0; y < nm; ++y) {
      if (m.mult[x][y] == m.unit) {
        Fail(ErrorCode::kInvalidMonoid,
             "1-cell monoid has the non-trivial unit " + m.elements[x]);
      }
    }
  }

  Bicat b;
  Id obj = b.add_object("*");
  for (const std::string& e : m.elements) b.add_one_cell(e, obj, obj);
  b.size_tables();
  b.id1_tab[obj] = m.unit;
  for (Id p = 0; p < nm; ++p)
    for (Id q = 0; q < nm; ++q) b.comp1_tab.set(p, q, m.mult[p][q]);

  // Group elements on the unit; identity cells elsewhere. The group's
  // unit serves as id2 of the unit 1-cell.
  std::vector<Id> gcell(ng);
  for (Id k = 0; k < ng; ++k) {
    gcell[k] = b.add_two_cell(g.elements[k], m.unit, m.unit);
  }
  b.id2_tab.assign(nm, kNone);
  b.id2_tab[m.unit] = gcell[g.unit];
  for (Id p = 0; p < nm; ++p) {
    if (p != m.unit) b.id2_tab[p] = b.add_two_cell("e_" + m.elements[p], p, p);
  }
  for (Id p = 0; p < nm; ++p) {
    if (p != m.unit) b.vcomp_tab.set(b.id2_tab[p], b.id2_tab[p], b.id2_tab[p]);
  }
  for (Id x = 0; x < ng; ++x)
    for (Id y = 0; y < ng; ++y) b.vcomp_tab.set(gcell[x], gcell[y], gcell[g.mult[x][y]]);

  // Whiskering a group element by the unit keeps it; by any other 1-cell
  // it collapses to the identity of the composite.
  auto whisker = [&](Id f, Id cell, Id on) -> Id {
    if (on == m.unit && f == m.unit) return cell;
    return b.id2_tab[m.mult[f][on]];
  };
  for (Id f = 0; f < nm; ++f) {
    for (Id q = 0; q < nm; ++q) {
      if (q == m.unit) {
        for (Id k = 0; k < ng; ++k) {
          b.lwhisker_tab.set(f, gcell[k], whisker(f, gcell[k], q));
          b.rwhisker_tab.set(gcell[k], f, whisker(f, gcell[k], q));
        }
      } else {
        b.lwhisker_tab.set(f, b.id2_tab[q], b.id2_tab[m.mult[f][q]]);
        b.rwhisker_tab.set(b.id2_tab[q], f, b.id2_tab[m.mult[q][f]]);
      }
    }
  }
  strict_structure(b);
  b.finalize();
  return b;
}

Bicat delta2() {
  Monoid g;
  g.elements = {"e", "t"};
  g.unit = 0;
  g.mult = {{0, 1}, {1, 0}};
  return two_cell_delooping(trivial_monoid(), g);
}

Bicat idempotent_bicat() {
  Bicat b;
  Id x = b.add_object("*");
  Id i = b.add_one_cell("i", x, x);
  Id e = b.add_two_cell("e", i, i);
  Id z = b.add_two_cell("z", i, i);
  b.size_tables();
  b.id1_tab[x] = i;
  b.comp1_tab.set(i, i, i);
  b.id2_tab[i] = b.lunitor_tab[i] = b.lunitor_inv_tab[i] = e;
  b.runitor_tab[i] = b.runitor_inv_tab[i] = e;
  b.lassoc_tab.set(i, i, i, e);
  b.lassoc_inv_tab.set(i, i, i, e);
  for (Id s : {e, z}) {
    b.lwhisker_tab.set(i, s, s);
    b.rwhisker_tab.set(s, i, s);
    for (Id t : {e, z}) b.vcomp_tab.set(s, t, s == e ? t : z);
  }
  b.finalize();
  return b;
}

std::string pair_token(const std::string& x, const std::string& y) {
  return "(" + x + "," + y + ")";
}

Bicat product_bicat(const Bicat& p, const Bicat& q) {
  Bicat b;
  const Id p0 = Id(p.size0()), q0 = Id(q.size0());
  const Id p1 = Id(p.size1()), q1 = Id(q.size1());
  const Id p2 = Id(p.size2()), q2 = Id(q.size2());
  auto o = [&](Id x, Id y) { return x * q0 + y; };
  auto one = [&](Id x, Id y) { return x * q1 + y; };
  auto two = [&](Id x, Id y) { return x * q2 + y; };
  for (Id x = 0; x < p0; ++x)
    for (Id y = 0; y < q0; ++y) b.add_object(pair_token(p.name0(x), q.name0(y)));
  for (Id f = 0; f < p1; ++f)
    for (Id g = 0; g < q1; ++g)
      b.add_one_cell(pair_token(p.name1(f), q.name1(g)), o(p.src1(f), q.src1(g)),
                     o(p.tgt1(f), q.tgt1(g)));
  for (Id s = 0; s < p2; ++s)
    for (Id t = 0; t < q2; ++t)
      b.add_two_cell(pair_token(p.name2(s), q.name2(t)), one(p.src2(s), q.src2(t)),
                     one(p.tgt2(s), q.tgt2(t)));
  b.size_tables();
  for (Id x = 0; x < p0; ++x)
    for (Id y = 0; y < q0; ++y) b.id1_tab[o(x, y)] = one(p.id1(x), q.id1(y));
  for (Id f = 0; f < p1; ++f) {
    for (Id g = 0; g < q1; ++g) {
      const Id c = one(f, g);
      b.id2_tab[c] = two(p.id2(f), q.id2(g));
      b.lunitor_tab[c] = two(p.lu(f), q.lu(g));
      b.lunitor_inv_tab[c] = two(p.lui(f), q.lui(g));
      b.runitor_tab[c] = two(p.ru(f), q.ru(g));
      b.runitor_inv_tab[c] = two(p.rui(f), q.rui(g));
    }
  }
  const auto pc = p.comp1_tab.entries(), qc = q.comp1_tab.entries();
  for (const auto& [f, f2, fv] : pc)
    for (const auto& [g, g2, gv] : qc) b.comp1_tab.set(one(f, g), one(f2, g2), one(fv, gv));
  for (const auto& [s, s2, sv] : p.vcomp_tab.entries())
    for (const auto& [t, t2, tv] : q.vcomp_tab.entries())
      b.vcomp_tab.set(two(s, t), two(s2, t2), two(sv, tv));
  for (const auto& [f, s, v] : p.lwhisker_tab.entries())
    for (const auto& [g, t, w] : q.lwhisker_tab.entries())
      b.lwhisker_tab.set(one(f, g), two(s, t), two(v, w));
  for (const auto& [s, f, v] : p.rwhisker_tab.entries())
    for (const auto& [t, g, w] : q.rwhisker_tab.entries())
      b.rwhisker_tab.set(two(s, t), one(f, g), two(v, w));
  const auto pa = p.lassoc_tab.entries(), qa = q.lassoc_tab.entries();
  for (const auto& [f, g, h, v] : pa)
    for (const auto& [f2, g2, h2, w] : qa)
      b.lassoc_tab.set(one(f, f2), one(g, g2), one(h, h2), two(v, w));
  const auto pai = p.lassoc_inv_tab.entries(), qai = q.lassoc_inv_tab.entries();
  for (const auto& [f, g, h, v] : pai)
    for (const auto& [f2, g2, h2, w] : qai)
      b.lassoc_inv_tab.set(one(f, f2), one(g, g2), one(h, h2), two(v, w));
  b.finalize();
  return b;
}

}  // namespace bikernel
