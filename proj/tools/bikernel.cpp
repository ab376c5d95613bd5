// bikernel: command-line front end.
//
// Every command prints one JSON document on stdout. Exit codes: 0 pass,
// 1 property fail, 2 invalid input, 3 enumeration budget exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bikernel/algebra.hpp"
#include "bikernel/catinst.hpp"
#include "bikernel/core.hpp"
#include "bikernel/fuzz.hpp"
#include "bikernel/serialize.hpp"
#include "bikernel/univalence.hpp"

namespace fs = std::filesystem;
using namespace bikernel;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

int emit(const json& j, bool pass) {
  std::cout << j.dump(2) << "\n";
  return pass ? kPass : kFail;
}

std::string dir_of(const std::string& file) {
  const fs::path p = fs::path(file).parent_path();
  return p.empty() ? "." : p.string();
}

Bicat load_bicat(const std::string& file) { return bicat_from_json(read_json_file(file)); }
BicatPtr load_bicat_ptr(const std::string& file) { return share(load_bicat(file)); }
DispBicat load_disp(const std::string& file) { return disp_from_json(read_json_file(file), dir_of(file)); }

// A category file holds one category or an array of them.
std::vector<FiniteCategory> load_categories(const std::vector<std::string>& files) {
  std::vector<FiniteCategory> out;
  for (const std::string& f : files) {
    const json j = read_json_file(f);
    if (j.is_array()) {
      for (const json& c : j) out.push_back(category_from_json(c));
    } else {
      out.push_back(category_from_json(j));
    }
  }
  return out;
}

json counts(const Bicat& b) {
  return {{"objects", b.size0()}, {"one_cells", b.size1()}, {"two_cells", b.size2()}};
}

// Writes `doc` to `out` when given, else prints it; validation decides
// the exit code either way.
int output(const std::string& kind, const json& doc, const Report& validation, const Bicat& shape,
           const std::string& out) {
  if (out.empty()) {
    std::cout << doc.dump(2) << "\n";
    return validation.pass() ? kPass : kFail;
  }
  write_json_file(out, doc);
  return emit({{"status", validation.pass() ? "pass" : "fail"},
               {"kind", kind},
               {"out", out},
               {"counts", counts(shape)},
               {"validation", to_json(validation)}},
              validation.pass());
}

int build_bicat(const std::string& kind, const Bicat& b, const std::string& out) {
  return output(kind, to_json(b), check_laws(b), b, out);
}

int build_disp(const std::string& kind, const DispBicat& d, const std::string& out) {
  return output(kind, to_json(d), check_disp_laws(d), d.total, out);
}

UnivalenceReport restrict_report(UnivalenceReport r, bool local, bool global) {
  if (!local) {
    r.local_checked = false;
    r.local.clear();
  }
  if (!global) {
    r.global_checked = false;
    r.global.clear();
  }
  return r;
}

Relation parse_relation(const std::string& s) {
  if (s == "leq") return Relation::kLeq;
  if (s == "geq") return Relation::kGeq;
  if (s == "eq") return Relation::kEq;
  if (s == "all") return Relation::kAll;
  Fail(ErrorCode::kParseError, "--relation: expected leq, geq, eq or all");
}

json adjequiv_json(const Bicat& b, const AdjEquiv& e) {
  return {{"f", b.name1(e.f)},
          {"g", b.name1(e.g)},
          {"eta", b.name2(e.eta.theta)},
          {"eta_inv", b.name2(e.eta.theta_inv)},
          {"eps", b.name2(e.eps.theta)},
          {"eps_inv", b.name2(e.eps.theta_inv)}};
}

json found(const std::string& kind, const json& items) {
  return {{"status", "pass"}, {"kind", kind}, {"count", items.size()}, {"items", items}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel for finitely presented bicategories"};
  app.require_subcommand(1);
  std::uint64_t budget_flag = 0;
  app.add_option("--budget", budget_flag, "Enumeration budget (overrides BIKERNEL_BUDGET)")
      ->check(CLI::PositiveNumber);

  std::function<int()> run;

  // check ---------------------------------------------------------------
  std::string check_file;
  bool check_disp = false, check_bundle = false, check_cwf = false;
  CLI::App* check = app.add_subcommand("check", "Check the laws of a presentation");
  check->add_option("file", check_file, "Presentation file")->required()->check(CLI::ExistingFile);
  auto* f_disp = check->add_flag("--disp", check_disp, "The file is a displayed presentation");
  auto* f_bundle = check->add_flag("--disp-biequiv", check_bundle, "The file is a displayed biequivalence bundle");
  auto* f_cwf = check->add_flag("--cwf", check_cwf, "The file is a CwF candidate");
  f_disp->excludes(f_bundle)->excludes(f_cwf);
  f_bundle->excludes(f_cwf);
  check->callback([&] {
    run = [&] {
      if (check_disp) {
        const Report r = check_disp_laws(load_disp(check_file));
        return emit(to_json(r), r.pass());
      }
      if (check_bundle) {
        const DispBiequivalence b = disp_biequivalence_from_json(read_json_file(check_file), dir_of(check_file));
        const Report r = check_disp_biequivalence(b);
        return emit(to_json(r), r.pass());
      }
      if (check_cwf) {
        const CwfDocument d = cwf_from_json(read_json_file(check_file));
        const Report c = validate_category(d.category);
        if (!c.pass()) return emit({{"status", "fail"}, {"category", to_json(c)}}, false);
        const Report ty = check_presheaf(d.category, d.ty), tm = check_presheaf(d.category, d.tm);
        if (!ty.pass() || !tm.pass()) {
          return emit({{"status", "fail"}, {"ty", to_json(ty)}, {"tm", to_json(tm)}}, false);
        }
        const CwfRepresentation r = check_cwf_representation(d.category, d.ty, d.tm, d.p);
        return emit(to_json(r, d.category), r.ok);
      }
      const Report r = check_laws(load_bicat(check_file));
      return emit(to_json(r), r.pass());
    };
  });

  // univalence ----------------------------------------------------------
  std::string uni_file;
  bool uni_local = false, uni_global = false, uni_both = false, uni_displayed = false;
  CLI::App* uni = app.add_subcommand("univalence", "Decide local and global univalence");
  uni->add_option("file", uni_file, "Presentation file")->required()->check(CLI::ExistingFile);
  auto* u_local = uni->add_flag("--local", uni_local, "Local univalence only");
  auto* u_global = uni->add_flag("--global", uni_global, "Global univalence only");
  auto* u_both = uni->add_flag("--both", uni_both, "Both clauses (default)");
  u_local->excludes(u_global)->excludes(u_both);
  u_global->excludes(u_both);
  uni->add_flag("--displayed", uni_displayed, "The file is a displayed presentation");
  uni->callback([&] {
    run = [&] {
      const bool local = !uni_global, global = !uni_local;
      UnivalenceReport r;
      if (uni_displayed) {
        const DispBicat d = load_disp(uni_file);
        Budget budget;
        r = restrict_report(check_disp_univalence(d, budget), local, global);
      } else {
        const Bicat b = load_bicat(uni_file);
        Budget budget;
        if (local && global) {
          r = check_univalent(b, budget);
        } else if (local) {
          r = check_local_univalence(b, budget);
        } else {
          r = check_global_univalence(b, budget);
        }
      }
      return emit(to_json(r), r.pass());
    };
  });

  // build ---------------------------------------------------------------
  CLI::App* build = app.add_subcommand("build", "Construct a presentation");
  build->require_subcommand(1);
  std::string out;
  std::vector<std::string> inputs;
  auto out_option = [&](CLI::App* c) { c->add_option("--out", out, "Output file (default: stdout)"); };

  CLI::App* b_total = build->add_subcommand("total", "Total bicategory of a displayed presentation");
  b_total->add_option("disp", inputs, "Displayed presentation")->required()->expected(1)->check(CLI::ExistingFile);
  out_option(b_total);
  b_total->callback([&] { run = [&] { return build_bicat("total", total_bicat(load_disp(inputs[0])), out); }; });

  CLI::App* b_prod = build->add_subcommand("product", "Product of two displayed presentations over one base");
  b_prod->add_option("disp", inputs, "Two displayed presentations")->required()->expected(2)->check(CLI::ExistingFile);
  out_option(b_prod);
  b_prod->callback([&] {
    run = [&] { return build_disp("product", prod_disp(load_disp(inputs[0]), load_disp(inputs[1])), out); };
  });

  CLI::App* b_sigma = build->add_subcommand("sigma", "Sigma of D and E, with E over the total of D");
  b_sigma->add_option("disp", inputs, "D and E")->required()->expected(2)->check(CLI::ExistingFile);
  out_option(b_sigma);
  b_sigma->callback([&] {
    run = [&] { return build_disp("sigma", sigma_disp(load_disp(inputs[0]), load_disp(inputs[1])), out); };
  });

  std::vector<std::string> objects;
  CLI::App* b_full = build->add_subcommand("fullsub", "Full subbicategory on a set of objects");
  b_full->add_option("base", inputs, "Base presentation")->required()->expected(1)->check(CLI::ExistingFile);
  b_full->add_option("--objects", objects, "Object tokens")->required()->delimiter(',');
  out_option(b_full);
  b_full->callback([&] {
    run = [&] {
      BicatPtr b = load_bicat_ptr(inputs[0]);
      for (const std::string& o : objects) {
        if (b->find0(o) == kNone) Fail(ErrorCode::kDanglingReference, "--objects: unknown object '" + o + "'");
      }
      return build_disp("fullsub", fullsub_disp(b, objects), out);
    };
  });

  CLI::App* b_triv = build->add_subcommand("trivial", "The constant displayed bicategory B x Q");
  b_triv->add_option("files", inputs, "Base and fiber presentations")->required()->expected(2)->check(CLI::ExistingFile);
  out_option(b_triv);
  b_triv->callback([&] {
    run = [&] { return build_disp("trivial", trivial_disp(load_bicat_ptr(inputs[0]), load_bicat(inputs[1])), out); };
  });

  std::vector<int> sizes;
  std::string relation = "leq";
  CLI::App* b_chaotic = build->add_subcommand("chaotic", "Relation-chaotic displayed bicategory");
  b_chaotic->add_option("base", inputs, "Base presentation")->required()->expected(1)->check(CLI::ExistingFile);
  b_chaotic->add_option("--sizes", sizes, "Fiber size per base object, in token order")->required()->delimiter(',');
  b_chaotic->add_option("--relation", relation, "leq, geq, eq or all");
  out_option(b_chaotic);
  b_chaotic->callback([&] {
    run = [&] {
      BicatPtr b = load_bicat_ptr(inputs[0]);
      if (sizes.size() != b->size0()) Fail(ErrorCode::kParseError, "--sizes: one size per object");
      return build_disp("chaotic", relation_chaotic(b, sizes, parse_relation(relation)), out);
    };
  });

  std::string src_file, tgt_file;
  CLI::App* b_pseudo = build->add_subcommand("pseudo", "Bicategory of pseudofunctors");
  b_pseudo->add_option("--src", src_file, "Source presentation")->required()->check(CLI::ExistingFile);
  b_pseudo->add_option("--tgt", tgt_file, "Target presentation")->required()->check(CLI::ExistingFile);
  out_option(b_pseudo);
  b_pseudo->callback([&] {
    run = [&] {
      Budget budget;
      const PseudoBicat p = build_pseudo(load_bicat_ptr(src_file), load_bicat_ptr(tgt_file), budget);
      return build_bicat("pseudo", p.bicat, out);
    };
  });

  std::string tower_dir;
  CLI::App* b_monads = build->add_subcommand("monads", "Bicategory of monads");
  b_monads->add_option("base", inputs, "Base presentation")->required()->expected(1)->check(CLI::ExistingFile);
  b_monads->add_option("--expose-tower", tower_dir, "Write every displayed layer into this directory");
  out_option(b_monads);
  b_monads->callback([&] {
    run = [&] {
      Budget budget;
      const MonadTower t = monad_tower(load_bicat_ptr(inputs[0]), budget);
      if (!tower_dir.empty()) {
        fs::create_directories(tower_dir);
        const std::vector<std::pair<std::string, DispPtr>> layers = {
            {"alg", t.alg}, {"unit", t.unit}, {"mult", t.mult}, {"m2", t.m2}, {"laws", t.laws}, {"monads", t.monads}};
        for (const auto& [name, d] : layers) write_json_file((fs::path(tower_dir) / (name + ".json")).string(), to_json(*d));
      }
      return build_bicat("monads", t.bicat, out);
    };
  });

  CLI::App* b_frag = build->add_subcommand("fragment", "Fragment of Cat on the given categories");
  b_frag->add_option("categories", inputs, "Category files")->required()->check(CLI::ExistingFile);
  out_option(b_frag);
  b_frag->callback([&] {
    run = [&] { return build_bicat("fragment", *fincat_fragment(load_categories(inputs)).bicat, out); };
  });

  CLI::App* b_kleisli = build->add_subcommand("kleisli", "Kleisli triples over a fragment");
  b_kleisli->add_option("categories", inputs, "Category files")->required()->check(CLI::ExistingFile);
  out_option(b_kleisli);
  b_kleisli->callback([&] {
    run = [&] { return build_bicat("kleisli", kleisli_bicat(fincat_fragment(load_categories(inputs))), out); };
  });

  int bound = 1;
  CLI::App* b_cwf = build->add_subcommand("cwf", "Categories with families over a fragment");
  b_cwf->add_option("categories", inputs, "Category files")->required()->check(CLI::ExistingFile);
  b_cwf->add_option("--bound", bound, "Largest presheaf value")->check(CLI::NonNegativeNumber);
  out_option(b_cwf);
  b_cwf->callback([&] {
    run = [&] { return build_bicat("cwf", cwf_bicat(fincat_fragment(load_categories(inputs)), bound), out); };
  });

  // find ----------------------------------------------------------------
  CLI::App* find = app.add_subcommand("find", "Enumerate structures");
  find->require_subcommand(1);

  CLI::App* f_inv = find->add_subcommand("invertible", "Invertible 2-cells");
  f_inv->add_option("file", inputs, "Presentation")->required()->expected(1)->check(CLI::ExistingFile);
  f_inv->callback([&] {
    run = [&] {
      const Bicat b = load_bicat(inputs[0]);
      json items = json::array();
      for (Id f = 0; f < Id(b.size1()); ++f) {
        for (Id g = 0; g < Id(b.size1()); ++g) {
          if (b.src1(f) != b.src1(g) || b.tgt1(f) != b.tgt1(g)) continue;
          for (const Inv2Cell& c : invertible_2cells(b, f, g)) {
            items.push_back({{"src", b.name1(f)}, {"tgt", b.name1(g)}, {"theta", b.name2(c.theta)},
                             {"inverse", b.name2(c.theta_inv)}});
          }
        }
      }
      return emit(found("invertible", items), true);
    };
  });

  CLI::App* f_adj = find->add_subcommand("adjequiv", "Adjoint equivalences");
  f_adj->add_option("file", inputs, "Presentation")->required()->expected(1)->check(CLI::ExistingFile);
  f_adj->callback([&] {
    run = [&] {
      const Bicat b = load_bicat(inputs[0]);
      Budget budget;
      json items = json::array();
      for (Id x = 0; x < Id(b.size0()); ++x) {
        for (Id y = 0; y < Id(b.size0()); ++y) {
          for (const AdjEquiv& e : adjoint_equivalences(b, x, y, budget)) {
            json j = adjequiv_json(b, e);
            j["src"] = b.name0(x);
            j["tgt"] = b.name0(y);
            items.push_back(j);
          }
        }
      }
      return emit(found("adjequiv", items), true);
    };
  });

  CLI::App* f_psf = find->add_subcommand("psfunctors", "Pseudofunctors between two presentations");
  f_psf->add_option("--src", src_file, "Source presentation")->required()->check(CLI::ExistingFile);
  f_psf->add_option("--tgt", tgt_file, "Target presentation")->required()->check(CLI::ExistingFile);
  f_psf->callback([&] {
    run = [&] {
      Budget budget;
      json items = json::array();
      for (const Psfunctor& f : enumerate_psfunctors(load_bicat_ptr(src_file), load_bicat_ptr(tgt_file), budget)) {
        items.push_back(to_json(f));
      }
      return emit(found("psfunctors", items), true);
    };
  });

  CLI::App* f_monads = find->add_subcommand("monads", "Monads in a presentation");
  f_monads->add_option("file", inputs, "Presentation")->required()->expected(1)->check(CLI::ExistingFile);
  f_monads->callback([&] {
    run = [&] {
      const Bicat b = load_bicat(inputs[0]);
      Budget budget;
      json items = json::array();
      for (const MonadStructure& m : enumerate_monads(b, budget)) {
        items.push_back({{"carrier", b.name0(m.carrier)},
                         {"m", b.name1(m.m)},
                         {"eta", b.name2(m.eta)},
                         {"mu", b.name2(m.mu)}});
      }
      return emit(found("monads", items), true);
    };
  });

  CLI::App* f_kleisli = find->add_subcommand("kleisli", "Kleisli triples on a category");
  f_kleisli->add_option("file", inputs, "Category file")->required()->expected(1)->check(CLI::ExistingFile);
  f_kleisli->callback([&] {
    run = [&] {
      const FiniteCategory c = category_from_json(read_json_file(inputs[0]));
      Budget budget;
      json items = json::array();
      for (const KleisliTriple& t : enumerate_kleisli(c, budget)) items.push_back(kleisli_to_json(c, t));
      return emit(found("kleisli", items), true);
    };
  });

  int ps_bound = 1;
  CLI::App* f_psh = find->add_subcommand("presheaves", "Presheaves with bounded values");
  f_psh->add_option("file", inputs, "Category file")->required()->expected(1)->check(CLI::ExistingFile);
  f_psh->add_option("--bound", ps_bound, "Largest value")->check(CLI::NonNegativeNumber);
  f_psh->callback([&] {
    run = [&] {
      const FiniteCategory c = category_from_json(read_json_file(inputs[0]));
      Budget budget;
      json items = json::array();
      for (const Presheaf& p : enumerate_presheaves(c, ps_bound, budget)) items.push_back(presheaf_to_json(c, p));
      return emit(found("presheaves", items), true);
    };
  });

  // yoneda --------------------------------------------------------------
  std::string y_file, y_object, y_presheaf;
  CLI::App* yon = app.add_subcommand("yoneda", "Check the Yoneda equivalence at an object");
  yon->add_option("file", y_file, "Presentation")->required()->check(CLI::ExistingFile);
  yon->add_option("--object", y_object, "Object token")->required();
  yon->add_option("--presheaf", y_presheaf, "Cat-valued pseudofunctor (default: the representable)")
      ->check(CLI::ExistingFile);
  yon->callback([&] {
    run = [&] {
      BicatPtr b = load_bicat_ptr(y_file);
      const Id a = b->find0(y_object);
      if (a == kNone) Fail(ErrorCode::kDanglingReference, "--object: unknown object '" + y_object + "'");
      const CatValuedPsfunctor p =
          y_presheaf.empty() ? representable0(b, a) : cat_psfunctor_from_json(b, read_json_file(y_presheaf));
      Budget budget;
      const YonedaCheck y = yoneda_check(b, p, a, budget);
      json j = to_json(y, p.cat[a]);
      j["object"] = y_object;
      return emit(j, y.pass());
    };
  });

  // fuzz ----------------------------------------------------------------
  std::uint64_t seed = 0;
  int count = 200;
  CLI::App* fuzz = app.add_subcommand("fuzz", "Run the seeded property corpus");
  fuzz->add_option("--seed", seed, "Seed")->required();
  fuzz->add_option("--count", count, "Instances over univalent bases")->check(CLI::PositiveNumber);
  fuzz->callback([&] {
    run = [&] {
      const FuzzSummary s = run_fuzz(seed, count);
      json props = json::object();
      for (const auto& [name, c] : s.properties) props[name] = {{"instances", c.instances}, {"verified", c.verified}};
      return emit({{"status", s.pass() ? "pass" : "fail"},
                   {"seed", s.seed},
                   {"count", s.count},
                   {"properties", props},
                   {"failures", s.failures}},
                  s.pass());
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  if (budget_flag > 0) setenv("BIKERNEL_BUDGET", std::to_string(budget_flag).c_str(), 1);

  try {
    return run();
  } catch (const Error& e) {
    const bool budget = e.code() == ErrorCode::kEnumerationBudgetExceeded;
    std::cout << json{{"status", "error"}, {"code", ErrorCodeName(e.code())}, {"message", e.what()}}.dump(2) << "\n";
    return budget ? kBudget : kInvalid;
  } catch (const json::exception& e) {
    std::cout << json{{"status", "error"}, {"code", "ParseError"}, {"message", e.what()}}.dump(2) << "\n";
    return kInvalid;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cout << json{{"status", "error"}, {"code", "IOError"}, {"message", e.what()}}.dump(2) << "\n";
    return kInvalid;
  }
}
