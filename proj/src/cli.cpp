#include "homcat/cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "homcat/dehomify.hpp"
#include "homcat/error.hpp"
#include "homcat/workbench.hpp"

namespace homcat {
namespace {

namespace fs = std::filesystem;

template <class T>
T as(const StructureFile& s, const std::string& path, const char* want) {
  if (const T* p = std::get_if<T>(&s.value)) return *p;
  throw ParseError(path + ": expected kind " + want + ", got " + s.kind());
}

HomBialgebra load_bialgebra(const std::string& path) {
  return as<HomBialgebra>(load_structure(path), path, "bialgebra");
}

LinMap load_linmap(const std::string& path) { return as<LinMap>(load_structure(path), path, "linmap"); }

// Explicit --bialgebra wins over the file's own parent reference.
fs::path parent_path(const std::string& file, const StructureFile& s, const std::string& over) {
  if (!over.empty()) return over;
  if (s.parent.empty()) throw ParseError(file + ": no parent structure given, pass --bialgebra");
  return fs::path(file).parent_path() / s.parent;
}

HModule module_of(const StructureFile& s, const std::string& path) {
  if (const auto* y = std::get_if<YDModule>(&s.value)) return y->module();
  return as<HModule>(s, path, "module");
}

HomAlgebra algebra_of(const StructureFile& s, const std::string& path) {
  if (const auto* h = std::get_if<HomBialgebra>(&s.value)) return h->algebra();
  return as<HomAlgebra>(s, path, "algebra");
}

HomCoalgebra coalgebra_of(const StructureFile& s, const std::string& path) {
  if (const auto* h = std::get_if<HomBialgebra>(&s.value)) return h->coalgebra();
  return as<HomCoalgebra>(s, path, "coalgebra");
}

Field field_arg(const std::string& text) {
  if (text == "Q") return Field::rationals();
  try {
    std::size_t used = 0;
    const unsigned long long p = std::stoull(text, &used);
    if (used == text.size()) return Field::prime(p);
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw ParseError("--field must be Q or a prime, got " + text);
}

// Module-like files given on the command line, all over one bialgebra.
struct Pool {
  HomBialgebra h;
  fs::path h_path;
  std::vector<StructureFile> files;
};

Pool load_pool(const std::vector<std::string>& paths, const std::string& over) {
  Pool p;
  for (const auto& path : paths) p.files.push_back(load_structure(path));
  p.h_path = parent_path(paths.front(), p.files.front(), over);
  p.h = load_bialgebra(p.h_path.string());
  return p;
}

std::vector<YDModule> yd_modules(const Pool& p, const std::vector<std::string>& paths) {
  std::vector<YDModule> out;
  for (std::size_t i = 0; i < paths.size(); ++i) out.push_back(as<YDModule>(p.files[i], paths[i], "yd"));
  return out;
}

std::string relative_parent(const fs::path& parent, const fs::path& out) {
  return fs::proximate(parent, fs::absolute(out).parent_path()).generic_string();
}

void emit(const std::string& out, StructureFile s, const fs::path& parent = {}) {
  if (out.empty()) return;
  if (!parent.empty()) s.parent = relative_parent(parent, out);
  save_structure(out, s);
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checker for hom-associative structures and their representations", "homcat"};
  app.require_subcommand(1);

  std::function<CheckReport()> action;
  std::string out_path, bialgebra_path, which = "F", r_path, map_path, alpha_path, field_text = "Q";
  std::string r_out, algebra_path, action_path;
  std::string buv, buw, bvw, au, av, aw;
  std::vector<std::string> files;
  std::string file;
  std::size_t n = 0, k = 1;
  bool classical = false;

  const auto add_out = [&](CLI::App* c) {
    c->add_option("--out", out_path, "Write the produced artifact (or the report) here");
  };
  const auto add_h = [&](CLI::App* c) {
    c->add_option("--bialgebra", bialgebra_path, "Bialgebra file; defaults to the parent reference");
  };

  auto* check = app.add_subcommand("check", "Check the axioms of one structure");
  check->require_subcommand(1);
  const auto single = [&](const char* name, const char* help, bool over_h) {
    auto* c = check->add_subcommand(name, help);
    c->add_option("file", file)->required();
    if (over_h) add_h(c);
    add_out(c);
    return c;
  };

  single("algebra", "Hom-associativity and alpha multiplicativity", false)->callback([&] {
    action = [&] { return check_hom_algebra(algebra_of(load_structure(file), file)); };
  });
  single("coalgebra", "Hom-coassociativity and psi comultiplicativity", false)->callback([&] {
    action = [&] { return check_hom_coalgebra(coalgebra_of(load_structure(file), file)); };
  });
  single("bialgebra", "All hom-bialgebra axioms", false)->callback([&] {
    action = [&] { return check_hom_bialgebra(load_bialgebra(file)); };
  });
  single("module", "Module axioms over an algebra or bialgebra", true)->callback([&] {
    action = [&] {
      const StructureFile s = load_structure(file);
      const fs::path hp = parent_path(file, s, bialgebra_path);
      return check_module(algebra_of(load_structure(hp), hp.string()), module_of(s, file));
    };
  });
  single("comodule", "Comodule axioms over a coalgebra or bialgebra", true)->callback([&] {
    action = [&] {
      const StructureFile s = load_structure(file);
      const fs::path hp = parent_path(file, s, bialgebra_path);
      const HComodule m = std::holds_alternative<YDModule>(s.value)
                              ? std::get<YDModule>(s.value).comodule()
                              : as<HComodule>(s, file, "comodule");
      return check_comodule(coalgebra_of(load_structure(hp), hp.string()), m);
    };
  });
  single("yd", "Yetter-Drinfeld module axioms", true)->callback([&] {
    action = [&] {
      const Pool p = load_pool({file}, bialgebra_path);
      return check_yd(YdBase(p.h), yd_modules(p, {file}).front());
    };
  });
  {
    auto* c = check->add_subcommand("mha", "Module hom-algebra axioms");
    c->add_option("--bialgebra", bialgebra_path)->required();
    c->add_option("--algebra", algebra_path)->required();
    c->add_option("--action", action_path, "Module structure on the algebra's space")->required();
    add_out(c);
    c->callback([&] {
      action = [&] {
        const HomAlgebra a = algebra_of(load_structure(algebra_path), algebra_path);
        return check_module_hom_algebra(load_bialgebra(bialgebra_path), a,
                                        module_of(load_structure(action_path), action_path));
      };
    });
  }
  {
    auto* c = check->add_subcommand("qt", "Quasitriangular structure conditions");
    add_h(c);
    c->add_option("--r", r_path)->required();
    add_out(c);
    c->callback([&] {
      action = [&] {
        const StructureFile rs = load_structure(r_path);
        const fs::path hp = parent_path(r_path, rs, bialgebra_path);
        return check_r_conditions(load_bialgebra(hp.string()), as<RMatrix>(rs, r_path, "rmatrix"));
      };
    });
  }

  {
    auto* c = app.add_subcommand("twist", "Apply the F or G twist to a module");
    c->add_option("file", file)->required();
    c->add_option("--which", which)->check(CLI::IsMember({"F", "G"}));
    add_h(c);
    add_out(c);
    c->callback([&] {
      action = [&] {
        const Pool p = load_pool({file}, bialgebra_path);
        const StructureFile& s = p.files.front();
        if (const auto* y = std::get_if<YDModule>(&s.value)) {
          if (which != "F") throw PreconditionError("YD modules only carry the F twist", {"yd-twist-G"});
          const YdBase base(p.h);
          YDModule t = f_twist_yd(base, *y);
          emit(out_path, {s.field, t, {}}, p.h_path);
          return check_yd(base, t);
        }
        HModule t = twist_module(p.h, module_of(s, file), which == "F" ? Twist::F : Twist::G);
        emit(out_path, {s.field, t, {}}, p.h_path);
        return check_module(p.h, t);
      };
    });
  }
  {
    auto* c = app.add_subcommand("tensor", "Tensor product of two modules (or YD modules)");
    c->add_option("files", files)->required()->expected(2);
    add_h(c);
    add_out(c);
    c->callback([&] {
      action = [&] {
        const Pool p = load_pool(files, bialgebra_path);
        if (std::holds_alternative<YDModule>(p.files[0].value) &&
            std::holds_alternative<YDModule>(p.files[1].value)) {
          const YdBase base(p.h);
          const auto ms = yd_modules(p, files);
          YDModule t = yd_tensor(base, ms[0], ms[1]);
          emit(out_path, {p.files[0].field, t, {}}, p.h_path);
          return check_yd(base, t);
        }
        const HModule m = module_of(p.files[0], files[0]), nm = module_of(p.files[1], files[1]);
        HModule t = tensor_module(p.h, m, nm);
        emit(out_path, {p.files[0].field, t, {}}, p.h_path);
        CheckReport rep = check_module(p.h, t);
        rep.absorb(check_twist_compatibility(p.h, m, nm));
        return rep;
      };
    });
  }
  {
    auto* c = app.add_subcommand("braiding", "Braiding c_{U,V} from an R-matrix");
    c->add_option("files", files, "U and V")->required()->expected(2);
    add_h(c);
    c->add_option("--r", r_path)->required();
    add_out(c);
    c->callback([&] {
      action = [&] {
        const Pool p = load_pool(files, bialgebra_path);
        const RMatrix r = as<RMatrix>(load_structure(r_path), r_path, "rmatrix");
        const HModule u = module_of(p.files[0], files[0]), v = module_of(p.files[1], files[1]);
        emit(out_path, {p.h.field(), braiding_from_r(p.h, r, u, v).map, {}});
        return check_braiding_morphism(p.h, r, u, v);
      };
    });
  }
  {
    auto* c = app.add_subcommand(
        "bmap", "Hom-YBE solution from a QT structure (with --r) or from YD modules");
    c->add_option("files", files, "one module (QT), or one or two YD modules")
        ->required()
        ->expected(1, 2);
    add_h(c);
    c->add_option("--r", r_path);
    add_out(c);
    c->callback([&] {
      action = [&] {
        const Pool p = load_pool(files, bialgebra_path);
        if (!r_path.empty()) {
          const RMatrix r = as<RMatrix>(load_structure(r_path), r_path, "rmatrix");
          const HModule m = module_of(p.files[0], files[0]);
          const LinMap b = b_from_qt(p.h, r, m);
          emit(out_path, {p.h.field(), b, {}});
          return check_hom_ybe(b, m.alpha);
        }
        const YdBase base(p.h);
        const auto ms = yd_modules(p, files);
        const YDModule& m = ms.front();
        const YDModule& nm = ms.back();
        emit(out_path, {p.h.field(), b_yd(base, m, nm), {}});
        CheckReport rep = check_b_yd(base, m, nm);
        if (ms.size() == 1) {
          const LinMap b = b_yd(base, m, m);
          rep.absorb(check_mixed_hom_ybe(b, b, b, m.alpha, m.alpha, m.alpha));
        }
        return rep;
      };
    });
  }
  {
    auto* c = app.add_subcommand("ybe", "Hom-Yang-Baxter equation for B on V (x) V");
    c->add_option("--map", map_path)->required();
    c->add_option("--alpha", alpha_path);
    c->add_flag("--classical", classical, "Check the untwisted braid relation instead");
    add_out(c);
    c->callback([&] {
      action = [&] {
        const LinMap b = load_linmap(map_path);
        if (classical) return check_classical_ybe(b);
        if (alpha_path.empty()) throw ParseError("ybe needs --alpha (or --classical)");
        return check_hom_ybe(b, load_linmap(alpha_path));
      };
    });
  }
  {
    auto* c = app.add_subcommand("mixed-ybe", "Hom-YBE for three maps on U, V, W");
    c->add_option("--buv", buv)->required();
    c->add_option("--buw", buw)->required();
    c->add_option("--bvw", bvw)->required();
    c->add_option("--au", au)->required();
    c->add_option("--av", av)->required();
    c->add_option("--aw", aw)->required();
    add_out(c);
    c->callback([&] {
      action = [&] {
        return check_mixed_hom_ybe(load_linmap(buv), load_linmap(buw), load_linmap(bvw),
                                   load_linmap(au), load_linmap(av), load_linmap(aw));
      };
    });
  }
  {
    auto* c = app.add_subcommand("hexagons", "Hexagon identities for the braiding on U, V, W");
    c->add_option("files", files, "U V W")->required()->expected(3);
    add_h(c);
    c->add_option("--r", r_path, "R-matrix; without it the modules must be YD modules");
    add_out(c);
    c->callback([&] {
      action = [&] {
        const Pool p = load_pool(files, bialgebra_path);
        if (!r_path.empty()) {
          const RMatrix r = as<RMatrix>(load_structure(r_path), r_path, "rmatrix");
          return check_hexagon_instances(p.h, r, module_of(p.files[0], files[0]),
                                         module_of(p.files[1], files[1]),
                                         module_of(p.files[2], files[2]));
        }
        const auto ms = yd_modules(p, files);
        return check_yd_hexagon_instances(YdBase(p.h), ms[0], ms[1], ms[2]);
      };
    });
  }
  {
    auto* d = app.add_subcommand("dehomify", "Classical constraints b and c from YD modules");
    d->require_subcommand(1);
    const auto family = [&](const Pool& p) {
      YdFamily fam{YdBase(p.h)};
      const auto ms = yd_modules(p, files);
      for (std::size_t i = 0; i < ms.size(); ++i) fam.add_module("M" + std::to_string(i), ms[i]);
      return fam;
    };
    auto* pent = d->add_subcommand("pentagon", "Pentagon for b over U, V, W, X");
    pent->add_option("files", files)->required()->expected(4);
    add_h(pent);
    add_out(pent);
    pent->callback([&, family] {
      action = [&, family] {
        YdFamily fam = family(load_pool(files, bialgebra_path));
        fam.prepare_pentagon("M0", "M1", "M2", "M3");
        return check_pentagon(fam.family(), "M0", "M1", "M2", "M3");
      };
    });
    auto* hex = d->add_subcommand("hexagons", "Both hexagons for (b, c) over U, V, W");
    hex->add_option("files", files)->required()->expected(3);
    add_h(hex);
    add_out(hex);
    hex->callback([&, family] {
      action = [&, family] {
        YdFamily fam = family(load_pool(files, bialgebra_path));
        fam.prepare_hexagons("M0", "M1", "M2");
        return check_hexagons(fam.family(), "M0", "M1", "M2");
      };
    });
    auto* cross = d->add_subcommand("cross-check", "c built from B against the quasi-braiding");
    cross->add_option("files", files)->required()->expected(2);
    add_h(cross);
    add_out(cross);
    cross->callback([&] {
      action = [&] {
        const Pool p = load_pool(files, bialgebra_path);
        const auto ms = yd_modules(p, files);
        return cross_check_yd(YdBase(p.h), ms[0], ms[1]);
      };
    });
  }
  {
    auto* g = app.add_subcommand("gen", "Generate example structures");
    g->require_subcommand(1);
    auto* grp = g->add_subcommand("group-bialgebra", "k[Z_n] twisted by g -> g^k");
    grp->add_option("--n", n)->required();
    grp->add_option("--k", k);
    grp->add_option("--field", field_text, "Q or a prime p");
    add_out(grp);
    grp->callback([&] {
      action = [&] {
        const Field f = field_arg(field_text);
        GeneratedBialgebra g = gen_group_bialgebra(n, k, f);
        emit(out_path, {f, g.bialgebra, {}});
        return g.report;
      };
    });
    auto* qt = g->add_subcommand("kz2-qt", "k[Z_2] with its nontrivial triangular structure");
    qt->add_option("--field", field_text, "Q or an odd prime");
    add_out(qt);
    qt->add_option("--r-out", r_out, "Write the R-matrix here");
    qt->callback([&] {
      action = [&] {
        const Field f = field_arg(field_text);
        auto [h, r] = gen_kz2_qt(f);
        emit(out_path, {f, h, {}});
        if (!r_out.empty()) {
          StructureFile rs{f, r, {}};
          if (!out_path.empty()) rs.parent = relative_parent(fs::absolute(out_path), r_out);
          save_structure(r_out, rs);
        }
        return check_r_conditions(h, r);
      };
    });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string command = join(args);
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const CheckReport rep = action();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const json report = report_to_json(rep, command, ms);
    out << report.dump(2) << "\n";
    // Check commands have no artifact, so --out keeps the report instead.
    if (!out_path.empty() && args.front() == "check") write_text_file(out_path, report.dump(2) + "\n");

    std::vector<std::string> failing;
    for (const auto& a : rep.axioms())
      if (!a.pass) failing.push_back(a.id);
    if (failing.empty()) {
      err << command << ": pass (" << rep.axioms().size() << " axioms)\n";
      return 0;
    }
    err << command << ": FAIL " << join(failing) << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what();
    if (!e.failed().empty()) err << " [" << join(e.failed()) << "]";
    err << "\n";
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace homcat
