// Command-line front end to the acta library.

#include <chrono>    // for system_clock
#include <ctime>     // for gmtime_r, strftime
#include <iomanip>   // for setw
#include <iostream>  // for cout, cerr
#include <sstream>   // for ostringstream
#include <string>    // for string
#include <vector>    // for vector

#include <CLI11.hpp>

#include "acta/act.hpp"
#include "acta/classify.hpp"
#include "acta/cogeneration.hpp"
#include "acta/congruence.hpp"
#include "acta/io.hpp"
#include "acta/structure.hpp"
#include "acta/universe.hpp"

namespace {

  using acta::Act;
  using acta::index_t;
  using acta::io::json;

  constexpr char const* VERSION = "0.1.0";

  enum Exit { OK = 0, INVALID = 1, USAGE = 2, IO = 3 };

  struct Options {
    bool json    = false;
    bool no_meta = false;
  };

  void meta_line(Options const& opt, std::string const& command) {
    if (opt.json || opt.no_meta) {
      return;
    }
    auto const  now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm     tm{};
    char        stamp[32];
    gmtime_r(&now, &tm);
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm);
    std::cout << "# acta " << VERSION << " " << command << " " << stamp << "\n";
  }

  std::string set_of(Act const& A, std::vector<index_t> const& elements) {
    std::string out = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
      out += (i ? ", " : "") + A.name(elements[i]);
    }
    return out + "}";
  }

  std::string subact_text(Act const& A, std::optional<acta::Subact> const& B) {
    return B ? set_of(A, B->elements) : std::string("absent");
  }

  std::string partition_text(Act const& A, acta::Congruence const& theta) {
    std::string out;
    for (auto const& c : theta.classes()) {
      out += (out.empty() ? "" : " | ") + set_of(A, c);
    }
    return out;
  }

  std::string yes_no(bool b) {
    return b ? "yes" : "no";
  }

  void print_json(json const& j) {
    std::cout << j.dump(2) << "\n";
  }

  std::string monoid_text(acta::Monoid const& M) {
    std::ostringstream out;
    out << "monoid of order " << M.size() << ", identity " << M.name(M.identity());
    if (auto z = M.zero()) {
      out << ", zero " << M.name(*z);
    } else {
      out << ", no zero";
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  int cmd_validate(Options const& opt, std::vector<std::string> const& paths) {
    meta_line(opt, "validate");
    json results = json::array();
    int  code    = OK;
    for (auto const& path : paths) {
      json entry;
      entry["path"] = path;
      try {
        json const doc = acta::io::read_json(path);
        if (acta::io::is_act_document(doc)) {
          Act const A   = acta::io::act_from_json(doc, std::filesystem::path(path).parent_path());
          entry["kind"] = "act";
          entry["size"] = A.size();
          if (!opt.json) {
            std::cout << path << ": valid act of size " << A.size() << " over a "
                      << monoid_text(A.monoid()) << "\n";
          }
        } else {
          auto const M  = acta::io::monoid_from_json(doc);
          entry["kind"] = "monoid";
          entry["size"] = M.size();
          if (!opt.json) {
            std::cout << path << ": valid " << monoid_text(M) << "\n";
          }
        }
        entry["valid"] = true;
      } catch (acta::Error const& e) {
        entry["valid"]   = false;
        entry["error"]   = acta::to_string(e.kind());
        entry["message"] = e.what();
        entry["witness"] = e.witness();
        int const c      = e.kind() == acta::ErrorKind::Parse ? USAGE
                           : e.kind() == acta::ErrorKind::Io  ? IO
                                                              : INVALID;
        code             = std::max(code, c);
        if (!opt.json) {
          std::cout << path << ": " << e.what() << "\n";
        }
      }
      results.push_back(entry);
    }
    if (opt.json) {
      print_json(results);
    }
    return code;
  }

  json lattice_json(Act const& A) {
    auto const all       = acta::all_congruences(A);
    auto const principal = acta::principal_congruences(A);
    auto const minimal   = acta::minimal_congruences(A);
    auto const mono      = acta::monolith(A);
    json       result;
    result["size"]      = all.size();
    result["principal"] = principal.size();
    json atoms          = json::array();
    for (auto const& c : minimal) {
      atoms.push_back(acta::io::to_json(c));
    }
    result["minimal"]  = atoms;
    result["monolith"] = mono ? acta::io::to_json(*mono) : json(nullptr);
    return result;
  }

  std::string list_text(Act const& A, std::vector<acta::Subact> const& list) {
    if (list.empty()) {
      return "none";
    }
    std::string result;
    for (auto const& B : list) {
      result += (result.empty() ? "" : " ") + set_of(A, B.elements);
    }
    return result;
  }

  void print_structure(Act const& A, acta::StructureReport const& r) {
    std::cout << "socle:                " << subact_text(A, r.socle) << "\n";
    std::cout << "S(A):                 "
              << (r.s_socle ? set_of(A, r.s_socle->elements) : std::string("undefined (no zero)"))
              << "\n";
    std::cout << "radical:              " << subact_text(A, r.radical) << "\n";
    std::cout << "maximal subacts:      ";
    std::cout << list_text(A, r.maximal_subacts);
    std::cout << "\nlarge subacts:        ";
    std::cout << list_text(A, r.large_subacts);
    std::cout << "\ntheta-simple subacts: ";
    std::cout << list_text(A, r.theta_simple_subacts);
    std::cout << "\n";
  }

  void print_classification(Act const& A, acta::Classification const& c) {
    auto row = [](std::string const& name, std::string const& value) {
      std::cout << "  " << std::left << std::setw(28) << name << value << "\n";
    };
    row("faithful", yes_no(c.faithful));
    row("cofaithful", c.cofaithful ? "yes, n = " + std::to_string(*c.cofaithful_n) + ", set "
                                         + set_of(A, *c.cofaithful)
                                   : std::string("no"));
    row("subgenerator",
        c.subgenerator ? "yes, element " + A.name(*c.subgenerator) : std::string("no"));
    row("generator", yes_no(c.generator));
    row("subdirectly irreducible", yes_no(c.subdirectly_irreducible));
    row("irreducible", yes_no(c.irreducible));
    row("finitely cogenerated", yes_no(c.finitely_cogenerated)
                                    + (c.finitely_cogenerated_trivial ? " (finite act)" : ""));
    row("finitely Rees cogenerated",
        yes_no(c.finitely_rees_cogenerated)
            + (c.finitely_rees_cogenerated_trivial ? " (finite act)" : ""));
  }

  int cmd_analyze(Options const& opt, std::string const& path) {
    Act const  A = acta::io::load_act(path);
    auto const s = acta::structure_report(A);
    auto const c = acta::classification_report(A);
    auto const l = lattice_json(A);
    if (opt.json) {
      json result;
      result["act"]            = acta::io::to_json(A);
      result["structure"]      = acta::io::to_json(s, A);
      result["classification"] = acta::io::to_json(c, A);
      result["lattice"]        = l;
      print_json(result);
      return OK;
    }
    meta_line(opt, "analyze");
    std::cout << "act of size " << A.size() << " over a " << monoid_text(A.monoid()) << "\n\n";
    std::cout << "structure\n";
    print_structure(A, s);
    std::cout << "\nclassification\n";
    print_classification(A, c);
    std::cout << "\ncongruence lattice\n";
    std::cout << "  congruences: " << l["size"].get<std::size_t>() << "\n";
    std::cout << "  principal:   " << l["principal"].get<std::size_t>() << "\n";
    std::cout << "  minimal:     " << l["minimal"].size() << "\n";
    auto const mono = acta::monolith(A);
    std::cout << "  monolith:    " << (mono ? partition_text(A, *mono) : std::string("none"))
              << "\n";
    return OK;
  }

  int cmd_congruences(Options const& opt, std::string const& path) {
    Act const  A   = acta::io::load_act(path);
    auto const all = acta::all_congruences(A);
    if (opt.json) {
      json list = json::array();
      for (auto const& c : all) {
        list.push_back(acta::io::to_json(c));
      }
      json result;
      result["congruences"] = list;
      result["lattice"]     = lattice_json(A);
      print_json(result);
      return OK;
    }
    meta_line(opt, "congruences");
    std::cout << all.size() << " congruences\n";
    for (auto const& c : all) {
      std::cout << "  " << partition_text(A, c) << "\n";
    }
    return OK;
  }

  int cmd_socle(Options const& opt, std::string const& path) {
    Act const  A = acta::io::load_act(path);
    auto const r = acta::structure_report(A);
    if (opt.json) {
      json result;
      result["socle"]         = r.socle ? acta::io::to_json(*r.socle, A) : json(nullptr);
      result["s_socle"]       = r.s_socle ? acta::io::to_json(*r.s_socle, A) : json(nullptr);
      result["large_subacts"] = acta::io::to_json(r, A)["large_subacts"];
      result["theta_simple_subacts"] = acta::io::to_json(r, A)["theta_simple_subacts"];
      print_json(result);
      return OK;
    }
    meta_line(opt, "socle");
    print_structure(A, r);
    return OK;
  }

  int cmd_radical(Options const& opt, std::string const& path) {
    Act const  A = acta::io::load_act(path);
    auto const r = acta::radical(A);
    if (opt.json) {
      json result;
      result["radical"] = r.radical ? acta::io::to_json(*r.radical, A) : json(nullptr);
      json maximal      = json::array();
      for (auto const& B : r.maximal_subacts) {
        maximal.push_back(acta::io::to_json(B, A));
      }
      result["maximal_subacts"] = maximal;
      print_json(result);
      return OK;
    }
    meta_line(opt, "radical");
    std::cout << "radical:         " << subact_text(A, r.radical) << "\n";
    std::cout << "maximal subacts: ";
    std::cout << list_text(A, r.maximal_subacts);
    std::cout << "\n";
    return OK;
  }

  int cmd_cotrace(Options const& opt, std::string const& path,
                  std::vector<std::string> const& class_paths) {
    Act const        A = acta::io::load_act(path);
    std::vector<Act> Cs;
    for (auto const& p : class_paths) {
      Cs.push_back(acta::io::load_act(p));
    }
    auto const result  = acta::cotrace_with_separators(A, Cs);
    auto const witness = acta::cogenerates(Cs, A);
    if (opt.json) {
      json out;
      out["cotrace"]     = acta::io::to_json(result.cotrace);
      out["cogenerated"] = witness.has_value();
      out["witness"]     = witness ? acta::io::to_json(*witness) : json(nullptr);
      print_json(out);
      return OK;
    }
    meta_line(opt, "cotrace");
    std::cout << "cotrace:     " << partition_text(A, result.cotrace) << "\n";
    std::cout << "cogenerated: " << yes_no(witness.has_value()) << "\n";
    if (witness) {
      std::cout << "witness homs: " << witness->family.size() << "\n";
      for (std::size_t i = 0; i < witness->family.size(); ++i) {
        std::cout << "  into class member " << witness->targets[i] << ":";
        for (auto x : witness->family[i].map) {
          std::cout << " " << Cs[witness->targets[i]].name(x);
        }
        std::cout << "\n";
      }
    }
    return OK;
  }

  int cmd_homs(Options const& opt, std::string const& source, std::string const& target) {
    Act const  A    = acta::io::load_act(source);
    Act const  B    = acta::io::load_act(target);
    auto const homs = acta::enumerate_homs(A, B);
    if (opt.json) {
      json list = json::array();
      for (auto const& h : homs) {
        list.push_back(acta::io::to_json(h));
      }
      print_json(list);
      return OK;
    }
    meta_line(opt, "homs");
    std::cout << homs.size() << " homomorphisms\n";
    for (auto const& h : homs) {
      std::cout << " ";
      for (index_t a = 0; a < A.size(); ++a) {
        std::cout << " " << A.name(a) << "->" << B.name(h.map[a]);
      }
      std::cout << (h.injective ? "  injective" : "") << (h.surjective ? "  surjective" : "")
                << "\n";
    }
    return OK;
  }

  int cmd_classify(Options const& opt, std::string const& path) {
    Act const  A = acta::io::load_act(path);
    auto const c = acta::classification_report(A);
    if (opt.json) {
      print_json(acta::io::to_json(c, A));
      return OK;
    }
    meta_line(opt, "classify");
    print_classification(A, c);
    return OK;
  }

  struct UniverseArgs {
    std::size_t              max_monoid = 3;
    std::size_t              max_act    = 4;
    std::vector<std::string> claims;
    std::string              report;
    std::size_t              jobs       = 1;
    bool                     no_named   = false;
  };

  int cmd_universe(Options const& opt, UniverseArgs const& args) {
    acta::UniverseOptions options;
    options.max_monoid    = args.max_monoid;
    options.max_act       = args.max_act;
    options.include_named = !args.no_named;
    auto const U          = acta::build_universe(options);
    auto const results    = acta::run_claims(U, args.claims, args.jobs);
    json const report     = acta::io::report_json(U, results);
    if (!args.report.empty()) {
      acta::io::write_json(args.report, report);
    }
    if (opt.json) {
      print_json(report);
    } else {
      meta_line(opt, "universe");
      std::size_t acts = 0;
      for (auto const& list : U.acts) {
        acts += list.size();
      }
      std::cout << U.monoids.size() << " monoids, " << acts << " acts\n\n";
      std::cout << std::left << std::setw(34) << "claim" << std::setw(8) << "mode"
                << std::right << std::setw(10) << "checked" << std::setw(11) << "confirmed"
                << std::setw(10) << "skipped" << std::setw(12) << "violations" << "\n";
      for (auto const& r : results) {
        std::cout << std::left << std::setw(34) << r.claim << std::setw(8)
                  << acta::to_string(r.mode) << std::right << std::setw(10) << r.checked
                  << std::setw(11) << r.confirmed << std::setw(10) << r.skipped
                  << std::setw(12) << r.violations.size() << "\n";
      }
      for (auto const& r : results) {
        if (!r.violations.empty()) {
          auto const& v = r.violations.front();
          std::cout << "\nfirst " << r.claim << " violation: monoid "
                    << json(v.monoid).dump() << ", act " << json(v.act).dump() << "\n  "
                    << v.details << "\n";
        }
      }
    }
    return acta::has_hard_violation(results) ? INVALID : OK;
  }

  int cmd_counterexample(Options const& opt, std::string const& id, UniverseArgs const& args) {
    acta::UniverseOptions options;
    options.max_monoid    = args.max_monoid;
    options.max_act       = args.max_act;
    options.include_named = !args.no_named;
    auto const found      = acta::find_counterexample(id, options);
    if (opt.json) {
      json out;
      out["id"]             = id;
      out["counterexample"] = found ? acta::io::to_json(*found) : json(nullptr);
      print_json(out);
      return OK;
    }
    meta_line(opt, "counterexample");
    if (!found) {
      std::cout << id << ": none within monoid order " << args.max_monoid << ", act size "
                << args.max_act << "\n";
      return OK;
    }
    std::cout << id << ": found\n";
    std::cout << "  monoid " << json(found->monoid.table()).dump() << "\n";
    std::cout << "  act    " << json(found->act.table()).dump() << "\n";
    std::cout << "  " << found->details << "\n";
    return OK;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite monoid acts: structure, classification and claim checking"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Print JSON instead of text");
  app.add_flag("--no-meta", opt.no_meta, "Omit the metadata line from text output");
  app.set_version_flag("--version", VERSION);

  std::vector<std::string> paths;
  std::string              act_path, target_path, claim_id;
  std::vector<std::string> class_paths;
  UniverseArgs             uargs;

  auto* validate = app.add_subcommand("validate", "Parse and validate monoid or act files");
  validate->add_option("paths", paths, "Files to check")->required();

  auto add_act = [&](char const* name, char const* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("act", act_path, "Act file")->required();
    return sub;
  };
  auto* analyze     = add_act("analyze", "Structure, classification and lattice summary");
  auto* congruences = add_act("congruences", "List every congruence");
  auto* socle       = add_act("socle", "Socle, S(A) and large subacts");
  auto* radical     = add_act("radical", "Radical and maximal subacts");
  auto* classify    = add_act("classify", "Faithful, cofaithful, generator and related tests");
  auto* cotrace     = add_act("cotrace", "Cotrace of a class of acts in an act");
  cotrace->add_option("--class", class_paths, "Acts forming the class")->required();
  auto* homs = app.add_subcommand("homs", "List the homomorphisms between two acts");
  homs->add_option("source", act_path, "Source act file")->required();
  homs->add_option("target", target_path, "Target act file")->required();

  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--max-monoid", uargs.max_monoid, "Largest monoid order");
    sub->add_option("--max-act", uargs.max_act, "Largest act size");
    sub->add_flag("--no-named", uargs.no_named, "Leave out the named order 4 semilattice");
  };
  auto* universe = app.add_subcommand("universe", "Check the registered claims on a universe");
  add_bounds(universe);
  universe->add_option("--claims", uargs.claims, "Claims to run (comma separated)")
      ->delimiter(',');
  universe->add_option("--report", uargs.report, "Write the JSON report here");
  universe->add_option("--jobs", uargs.jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* counter = app.add_subcommand("counterexample", "Search for a separating instance");
  counter->add_option("id", claim_id, "Counterexample id")->required();
  add_bounds(counter);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return USAGE;
  }

  try {
    if (*validate) {
      return cmd_validate(opt, paths);
    }
    if (*analyze) {
      return cmd_analyze(opt, act_path);
    }
    if (*congruences) {
      return cmd_congruences(opt, act_path);
    }
    if (*socle) {
      return cmd_socle(opt, act_path);
    }
    if (*radical) {
      return cmd_radical(opt, act_path);
    }
    if (*classify) {
      return cmd_classify(opt, act_path);
    }
    if (*cotrace) {
      return cmd_cotrace(opt, act_path, class_paths);
    }
    if (*homs) {
      return cmd_homs(opt, act_path, target_path);
    }
    if (*universe) {
      return cmd_universe(opt, uargs);
    }
    if (*counter) {
      return cmd_counterexample(opt, claim_id, uargs);
    }
  } catch (acta::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case acta::ErrorKind::Parse:
      case acta::ErrorKind::UnknownClaim: return USAGE;
      case acta::ErrorKind::Io: return IO;
      default: return INVALID;
    }
  }
  return USAGE;
}
