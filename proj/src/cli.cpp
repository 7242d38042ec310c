#include "morseforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "morseforge/checks.hpp"
#include "morseforge/io.hpp"

namespace morseforge {

namespace {

using nlohmann::json;

const char* usage_text =
    "usage: morseforge <verb> [args]\n"
    "\n"
    "  gen <family> <params...> [--leaf]   families: path t | cycle n |\n"
    "                                      boundary_simplex n | full_simplex n |\n"
    "                                      star k | centipede v | leafify <in>\n"
    "  morse <in>       Morse complex of a complex\n"
    "  pure <in>        pure Morse complex (maximum facets only)\n"
    "  f <in.poset>     Morse complex of a poset\n"
    "  core <in>        core and collapse trace\n"
    "  sc <in>          strong collapsibility, core size, trace\n"
    "  betti <in> [--coeff z2|z]\n"
    "  aut <in>         automorphism group order and generators\n"
    "  alg1 <in> [--exact]  height-2 pattern scan (heuristic)\n"
    "  check <id|all>   run a named acceptance check\n"
    "\n"
    "Inputs are .cplx/.poset text or the JSON this tool emits; '-' is stdin.\n"
    "MORSEFORGE_SIMPLEX_BUDGET overrides the enumeration cap.\n";

long long simplex_budget() {
  if (const char* env = std::getenv("MORSEFORGE_SIMPLEX_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return default_simplex_budget;
}

SimplicialComplex load_complex(const std::string& path, std::istream& in) {
  if (path == "-") return read_complex(in);
  std::ifstream file(path);
  if (!file) fail(errc::bad_parameter, "cannot open '" + path + "'");
  return read_complex(file);
}

Poset load_poset(const std::string& path, std::istream& in) {
  if (path == "-") return read_poset(in);
  std::ifstream file(path);
  if (!file) fail(errc::bad_parameter, "cannot open '" + path + "'");
  return read_poset(file);
}

int with_usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n\n" << usage_text;
  return 2;
}

int cmd_gen(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  if (args.empty()) return with_usage_error(err, "gen needs a family");
  const std::string& family = args[0];
  bool leaf = false;
  std::vector<std::string> params;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--leaf")
      leaf = true;
    else
      params.push_back(args[i]);
  }
  SimplicialComplex k = [&]() {
    if (family == "leafify") {
      if (params.size() != 1) fail(errc::bad_parameter, "leafify needs an input complex");
      return leafify(load_complex(params[0], in));
    }
    if (params.size() != 1) fail(errc::bad_parameter, family + " needs one integer parameter");
    int p = std::atoi(params[0].c_str());
    if (family == "path") return path_complex(p);
    if (family == "cycle") return cycle_complex(p);
    if (family == "boundary_simplex") return boundary_simplex(p);
    if (family == "full_simplex") return full_simplex(p);
    if (family == "star") return star_complex(p);
    if (family == "centipede") return centipede(p);
    fail(errc::bad_parameter, "unknown family '" + family + "'");
  }();
  if (leaf) k = attach_leaf(k, 0);
  out << to_json(k).dump() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  if (args.empty()) {
    err << usage_text;
    return 2;
  }
  const std::string& verb = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());
  try {
    if (verb == "help" || verb == "--help" || verb == "-h") {
      out << usage_text;
      return 0;
    }
    if (verb == "gen") return cmd_gen(rest, in, out, err);
    if (verb == "check") {
      if (rest.size() != 1) return with_usage_error(err, "check needs an id or 'all'");
      std::vector<CheckResult> results;
      if (rest[0] == "all")
        results = run_all_checks();
      else
        results.push_back(run_check(rest[0]));
      bool all_ok = true;
      for (const CheckResult& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.detail << "\n";
        all_ok = all_ok && r.passed;
      }
      json summary{{"passed", all_ok}};
      out << summary.dump() << "\n";
      return all_ok ? 0 : 1;
    }

    if (rest.empty()) return with_usage_error(err, verb + " needs an input");
    const std::string& path = rest[0];

    if (verb == "morse") {
      out << to_json(morse_complex(load_complex(path, in), simplex_budget())).dump() << "\n";
      return 0;
    }
    if (verb == "pure") {
      out << to_json(pure_morse_complex(load_complex(path, in), simplex_budget())).dump() << "\n";
      return 0;
    }
    if (verb == "f") {
      out << to_json(morse_of_poset(load_poset(path, in), simplex_budget())).dump() << "\n";
      return 0;
    }
    if (verb == "core") {
      CoreResult r = core(load_complex(path, in));
      json j{{"core", to_json(r.core)}, {"trace", to_json(r.trace)}};
      out << j.dump() << "\n";
      return 0;
    }
    if (verb == "sc") {
      CoreResult r = core(load_complex(path, in));
      json j{{"strongly_collapsible", r.core.vertex_count() == 1},
             {"core_size", r.core.vertex_count()},
             {"trace", to_json(r.trace)}};
      out << j.dump() << "\n";
      return 0;
    }
    if (verb == "betti") {
      Coefficients coeff = Coefficients::z2;
      if (rest.size() >= 3 && rest[1] == "--coeff") {
        if (rest[2] == "z") coeff = Coefficients::integers;
        else if (rest[2] != "z2") return with_usage_error(err, "--coeff takes z2 or z");
      }
      SimplicialComplex k = load_complex(path, in);
      out << to_json(reduced_betti(k, coeff), k.euler_characteristic()).dump() << "\n";
      return 0;
    }
    if (verb == "aut") {
      out << to_json(automorphism_group(load_complex(path, in))).dump() << "\n";
      return 0;
    }
    if (verb == "alg1") {
      bool exact = false;
      std::string catalog_path;
      for (std::size_t i = 1; i < rest.size(); ++i) {
        if (rest[i] == "--exact")
          exact = true;
        else if (rest[i] == "--catalog" && i + 1 < rest.size())
          catalog_path = rest[++i];
      }
      SimplicialComplex k = load_complex(path, in);
      PatternCatalog catalog;
      if (catalog_path.empty()) {
        catalog = builtin_catalog();
      } else {
        std::ifstream file(catalog_path);
        if (!file) fail(errc::bad_parameter, "cannot open '" + catalog_path + "'");
        catalog = read_catalog(file);
      }
      Alg1Report r = algorithm1(k, catalog);
      json j{{"pattern_found", r.matched},
             {"pattern", r.matched ? json(r.pattern) : json()},
             {"truncated", r.truncated},
             {"note", "a match is heuristic evidence, not a proof"}};
      if (exact)
        j["exact"] = is_strongly_collapsible(morse_complex(k, simplex_budget()).complex);
      out << j.dump() << "\n";
      return 0;
    }
    return with_usage_error(err, "unknown verb '" + verb + "'");
  } catch (const error& e) {
    json j{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
    out << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json j{{"error", {{"code", "Error"}, {"message", e.what()}}}};
    out << j.dump() << "\n";
    return 1;
  }
}

}  // namespace morseforge
