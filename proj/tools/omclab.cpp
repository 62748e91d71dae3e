// omclab command line front end. Talks to the library only through the C API.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "omclab/omclab.h"

#ifndef OMCLAB_FIXTURE_DIR
#define OMCLAB_FIXTURE_DIR "fixtures"
#endif

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;

struct Common {
  bool json = false;
  bool verify = false;
  bool timing = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t max_face_dim() {
  const char* env = std::getenv("OMCLAB_MAX_DIM");
  if (!env || !*env) return 6;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0') throw CLI::ValidationError("OMCLAB_MAX_DIM must be a nonnegative integer");
  return v;
}

omc_input_kind parse_kind(const std::string& k) {
  if (k == "matrix") return OMC_INPUT_MATRIX;
  if (k == "digraph") return OMC_INPUT_DIGRAPH;
  if (k == "polytope") return OMC_INPUT_POLYTOPE;
  return OMC_INPUT_AUTO;
}

std::string poly_text(const Json& coeffs, const std::string& var) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::string c = coeffs[i].get<std::string>();
    if (c == "0") continue;
    const bool neg = c.front() == '-';
    if (neg) c.erase(0, 1);
    if (!s.empty() || neg) s += neg ? (s.empty() ? "-" : " - ") : " + ";
    if (i == 0) s += c;
    else if (c == "1") s += var + (i > 1 ? "^" + std::to_string(i) : "");
    else s += (c.find('/') != std::string::npos ? "(" + c + ")" : c) + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s.empty() ? "0" : s;
}

std::string list_text(const Json& a) {
  std::string s;
  for (const auto& x : a) {
    if (!s.empty()) s += ", ";
    s += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return s;
}

std::string vec_text(const Json& a) { return "(" + list_text(a) + ")"; }

void print_checks(const Json& r) {
  if (!r.contains("checks")) return;
  for (const auto& c : r["checks"]) {
    std::cout << (c["passed"].get<bool>() ? "[pass] " : "[FAIL] ") << c["name"].get<std::string>();
    if (c.contains("detail")) std::cout << "  " << c["detail"].dump();
    std::cout << "\n";
  }
}

void print_circuits(const Json& r) {
  const bool dual = r["dual"].get<bool>();
  std::cout << r["count"].get<std::size_t>() << (dual ? " cocircuits" : " circuits") << " on "
            << r["ground_size"].get<std::size_t>() << " elements\n";
  for (const auto& c : r["circuits"])
    std::cout << "  " << c["signs"].get<std::string>() << "  " << c["sets"].get<std::string>() << "\n";
}

void print_polytope(const Json& r) {
  std::cout << "vertices " << r["vertex_count"] << ", ambient dimension " << r["ambient_dim"] << ", dimension "
            << r["dimension"] << "\n";
  const std::string what = r["what"];
  if (what == "facets") {
    std::cout << "facets " << r["facet_count"] << "\n";
    for (const auto& f : r["hrep"]["ineqs"])
      std::cout << "  " << vec_text(f["a"]) << " . x <= " << f["b"].get<std::string>() << "   ("
                << f["vertex_indices"].size() << " vertices)\n";
    for (const auto& e : r["hrep"]["eqs"])
      std::cout << "  " << vec_text(e["a"]) << " . x  = " << e["b"].get<std::string>() << "\n";
  } else if (what == "faces") {
    std::cout << "f-vector " << vec_text(r["f_vector"]) << "\n";
  } else if (what == "ehrhart") {
    std::cout << "L(t) = " << poly_text(r["ehrhart"], "t") << "\n";
    std::cout << "h*(z) = " << poly_text(r["h_star"], "z") << "\n";
  } else if (what == "hstar") {
    std::cout << "h*(z) = " << poly_text(r["h_star"], "z") << "\n";
  } else if (what == "count") {
    std::cout << "L(" << r["t"] << ") = " << r["count"].get<std::string>() << "\n";
  }
}

void print_family(const Json& r) {
  const std::string what = r["what"];
  const std::size_t n = r["n"];
  if (what == "vertices") {
    std::cout << r["count"] << " vertices of P_" << n - 1 << "\n";
    for (const auto& v : r["vertices"])
      std::cout << "  I = {" << list_text(v["I"]) << "}  u = " << vec_text(v["u"]) << "  u_hat = " << vec_text(v["u_hat"])
                << "\n";
  } else if (what == "fpoly") {
    std::cout << "f(t) = " << poly_text(r["f_poly"], "t") << "\n";
  } else if (what == "ehrhart") {
    std::cout << "L(t) = " << poly_text(r["ehrhart"], "t") << "\n";
    std::cout << "h*(z) = " << poly_text(r["h_star"], "z") << "   over (1-z)^" << r["series_denominator_exponent"]
              << "\n";
  } else if (what == "faces") {
    std::cout << r["count"] << " proper faces\n";
    for (const auto& f : r["faces"])
      std::cout << "  dim " << f["dim"] << "  S = {" << list_text(f["S"]) << "}  T = {" << list_text(f["T"]) << "}\n";
  } else {
    std::cout << "symmetric edge polytope vertices " << r["sep_vertex_count"] << ", dual vertices "
              << r["dual_vertex_count"] << "\n";
  }
}

std::string series_text(const Json& s) {
  std::string num, den;
  for (const auto& f : s["numerator_factors"]) {
    const std::string p = poly_text(f, "z");
    if (p != "1") num += "(" + p + ")";
  }
  if (num.empty()) num = "1";
  for (const auto& l : s["denominator_cycle_lengths"]) {
    const std::size_t k = l;
    den += k == 1 ? "(1 - z)" : "(1 - z^" + std::to_string(k) + ")";
  }
  return num + " / " + den;
}

void print_equivariant(const Json& r) {
  if (r.contains("rows")) {
    std::cout << "cycle type | class | L(t) | sum chi z^t | H*[z]\n";
    for (const auto& row : r["rows"])
      std::cout << vec_text(row["cycle_type"]) << " | " << row["class_size"] << " | "
                << poly_text(row["fixed_ehrhart"], "t") << " | " << series_text(row["series"]) << " | "
                << poly_text(row["h_star_series"], "z") << "\n";
    return;
  }
  std::cout << "sigma " << r["sigma"]["cycles"].get<std::string>() << "  cycle type " << vec_text(r["cycle_type"])
            << "\n";
  std::cout << "fixed polytope vertices " << r["fixed_polytope"]["vertices"].size() << "\n";
  std::cout << "L(t) = " << poly_text(r["fixed_ehrhart"], "t") << "\n";
  std::cout << "det(I - M z) = " << poly_text(r["det_reduced"], "z") << "\n";
  std::cout << "sum chi z^t = " << series_text(r["series"]) << "\n";
  std::cout << "H*[z] = " << poly_text(r["h_star_series"], "z") << "\n";
}

int exit_code(omc_status s) {
  switch (s) {
    case OMC_OK: return 0;
    case OMC_ERR_PARSE: return 2;
    case OMC_ERR_GUARD: return 3;
    case OMC_ERR_MISMATCH: return 4;
    case OMC_ERR_DOMAIN: return 5;
    default: return 1;
  }
}

template <typename Call, typename Print>
int run(const Common& common, Call&& call, Print&& print) {
  const auto start = std::chrono::steady_clock::now();
  char* out = nullptr;
  const omc_status status = call(&out);
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (out) {
    const std::string text(out);
    omc_string_free(out);
    if (common.json) {
      if (common.timing) {
        Json j = Json::parse(text);
        j["timing_ms"] = elapsed;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << text << "\n";
      }
    } else {
      const Json j = Json::parse(text);
      print(j);
      print_checks(j);
      if (common.timing) std::cout << "time " << elapsed << " ms\n";
    }
  }
  if (status != OMC_OK) {
    std::cerr << "omclab: " << omc_status_name(status) << ": " << omc_last_error() << "\n";
  }
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented matroid circuit polytopes with exact arithmetic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(omc_version()));
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "print the JSON report");
    sub->add_flag("--verify", common.verify, "run the matching brute-force cross-checks");
    sub->add_flag("--timing", common.timing, "report wall-clock time (not part of the default output)");
  };

  std::string input, kind = "auto", what, sigma, fixtures = OMCLAB_FIXTURE_DIR;
  bool dual = false, all = false;
  unsigned t = 1, n = 0;

  auto* circuits = app.add_subcommand("circuits", "list circuits or cocircuits with axiom validation");
  circuits->add_option("input", input, "matrix (JSON or CSV) or digraph JSON; '-' for stdin")->required();
  circuits->add_flag("--dual", dual, "cocircuits instead of circuits");
  circuits->add_option("--kind", kind, "input kind")->check(CLI::IsMember({"auto", "matrix", "digraph"}));
  add_common(circuits);

  auto* polytope = app.add_subcommand("polytope", "OMC polytope computations");
  polytope->add_option("input", input, "matrix, digraph or polytope JSON; '-' for stdin")->required();
  polytope->add_flag("--dual", dual, "use cocircuits");
  polytope->add_option("--kind", kind, "input kind")
      ->check(CLI::IsMember({"auto", "matrix", "digraph", "polytope"}));
  polytope->add_option("--what", what, "quantity to compute")
      ->check(CLI::IsMember({"dim", "facets", "faces", "ehrhart", "hstar", "count"}))
      ->default_val("dim");
  polytope->add_option("--t", t, "dilation factor for --what count");
  add_common(polytope);

  auto* family = app.add_subcommand("family", "closed forms for the cocircuit polytope of K_n");
  family->add_option("n", n, "number of nodes")->required()->check(CLI::Range(2, 8));
  family->add_option("--what", what, "quantity to report")
      ->check(CLI::IsMember({"vertices", "fpoly", "ehrhart", "faces", "sep-dual-check"}))
      ->default_val("ehrhart");
  add_common(family);

  auto* equiv = app.add_subcommand("equivariant", "S_n action: fixed polytopes and equivariant H*");
  equiv->add_option("n", n, "degree of the symmetric group")->required()->check(CLI::Range(2, 8));
  auto* sigma_opt = equiv->add_option("--sigma", sigma, "permutation, cycle or one-line notation");
  auto* all_opt = equiv->add_flag("--all", all, "table over all cycle types");
  sigma_opt->excludes(all_opt);
  add_common(equiv);

  auto* reproduce = app.add_subcommand("reproduce", "run the bundled reproduction checks");
  reproduce->add_option("--fixtures", fixtures, "fixture directory");
  add_common(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (circuits->parsed()) {
      const std::string text = read_input(input);
      return run(common, [&](char** out) {
        return omc_report_circuits(text.c_str(), parse_kind(kind), dual, common.verify, out);
      }, print_circuits);
    }
    if (polytope->parsed()) {
      const std::string text = read_input(input);
      const std::size_t guard = max_face_dim();
      return run(common, [&](char** out) {
        return omc_report_polytope(text.c_str(), parse_kind(kind), dual, what.c_str(), t, common.verify, guard, out);
      }, print_polytope);
    }
    if (family->parsed()) {
      const std::size_t guard = max_face_dim();
      return run(common, [&](char** out) {
        return omc_report_family(n, what.c_str(), common.verify, guard, out);
      }, print_family);
    }
    if (equiv->parsed()) {
      if (!all && sigma.empty()) {
        std::cerr << "omclab: equivariant needs --sigma or --all\n";
        return kExitUsage;
      }
      return run(common, [&](char** out) {
        return omc_report_equivariant(n, all ? nullptr : sigma.c_str(), common.verify, out);
      }, print_equivariant);
    }
    return run(common, [&](char** out) { return omc_report_reproduce(fixtures.c_str(), out); },
               [](const Json&) {});
  } catch (const CLI::ValidationError& e) {
    std::cerr << "omclab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "omclab: " << e.what() << "\n";
    return 1;
  }
}
