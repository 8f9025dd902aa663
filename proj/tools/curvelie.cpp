// Command line front end: bracket/cobracket evaluation, identity checks,
// string diagram bookkeeping, and the batch searches.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvelie/bialgebra.hpp"
#include "curvelie/diagram.hpp"
#include "curvelie/json_io.hpp"
#include "curvelie/search.hpp"
#include "curvelie/version.hpp"

namespace {

using namespace curvelie;

struct SurfaceOpt {
  std::string surface;
  std::string sigma;

  FatGraph graph() const {
    if (!surface.empty() && !sigma.empty())
      throw CLI::ValidationError("give --surface or --sigma, not both");
    if (!surface.empty()) return parse_surface(surface);
    if (!sigma.empty()) return parse_surface(sigma);
    throw CLI::ValidationError("a surface is required (--surface or --sigma)");
  }
  std::string spec() const { return surface.empty() ? sigma : surface; }
};

void add_surface_opts(CLI::App* cmd, SurfaceOpt& s) {
  cmd->add_option("--surface", s.surface,
                  "standard model, e.g. g=1,n=1");
  cmd->add_option("--sigma", s.sigma,
                  "explicit cyclic end order, e.g. a+,b+,a-,b-");
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << j.dump(2) << "\n";
}

Signature parse_sig(const std::string& s) {
  std::stringstream ss(s);
  std::string item;
  std::vector<int> v;
  while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
  if (v.size() != 3)
    throw std::invalid_argument("signature must be g,k,l (e.g. 0,2,1)");
  return Signature{v[0], v[1], v[2]};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return json::parse(in);
}

// Fill options that were not passed on the command line from a config file
// using the same key vocabulary.
template <typename T>
void config_fill(const json& cfg, CLI::App* cmd, const std::string& flag,
                 const std::string& key, T& value) {
  if (!cfg.contains(key)) return;
  if (cmd->count(flag) > 0) return;
  value = cfg.at(key).get<T>();
}

int run_check(const FatGraph& G, const std::string& identity, int max_len,
              bool quiet) {
  long long checked = 0, failed = 0;
  auto report = [&](const std::string& tuple, bool ok, const json& defect) {
    ++checked;
    if (!ok) ++failed;
    if (!ok)
      std::cout << "FAIL " << identity << " " << tuple << " defect "
                << defect.dump() << "\n";
    else if (!quiet)
      std::cout << "ok " << identity << " " << tuple << "\n";
  };
  const int k = G.edge_count();
  if (identity == "cojacobi" || identity == "involutive" ||
      identity == "coskew") {
    enumerate_classes(k, max_len, false, [&](const ConjClass& x) {
      if (identity == "cojacobi") {
        auto d = check_cojacobi(G, x);
        report("(" + x.str() + ")", d.is_zero(), to_json(d));
      } else if (identity == "involutive") {
        auto d = check_involutive(G, x);
        report("(" + x.str() + ")", d.is_zero(), to_json(d));
      } else {
        auto d = check_coskew(G, x);
        report("(" + x.str() + ")", d.is_zero(), to_json(d));
      }
    });
  } else if (identity == "antisym" || identity == "compat") {
    const auto classes = enumerate_classes(k, max_len - 1, false);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i; j < classes.size(); ++j) {
        const std::string tuple =
            "(" + classes[i].str() + "," + classes[j].str() + ")";
        if (identity == "antisym") {
          auto d = check_antisym(G, classes[i], classes[j]);
          report(tuple, d.is_zero(), to_json(d));
        } else {
          auto d = check_compat(G, classes[i], classes[j]);
          report(tuple, d.is_zero(), to_json(d));
        }
      }
  } else if (identity == "jacobi") {
    const auto classes = enumerate_classes(k, max_len - 2, false);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i; j < classes.size(); ++j)
        for (std::size_t l = j; l < classes.size(); ++l) {
          auto d = check_jacobi(G, classes[i], classes[j], classes[l]);
          report("(" + classes[i].str() + "," + classes[j].str() + "," +
                     classes[l].str() + ")",
                 d.is_zero(), to_json(d));
        }
  } else {
    throw std::invalid_argument("unknown identity '" + identity + "'");
  }
  std::cout << "summary: " << identity << " checked " << checked
            << " tuples, defects " << failed << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goldman bracket / Turaev cobracket engine for curves on "
               "surfaces with boundary"};
  app.set_version_flag("--version", std::string(kEngineVersion));
  app.require_subcommand(1);

  std::string w1, w2, out_path, identity, config_path;
  std::string csv_path, checkpoint_path;
  int max_len = 4, chas_n = 2, chas_m = 3;
  int workers = 0;
  bool quiet = false;
  SurfaceOpt surf;

  // --- pointwise operations -------------------------------------------------
  auto* c_bracket = app.add_subcommand("bracket", "Goldman bracket [w1, w2]");
  add_surface_opts(c_bracket, surf);
  c_bracket->add_option("w1", w1)->required();
  c_bracket->add_option("w2", w2)->required();
  c_bracket->add_option("--out", out_path, "write JSON here instead of stdout");
  c_bracket->callback([&] {
    emit(to_json(goldman_bracket(surf.graph(), ConjClass::parse(w1),
                                 ConjClass::parse(w2))),
         out_path);
  });

  auto* c_cobr = app.add_subcommand("cobracket", "Turaev cobracket of w");
  add_surface_opts(c_cobr, surf);
  c_cobr->add_option("w", w1)->required();
  c_cobr->add_option("--out", out_path);
  c_cobr->callback([&] {
    emit(to_json(turaev_cobracket(surf.graph(), ConjClass::parse(w1))),
         out_path);
  });

  auto* c_self = app.add_subcommand("selfint",
                                    "combinatorial self-intersection count");
  add_surface_opts(c_self, surf);
  c_self->add_option("w", w1)->required();
  c_self->callback([&] {
    std::cout << self_link_count(surf.graph(), ConjClass::parse(w1)) << "\n";
  });

  auto* c_int = app.add_subcommand("intersect",
                                   "geometric intersection count of w1, w2");
  add_surface_opts(c_int, surf);
  c_int->add_option("w1", w1)->required();
  c_int->add_option("w2", w2)->required();
  c_int->callback([&] {
    const auto r = intersection_count(surf.graph(), ConjClass::parse(w1),
                                      ConjClass::parse(w2));
    std::cout << r.crossings << "\n";
    if (r.parallel_pairs)
      std::cerr << "note: the classes share a primitive; parallel strand "
                   "pairs carry no crossings\n";
  });

  auto* c_simple = app.add_subcommand("simple", "is w a simple class?");
  add_surface_opts(c_simple, surf);
  c_simple->add_option("w", w1)->required();
  c_simple->callback([&] {
    std::cout << (is_simple(surf.graph(), ConjClass::parse(w1)) ? "true"
                                                                : "false")
              << "\n";
  });

  // --- identity checker -----------------------------------------------------
  auto* c_check = app.add_subcommand(
      "check", "verify a Lie bialgebra identity over all classes");
  add_surface_opts(c_check, surf);
  c_check
      ->add_option("--identity", identity,
                   "jacobi|cojacobi|compat|involutive|antisym|coskew")
      ->required();
  c_check->add_option("--max-len", max_len, "length budget")->required();
  c_check->add_flag("--quiet", quiet, "print only the summary line");
  c_check->callback([&] {
    if (run_check(surf.graph(), identity, max_len, quiet) != 0)
      throw CLI::RuntimeError(1);
  });

  // --- string diagrams -------------------------------------------------------
  auto* c_diag = app.add_subcommand("diagram", "string diagram bookkeeping");
  c_diag->require_subcommand(1);
  std::string diag_file, sig_str, sig1_str, sig2_str;
  int out_index = 1, in_index = 1, out_index2 = 2, in_index2 = 2;
  bool dbl = false;

  auto* d_val = c_diag->add_subcommand("validate", "check diagram structure");
  d_val->add_option("--file", diag_file)->required();
  d_val->callback([&] {
    const auto d = diagram_from_json(load_json_file(diag_file));
    if (auto v = validate(d)) {
      std::cout << "violation: " << v->what << "\n";
      throw CLI::RuntimeError(1);
    }
    std::cout << "ok\n";
  });

  auto* d_sig = c_diag->add_subcommand("signature", "genus and circle counts");
  d_sig->add_option("--file", diag_file)->required();
  d_sig->callback([&] {
    emit(to_json(signature(diagram_from_json(load_json_file(diag_file)))), "");
  });

  auto* d_dim = c_diag->add_subcommand("dim", "moduli cell dimension");
  d_dim->add_option("--sig", sig_str, "signature g,k,l");
  d_dim->add_option("--file", diag_file, "diagram file");
  d_dim->callback([&] {
    Signature s;
    if (!sig_str.empty())
      s = parse_sig(sig_str);
    else if (!diag_file.empty())
      s = signature(diagram_from_json(load_json_file(diag_file)));
    else
      throw CLI::ValidationError("need --sig or --file");
    std::cout << moduli_dim(s) << "\n";
  });

  auto* d_glue = c_diag->add_subcommand("glue", "glue output circles to inputs");
  d_glue->add_option("--sig1", sig1_str)->required();
  d_glue->add_option("--sig2", sig2_str)->required();
  d_glue->add_option("--out-index", out_index, "output of sig1 (1-based)");
  d_glue->add_option("--in-index", in_index, "input of sig2 (1-based)");
  d_glue->add_flag("--double", dbl, "glue along two circles (raises genus)");
  d_glue->add_option("--out-index2", out_index2);
  d_glue->add_option("--in-index2", in_index2);
  d_glue->callback([&] {
    const Signature s1 = parse_sig(sig1_str), s2 = parse_sig(sig2_str);
    const Signature g =
        dbl ? glue_signatures_double(s1, out_index, out_index2, s2, in_index,
                                     in_index2)
            : glue_signatures(s1, out_index, s2, in_index);
    json j = to_json(g);
    j["dim"] = moduli_dim(g);
    j["double_gluing"] = dbl;
    emit(j, "");
  });

  auto* d_comp = c_diag->add_subcommand("compose",
                                        "factorizations over all gluings");
  d_comp->add_option("--sig", sig_str)->required();
  d_comp->callback([&] {
    json terms = json::array();
    for (const auto& t : composition_terms(parse_sig(sig_str)))
      terms.push_back(json{{"s1", to_json(t.s1)},
                           {"s2", to_json(t.s2)},
                           {"multiplicity", t.multiplicity},
                           {"double_gluing", t.double_gluing}});
    emit(json{{"terms", terms}}, "");
  });

  // --- searches ---------------------------------------------------------------
  auto add_search_common = [&](CLI::App* cmd) {
    add_surface_opts(cmd, surf);
    cmd->add_option("--max-len", max_len)->required();
    cmd->add_option("--out", out_path, "report file (default stdout)");
    cmd->add_option("--csv", csv_path, "also write a per-class CSV");
    cmd->add_option("--checkpoint", checkpoint_path,
                    "stratum checkpoint file; resumes if it exists");
    cmd->add_option("--workers", workers,
                    "worker threads (default: CURVELIE_WORKERS or 1)");
    cmd->add_option("--config", config_path,
                    "JSON config supplying any of the above keys");
  };
  auto search_opts = [&](CLI::App* cmd) {
    if (!config_path.empty()) {
      const json cfg = load_json_file(config_path);
      config_fill(cfg, cmd, "--surface", "surface", surf.surface);
      config_fill(cfg, cmd, "--sigma", "sigma", surf.sigma);
      config_fill(cfg, cmd, "--max-len", "max_len", max_len);
      config_fill(cfg, cmd, "--out", "out", out_path);
      config_fill(cfg, cmd, "--csv", "csv", csv_path);
      config_fill(cfg, cmd, "--checkpoint", "checkpoint", checkpoint_path);
      config_fill(cfg, cmd, "--workers", "workers", workers);
      config_fill(cfg, cmd, "--n", "n", chas_n);
      config_fill(cfg, cmd, "--m", "m", chas_m);
    }
    SearchOptions opt;
    opt.workers = workers > 0 ? workers : default_workers();
    opt.checkpoint_path = checkpoint_path;
    return opt;
  };

  auto* c_search = app.add_subcommand("search", "conjecture searches");
  c_search->require_subcommand(1);

  auto* s_turaev = c_search->add_subcommand(
      "turaev", "primitive nonsimple classes with vanishing cobracket");
  add_search_common(s_turaev);
  s_turaev->callback([&] {
    const auto opt = search_opts(s_turaev);
    const FatGraph G = surf.graph();
    const auto t0 = std::chrono::steady_clock::now();
    const json report =
        search_turaev_kernel(G, surf.spec(), max_len, opt);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    emit(report, out_path);
    if (!csv_path.empty()) {
      std::ofstream csv(csv_path);
      write_csv(csv, G, "turaev", max_len);
    }
    std::cerr << "wall-clock " << ms << " ms\n";
  });

  auto* s_chas = c_search->add_subcommand(
      "chas", "cross-tabulate [a^n, a^m] = 0 against simplicity");
  add_search_common(s_chas);
  s_chas->add_option("--n", chas_n)->required();
  s_chas->add_option("--m", chas_m)->required();
  s_chas->callback([&] {
    const auto opt = search_opts(s_chas);
    const FatGraph G = surf.graph();
    const auto t0 = std::chrono::steady_clock::now();
    const json report =
        check_chas_powers(G, surf.spec(), max_len, chas_n, chas_m, opt);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    emit(report, out_path);
    if (!csv_path.empty()) {
      std::ofstream csv(csv_path);
      write_csv(csv, G, "chas", max_len, chas_n, chas_m);
    }
    std::cerr << "wall-clock " << ms << " ms\n";
    if (report.at("theorem_backed").get<bool>() &&
        report.at("totals").at("mismatches").get<long long>() > 0) {
      std::cerr << "engine bug: mismatches on a theorem-backed case\n";
      throw CLI::RuntimeError(1);
    }
  });

  std::string identities_csv = "antisym,jacobi,coskew,cojacobi,compat,involutive";
  auto* c_sweep = app.add_subcommand(
      "sweep", "batch identity verification with a report");
  add_search_common(c_sweep);
  c_sweep->add_option("--identities", identities_csv,
                      "comma list; default all");
  c_sweep->callback([&] {
    if (!config_path.empty()) {
      const json cfg = load_json_file(config_path);
      config_fill(cfg, c_sweep, "--identities", "identities", identities_csv);
    }
    const auto opt = search_opts(c_sweep);
    std::vector<std::string> ids;
    std::stringstream ss(identities_csv);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) ids.push_back(item);
    const FatGraph G = surf.graph();
    const auto t0 = std::chrono::steady_clock::now();
    const json report = identity_sweep(G, surf.spec(), ids, max_len, opt);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    emit(report, out_path);
    std::cerr << "wall-clock " << ms << " ms\n";
    if (!report.at("defect").is_null()) {
      std::cerr << "identity defect found\n";
      throw CLI::RuntimeError(1);
    }
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
