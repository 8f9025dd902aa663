#ifndef CURVELIE_SEARCH_HPP
#define CURVELIE_SEARCH_HPP

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "curvelie/bialgebra.hpp"
#include "curvelie/json_io.hpp"
#include "curvelie/version.hpp"

namespace curvelie {

/// Worker count from CURVELIE_WORKERS; defaults to 1 (runs are deterministic
/// at any count, the env var only buys speed).
inline int default_workers() {
  if (const char* env = std::getenv("CURVELIE_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

/// Static contiguous split of [0, n) across workers; every worker writes only
/// its own result slots, so merged output is independent of the worker count.
template <typename Fn>
inline void parallel_for_index(std::size_t n, int workers, Fn&& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (std::size_t t = 0; t < w; ++t) {
    const std::size_t lo = n * t / w;
    const std::size_t hi = n * (t + 1) / w;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

/// Checkpoint file: first line is the job header, then one line per completed
/// length stratum. An existing file resumes the matching job and rejects any
/// other.
class Checkpoint {
 public:
  Checkpoint() = default;
  Checkpoint(std::string path, const json& header) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (in) {
      std::string line;
      if (!std::getline(in, line))
        throw std::runtime_error("checkpoint file is empty: " + path_);
      if (json::parse(line) != header)
        throw std::runtime_error(
            "checkpoint belongs to a different job: " + path_);
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        completed_.push_back(json::parse(line));
      }
    } else {
      std::ofstream out(path_);
      if (!out) throw std::runtime_error("cannot create checkpoint " + path_);
      out << header.dump() << "\n";
    }
  }

  bool enabled() const { return !path_.empty(); }
  const std::vector<json>& completed() const { return completed_; }

  void append(const json& stratum) {
    if (path_.empty()) return;
    std::ofstream out(path_, std::ios::app);
    out << stratum.dump() << "\n";
    out.flush();
  }

 private:
  std::string path_;
  std::vector<json> completed_;
};

struct SearchOptions {
  int workers = 1;
  std::string checkpoint_path;  // empty = no checkpointing
};

namespace detail {

/// Runs fn over every length stratum 1..max_len, resuming completed strata
/// from the checkpoint. fn must be deterministic; its payload per stratum is
/// what gets persisted.
template <typename Fn>
inline std::vector<json> run_strata(int max_len, const json& header,
                                    const SearchOptions& opt, Fn&& fn) {
  Checkpoint ckpt(opt.checkpoint_path, header);
  std::vector<json> strata = ckpt.completed();
  if (static_cast<int>(strata.size()) > max_len)
    throw std::runtime_error("checkpoint covers more strata than requested");
  for (int len = static_cast<int>(strata.size()) + 1; len <= max_len; ++len) {
    json payload = fn(len);
    ckpt.append(payload);
    strata.push_back(std::move(payload));
  }
  return strata;
}

inline int surface_generators(const FatGraph& G) { return G.edge_count(); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Turaev kernel hunt: primitive, non-simple classes with vanishing cobracket.
// Each hit also records whether cobracket(w^2) vanishes.
// ---------------------------------------------------------------------------

inline json search_turaev_kernel(const FatGraph& G,
                                 const std::string& surface_spec, int max_len,
                                 const SearchOptions& opt = {}) {
  const json header{{"engine_version", kEngineVersion},
                    {"predicate", "turaev_kernel"},
                    {"surface", surface_spec},
                    {"max_len", max_len}};
  auto strata = detail::run_strata(max_len, header, opt, [&](int len) {
    const auto classes =
        enumerate_classes_of_length(detail::surface_generators(G), len, true);
    std::vector<json> hit(classes.size());
    parallel_for_index(classes.size(), opt.workers, [&](std::size_t i) {
      const ConjClass& w = classes[i];
      const int sl = self_link_count(G, w);
      if (sl == 0) return;  // simple
      if (!turaev_cobracket(G, w).is_zero()) return;
      const bool sq_zero =
          turaev_cobracket(G, class_power(w, 2)).is_zero();
      hit[i] = json{{"class", w.str()},
                    {"length", len},
                    {"multiplicity", 1},
                    {"self_link", sl},
                    {"cobracket", to_json(TensorSquareSum{})},
                    {"cobracket_sq_zero", sq_zero}};
    });
    json hits = json::array();
    for (auto& h : hit)
      if (!h.is_null()) hits.push_back(std::move(h));
    return json{{"length", len},
                {"scanned", classes.size()},
                {"hits", std::move(hits)}};
  });

  json hits = json::array();
  long long scanned = 0;
  for (const auto& s : strata) {
    scanned += s.at("scanned").get<long long>();
    for (const auto& h : s.at("hits")) hits.push_back(h);
  }
  json report = header;
  report["totals"] = json{{"primitive_classes_scanned", scanned},
                          {"hits", hits.size()}};
  report["hits"] = std::move(hits);
  return report;
}

// ---------------------------------------------------------------------------
// Power-bracket criterion: cross-tabulate [alpha^n, alpha^m] = 0 against
// simplicity over primitive classes. For (2,3) and (1,-1) a mismatch is an
// engine bug; for other exponents it is conjecture data.
// ---------------------------------------------------------------------------

inline bool chas_theorem_backed(int n, int m) {
  return (n == 2 && m == 3) || (n == 1 && m == -1);
}

inline json check_chas_powers(const FatGraph& G,
                              const std::string& surface_spec, int max_len,
                              int n, int m, const SearchOptions& opt = {}) {
  if (n == m || n == 0 || m == 0)
    throw std::invalid_argument("chas powers: need n != m and nm != 0");
  const json header{{"engine_version", kEngineVersion},
                    {"predicate", "chas_powers"},
                    {"surface", surface_spec},
                    {"max_len", max_len},
                    {"n", n},
                    {"m", m}};
  auto strata = detail::run_strata(max_len, header, opt, [&](int len) {
    const auto classes =
        enumerate_classes_of_length(detail::surface_generators(G), len, true);
    struct Row {
      bool simple = false;
      bool vanishes = false;
    };
    std::vector<Row> rows(classes.size());
    parallel_for_index(classes.size(), opt.workers, [&](std::size_t i) {
      const ConjClass& a = classes[i];
      rows[i].simple = is_simple(G, a);
      rows[i].vanishes =
          goldman_bracket(G, class_power(a, n), class_power(a, m)).is_zero();
    });
    long long sv = 0, sn = 0, nv = 0, nn = 0;
    json mism = json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const Row& r = rows[i];
      (r.simple ? (r.vanishes ? sv : sn) : (r.vanishes ? nv : nn))++;
      if (r.simple != r.vanishes)
        mism.push_back(json{{"class", classes[i].str()},
                            {"length", len},
                            {"simple", r.simple},
                            {"bracket_vanishes", r.vanishes}});
    }
    return json{{"length", len},
                {"scanned", classes.size()},
                {"simple_vanishing", sv},
                {"simple_nonvanishing", sn},
                {"nonsimple_vanishing", nv},
                {"nonsimple_nonvanishing", nn},
                {"mismatches", std::move(mism)}};
  });

  long long scanned = 0, sv = 0, sn = 0, nv = 0, nn = 0;
  json mism = json::array();
  for (const auto& s : strata) {
    scanned += s.at("scanned").get<long long>();
    sv += s.at("simple_vanishing").get<long long>();
    sn += s.at("simple_nonvanishing").get<long long>();
    nv += s.at("nonsimple_vanishing").get<long long>();
    nn += s.at("nonsimple_nonvanishing").get<long long>();
    for (const auto& h : s.at("mismatches")) mism.push_back(h);
  }
  json report = header;
  report["theorem_backed"] = chas_theorem_backed(n, m);
  report["totals"] = json{{"primitive_classes_scanned", scanned},
                          {"simple_vanishing", sv},
                          {"simple_nonvanishing", sn},
                          {"nonsimple_vanishing", nv},
                          {"nonsimple_nonvanishing", nn},
                          {"mismatches", mism.size()}};
  report["mismatches"] = std::move(mism);
  return report;
}

// ---------------------------------------------------------------------------
// Identity sweep: run selected checkers over all tuples within the length
// budget (singles <= L, pairs <= L-1, triples <= L-2). Any nonzero defect is
// serialized; the report's totals must show zero defects.
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& all_identities() {
  static const std::vector<std::string> ids{"antisym", "jacobi", "coskew",
                                            "cojacobi", "compat",
                                            "involutive"};
  return ids;
}

namespace detail {

struct SweepDefect {
  std::size_t tuple_index;
  json serialized;
};

/// Runs checker over tuples; returns (checked count, first defect by tuple
/// order). Defect selection is by index, not completion order, so results are
/// worker-count independent.
template <typename Tuple, typename Check>
inline std::pair<long long, std::optional<SweepDefect>> sweep_tuples(
    const std::vector<Tuple>& tuples, int workers, Check&& check) {
  std::vector<std::optional<json>> defects(tuples.size());
  parallel_for_index(tuples.size(), workers,
                     [&](std::size_t i) { defects[i] = check(tuples[i]); });
  for (std::size_t i = 0; i < tuples.size(); ++i)
    if (defects[i])
      return {static_cast<long long>(tuples.size()),
              SweepDefect{i, *defects[i]}};
  return {static_cast<long long>(tuples.size()), std::nullopt};
}

}  // namespace detail

/// Budgeted tuple lists for one stratum: tuples whose longest entry has the
/// given length. Pair/triple strata stop earlier so the total budget matches
/// singles <= L, pairs <= L-1, triples <= L-2.
inline json identity_sweep(const FatGraph& G, const std::string& surface_spec,
                           std::vector<std::string> identities, int max_len,
                           const SearchOptions& opt = {}) {
  for (const auto& id : identities) {
    const auto& all = all_identities();
    if (std::find(all.begin(), all.end(), id) == all.end())
      throw std::invalid_argument("unknown identity '" + id + "'");
  }
  const json header{{"engine_version", kEngineVersion},
                    {"predicate", "identity_sweep"},
                    {"surface", surface_spec},
                    {"identities", identities},
                    {"max_len", max_len}};
  const int k = detail::surface_generators(G);

  auto strata = detail::run_strata(max_len, header, opt, [&](int len) {
    // classes of length exactly `len` and all shorter ones
    const auto exact = enumerate_classes_of_length(k, len, false);
    const auto shorter = enumerate_classes(k, len - 1, false);
    auto has = [&](const std::string& id) {
      return std::find(identities.begin(), identities.end(), id) !=
             identities.end();
    };

    json per_identity = json::object();
    std::optional<json> defect;
    auto note = [&](const std::string& id, long long checked,
                    const std::optional<detail::SweepDefect>& d) {
      per_identity[id] = checked;
      if (d && !defect) {
        defect = d->serialized;
        (*defect)["identity"] = id;
      }
    };

    // single-argument identities at this length
    if (has("coskew") || has("cojacobi") || has("involutive")) {
      if (has("coskew")) {
        auto [n, d] = detail::sweep_tuples(
            exact, opt.workers, [&](const ConjClass& x) -> std::optional<json> {
              const auto defect_sum = check_coskew(G, x);
              if (defect_sum.is_zero()) return std::nullopt;
              return json{{"tuple", {x.str()}},
                          {"defect", to_json(defect_sum)}};
            });
        note("coskew", n, d);
      }
      if (has("cojacobi")) {
        auto [n, d] = detail::sweep_tuples(
            exact, opt.workers, [&](const ConjClass& x) -> std::optional<json> {
              const auto defect_sum = check_cojacobi(G, x);
              if (defect_sum.is_zero()) return std::nullopt;
              return json{{"tuple", {x.str()}},
                          {"defect", to_json(defect_sum)}};
            });
        note("cojacobi", n, d);
      }
      if (has("involutive")) {
        auto [n, d] = detail::sweep_tuples(
            exact, opt.workers, [&](const ConjClass& x) -> std::optional<json> {
              const auto defect_sum = check_involutive(G, x);
              if (defect_sum.is_zero()) return std::nullopt;
              return json{{"tuple", {x.str()}},
                          {"defect", to_json(defect_sum)}};
            });
        note("involutive", n, d);
      }
    }

    // pair identities: longest entry == len, budget len <= max_len - 1
    if ((has("antisym") || has("compat")) && len <= max_len - 1) {
      std::vector<ClassPair> pairs;
      for (const auto& x : exact) {
        for (const auto& y : shorter) pairs.push_back({x, y});
        for (const auto& y : exact)
          if (!(y < x)) pairs.push_back({x, y});
      }
      if (has("antisym")) {
        auto [n, d] = detail::sweep_tuples(
            pairs, opt.workers, [&](const ClassPair& p) -> std::optional<json> {
              const auto defect_sum = check_antisym(G, p.first, p.second);
              if (defect_sum.is_zero()) return std::nullopt;
              return json{{"tuple", {p.first.str(), p.second.str()}},
                          {"defect", to_json(defect_sum)}};
            });
        note("antisym", n, d);
      }
      if (has("compat")) {
        auto [n, d] = detail::sweep_tuples(
            pairs, opt.workers, [&](const ClassPair& p) -> std::optional<json> {
              const auto defect_sum = check_compat(G, p.first, p.second);
              if (defect_sum.is_zero()) return std::nullopt;
              return json{{"tuple", {p.first.str(), p.second.str()}},
                          {"defect", to_json(defect_sum)}};
            });
        note("compat", n, d);
      }
    }

    // triple identity: longest entry == len, budget len <= max_len - 2
    if (has("jacobi") && len <= max_len - 2) {
      std::vector<ClassTriple> triples;
      std::vector<ConjClass> upto = shorter;
      upto.insert(upto.end(), exact.begin(), exact.end());
      // unordered triples containing at least one class of length `len`
      for (std::size_t i = 0; i < upto.size(); ++i)
        for (std::size_t j = i; j < upto.size(); ++j)
          for (std::size_t l2 = j; l2 < upto.size(); ++l2) {
            if (upto[l2].length() != static_cast<std::size_t>(len)) continue;
            triples.push_back({upto[i], upto[j], upto[l2]});
          }
      auto [n, d] = detail::sweep_tuples(
          triples, opt.workers,
          [&](const ClassTriple& t) -> std::optional<json> {
            const auto defect_sum = check_jacobi(G, t[0], t[1], t[2]);
            if (defect_sum.is_zero()) return std::nullopt;
            return json{{"tuple", {t[0].str(), t[1].str(), t[2].str()}},
                        {"defect", to_json(defect_sum)}};
          });
      note("jacobi", n, d);
    }

    json out{{"length", len}, {"checked", per_identity}};
    if (defect) out["defect"] = *defect;
    return out;
  });

  long long tuples_checked = 0;
  json defect;
  json per_identity = json::object();
  for (const auto& s : strata) {
    for (const auto& [id, n] : s.at("checked").items()) {
      tuples_checked += n.get<long long>();
      per_identity[id] =
          (per_identity.contains(id) ? per_identity[id].get<long long>() : 0) +
          n.get<long long>();
    }
    if (s.contains("defect") && defect.is_null()) defect = s.at("defect");
  }
  json report = header;
  report["totals"] = json{{"tuples_checked", tuples_checked},
                          {"defects", defect.is_null() ? 0 : 1}};
  report["checked_per_identity"] = per_identity;
  report["defect"] = defect;
  return report;
}

// ---------------------------------------------------------------------------
// CSV export: one row per scanned class.
// ---------------------------------------------------------------------------

/// Columns: class,length,primitive,simple,self_link,predicate_value. The
/// predicate value is cobracket vanishing for "turaev" and power-bracket
/// vanishing for "chas".
inline void write_csv(std::ostream& os, const FatGraph& G,
                      const std::string& predicate, int max_len, int n = 2,
                      int m = 3) {
  os << "class,length,primitive,simple,self_link,predicate_value\n";
  enumerate_classes(detail::surface_generators(G), max_len, false,
                    [&](const ConjClass& w) {
                      const bool prim = primitive_root(w).multiplicity == 1;
                      const int sl = self_link_count(G, w);
                      const bool simple = prim && sl == 0;
                      bool value = false;
                      if (predicate == "turaev")
                        value = turaev_cobracket(G, w).is_zero();
                      else if (predicate == "chas")
                        value = goldman_bracket(G, class_power(w, n),
                                                class_power(w, m))
                                    .is_zero();
                      else
                        throw std::invalid_argument("csv: unknown predicate '" +
                                                    predicate + "'");
                      os << w.str() << ',' << w.length() << ',' << (prim ? 1 : 0)
                         << ',' << (simple ? 1 : 0) << ',' << sl << ','
                         << (value ? 1 : 0) << "\n";
                    });
}

}  // namespace curvelie

#endif  // CURVELIE_SEARCH_HPP
