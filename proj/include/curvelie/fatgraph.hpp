#ifndef CURVELIE_FATGRAPH_HPP
#define CURVELIE_FATGRAPH_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvelie/word.hpp"

namespace curvelie {

/// One of the 2k edge ends at the single vertex. `out` is the initial end of
/// the edge (used when departing along the positive letter); `in` is the
/// initial end of the inverse edge.
struct EndId {
  std::uint8_t gen = 1;
  bool inbound = false;

  friend bool operator==(const EndId&, const EndId&) = default;

  int code() const { return (gen - 1) * 2 + (inbound ? 1 : 0); }

  std::string str() const {
    return std::string(1, static_cast<char>('a' + gen - 1)) +
           (inbound ? '-' : '+');
  }
  static EndId parse(const std::string& s) {
    if (s.size() != 2 || s[0] < 'a' || s[0] > 'z' ||
        (s[1] != '+' && s[1] != '-'))
      throw std::invalid_argument("bad end '" + s + "' (want e.g. a+ or b-)");
    return EndId{static_cast<std::uint8_t>(s[0] - 'a' + 1), s[1] == '-'};
  }
};

/// End a ray departs through when its first letter is l.
inline EndId initial_end(const Letter& l) { return EndId{l.gen, l.inv}; }
/// End a path arrives at after traversing letter l.
inline EndId terminal_end(const Letter& l) { return initial_end(l.inverse()); }
/// Letter read when departing through end e.
inline Letter end_letter(const EndId& e) { return Letter{e.gen, e.inbound}; }
inline EndId other_end(const EndId& e) { return EndId{e.gen, !e.inbound}; }

struct SurfaceSig {
  int genus = 0;
  int boundaries = 0;
  friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;
};

/// One-vertex ribbon model of an oriented surface with boundary: k edges and
/// a cyclic (counterclockwise) order sigma on their 2k ends. The cyclic order
/// fixes the orientation, hence the global sign convention of the bracket.
class FatGraph {
 public:
  explicit FatGraph(std::vector<EndId> sigma) : sigma_(std::move(sigma)) {
    if (sigma_.empty() || sigma_.size() % 2 != 0)
      throw std::invalid_argument("sigma must list 2k ends");
    k_ = static_cast<int>(sigma_.size() / 2);
    if (k_ > kMaxGenerators)
      throw std::invalid_argument("too many edges (max 26)");
    pos_.assign(sigma_.size(), -1);
    for (int i = 0; i < static_cast<int>(sigma_.size()); ++i) {
      const EndId& e = sigma_[static_cast<std::size_t>(i)];
      if (e.gen < 1 || e.gen > k_)
        throw std::invalid_argument("end " + e.str() +
                                    " outside edge range for k=" +
                                    std::to_string(k_));
      if (pos_[static_cast<std::size_t>(e.code())] != -1)
        throw std::invalid_argument("end " + e.str() + " listed twice");
      pos_[static_cast<std::size_t>(e.code())] = i;
    }
  }

  int edge_count() const { return k_; }
  int end_count() const { return 2 * k_; }
  const std::vector<EndId>& sigma() const { return sigma_; }

  /// Index of e in the fixed linearization of sigma (the global cut).
  int global_index(const EndId& e) const {
    return pos_[static_cast<std::size_t>(e.code())];
  }

  /// Position of e in sigma linearized to start just after `cut`;
  /// values 1..2k-1 for e != cut.
  int index_after(const EndId& cut, const EndId& e) const {
    int d = global_index(e) - global_index(cut);
    if (d < 0) d += end_count();
    return d;
  }

  EndId next_in_sigma(const EndId& e) const {
    return sigma_[static_cast<std::size_t>((global_index(e) + 1) %
                                           end_count())];
  }

  /// Orbits of the face-tracing map: follow an end across its edge, then take
  /// the next end in sigma. Orbits partition all 2k ends.
  std::vector<std::vector<EndId>> boundary_cycles() const {
    std::vector<bool> seen(sigma_.size(), false);
    std::vector<std::vector<EndId>> cycles;
    for (const EndId& start : sigma_) {
      if (seen[static_cast<std::size_t>(start.code())]) continue;
      std::vector<EndId> cycle;
      EndId e = start;
      do {
        seen[static_cast<std::size_t>(e.code())] = true;
        cycle.push_back(e);
        e = next_in_sigma(other_end(e));
      } while (!(e == start));
      cycles.push_back(std::move(cycle));
    }
    return cycles;
  }

  /// Free homotopy class running parallel to one boundary cycle.
  ConjClass boundary_class(const std::vector<EndId>& cycle) const {
    Letters w;
    w.reserve(cycle.size());
    for (const EndId& e : cycle) w.push_back(end_letter(e));
    return ConjClass(std::move(w));
  }

  std::vector<ConjClass> boundary_classes() const {
    std::vector<ConjClass> out;
    for (const auto& c : boundary_cycles()) out.push_back(boundary_class(c));
    return out;
  }

  SurfaceSig surface_sig() const {
    const int n = static_cast<int>(boundary_cycles().size());
    const int chi = 1 - k_;  // one vertex, k edges
    const int twice_genus = 2 - n - chi;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw std::logic_error("corrupted sigma: non-integral genus");
    return SurfaceSig{twice_genus / 2, n};
  }

 private:
  int k_ = 0;
  std::vector<EndId> sigma_;
  std::vector<int> pos_;
};

/// Canonical model of the genus-g surface with n boundary circles:
/// k = 2g + n - 1 edges, sigma = (a+ b+ a- b- ... c1+ c1- ...).
inline FatGraph standard_surface(int g, int n) {
  if (n < 1)
    throw std::invalid_argument("standard_surface: need boundary (n >= 1)");
  if (g < 0) throw std::invalid_argument("standard_surface: negative genus");
  if (g == 0 && n == 1)
    throw std::invalid_argument("standard_surface: disk has no essential curves");
  const int k = 2 * g + n - 1;
  std::vector<EndId> sigma;
  sigma.reserve(static_cast<std::size_t>(2 * k));
  for (int h = 0; h < g; ++h) {
    auto a = static_cast<std::uint8_t>(2 * h + 1);
    auto b = static_cast<std::uint8_t>(2 * h + 2);
    sigma.push_back(EndId{a, false});
    sigma.push_back(EndId{b, false});
    sigma.push_back(EndId{a, true});
    sigma.push_back(EndId{b, true});
  }
  for (int j = 0; j < n - 1; ++j) {
    auto c = static_cast<std::uint8_t>(2 * g + 1 + j);
    sigma.push_back(EndId{c, false});
    sigma.push_back(EndId{c, true});
  }
  FatGraph graph(std::move(sigma));
  if (!(graph.surface_sig() == SurfaceSig{g, n}))
    throw std::logic_error("standard_surface: signature check failed");
  return graph;
}

/// Accepts "g=G,n=N" (standard model) or a comma-separated sigma like
/// "a+,b+,a-,b-".
inline FatGraph parse_surface(const std::string& spec) {
  if (spec.find('=') != std::string::npos) {
    int g = -1, n = -1;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.rfind("g=", 0) == 0)
        g = std::stoi(item.substr(2));
      else if (item.rfind("n=", 0) == 0)
        n = std::stoi(item.substr(2));
      else
        throw std::invalid_argument("bad surface spec item '" + item + "'");
    }
    if (g < 0 || n < 0)
      throw std::invalid_argument("surface spec needs both g= and n=");
    return standard_surface(g, n);
  }
  std::vector<EndId> sigma;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) sigma.push_back(EndId::parse(item));
  return FatGraph(std::move(sigma));
}

}  // namespace curvelie

#endif  // CURVELIE_FATGRAPH_HPP
