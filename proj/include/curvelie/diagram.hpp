#ifndef CURVELIE_DIAGRAM_HPP
#define CURVELIE_DIAGRAM_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvelie {

/// Graph with a cyclic order on the half edges at each vertex. Half edges are
/// integers 0..n-1; the involution pairs the two halves of each edge.
struct RibbonGraph {
  std::vector<int> involution;          // involution[h] = partner half edge
  std::vector<std::vector<int>> vertices;  // cyclic orders, counterclockwise
};

enum class FaceColor { input, output };

/// Two-colored ribbon graph: every face is an input or an output, and no two
/// faces of the same color meet along an edge. Faces are identified by their
/// smallest half edge; inputs and outputs are numbered in ascending face id.
struct StringDiagram {
  RibbonGraph graph;
  std::map<int, FaceColor> coloring;  // face id -> color
};

struct Violation {
  std::string what;
};

struct Signature {
  int g = 0;  // genus
  int k = 0;  // inputs
  int l = 0;  // outputs

  int chi() const { return 2 - 2 * g - k - l; }
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

  std::string str() const {
    return "(" + std::to_string(g) + "," + std::to_string(k) + "," +
           std::to_string(l) + ")";
  }
};

namespace detail {

inline std::optional<Violation> check_ribbon(const RibbonGraph& rg) {
  const int n = static_cast<int>(rg.involution.size());
  for (int h = 0; h < n; ++h) {
    int m = rg.involution[static_cast<std::size_t>(h)];
    if (m < 0 || m >= n)
      return Violation{"involution of half edge " + std::to_string(h) +
                       " out of range"};
    if (m == h)
      return Violation{"involution fixes half edge " + std::to_string(h)};
    if (rg.involution[static_cast<std::size_t>(m)] != h)
      return Violation{"involution not an involution at half edge " +
                       std::to_string(h)};
  }
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& cyc : rg.vertices) {
    if (cyc.empty()) return Violation{"empty vertex cycle"};
    for (int h : cyc) {
      if (h < 0 || h >= n)
        return Violation{"vertex cycle lists unknown half edge " +
                         std::to_string(h)};
      if (seen[static_cast<std::size_t>(h)]++)
        return Violation{"half edge " + std::to_string(h) +
                         " in more than one vertex position"};
    }
  }
  for (int h = 0; h < n; ++h)
    if (!seen[static_cast<std::size_t>(h)])
      return Violation{"half edge " + std::to_string(h) + " not at any vertex"};
  return std::nullopt;
}

// next half edge counterclockwise around the vertex containing h
inline int vertex_next(const RibbonGraph& rg, int h) {
  for (const auto& cyc : rg.vertices) {
    auto it = std::find(cyc.begin(), cyc.end(), h);
    if (it != cyc.end()) {
      ++it;
      return it == cyc.end() ? cyc.front() : *it;
    }
  }
  throw std::logic_error("half edge not found");
}

}  // namespace detail

/// Orbits of (cross the edge, then turn): the faces of the thickened surface.
/// Requires a structurally valid ribbon graph.
inline std::vector<std::vector<int>> faces(const RibbonGraph& rg) {
  const int n = static_cast<int>(rg.involution.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> orbit;
    int h = start;
    do {
      seen[static_cast<std::size_t>(h)] = true;
      orbit.push_back(h);
      h = detail::vertex_next(rg, rg.involution[static_cast<std::size_t>(h)]);
    } while (h != start);
    out.push_back(std::move(orbit));
  }
  return out;
}

inline int face_id(const std::vector<int>& orbit) {
  return *std::min_element(orbit.begin(), orbit.end());
}

inline bool is_connected(const RibbonGraph& rg) {
  if (rg.vertices.empty()) return false;
  std::vector<int> comp(rg.vertices.size());
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (comp[static_cast<std::size_t>(x)] != x)
      x = comp[static_cast<std::size_t>(x)] =
          comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
    return x;
  };
  std::vector<int> vertex_of(rg.involution.size());
  for (std::size_t vi = 0; vi < rg.vertices.size(); ++vi)
    for (int h : rg.vertices[vi]) vertex_of[static_cast<std::size_t>(h)] = static_cast<int>(vi);
  for (int h = 0; h < static_cast<int>(rg.involution.size()); ++h) {
    int a = find(vertex_of[static_cast<std::size_t>(h)]);
    int b = find(vertex_of[static_cast<std::size_t>(
        rg.involution[static_cast<std::size_t>(h)])]);
    comp[static_cast<std::size_t>(a)] = b;
  }
  const int root = find(0);
  for (std::size_t i = 0; i < rg.vertices.size(); ++i)
    if (find(static_cast<int>(i)) != root) return false;
  return true;
}

/// Full diagram validation: ribbon structure, connectivity, complete coloring,
/// and the alternation rule (no two faces of one color along an edge).
inline std::optional<Violation> validate(const StringDiagram& d) {
  if (auto v = detail::check_ribbon(d.graph)) return v;
  if (!is_connected(d.graph)) return Violation{"diagram is not connected"};
  const auto fs = faces(d.graph);
  std::vector<int> face_of(d.graph.involution.size());
  for (const auto& orbit : fs)
    for (int h : orbit) face_of[static_cast<std::size_t>(h)] = face_id(orbit);
  for (const auto& orbit : fs)
    if (!d.coloring.count(face_id(orbit)))
      return Violation{"face " + std::to_string(face_id(orbit)) +
                       " has no input/output color"};
  for (const auto& [fid, color] : d.coloring) {
    bool known = false;
    for (const auto& orbit : fs) known = known || face_id(orbit) == fid;
    if (!known)
      return Violation{"coloring names unknown face " + std::to_string(fid)};
  }
  int inputs = 0, outputs = 0;
  for (const auto& [fid, color] : d.coloring)
    (color == FaceColor::input ? inputs : outputs)++;
  if (inputs == 0) return Violation{"diagram has no input face"};
  if (outputs == 0) return Violation{"diagram has no output face"};
  for (int h = 0; h < static_cast<int>(d.graph.involution.size()); ++h) {
    const int mate = d.graph.involution[static_cast<std::size_t>(h)];
    if (h > mate) continue;
    const int fa = face_of[static_cast<std::size_t>(h)];
    const int fb = face_of[static_cast<std::size_t>(mate)];
    if (d.coloring.at(fa) == d.coloring.at(fb))
      return Violation{"edge {" + std::to_string(h) + "," +
                       std::to_string(mate) + "} borders two " +
                       (d.coloring.at(fa) == FaceColor::input ? "input"
                                                              : "output") +
                       " faces " + std::to_string(fa) + " and " +
                       std::to_string(fb)};
  }
  return std::nullopt;
}

/// (g, k, l) of a valid diagram, via V - E + F = 2 - 2g on the closed-up
/// surface; all faces are colored, so chi of the signature is V - E.
inline Signature signature(const StringDiagram& d) {
  if (auto v = validate(d))
    throw std::invalid_argument("signature: invalid diagram: " + v->what);
  const int V = static_cast<int>(d.graph.vertices.size());
  const int E = static_cast<int>(d.graph.involution.size()) / 2;
  const auto fs = faces(d.graph);
  const int F = static_cast<int>(fs.size());
  const int euler = V - E + F;
  if (euler % 2 != 0 || euler > 2)
    throw std::logic_error("signature: bad closed Euler characteristic");
  Signature s;
  s.g = (2 - euler) / 2;
  for (const auto& [fid, color] : d.coloring)
    (color == FaceColor::input ? s.k : s.l)++;
  return s;
}

/// Dimension of the combinatorial moduli cell: -3*chi - 1. Needs chi < 0.
inline int moduli_dim(const Signature& s) {
  if (s.chi() >= 0)
    throw std::invalid_argument("moduli_dim: need chi < 0, got " +
                                s.str());
  return -3 * s.chi() - 1;
}

inline void require_valid_signature(const Signature& s, const char* who) {
  if (s.g < 0 || s.k < 1 || s.l < 1 || s.chi() >= 0)
    throw std::invalid_argument(std::string(who) +
                                ": not a diagram signature: " + s.str());
}

/// Glue output `out_index` of s1 to input `in_index` of s2 along one circle.
/// chi is additive and the glued cell has codimension one:
/// dim = dim1 + dim2 + 1.
inline Signature glue_signatures(const Signature& s1, int out_index,
                                 const Signature& s2, int in_index) {
  require_valid_signature(s1, "glue_signatures");
  require_valid_signature(s2, "glue_signatures");
  if (out_index < 1 || out_index > s1.l)
    throw std::invalid_argument("glue_signatures: output index " +
                                std::to_string(out_index) + " out of range");
  if (in_index < 1 || in_index > s2.k)
    throw std::invalid_argument("glue_signatures: input index " +
                                std::to_string(in_index) + " out of range");
  Signature s{s1.g + s2.g, s1.k + s2.k - 1, s1.l + s2.l - 1};
  require_valid_signature(s, "glue_signatures(result)");
  return s;
}

/// Glue along two circles at once (two distinct outputs of s1 to two distinct
/// inputs of s2); the second identification raises genus by one.
inline Signature glue_signatures_double(const Signature& s1, int out_a,
                                        int out_b, const Signature& s2,
                                        int in_a, int in_b) {
  require_valid_signature(s1, "glue_signatures_double");
  require_valid_signature(s2, "glue_signatures_double");
  if (out_a == out_b || in_a == in_b)
    throw std::invalid_argument("glue_signatures_double: circles must differ");
  for (int o : {out_a, out_b})
    if (o < 1 || o > s1.l)
      throw std::invalid_argument("glue_signatures_double: output index " +
                                  std::to_string(o) + " out of range");
  for (int i : {in_a, in_b})
    if (i < 1 || i > s2.k)
      throw std::invalid_argument("glue_signatures_double: input index " +
                                  std::to_string(i) + " out of range");
  Signature s{s1.g + s2.g + 1, s1.k + s2.k - 2, s1.l + s2.l - 2};
  require_valid_signature(s, "glue_signatures_double(result)");
  return s;
}

/// One way s can factor as s1 glued to s2; multiplicity counts the circle
/// matchings realizing it. Double (genus-raising) gluings are flagged.
struct CompositionTerm {
  Signature s1;
  Signature s2;
  long long multiplicity = 0;
  bool double_gluing = false;
};

/// All ordered factorizations of s over single- and double-circle gluings,
/// in deterministic (s1, s2, flag) order. chi1 + chi2 = chi in every term.
inline std::vector<CompositionTerm> composition_terms(const Signature& s) {
  require_valid_signature(s, "composition_terms");
  std::vector<CompositionTerm> out;
  auto emit = [&](const Signature& s1, const Signature& s2, bool dbl,
                  long long mult) {
    if (s1.g < 0 || s2.g < 0 || s1.k < 1 || s1.l < 1 || s2.k < 1 || s2.l < 1)
      return;
    if (s1.chi() >= 0 || s2.chi() >= 0) return;  // cylinders are not diagrams
    if (mult <= 0) return;
    out.push_back(CompositionTerm{s1, s2, mult, dbl});
  };
  // single gluing: g1+g2 = g, k1+k2 = k+1, l1+l2 = l+1
  for (int g1 = 0; g1 <= s.g; ++g1)
    for (int k1 = 1; k1 <= s.k; ++k1)
      for (int l1 = 1; l1 <= s.l; ++l1) {
        Signature s1{g1, k1, l1};
        Signature s2{s.g - g1, s.k + 1 - k1, s.l + 1 - l1};
        emit(s1, s2, false, static_cast<long long>(s1.l) * s2.k);
      }
  // double gluing: g1+g2 = g-1, k1+k2 = k+2, l1+l2 = l+2
  for (int g1 = 0; g1 + 1 <= s.g; ++g1)
    for (int k1 = 1; k1 <= s.k + 1; ++k1)
      for (int l1 = 1; l1 <= s.l + 1; ++l1) {
        Signature s1{g1, k1, l1};
        Signature s2{s.g - 1 - g1, s.k + 2 - k1, s.l + 2 - l1};
        // unordered pairs of disjoint (output, input) matchings
        long long pairs = static_cast<long long>(s1.l) * (s1.l - 1) / 2 *
                          s2.k * (s2.k - 1);
        emit(s1, s2, true, pairs);
      }
  std::sort(out.begin(), out.end(), [](const CompositionTerm& a,
                                       const CompositionTerm& b) {
    if (a.double_gluing != b.double_gluing) return !a.double_gluing;
    if (!(a.s1 == b.s1)) return a.s1 < b.s1;
    return a.s2 < b.s2;
  });
  return out;
}

}  // namespace curvelie

#endif  // CURVELIE_DIAGRAM_HPP
