#ifndef CURVELIE_GOLDMAN_TURAEV_HPP
#define CURVELIE_GOLDMAN_TURAEV_HPP

#include <stdexcept>

#include "curvelie/crossing.hpp"
#include "curvelie/fatgraph.hpp"
#include "curvelie/formal_sum.hpp"
#include "curvelie/word.hpp"

namespace curvelie {

namespace detail {

/// Letters of the cyclic word read once around, starting at position t.
inline Letters rotation(const ConjClass& c, int t) {
  Letters out;
  out.reserve(c.length());
  for (std::size_t d = 0; d < c.length(); ++d) out.push_back(c.at(t + static_cast<long long>(d)));
  return out;
}

/// Letters from position `from` (inclusive) to `to` (exclusive), cyclically.
inline Letters segment(const ConjClass& c, int from, int to) {
  const int n = static_cast<int>(c.length());
  int len = ((to - from) % n + n) % n;
  Letters out;
  out.reserve(static_cast<std::size_t>(len));
  for (int d = 0; d < len; ++d) out.push_back(c.at(from + d));
  return out;
}

}  // namespace detail

/// Goldman bracket: signed sum over crossings of the loop composed at the
/// crossing. Terms that reduce to the trivial class are dropped.
inline FormalSum goldman_bracket(const FatGraph& G, const ConjClass& u,
                                 const ConjClass& v) {
  FormalSum out;
  for_each_linked_pair(G, u, v, [&](int t, int s, int sign) {
    Letters cat = detail::rotation(u, t);
    const Letters tail = detail::rotation(v, s);
    cat.insert(cat.end(), tail.begin(), tail.end());
    ConjClass composed(std::move(cat));
    if (!composed.trivial()) out.add(composed, sign);
  });
  return out;
}

/// Turaev cobracket: signed sum over self-crossings of the two loops obtained
/// by splitting the curve there. Enumerating ordered pass pairs produces each
/// crossing twice with swapped factors and opposite signs, which is exactly
/// the skew-symmetric sum; terms with a trivial factor are dropped.
inline TensorSquareSum turaev_cobracket(const FatGraph& G, const ConjClass& w) {
  TensorSquareSum out;
  for_each_linked_pair(G, w, w, [&](int t, int s, int sign) {
    ConjClass first(detail::segment(w, t, s));
    ConjClass second(detail::segment(w, s, t));
    if (first.trivial() || second.trivial()) return;
    out.add(ClassPair{std::move(first), std::move(second)}, sign);
  });
  return out;
}

/// Number of transverse self-crossings (linked unordered pass pairs).
/// For primitive classes this is the combinatorial minimal self-intersection
/// count; parallel strand pairs of powers are pushed off and not counted.
inline int self_link_count(const FatGraph& G, const ConjClass& w) {
  int ordered = 0;
  for_each_linked_pair(G, w, w, [&](int, int, int) { ++ordered; });
  if (ordered % 2 != 0)
    throw std::logic_error("self_link_count: odd ordered pair count");
  return ordered / 2;
}

struct IntersectionCount {
  int crossings = 0;
  bool parallel_pairs = false;  // u, v share a primitive up to rotation
};

/// Number of linked pass pairs between distinct classes u and v.
inline IntersectionCount intersection_count(const FatGraph& G,
                                            const ConjClass& u,
                                            const ConjClass& v) {
  if (u == v)
    throw std::invalid_argument(
        "intersection_count: equal classes (use self_link_count)");
  IntersectionCount res;
  res.parallel_pairs =
      for_each_linked_pair(G, u, v, [&](int, int, int) { ++res.crossings; });
  return res;
}

/// Simple = primitive and free of self-crossings (embedded representative).
inline bool is_simple(const FatGraph& G, const ConjClass& w) {
  if (w.trivial()) throw std::invalid_argument("is_simple: trivial class");
  return primitive_root(w).multiplicity == 1 && self_link_count(G, w) == 0;
}

}  // namespace curvelie

#endif  // CURVELIE_GOLDMAN_TURAEV_HPP
