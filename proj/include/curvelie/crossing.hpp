#ifndef CURVELIE_CROSSING_HPP
#define CURVELIE_CROSSING_HPP

#include <algorithm>
#include <array>
#include <stdexcept>

#include "curvelie/fatgraph.hpp"
#include "curvelie/word.hpp"

namespace curvelie {

/// Infinite periodic edge-path read outward from the vertex. Forward rays
/// read the cyclic word from `start`; backward rays read the inverse word
/// from just before `start` (the direction the strand arrived from).
struct Ray {
  const ConjClass* cls = nullptr;
  int start = 0;
  bool forward = true;

  Letter letter(long long depth) const {
    if (forward) return cls->at(start + depth);
    return cls->at(start - 1 - depth).inverse();
  }
  int period() const { return static_cast<int>(cls->length()); }
};

/// One traversal of the vertex: the strand between letters t-1 and t of the
/// cyclic word. Cyclic reducedness keeps the two rays distinct at depth 0.
struct Pass {
  const ConjClass* cls = nullptr;
  int t = 0;

  Ray out_ray() const { return Ray{cls, t, true}; }
  Ray in_ray() const { return Ray{cls, t, false}; }
};

enum class RaySide { left, right, equal };

struct RayDivergence {
  RaySide side = RaySide::equal;
  int depth = -1;  // first differing letter; -1 when equal
};

/// Walk two rays in lockstep and order them by the counterclockwise position
/// of their first differing branch. At depth 0 the branches are ordered by
/// sigma's fixed linearization; deeper, by sigma cut just after the shared
/// incoming end (the planar order of subtrees in the universal cover). Rays
/// agreeing for period1+period2 letters agree forever (Fine-Wilf), so the
/// walk is capped there.
inline RayDivergence compare_rays(const FatGraph& G, const Ray& r1,
                                  const Ray& r2) {
  const int cap = r1.period() + r2.period();
  for (int d = 0; d < cap; ++d) {
    const Letter a = r1.letter(d);
    const Letter b = r2.letter(d);
    if (a == b) continue;
    int ia, ib;
    if (d == 0) {
      ia = G.global_index(initial_end(a));
      ib = G.global_index(initial_end(b));
    } else {
      const EndId cut = terminal_end(r1.letter(d - 1));
      ia = G.index_after(cut, initial_end(a));
      ib = G.index_after(cut, initial_end(b));
    }
    return RayDivergence{ia < ib ? RaySide::left : RaySide::right, d};
  }
  return RayDivergence{RaySide::equal, -1};
}

inline bool rays_equal(const FatGraph& G, const Ray& r1, const Ray& r2) {
  return compare_rays(G, r1, r2).side == RaySide::equal;
}

enum class LinkVerdict { linked, not_linked, parallel };

/// A pass pair certified as a transverse crossing, with its sign.
struct LinkedPair {
  LinkVerdict verdict = LinkVerdict::not_linked;
  int sign = 0;
};

/// Decide whether passes p and q cross, counting each geometric crossing at
/// exactly one alignment.
///
/// Two lifted lines cross iff their four boundary ends alternate around the
/// circle, but the ends alternate at *every* vertex the lines share; the
/// crossing must be charged to one of them. We charge it to the vertex where
/// p's line enters the shared path, i.e. where p's incoming branch leaves
/// both of q's branches — the first-letter test below. A pair whose rays
/// coincide as infinite words carries parallel strands and never crosses.
inline LinkedPair is_linked(const FatGraph& G, const Pass& p, const Pass& q) {
  const Ray pi = p.in_ray(), po = p.out_ray();
  const Ray qi = q.in_ray(), qo = q.out_ray();

  if (rays_equal(G, pi, qi) || rays_equal(G, pi, qo) ||
      rays_equal(G, po, qi) || rays_equal(G, po, qo))
    return LinkedPair{LinkVerdict::parallel, 0};

  if (pi.letter(0) == qi.letter(0) || pi.letter(0) == qo.letter(0))
    return LinkedPair{LinkVerdict::not_linked, 0};

  // Counterclockwise circular order of the four rays, read from the fixed cut.
  struct Labeled {
    Ray ray;
    int label;  // 0 = p.in, 1 = p.out, 2 = q.in, 3 = q.out
  };
  std::array<Labeled, 4> rays{Labeled{pi, 0}, Labeled{po, 1}, Labeled{qi, 2},
                              Labeled{qo, 3}};
  std::sort(rays.begin(), rays.end(),
            [&](const Labeled& a, const Labeled& b) {
              return compare_rays(G, a.ray, b.ray).side == RaySide::left;
            });

  int at = 0;
  while (rays[static_cast<std::size_t>(at)].label != 0) ++at;
  const int second = rays[static_cast<std::size_t>((at + 1) % 4)].label;
  const int third = rays[static_cast<std::size_t>((at + 2) % 4)].label;
  if (third != 1) return LinkedPair{LinkVerdict::not_linked, 0};
  // (p.in, q.in, p.out, q.out) ccw is a positive crossing.
  return LinkedPair{LinkVerdict::linked, second == 2 ? 1 : -1};
}

/// Calls fn(t, s, sign) for every linked ordered pass pair of (u, v); sets
/// parallel_seen if any pair carried coinciding rays. Skips t == s when
/// u and v are the same class object by value.
template <typename Fn>
inline bool for_each_linked_pair(const FatGraph& G, const ConjClass& u,
                                 const ConjClass& v, Fn&& fn) {
  if (u.trivial() || v.trivial())
    throw std::invalid_argument("linked pairs: trivial class");
  if (u.max_generator() > G.edge_count() ||
      v.max_generator() > G.edge_count())
    throw std::invalid_argument("class uses a generator beyond the surface");
  const bool same = u == v;
  bool parallel_seen = false;
  const int nu = static_cast<int>(u.length());
  const int nv = static_cast<int>(v.length());
  for (int t = 0; t < nu; ++t) {
    for (int s = 0; s < nv; ++s) {
      if (same && t == s) continue;
      const LinkedPair lp = is_linked(G, Pass{&u, t}, Pass{&v, s});
      if (lp.verdict == LinkVerdict::parallel)
        parallel_seen = true;
      else if (lp.verdict == LinkVerdict::linked)
        fn(t, s, lp.sign);
    }
  }
  return parallel_seen;
}

}  // namespace curvelie

#endif  // CURVELIE_CROSSING_HPP
