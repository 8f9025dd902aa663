#ifndef CURVELIE_BIALGEBRA_HPP
#define CURVELIE_BIALGEBRA_HPP

#include "curvelie/formal_sum.hpp"
#include "curvelie/goldman_turaev.hpp"

namespace curvelie {

/// Bilinear extension of the bracket to formal sums.
inline FormalSum bracket_ext(const FatGraph& G, const FormalSum& X,
                             const FormalSum& Y) {
  FormalSum out;
  for (const auto& [u, cu] : X.terms())
    for (const auto& [v, cv] : Y.terms())
      out.add_scaled(goldman_bracket(G, u, v), cu * cv);
  return out;
}

/// Linear extension of the cobracket to formal sums.
inline TensorSquareSum cobracket_ext(const FatGraph& G, const FormalSum& X) {
  TensorSquareSum out;
  for (const auto& [w, c] : X.terms())
    out.add_scaled(turaev_cobracket(G, w), c);
  return out;
}

inline FormalSum singleton(const ConjClass& c) {
  FormalSum s;
  s.add(c, 1);
  return s;
}

/// Adjoint action of a class on a tensor square:
/// x.(a (x) b) = [x,a] (x) b + a (x) [x,b].
inline TensorSquareSum adjoint_action(const FatGraph& G, const ConjClass& x,
                                      const TensorSquareSum& T) {
  TensorSquareSum out;
  for (const auto& [pair, c] : T.terms()) {
    const FormalSum left = goldman_bracket(G, x, pair.first);
    for (const auto& [e, ce] : left.terms())
      out.add(ClassPair{e, pair.second}, c * ce);
    const FormalSum right = goldman_bracket(G, x, pair.second);
    for (const auto& [e, ce] : right.terms())
      out.add(ClassPair{pair.first, e}, c * ce);
  }
  return out;
}

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; zero when the engine is sound.
inline FormalSum check_jacobi(const FatGraph& G, const ConjClass& x,
                              const ConjClass& y, const ConjClass& z) {
  FormalSum defect;
  defect += bracket_ext(G, singleton(x), goldman_bracket(G, y, z));
  defect += bracket_ext(G, singleton(y), goldman_bracket(G, z, x));
  defect += bracket_ext(G, singleton(z), goldman_bracket(G, x, y));
  return defect;
}

/// [x,y] + [y,x].
inline FormalSum check_antisym(const FatGraph& G, const ConjClass& x,
                               const ConjClass& y) {
  FormalSum defect = goldman_bracket(G, x, y);
  defect += goldman_bracket(G, y, x);
  return defect;
}

/// delta(x) + flip(delta(x)).
inline TensorSquareSum check_coskew(const FatGraph& G, const ConjClass& x) {
  TensorSquareSum d = turaev_cobracket(G, x);
  d += flip(d);
  return d;
}

/// (1 + rho + rho^2)(delta (x) id)(delta(x)) with rho the cyclic rotation of
/// tensor factors.
inline TensorCubeSum check_cojacobi(const FatGraph& G, const ConjClass& x) {
  TensorCubeSum once;
  const TensorSquareSum outer = turaev_cobracket(G, x);
  for (const auto& [pair, c] : outer.terms()) {
    const TensorSquareSum inner_sum = turaev_cobracket(G, pair.first);
    for (const auto& [inner, ci] : inner_sum.terms())
      once.add(ClassTriple{inner.first, inner.second, pair.second}, c * ci);
  }
  TensorCubeSum defect = once;
  TensorCubeSum r = rotate(once);
  defect += r;
  defect += rotate(r);
  return defect;
}

/// Five-term compatibility: delta[x,y] - x.delta(y) + y.delta(x).
inline TensorSquareSum check_compat(const FatGraph& G, const ConjClass& x,
                                    const ConjClass& y) {
  TensorSquareSum defect = cobracket_ext(G, goldman_bracket(G, x, y));
  defect -= adjoint_action(G, x, turaev_cobracket(G, y));
  defect += adjoint_action(G, y, turaev_cobracket(G, x));
  return defect;
}

/// Bracket applied to the cobracket: the involutive relation.
inline FormalSum check_involutive(const FatGraph& G, const ConjClass& x) {
  FormalSum defect;
  const TensorSquareSum d = turaev_cobracket(G, x);
  for (const auto& [pair, c] : d.terms())
    defect.add_scaled(goldman_bracket(G, pair.first, pair.second), c);
  return defect;
}

}  // namespace curvelie

#endif  // CURVELIE_BIALGEBRA_HPP
