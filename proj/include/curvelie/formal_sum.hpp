#ifndef CURVELIE_FORMAL_SUM_HPP
#define CURVELIE_FORMAL_SUM_HPP

#include <array>
#include <cstdint>
#include <map>
#include <utility>

#include "curvelie/word.hpp"

namespace curvelie {

/// Integer linear combination with exact coefficients and canonical keys.
/// Zero coefficients are erased eagerly, so is_zero() == empty().
template <typename Key>
class LinearCombo {
 public:
  using Terms = std::map<Key, long long>;

  void add(const Key& key, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const LinearCombo& other, long long scale) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  LinearCombo& operator+=(const LinearCombo& o) {
    add_scaled(o, 1);
    return *this;
  }
  LinearCombo& operator-=(const LinearCombo& o) {
    add_scaled(o, -1);
    return *this;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  long long coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  long long abs_coeff_sum() const {
    long long s = 0;
    for (const auto& [k, c] : terms_) s += c < 0 ? -c : c;
    return s;
  }

  friend bool operator==(const LinearCombo&, const LinearCombo&) = default;

 private:
  Terms terms_;
};

using FormalSum = LinearCombo<ConjClass>;
using ClassPair = std::pair<ConjClass, ConjClass>;
using TensorSquareSum = LinearCombo<ClassPair>;
using ClassTriple = std::array<ConjClass, 3>;
using TensorCubeSum = LinearCombo<ClassTriple>;

/// Swap the two tensor factors of every term.
inline TensorSquareSum flip(const TensorSquareSum& s) {
  TensorSquareSum out;
  for (const auto& [pair, c] : s.terms())
    out.add(ClassPair{pair.second, pair.first}, c);
  return out;
}

/// Cyclic rotation (u,v,w) -> (w,u,v) of every term.
inline TensorCubeSum rotate(const TensorCubeSum& s) {
  TensorCubeSum out;
  for (const auto& [t, c] : s.terms())
    out.add(ClassTriple{t[2], t[0], t[1]}, c);
  return out;
}

}  // namespace curvelie

#endif  // CURVELIE_FORMAL_SUM_HPP
