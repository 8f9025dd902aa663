#ifndef CURVELIE_WORD_HPP
#define CURVELIE_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvelie {

inline constexpr int kMaxGenerators = 26;

/// One letter of a free-group word: generator index (1-based) plus a sign.
/// The letter order used everywhere is a < a⁻¹ < b < b⁻¹ < ...
struct Letter {
  std::uint8_t gen = 1;  // 1..kMaxGenerators
  bool inv = false;      // true = inverse generator

  friend bool operator==(const Letter&, const Letter&) = default;

  int order_key() const { return (gen - 1) * 2 + (inv ? 1 : 0); }
  Letter inverse() const { return Letter{gen, !inv}; }

  char to_char() const {
    return static_cast<char>((inv ? 'A' : 'a') + gen - 1);
  }
  static Letter from_char(char c) {
    if (c >= 'a' && c <= 'z')
      return Letter{static_cast<std::uint8_t>(c - 'a' + 1), false};
    if (c >= 'A' && c <= 'Z')
      return Letter{static_cast<std::uint8_t>(c - 'A' + 1), true};
    throw std::invalid_argument(std::string("not a word letter: '") + c + "'");
  }
};

inline bool letter_less(const Letter& a, const Letter& b) {
  return a.order_key() < b.order_key();
}

using Letters = std::vector<Letter>;

inline Letters parse_letters(const std::string& s) {
  Letters out;
  out.reserve(s.size());
  for (char c : s) out.push_back(Letter::from_char(c));
  return out;
}

inline std::string letters_to_string(const Letters& ls) {
  std::string s;
  s.reserve(ls.size());
  for (const Letter& l : ls) s.push_back(l.to_char());
  return s;
}

/// Free reduction: cancel adjacent letter/inverse pairs until none remain.
/// Idempotent and length-nonincreasing.
inline Letters free_reduce(const Letters& input) {
  Letters stack;
  stack.reserve(input.size());
  for (const Letter& l : input) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return stack;
}

/// A freely reduced word in the free group. May be empty (identity).
class Word {
 public:
  Word() = default;
  explicit Word(Letters letters) : letters_(free_reduce(letters)) {}
  static Word parse(const std::string& s) { return Word(parse_letters(s)); }

  const Letters& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::string str() const { return letters_to_string(letters_); }

  Word inverse() const {
    Letters inv(letters_.rbegin(), letters_.rend());
    for (Letter& l : inv) l = l.inverse();
    return Word(std::move(inv));
  }

  friend Word operator*(const Word& a, const Word& b) {
    Letters cat = a.letters_;
    cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(cat));
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Letters letters_;
};

namespace detail {

// Lexicographic comparison under the fixed letter order, on rotations of a
// cyclic word. Returns true if rotation i of w is strictly less than rotation j.
inline bool rotation_less(const Letters& w, std::size_t i, std::size_t j) {
  const std::size_t n = w.size();
  for (std::size_t d = 0; d < n; ++d) {
    int ki = w[(i + d) % n].order_key();
    int kj = w[(j + d) % n].order_key();
    if (ki != kj) return ki < kj;
  }
  return false;
}

inline Letters cyclic_reduce(Letters w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front() == w.back().inverse()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

}  // namespace detail

/// Canonical representative of a free homotopy class: the cyclically reduced
/// word, rotated to its lexicographically least position. The empty class is
/// the trivial (contractible) sentinel; it is never stored inside sums.
class ConjClass {
 public:
  ConjClass() = default;  // trivial class
  explicit ConjClass(const Word& w) : ConjClass(w.letters()) {}
  explicit ConjClass(Letters raw) {
    Letters w = detail::cyclic_reduce(std::move(raw));
    if (w.empty()) return;
    std::size_t best = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
      if (detail::rotation_less(w, i, best)) best = i;
    letters_.reserve(w.size());
    for (std::size_t d = 0; d < w.size(); ++d)
      letters_.push_back(w[(best + d) % w.size()]);
  }
  static ConjClass parse(const std::string& s) {
    return ConjClass(parse_letters(s));
  }

  bool trivial() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  const Letters& letters() const { return letters_; }
  std::string str() const { return letters_to_string(letters_); }

  /// Letter at cyclic position i (any integer).
  Letter at(long long i) const {
    const long long n = static_cast<long long>(letters_.size());
    return letters_[static_cast<std::size_t>(((i % n) + n) % n)];
  }

  int max_generator() const {
    int m = 0;
    for (const Letter& l : letters_) m = std::max(m, static_cast<int>(l.gen));
    return m;
  }

  ConjClass inverse() const {
    Letters inv(letters_.rbegin(), letters_.rend());
    for (Letter& l : inv) l = l.inverse();
    return ConjClass(std::move(inv));
  }

  friend bool operator==(const ConjClass&, const ConjClass&) = default;

  // Order by length, then letter keys; gives the deterministic class order
  // used for enumeration and for map keys.
  friend std::strong_ordering operator<=>(const ConjClass& a,
                                          const ConjClass& b) {
    if (a.letters_.size() != b.letters_.size())
      return a.letters_.size() <=> b.letters_.size();
    for (std::size_t i = 0; i < a.letters_.size(); ++i) {
      int ka = a.letters_[i].order_key(), kb = b.letters_[i].order_key();
      if (ka != kb) return ka <=> kb;
    }
    return std::strong_ordering::equal;
  }

 private:
  Letters letters_;
};

inline ConjClass canonical_class(const Word& w) { return ConjClass(w); }

struct PrimitiveRoot {
  ConjClass root;
  int multiplicity = 1;
};

/// Smallest p with c = p^m. The canonical form of a power is periodic with the
/// root's length, so it suffices to test divisor-length rotations.
inline PrimitiveRoot primitive_root(const ConjClass& c) {
  if (c.trivial())
    throw std::invalid_argument("primitive_root: trivial class");
  const std::size_t n = c.length();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < n && periodic; ++i)
      periodic = c.letters()[i] == c.letters()[(i + d) % n];
    if (periodic) {
      Letters head(c.letters().begin(), c.letters().begin() + d);
      return PrimitiveRoot{ConjClass(std::move(head)),
                           static_cast<int>(n / d)};
    }
  }
  return PrimitiveRoot{c, 1};
}

/// Canonical class of c^n, n != 0. Negative n goes through the inverse word.
inline ConjClass class_power(const ConjClass& c, int n) {
  if (c.trivial()) throw std::invalid_argument("class_power: trivial class");
  if (n == 0) throw std::invalid_argument("class_power: zero exponent");
  const ConjClass base = n > 0 ? c : c.inverse();
  const int reps = n > 0 ? n : -n;
  Letters out;
  out.reserve(base.length() * static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r)
    out.insert(out.end(), base.letters().begin(), base.letters().end());
  return ConjClass(std::move(out));
}

/// Visit every canonical class of word length exactly len, in lexicographic
/// order; with primitive_only, proper powers are skipped.
inline void enumerate_classes_of_length(
    int k, int len, bool primitive_only,
    const std::function<void(const ConjClass&)>& fn) {
  if (k < 1 || k > kMaxGenerators)
    throw std::invalid_argument("enumerate_classes: bad generator count");
  if (len < 1) return;
  const int alphabet = 2 * k;
  Letters w(static_cast<std::size_t>(len));
  // Depth-first walk over all reduced words of this length, in letter order.
  std::function<void(int)> rec = [&](int pos) {
    if (pos == len) {
      // cyclically reduced?
      if (len >= 2 && w.front() == w.back().inverse()) return;
      // canonical (least) rotation?
      for (std::size_t i = 1; i < w.size(); ++i)
        if (detail::rotation_less(w, i, 0)) return;
      ConjClass c(w);
      if (c.length() != static_cast<std::size_t>(len)) return;
      if (primitive_only && primitive_root(c).multiplicity != 1) return;
      fn(c);
      return;
    }
    for (int key = 0; key < alphabet; ++key) {
      Letter l{static_cast<std::uint8_t>(key / 2 + 1), key % 2 == 1};
      if (pos > 0 && l == w[pos - 1].inverse()) continue;
      w[static_cast<std::size_t>(pos)] = l;
      rec(pos + 1);
    }
  };
  rec(0);
}

inline std::vector<ConjClass> enumerate_classes_of_length(
    int k, int len, bool primitive_only = false) {
  std::vector<ConjClass> out;
  enumerate_classes_of_length(k, len, primitive_only,
                              [&](const ConjClass& c) { out.push_back(c); });
  return out;
}

/// Visit every nontrivial canonical class of word length <= max_len, ordered
/// by length then lexicographically; with primitive_only, proper powers are
/// skipped. k is the generator count.
inline void enumerate_classes(int k, int max_len, bool primitive_only,
                              const std::function<void(const ConjClass&)>& fn) {
  for (int len = 1; len <= max_len; ++len)
    enumerate_classes_of_length(k, len, primitive_only, fn);
}

inline std::vector<ConjClass> enumerate_classes(int k, int max_len,
                                                bool primitive_only = false) {
  std::vector<ConjClass> out;
  enumerate_classes(k, max_len, primitive_only,
                    [&](const ConjClass& c) { out.push_back(c); });
  return out;
}

}  // namespace curvelie

#endif  // CURVELIE_WORD_HPP
