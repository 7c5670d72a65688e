#pragma once

// Words in the generators, inversion sets N(w), reduction through the
// exchange condition, right weak order comparisons, meets, peeling of
// finite biclosed sets and joins in finite groups.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coxwo/rootstore.hpp"

namespace coxwo {

struct Word {
  std::vector<std::size_t> letters;

  Word() = default;
  explicit Word(std::vector<std::size_t> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Word inverse() const { return Word({letters.rbegin(), letters.rend()}); }
  friend Word operator*(const Word& u, const Word& v) {
    Word w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
  }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  /// "a.b.c"; the empty word is "e" unless a generator is called e, then "".
  static Word parse(const CoxeterSystem& sys, const std::string& text) {
    Word w;
    if (text.empty() || (text == "e" && !sys.find_generator("e"))) return w;
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto dot = text.find('.', start);
      const std::string tok = text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      if (tok.empty()) throw InputError("malformed word literal '" + text + "'");
      w.letters.push_back(sys.generator(tok));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    return w;
  }
  std::string str(const CoxeterSystem& sys) const {
    if (letters.empty()) return sys.find_generator("e") ? "" : "e";
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) s += '.';
      s += sys.name(letters[i]);
    }
    return s;
  }
};

/// Raised by inversion_set on a non-reduced word.
class NotReduced : public InputError {
 public:
  NotReduced(std::size_t position, const std::string& word)
      : InputError("word " + word + " is not reduced (letter " + std::to_string(position + 1) +
                   " produces a negative root)"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Signed index of u(root).
inline SignedIndex apply_word(RootStore& store, const Word& u, SignedIndex root) {
  for (std::size_t k = u.size(); k-- > 0;) root = store.reflect(root, u.letters[k]);
  return root;
}

/// β_i = s_1...s_{i-1}(α_{s_i}) as signed indices, in order (no reducedness check).
inline std::vector<SignedIndex> inversion_stream(RootStore& store, const Word& w) {
  std::vector<SignedIndex> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    SignedIndex r = static_cast<SignedIndex>(w.letters[i]);
    for (std::size_t k = i; k-- > 0;) r = store.reflect(r, w.letters[k]);
    out.push_back(r);
  }
  return out;
}

/// N(w) in the order β_1, ..., β_k. Throws NotReduced.
inline std::vector<int> inversion_sequence(RootStore& store, const Word& w) {
  auto stream = inversion_stream(store, w);
  for (std::size_t i = 0; i < stream.size(); ++i)
    if (!is_positive(stream[i])) throw NotReduced(i, w.str(store.system()));
  return {stream.begin(), stream.end()};
}

/// N(w) as a sorted index set.
inline std::vector<int> inversion_set(RootStore& store, const Word& w) {
  auto seq = inversion_sequence(store, w);
  std::sort(seq.begin(), seq.end());
  return seq;
}

inline bool is_reduced(RootStore& store, const Word& w) {
  for (auto r : inversion_stream(store, w))
    if (!is_positive(r)) return false;
  return true;
}

/// Reduced word for the same element: repeatedly deletes the letter pair (j, i) where
/// β_i is the first negative root and β_j = -β_i.
inline Word reduce(RootStore& store, Word w) {
  for (;;) {
    auto stream = inversion_stream(store, w);
    std::optional<std::size_t> bad;
    for (std::size_t i = 0; i < stream.size() && !bad; ++i)
      if (!is_positive(stream[i])) bad = i;
    if (!bad) return w;
    const SignedIndex target = negate(stream[*bad]);
    std::optional<std::size_t> partner;
    for (std::size_t j = 0; j < *bad; ++j)
      if (stream[j] == target) partner = j;
    if (!partner) throw std::logic_error("exchange condition failed while reducing a word");
    w.letters.erase(w.letters.begin() + static_cast<std::ptrdiff_t>(*bad));
    w.letters.erase(w.letters.begin() + static_cast<std::ptrdiff_t>(*partner));
  }
}

inline std::size_t length(RootStore& store, const Word& w) { return reduce(store, w).size(); }

/// N(uv) = N(u) ⊔ u(N(v)); throws InputError when the union is not disjoint or uv is not reduced.
inline std::vector<int> concat_inversions(RootStore& store, const Word& u, const Word& v) {
  std::vector<int> out = inversion_sequence(store, u);
  std::set<int> seen(out.begin(), out.end());
  for (int r : inversion_sequence(store, v)) {
    const SignedIndex img = apply_word(store, u, r);
    if (!is_positive(img)) throw InputError("u(N(v)) contains a negative root: product not reduced");
    if (!seen.insert(img).second) throw InputError("N(u) and u(N(v)) overlap: product not reduced");
    out.push_back(img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// u <= w in the right weak order.
inline bool is_prefix(RootStore& store, const Word& u, const Word& w) {
  const std::size_t lu = length(store, u);
  const std::size_t lw = length(store, w);
  if (lu > lw) return false;
  return lu + length(store, u.inverse() * w) == lw;
}

/// Greedy meet: extend g by s while gs stays below every element of X.
inline Word meet(RootStore& store, const std::vector<Word>& xs) {
  if (xs.empty()) throw InputError("meet of an empty set");
  std::vector<Word> reduced;
  for (const auto& x : xs) reduced.push_back(reduce(store, x));
  Word g;
  for (;;) {
    bool extended = false;
    for (std::size_t s = 0; s < store.rank() && !extended; ++s) {
      Word gs = g * Word({s});
      if (!is_positive(apply_word(store, g, static_cast<SignedIndex>(s)))) continue;
      bool below_all = true;
      for (const auto& x : reduced)
        if (!is_prefix(store, gs, x)) {
          below_all = false;
          break;
        }
      if (below_all) {
        g = std::move(gs);
        extended = true;
      }
    }
    if (!extended) return g;
  }
}

struct PeelFailure {
  enum class Reason { NoSimpleRoot, NegativeRoot } reason;
  std::vector<int> remaining;  // the set (in peeled coordinates) where peeling stopped
  Word prefix;                 // letters peeled so far
};

/// Word w with N(w) = A, or the reason A is not the inversion set of an element.
inline std::variant<Word, PeelFailure> peel(RootStore& store, std::vector<int> a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  Word w;
  const int n = static_cast<int>(store.rank());
  while (!a.empty()) {
    // simple roots occupy indices 0..n-1, so the first simple root in generator order is a.front()
    if (a.front() >= n) return PeelFailure{PeelFailure::Reason::NoSimpleRoot, a, w};
    const auto s = static_cast<std::size_t>(a.front());
    std::vector<int> next;
    next.reserve(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) {
      const SignedIndex r = store.reflect(a[k], s);
      if (!is_positive(r)) return PeelFailure{PeelFailure::Reason::NegativeRoot, a, w};
      next.push_back(r);
    }
    std::sort(next.begin(), next.end());
    w.letters.push_back(s);
    a = std::move(next);
  }
  return w;
}

/// Longest element of a finite group (throws when the group is infinite or too large).
inline Word longest_element(RootStore& store, std::size_t max_length = 10000) {
  const Signature sig = store.system().signature();
  if (sig.positive != static_cast<int>(store.rank())) throw InputError("the Coxeter group is not finite");
  Word w;
  for (;;) {
    bool grew = false;
    for (std::size_t s = 0; s < store.rank(); ++s)
      if (is_positive(apply_word(store, w, static_cast<SignedIndex>(s)))) {
        w.letters.push_back(s);
        grew = true;
        break;
      }
    if (!grew) return w;
    if (w.size() > max_length) throw BudgetExceeded("longest element search exceeded its length budget");
  }
}

/// Join in a finite group: ⋁X = (⋀{x w0 : x ∈ X}) w0.
inline Word finite_group_join(RootStore& store, const std::vector<Word>& xs) {
  const Word w0 = longest_element(store);
  if (xs.empty()) return Word{};
  std::vector<Word> shifted;
  for (const auto& x : xs) shifted.push_back(reduce(store, x * w0));
  return reduce(store, meet(store, shifted) * w0);
}

}  // namespace coxwo
