#pragma once

// Eventually periodic infinite reduced words prefix·period^∞: their inversion
// roots β_i = w_{i-1}(α_{s_i}), exact membership in N(ω) by iterating the
// period, the limit weak order at finite horizon, connectedness and
// accumulation estimates of the normalized inversion roots.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxwo/weakorder.hpp"

namespace coxwo {

struct InfWord {
  Word prefix;
  Word period;

  /// "b|(a.b.c)", "|(s.t)"
  static InfWord parse(const CoxeterSystem& sys, const std::string& text) {
    const auto bar = text.find('|');
    if (bar == std::string::npos || text.size() < bar + 3 || text[bar + 1] != '(' || text.back() != ')')
      throw InputError("infinite word literal must look like \"prefix|(period)\": '" + text + "'");
    InfWord w;
    const std::string pre = text.substr(0, bar);
    if (!pre.empty()) w.prefix = Word::parse(sys, pre);
    w.period = Word::parse(sys, text.substr(bar + 2, text.size() - bar - 3));
    if (w.period.empty()) throw InputError("the period of an infinite word must be nonempty");
    return w;
  }
  std::string str(const CoxeterSystem& sys) const {
    return (prefix.empty() ? std::string() : prefix.str(sys)) + "|(" + period.str(sys) + ")";
  }

  std::size_t letter(std::size_t i) const {
    if (i < prefix.size()) return prefix.letters[i];
    return period.letters[(i - prefix.size()) % period.size()];
  }
  Word truncation(std::size_t n) const {
    Word w;
    for (std::size_t i = 0; i < n; ++i) w.letters.push_back(letter(i));
    return w;
  }
};

inline ElementMatrix element_of(const CoxeterSystem& sys, const Word& w) {
  ElementMatrix m(sys.rank());
  for (auto s : w.letters) m.right_multiply(sys, s);
  return m;
}

/// First n inversion roots β_1..β_n (exact vectors). Throws NotReduced on a negative or repeated root.
inline std::vector<Vector> truncate_inversions(const CoxeterSystem& sys, const InfWord& w, std::size_t n) {
  std::vector<Vector> out;
  out.reserve(n);
  std::set<Vector, CanonicalLess> seen;
  ElementMatrix m(sys.rank());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t s = w.letter(i);
    Vector beta = m.column(s);
    if (beta.orientation() <= 0 || !seen.insert(beta).second) throw NotReduced(i, w.str(sys));
    out.push_back(std::move(beta));
    m.right_multiply(sys, s);
  }
  return out;
}

/// Store indices of the first n inversion roots (the store is grown to the needed depth).
inline std::vector<int> truncate_inversion_indices(RootStore& store, const InfWord& w, std::size_t n) {
  std::vector<int> out;
  for (const auto& v : truncate_inversions(store.system(), w, n)) out.push_back(store.find_or_extend(v));
  return out;
}

/// Verifies reducedness up to max(2·|period|·|S|, horizon) letters; returns the certified length.
inline std::size_t verify_reduced(const CoxeterSystem& sys, const InfWord& w, std::size_t horizon = 0) {
  const std::size_t h = std::max<std::size_t>(w.prefix.size() + 2 * w.period.size() * sys.rank(), horizon);
  truncate_inversions(sys, w, h);
  return h;
}

enum class Tri { Yes, No, Unknown };

inline std::string tri_name(Tri t) { return t == Tri::Yes ? "yes" : t == Tri::No ? "no" : "unknown"; }

/// Sufficient test for v ∈ Z = W·K: descend by simple reflections with B(v, α_s) > 0 and
/// report true once v reaches K while staying nonnegative.
inline bool in_imaginary_cone(const CoxeterSystem& sys, Vector v, int max_iter = 200) {
  if (sys.bilinear(v, v).sign() > 0) return false;  // Z is B-nonpositive
  for (int it = 0; it < max_iter; ++it) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i].sign() < 0) return false;
    bool moved = false;
    for (std::size_t s = 0; s < sys.rank() && !moved; ++s)
      if (sys.form_with_simple(s, v).sign() > 0) {
        v = sys.reflect_simple(s, v);
        moved = true;
      }
    if (!moved) return true;
  }
  return false;
}

/// Membership β ∈ N(prefix·period^∞) by iterating γ_k = q^{-k}(p^{-1}β) until it enters N(q)
/// (yes), cycles or is certified to stay positive by the imaginary cone (no). Unknown otherwise,
/// which is the usual outcome for hyperbolic periods.
class InversionOracle {
 public:
  InversionOracle(const CoxeterSystem& sys, const InfWord& w)
      : sys_(sys), p_inv_(element_of(sys, w.prefix.inverse())), q_inv_(element_of(sys, w.period.inverse())) {
    ElementMatrix m(sys.rank());
    for (auto s : w.period.letters) {
      Vector beta = m.column(s);
      if (beta.orientation() <= 0) throw NotReduced(0, w.str(sys));
      nq_.insert(std::move(beta));
      m.right_multiply(sys, s);
    }
  }

  Tri contains(const Vector& beta, int max_iter = 256) const {
    if (beta.orientation() <= 0) return Tri::No;
    Vector g = p_inv_.apply(beta);
    if (g.orientation() < 0) return Tri::Yes;  // β ∈ N(p)
    std::set<Vector, CanonicalLess> seen;
    std::vector<Vector> history;
    for (int k = 0; k < max_iter; ++k) {
      if (nq_.count(g)) return Tri::Yes;
      if (!seen.insert(g).second) return Tri::No;
      // g_{k-M}, ..., g_{k-1} are positive and lie outside N(q). If g_k - g_{k-M} is in the
      // imaginary cone, every later g_j is a positive root plus a W-translate of it, so never negative.
      for (std::size_t m = 1; m <= std::min<std::size_t>(history.size(), 6); ++m)
        if (in_imaginary_cone(sys_, g - history[history.size() - m])) return Tri::No;
      if (g.sum().to_double() > 1e12) break;  // exponential growth: leave the answer horizon-qualified
      history.push_back(g);
      g = q_inv_.apply(g);
    }
    return Tri::Unknown;
  }

 private:
  const CoxeterSystem& sys_;
  ElementMatrix p_inv_, q_inv_;
  std::set<Vector, CanonicalLess> nq_;
};

/// u is a prefix of ω iff N(u) ⊆ N(ω).
inline Tri word_prefix_of(RootStore& store, const Word& u, const InfWord& w, int max_iter = 256) {
  const CoxeterSystem& sys = store.system();
  InversionOracle oracle(sys, w);
  Tri result = Tri::Yes;
  for (int i : inversion_sequence(store, u)) {
    const Tri t = oracle.contains(store.vec(i), max_iter);
    if (t == Tri::No) return Tri::No;
    if (t == Tri::Unknown) result = Tri::Unknown;
  }
  return result;
}

enum class Order { Less, Greater, Equal, Incomparable, Unknown };

inline std::string order_name(Order o) {
  switch (o) {
    case Order::Less: return "less";
    case Order::Greater: return "greater";
    case Order::Equal: return "equal";
    case Order::Incomparable: return "incomparable";
    default: return "unknown";
  }
}

struct Containment {
  Tri holds = Tri::Unknown;  // Yes means checked through two consecutive period multiples
  bool exact = false;        // a No always comes with an exact witness
  std::optional<Vector> witness;
  std::size_t checked = 0;
};

struct Comparison {
  Order order = Order::Unknown;
  Containment forward, backward;  // N(w1) ⊆ N(w2), N(w2) ⊆ N(w1)
};

inline Containment contained(const CoxeterSystem& sys, const InfWord& w1, const InfWord& w2, std::size_t horizon,
                             int max_iter) {
  Containment c;
  std::size_t periods = 2;
  if (horizon > w1.prefix.size()) periods = std::max<std::size_t>(2, (horizon - w1.prefix.size() + w1.period.size() - 1) / w1.period.size());
  const std::size_t n = w1.prefix.size() + (periods + 1) * w1.period.size();
  InversionOracle oracle(sys, w2);
  c.holds = Tri::Yes;
  for (const auto& beta : truncate_inversions(sys, w1, n)) {
    ++c.checked;
    const Tri t = oracle.contains(beta, max_iter);
    if (t == Tri::No) {
      c.holds = Tri::No;
      c.exact = true;
      c.witness = beta;
      return c;
    }
    if (t == Tri::Unknown) c.holds = Tri::Unknown;
  }
  return c;
}

/// ω1 vs ω2 in the limit weak order, N(ω1) ⊆ N(ω2) meaning ω1 ≼ ω2.
inline Comparison compare(const CoxeterSystem& sys, const InfWord& w1, const InfWord& w2, std::size_t horizon = 0,
                          int max_iter = 256) {
  Comparison r;
  r.forward = contained(sys, w1, w2, horizon, max_iter);
  r.backward = contained(sys, w2, w1, horizon, max_iter);
  const Tri f = r.forward.holds, b = r.backward.holds;
  if (f == Tri::Yes && b == Tri::Yes) r.order = Order::Equal;
  else if (f == Tri::Yes && b == Tri::No) r.order = Order::Less;
  else if (f == Tri::No && b == Tri::Yes) r.order = Order::Greater;
  else if (f == Tri::No && b == Tri::No) r.order = Order::Incomparable;
  else r.order = Order::Unknown;
  return r;
}

/// The letters occurring infinitely often induce a connected Coxeter subgraph.
inline bool is_connected(const CoxeterSystem& sys, const InfWord& w) {
  std::set<std::size_t> letters(w.period.letters.begin(), w.period.letters.end());
  return sys.connected(std::vector<std::size_t>(letters.begin(), letters.end()));
}

struct Cluster {
  std::vector<double> centroid;
  double diameter = 0;
  std::size_t size = 0;
};

inline double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

/// Single-linkage clusters at tolerance tol.
inline std::vector<Cluster> cluster_points(const std::vector<std::vector<double>>& pts, double tol) {
  const std::size_t m = pts.size();
  std::vector<std::size_t> parent(m);
  for (std::size_t i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (distance(pts[i], pts[j]) <= tol) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < m; ++i) groups[find(i)].push_back(i);
  std::vector<Cluster> out;
  for (auto& [root, members] : groups) {
    Cluster c;
    c.size = members.size();
    c.centroid.assign(pts[members[0]].size(), 0.0);
    for (auto i : members)
      for (std::size_t k = 0; k < c.centroid.size(); ++k) c.centroid[k] += pts[i][k];
    for (auto& x : c.centroid) x /= static_cast<double>(members.size());
    for (auto i : members)
      for (auto j : members) c.diameter = std::max(c.diameter, distance(pts[i], pts[j]));
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) { return a.centroid < b.centroid; });
  return out;
}

inline std::vector<double> normalized_approx(const Vector& v) {
  const Scalar s = v.sum();
  std::vector<double> r;
  for (const auto& x : v) r.push_back((x / s).to_double());
  return r;
}

/// Clusters of β̂_i over the second half of the first n inversion roots.
inline std::vector<Cluster> accumulation_estimate(const CoxeterSystem& sys, const InfWord& w, std::size_t n,
                                                  double tol) {
  if (n < 2) throw InputError("accumulation_estimate needs n >= 2");
  auto roots = truncate_inversions(sys, w, n);
  std::vector<std::vector<double>> tail;
  for (std::size_t i = n / 2; i < n; ++i) tail.push_back(normalized_approx(roots[i]));
  return cluster_points(tail, tol);
}

}  // namespace coxwo
