#pragma once

// Positive roots enumerated breadth-first by depth, with a lookup table,
// a lazily filled reflection table on root indices, rank-2 intervals
// cone(alpha, beta) ∩ Φ and reflection subsystems.

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxwo/coxsys.hpp"

namespace coxwo {

struct Root {
  Vector vec;
  int depth = 0;
  std::vector<double> approx;  // float shadow of vec
};

/// Signed root index: i >= 0 is the stored positive root i, ~i (= -i-1) is its negative.
using SignedIndex = int;
inline constexpr SignedIndex negate(SignedIndex i) { return ~i; }
inline constexpr bool is_positive(SignedIndex i) { return i >= 0; }
inline constexpr int positive_part(SignedIndex i) { return i >= 0 ? i : ~i; }

struct Interval {
  bool infinite = false;
  std::vector<int> members;  // sorted root indices, endpoints included
};

/// Exact a, b with gamma = a*alpha + b*beta, if gamma lies in span(alpha, beta).
inline std::optional<std::pair<Scalar, Scalar>> plane_coefficients(const Vector& alpha, const Vector& beta,
                                                                   const Vector& gamma) {
  const std::size_t n = alpha.size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      const Scalar det = alpha[p] * beta[q] - alpha[q] * beta[p];
      if (det.is_zero()) continue;
      Scalar a = (gamma[p] * beta[q] - gamma[q] * beta[p]) / det;
      Scalar b = (alpha[p] * gamma[q] - alpha[q] * gamma[p]) / det;
      for (std::size_t k = 0; k < n; ++k)
        if (a * alpha[k] + b * beta[k] != gamma[k]) return std::nullopt;
      return std::make_pair(std::move(a), std::move(b));
    }
  // alpha, beta parallel (or rank 1)
  return std::nullopt;
}

namespace detail {

// float test gamma ∈ cone(alpha, beta), generous so exact checks decide
inline bool maybe_in_planar_cone(const std::vector<double>& a, const std::vector<double>& b,
                                 const std::vector<double>& g) {
  double aa = 0, ab = 0, bb = 0, ag = 0, bg = 0, gg = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    aa += a[k] * a[k];
    ab += a[k] * b[k];
    bb += b[k] * b[k];
    ag += a[k] * g[k];
    bg += b[k] * g[k];
    gg += g[k] * g[k];
  }
  const double det = aa * bb - ab * ab;
  if (det <= 1e-14 * aa * bb) return false;
  const double x = (ag * bb - bg * ab) / det;
  const double y = (bg * aa - ag * ab) / det;
  const double scale = std::sqrt(gg);
  if (x < -1e-9 * scale || y < -1e-9 * scale) return false;
  double res = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double r = g[k] - x * a[k] - y * b[k];
    res += r * r;
  }
  return std::sqrt(res) <= 1e-7 * (1.0 + scale);
}

}  // namespace detail

class RootStore {
 public:
  static constexpr int kUnknown = INT_MIN;

  explicit RootStore(CoxeterSystem sys, std::size_t max_roots = 4'000'000)
      : sys_(std::move(sys)), max_roots_(max_roots) {
    const std::size_t n = sys_.rank();
    for (std::size_t s = 0; s < n; ++s) append(sys_.simple_root(s), 0);
    frontier_ = 0;
  }

  const CoxeterSystem& system() const { return sys_; }
  std::size_t rank() const { return sys_.rank(); }
  std::size_t size() const { return roots_.size(); }
  const Root& root(int i) const { return roots_.at(static_cast<std::size_t>(i)); }
  const Vector& vec(int i) const { return roots_[static_cast<std::size_t>(i)].vec; }
  int depth(int i) const { return roots_[static_cast<std::size_t>(i)].depth; }
  const std::vector<double>& approx(int i) const { return roots_[static_cast<std::size_t>(i)].approx; }
  /// Depth up to which the store is complete.
  int frontier() const { return frontier_; }
  /// True once generation stopped producing roots (finite W).
  bool exhausted() const { return exhausted_; }
  std::size_t max_roots() const { return max_roots_; }
  void set_max_roots(std::size_t m) { max_roots_ = m; }

  Vector signed_vec(SignedIndex i) const { return is_positive(i) ? vec(i) : -vec(~i); }

  /// Generates every positive root of depth <= d.
  void ensure_depth(int d) {
    while (frontier_ < d && !exhausted_) grow();
  }

  /// Number of stored roots of depth <= d (after ensure_depth(d)).
  std::size_t count_up_to(int d) {
    ensure_depth(d);
    std::size_t c = 0;
    while (c < roots_.size() && roots_[c].depth <= d) ++c;
    return c;
  }
  std::vector<int> indices_up_to(int d) {
    const std::size_t c = count_up_to(d);
    std::vector<int> r(c);
    for (std::size_t i = 0; i < c; ++i) r[i] = static_cast<int>(i);
    return r;
  }

  std::optional<int> lookup(const Vector& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Depth and terminal simple root by descent: depth drops by one under s whenever B(v, alpha_s) > 0.
  /// Returns nullopt when v is not a positive root.
  std::optional<std::pair<int, std::size_t>> descend(Vector v, int max_steps = 100000) const {
    if (v.orientation() <= 0) return std::nullopt;
    for (int steps = 0; steps <= max_steps; ++steps) {
      if (auto found = lookup(v)) {
        const int i = *found;
        // stored roots already know their depth; follow descent to a simple root
        if (i < static_cast<int>(rank())) return std::make_pair(steps, static_cast<std::size_t>(i));
      }
      std::optional<std::size_t> down;
      for (std::size_t s = 0; s < rank(); ++s)
        if (sys_.form_with_simple(s, v).sign() > 0) {
          down = s;
          break;
        }
      if (!down) return std::nullopt;
      v = sys_.reflect_simple(*down, v);
      if (v.orientation() <= 0) return std::nullopt;
    }
    return std::nullopt;
  }

  /// Index of a positive root, growing the store as needed; throws InputError if v is not a root.
  int find_or_extend(const Vector& v) {
    if (auto i = lookup(v)) return *i;
    auto d = descend(v);
    if (!d) throw InputError("not a positive root: " + v.str());
    ensure_depth(d->first);
    if (auto i = lookup(v)) return *i;
    throw std::logic_error("root of depth " + std::to_string(d->first) + " missing after generation");
  }

  /// Signed index of s(root), filling the reflection table lazily.
  SignedIndex reflect(SignedIndex i, std::size_t s) {
    if (!is_positive(i)) return negate(reflect(~i, s));
    const std::size_t slot = static_cast<std::size_t>(i) * rank() + s;
    if (table_[slot] != kUnknown) return table_[slot];
    SignedIndex r;
    if (static_cast<std::size_t>(i) == s) {
      r = negate(i);
    } else {
      const Scalar b = sys_.form_with_simple(s, vec(i));
      if (b.is_zero()) {
        r = i;
      } else {
        Vector w = sys_.reflect_simple(s, vec(i));
        if (b.sign() < 0) ensure_depth(depth(i) + 1);
        auto found = lookup(w);
        if (!found) throw std::logic_error("reflected root missing from store: " + w.str());
        r = *found;
      }
    }
    table_[static_cast<std::size_t>(i) * rank() + s] = r;
    return r;
  }

  /// Normalized point: v divided by its coordinate sum.
  static Vector normalize(const Vector& v) {
    const Scalar sum = v.sum();
    if (sum.is_zero()) throw InputError("cannot normalize a vector with zero coordinate sum");
    Vector r = v;
    r /= sum;
    return r;
  }
  static std::vector<double> normalize_approx(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    std::vector<double> r = v;
    for (double& x : r) x /= s;
    return r;
  }

  /// cone(alpha, beta) ∩ Φ. Infinite iff B(alpha, beta) <= -1; then members are listed up to
  /// depth max(depth) + margin. Finite intervals are complete.
  Interval dihedral_interval(int a, int b, int margin = 4) {
    Interval out;
    if (a == b) {
      out.members = {a};
      return out;
    }
    const Scalar form = sys_.bilinear(vec(a), vec(b));
    out.infinite = form <= Scalar(-1);
    const int bound = std::max(depth(a), depth(b)) + margin;
    ensure_depth(bound);
    std::set<int> found{a, b};
    const std::size_t limit = count_up_to(bound);
    for (std::size_t k = 0; k < limit; ++k) {
      const int g = static_cast<int>(k);
      if (g == a || g == b) continue;
      if (in_planar_cone(a, b, g)) found.insert(g);
    }
    if (!out.infinite) {
      // close under the reflections of the members
      bool changed = true;
      while (changed) {
        changed = false;
        std::vector<int> cur(found.begin(), found.end());
        for (int x : cur)
          for (int y : cur) {
            if (x == y) continue;
            Vector z = sys_.reflect(vec(x), vec(y));
            if (z.orientation() < 0) z = -z;
            if (auto c = plane_coefficients(vec(a), vec(b), z); c && c->first.sign() >= 0 && c->second.sign() >= 0) {
              const int idx = find_or_extend(z);
              if (found.insert(idx).second) changed = true;
            }
          }
        if (found.size() > 10000) throw std::logic_error("finite dihedral interval failed to close");
      }
    }
    out.members.assign(found.begin(), found.end());
    return out;
  }

  /// Exact test root g ∈ cone(root a, root b).
  bool in_planar_cone(int a, int b, int g) const {
    if (!detail::maybe_in_planar_cone(approx(a), approx(b), approx(g))) return false;
    auto c = plane_coefficients(vec(a), vec(b), vec(g));
    return c && c->first.sign() >= 0 && c->second.sign() >= 0;
  }

 private:
  void append(Vector v, int depth) {
    if (roots_.size() >= max_roots_)
      throw BudgetExceeded("root store budget of " + std::to_string(max_roots_) + " roots exhausted");
    Root r;
    r.approx = v.to_doubles();
    r.vec = std::move(v);
    r.depth = depth;
    index_.emplace(r.vec, static_cast<int>(roots_.size()));
    roots_.push_back(std::move(r));
    table_.resize(roots_.size() * rank(), kUnknown);
  }

  void grow() {
    const int next = frontier_ + 1;
    std::map<Vector, bool, CanonicalLess> fresh;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      if (roots_[i].depth != frontier_) continue;
      for (std::size_t s = 0; s < rank(); ++s) {
        if (sys_.form_with_simple(s, roots_[i].vec).sign() >= 0) continue;
        Vector w = sys_.reflect_simple(s, roots_[i].vec);
        if (!index_.count(w)) fresh.emplace(std::move(w), true);
      }
    }
    if (fresh.empty()) {
      exhausted_ = true;
      return;
    }
    std::vector<Vector> gen;
    gen.reserve(fresh.size());
    for (auto& [v, _] : fresh) gen.push_back(v);
    std::sort(gen.begin(), gen.end());  // value order within a generation
    for (auto& v : gen) append(std::move(v), next);
    frontier_ = next;
  }

  CoxeterSystem sys_;
  std::size_t max_roots_;
  std::vector<Root> roots_;
  std::map<Vector, int, CanonicalLess> index_;
  std::vector<SignedIndex> table_;
  int frontier_ = 0;
  bool exhausted_ = false;
};

/// Reflection subsystem generated by some positive roots.
struct Subsystem {
  std::vector<int> simple;  // extreme rays of the generated cone
  std::vector<int> roots;   // positive roots of the subsystem found within the depth window
  int depth = 0;
};

}  // namespace coxwo
