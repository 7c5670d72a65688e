#pragma once

// Exact cone/hull membership, strict separation, closure operators and the
// closed / convex / separable classification of subsets of positive roots.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "coxwo/lp.hpp"
#include "coxwo/weakorder.hpp"

namespace coxwo {

struct ConeCertificate {
  bool member = false;
  std::vector<Scalar> coefficients;  // target = Σ c_i g_i when member
  Vector functional;                 // y.g_i >= 0, y.target < 0 otherwise
};

namespace detail {

inline ConeCertificate solve_cone(const Vector& target, const std::vector<Vector>& gens) {
  const std::size_t n = target.size();
  ConeCertificate out;
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) a[i][j] = gens[j][i];
  auto res = lp::feasible(a, target.coords());
  if (res.status == lp::Status::Optimal) {
    out.member = true;
    out.coefficients = std::move(res.x);
  } else {
    out.functional = Vector(std::move(res.farkas));
  }
  return out;
}

}  // namespace detail

/// target ∈ cone(generators)? Large generator sets are handled by column generation: solve on a
/// subset, and either the subset's Farkas functional is nonnegative on every generator (done) or
/// the generators it cuts off join the subset.
inline ConeCertificate in_cone(const Vector& target, const std::vector<Vector>& gens) {
  constexpr std::size_t kBatch = 24;
  ConeCertificate out;
  if (target.is_zero()) {
    out.member = true;
    out.coefficients.assign(gens.size(), Scalar(0));
    return out;
  }
  if (gens.empty()) {
    // y = -target works: y.target = -|target|^2 < 0
    out.functional = -target;
    return out;
  }
  if (gens.size() <= 2 * kBatch) return detail::solve_cone(target, gens);

  std::vector<std::size_t> active;
  std::vector<bool> used(gens.size(), false);
  for (std::size_t j = 0; j < kBatch; ++j) {
    active.push_back(j);
    used[j] = true;
  }
  while (true) {
    std::vector<Vector> sub;
    for (auto j : active) sub.push_back(gens[j]);
    auto cert = detail::solve_cone(target, sub);
    if (cert.member) {
      out.member = true;
      out.coefficients.assign(gens.size(), Scalar(0));
      for (std::size_t k = 0; k < active.size(); ++k) out.coefficients[active[k]] = cert.coefficients[k];
      return out;
    }
    std::vector<std::pair<Scalar, std::size_t>> cut;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (used[j]) continue;
      Scalar v = dot(cert.functional, gens[j]);
      if (v.sign() < 0) cut.emplace_back(std::move(v), j);
    }
    if (cut.empty()) {
      out.functional = std::move(cert.functional);
      return out;
    }
    std::sort(cut.begin(), cut.end());  // most negative first
    for (std::size_t k = 0; k < cut.size() && k < kBatch; ++k) {
      active.push_back(cut[k].second);
      used[cut[k].second] = true;
    }
  }
}

struct HullCertificate {
  bool member = false;
  std::vector<Scalar> weights;  // convex weights when member
  Vector functional;            // affine separator (y, c): y.p + c >= 0 on points, < 0 on target
  Scalar offset;
};

/// target ∈ conv(points)?
inline HullCertificate in_hull(const Vector& target, const std::vector<Vector>& points) {
  const std::size_t n = target.size();
  HullCertificate out;
  if (points.empty()) {
    out.functional = Vector(n);
    out.offset = Scalar(-1);
    return out;
  }
  std::vector<std::vector<Scalar>> a(n + 1, std::vector<Scalar>(points.size()));
  std::vector<Scalar> b(n + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i][j] = points[j][i];
    a[n][j] = Scalar(1);
  }
  for (std::size_t i = 0; i < n; ++i) b[i] = target[i];
  b[n] = Scalar(1);
  auto res = lp::feasible(a, b);
  if (res.status == lp::Status::Optimal) {
    out.member = true;
    out.weights = std::move(res.x);
  } else {
    out.offset = res.farkas[n];
    res.farkas.pop_back();
    out.functional = Vector(std::move(res.farkas));
  }
  return out;
}

/// Linear functional rho with rho(p) >= gap on P and rho(q) <= -gap on Q (points in V1).
struct Hyperplane {
  Vector rho;
  Scalar gap;
};

struct Separation {
  std::optional<Hyperplane> hyperplane;
  Vector common_point;  // in conv(P) ∩ conv(Q) when no hyperplane exists
  std::vector<Scalar> p_weights, q_weights;
};

inline Separation strictly_separate(const std::vector<Vector>& p, const std::vector<Vector>& q) {
  Separation out;
  if (p.empty() || q.empty()) {
    const std::size_t n = !p.empty() ? p[0].size() : (!q.empty() ? q[0].size() : 0);
    std::vector<Scalar> ones(n, Scalar(1));
    // any functional works on one side; use ±sum
    out.hyperplane = Hyperplane{p.empty() ? -Vector(ones) : Vector(ones), Scalar(1)};
    return out;
  }
  const std::size_t n = p[0].size();
  const std::size_t cols = p.size() + q.size();
  std::vector<std::vector<Scalar>> a(n + 2, std::vector<Scalar>(cols));
  std::vector<Scalar> b(n + 2);
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i][j] = p[j][i];
    a[n][j] = Scalar(1);
  }
  for (std::size_t j = 0; j < q.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i][p.size() + j] = -q[j][i];
    a[n + 1][p.size() + j] = Scalar(1);
  }
  b[n] = Scalar(1);
  b[n + 1] = Scalar(1);
  auto res = lp::feasible(a, b);
  if (res.status == lp::Status::Optimal) {
    out.p_weights.assign(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(p.size()));
    out.q_weights.assign(res.x.begin() + static_cast<std::ptrdiff_t>(p.size()), res.x.end());
    Vector c(n);
    for (std::size_t j = 0; j < p.size(); ++j) c.axpy(out.p_weights[j], p[j]);
    out.common_point = std::move(c);
    return out;
  }
  // y = (rho, c1, c2): rho.p + c1 >= 0, -rho.q + c2 >= 0, c1 + c2 < 0
  const Scalar c1 = res.farkas[n];
  const Scalar c2 = res.farkas[n + 1];
  Vector rho(std::vector<Scalar>(res.farkas.begin(), res.farkas.begin() + static_cast<std::ptrdiff_t>(n)));
  const Scalar mid = (c2 - c1) / Scalar(2);
  const Scalar gap = -(c1 + c2) / Scalar(2);
  // points have coordinate sum 1, so subtracting mid*sum keeps the functional linear
  for (std::size_t i = 0; i < n; ++i) rho[i] -= mid;
  out.hyperplane = Hyperplane{std::move(rho), gap};
  return out;
}

inline std::vector<Vector> normalized_points(const RootStore& store, const std::vector<int>& idx) {
  std::vector<Vector> pts;
  pts.reserve(idx.size());
  for (int i : idx) pts.push_back(RootStore::normalize(store.vec(i)));
  return pts;
}

// ---------------------------------------------------------------------------
// closures

struct TwoClosure {
  bool infinite = false;
  std::vector<int> roots;          // the closure when finite
  std::pair<int, int> witness{-1, -1};  // pair with B <= -1 forcing infinitely many roots
};

inline TwoClosure two_closure(RootStore& store, const std::vector<int>& a) {
  TwoClosure out;
  std::set<int> cur(a.begin(), a.end());
  std::vector<int> order(cur.begin(), cur.end());
  std::size_t processed = 0;
  // pair each new root with every root already in the set
  while (processed < order.size()) {
    const int x = order[processed];
    for (std::size_t k = 0; k < processed; ++k) {
      const int y = order[k];
      const Scalar b = store.system().bilinear(store.vec(x), store.vec(y));
      if (b <= Scalar(-1)) {
        out.infinite = true;
        out.witness = {std::min(x, y), std::max(x, y)};
        return out;
      }
      for (int m : store.dihedral_interval(y, x).members)
        if (cur.insert(m).second) order.push_back(m);
    }
    ++processed;
  }
  out.roots.assign(cur.begin(), cur.end());
  return out;
}

/// cone_Φ(A) restricted to stored roots of depth <= depth.
inline std::vector<int> cone_closure(RootStore& store, const std::vector<int>& a, int depth) {
  std::vector<Vector> gens;
  for (int i : a) gens.push_back(store.vec(i));
  std::set<int> in(a.begin(), a.end());
  std::vector<int> out;
  for (int i : store.indices_up_to(depth))
    if (in.count(i) || in_cone(store.vec(i), gens).member) out.push_back(i);
  return out;
}

/// Extreme rays among the given roots: roots not in the cone of the others.
inline std::vector<int> extreme_roots(const RootStore& store, const std::vector<int>& roots) {
  std::vector<int> out;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::vector<Vector> others;
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != k) others.push_back(store.vec(roots[j]));
    if (!in_cone(store.vec(roots[k]), others).member) out.push_back(roots[k]);
  }
  return out;
}

/// Reflection subsystem generated by positive roots. Its roots are ±W'(gens), so a search under
/// the generating reflections finds them; roots deeper than depth + 2 are dropped while searching.
/// The simple system is read off the extreme rays among roots no deeper than the deepest generator
/// plus two, then the search is repeated with those reflections. Returned roots have depth <= depth.
inline Subsystem subsystem(RootStore& store, const std::vector<int>& gens, int depth) {
  const CoxeterSystem& sys = store.system();
  const int work = depth + 2;
  store.ensure_depth(work);
  std::set<int> found(gens.begin(), gens.end());
  auto search = [&](const std::vector<int>& mirrors) {
    std::vector<int> queue(found.begin(), found.end());
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (int m : mirrors) {
        if (m == queue[k]) continue;
        Vector z = sys.reflect(store.vec(m), store.vec(queue[k]));
        if (z.orientation() < 0) z = -z;
        auto idx = store.lookup(z);
        if (!idx || store.depth(*idx) > work) continue;
        if (found.insert(*idx).second) queue.push_back(*idx);
      }
      if (found.size() > store.max_roots()) throw BudgetExceeded("subsystem search exceeded the root budget");
    }
  };
  search(gens);
  int shallow = 0;
  for (int g : gens) shallow = std::max(shallow, store.depth(g));
  std::vector<int> low;
  for (int i : found)
    if (store.depth(i) <= shallow + 2) low.push_back(i);
  Subsystem sub;
  sub.depth = depth;
  sub.simple = extreme_roots(store, low);
  search(sub.simple);
  for (int i : found)
    if (store.depth(i) <= depth) sub.roots.push_back(i);
  return sub;
}

// ---------------------------------------------------------------------------
// classification

enum class Exactness { Exact, Window };

struct Flag {
  bool value = false;
  Exactness exactness = Exactness::Window;
  nlohmann::json witness;
};

struct Classification {
  Flag closed, coclosed, convex, coconvex, separable;
  int depth = 0;
  bool finite = true;
  bool biclosed() const { return closed.value && coclosed.value; }
  bool biconvex() const { return convex.value && coconvex.value; }
};

inline std::string exactness_name(Exactness e) { return e == Exactness::Exact ? "exact" : "window"; }

/// Window in which sets are classified: a universe of stored roots (the whole depth window, or
/// the roots of a subsystem within it), with rank-2 interval data precomputed lazily.
class WindowContext {
 public:
  WindowContext(RootStore& store, std::vector<int> universe, int depth)
      : store_(store), universe_(std::move(universe)), depth_(depth) {
    std::sort(universe_.begin(), universe_.end());
    in_universe_.assign(store_.size(), false);
    for (int i : universe_) in_universe_[static_cast<std::size_t>(i)] = true;
  }
  /// All stored roots of depth <= depth.
  static WindowContext full(RootStore& store, int depth) {
    auto u = store.indices_up_to(depth);
    return WindowContext(store, std::move(u), depth);
  }

  RootStore& store() { return store_; }
  const std::vector<int>& universe() const { return universe_; }
  int depth() const { return depth_; }
  bool contains(int i) const {
    return i >= 0 && static_cast<std::size_t>(i) < in_universe_.size() && in_universe_[static_cast<std::size_t>(i)];
  }

  /// Lines through ĝ: universe roots x with x̂ - ĝ on one side and on the other. Every pair
  /// (x, y) taken across the two sides has g ∈ cone(x, y); only lines with both sides nonempty
  /// are kept.
  struct Line {
    std::vector<int> plus, minus;
  };
  const std::vector<Line>& lines(int g) {
    auto it = lines_.find(g);
    if (it != lines_.end()) return it->second;
    return lines_.emplace(g, group(g, universe_)).first->second;
  }

  /// Pairs (x, y) of universe roots with g ∈ cone(x, y), g ∉ {x, y}.
  std::vector<std::pair<int, int>> witness_pairs(int g) {
    std::vector<std::pair<int, int>> w;
    for (const auto& line : lines(g))
      for (int x : line.plus)
        for (int y : line.minus) w.emplace_back(std::min(x, y), std::max(x, y));
    return w;
  }

  /// A pair (x, y) with both ends satisfying pred and g ∈ cone(x, y).
  template <class Pred>
  std::optional<std::pair<int, int>> find_pair(int g, Pred pred) {
    for (const auto& line : lines(g)) {
      auto p = std::find_if(line.plus.begin(), line.plus.end(), pred);
      if (p == line.plus.end()) continue;
      auto m = std::find_if(line.minus.begin(), line.minus.end(), pred);
      if (m != line.minus.end()) return std::make_pair(*p, *m);
    }
    return std::nullopt;
  }

  /// Same as find_pair over the candidate roots only; nothing is cached.
  std::optional<std::pair<int, int>> find_pair_among(int g, const std::vector<int>& candidates) {
    if (lines_.count(g)) {
      const std::set<int> c(candidates.begin(), candidates.end());
      return find_pair(g, [&](int r) { return c.count(r) > 0; });
    }
    for (const auto& line : group(g, candidates)) return std::make_pair(line.plus.front(), line.minus.front());
    return std::nullopt;
  }

  const Vector& point(int i) {
    auto it = points_.find(i);
    if (it != points_.end()) return it->second;
    return points_.emplace(i, RootStore::normalize(store_.vec(i))).first->second;
  }

 private:
  std::vector<Line> group(int g, const std::vector<int>& roots) {
    const Vector& pg = point(g);
    std::map<Vector, Line, CanonicalLess> by_direction;
    for (int x : roots) {
      if (x == g) continue;
      Vector d = point(x) - pg;
      std::size_t lead = 0;
      while (lead < d.size() && d[lead].is_zero()) ++lead;
      if (lead == d.size()) continue;  // same ray: cannot happen for distinct roots
      const int side = d[lead].sign();
      const Scalar lead_value = d[lead];
      d /= lead_value;
      auto& line = by_direction[d];
      (side > 0 ? line.plus : line.minus).push_back(x);
    }
    std::vector<Line> out;
    for (auto& [dir, line] : by_direction) {
      (void)dir;
      if (!line.plus.empty() && !line.minus.empty()) out.push_back(std::move(line));
    }
    return out;
  }

  RootStore& store_;
  std::vector<int> universe_;
  std::vector<bool> in_universe_;
  int depth_;
  std::map<int, std::vector<Line>> lines_;
  std::map<int, Vector> points_;
};

struct ClassifyOptions {
  bool finite = true;                 // A is a finite set (not a window truncation)
  std::vector<Vector> imaginary;      // sample of conv(E) for the separability side condition
};

inline nlohmann::json root_json(const RootStore& store, int i) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : store.vec(i)) j.push_back(x.str());
  return j;
}

inline nlohmann::json vector_json(const Vector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

/// Classification of A (a subset of the universe). A finite set is classified against the whole
/// root system where certificates allow; a truncation A = A_true ∩ universe gets window flags
/// whose false values are still exact.
inline Classification classify(WindowContext& ctx, std::vector<int> a, const ClassifyOptions& opt = {}) {
  RootStore& store = ctx.store();
  const CoxeterSystem& sys = store.system();
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::set<int> in(a.begin(), a.end());
  std::vector<int> comp;
  for (int g : ctx.universe())
    if (!in.count(g)) comp.push_back(g);

  Classification c;
  c.depth = ctx.depth();
  c.finite = opt.finite;

  // closed
  c.closed = {true, opt.finite ? Exactness::Exact : Exactness::Window, nullptr};
  auto missing = [&](int x, int y, int m) {
    c.closed = {false, Exactness::Exact,
                {{"pair", {root_json(store, x), root_json(store, y)}}, {"missing", root_json(store, m)}}};
  };
  if (opt.finite) {
    for (std::size_t i = 0; i < a.size() && c.closed.value; ++i)
      for (std::size_t j = i + 1; j < a.size() && c.closed.value; ++j) {
        const int x = a[i], y = a[j];
        if (sys.bilinear(store.vec(x), store.vec(y)) <= Scalar(-1)) {
          c.closed = {false, Exactness::Exact,
                      {{"pair", {root_json(store, x), root_json(store, y)}}, {"reason", "infinite interval"}}};
          break;
        }
        for (int m : store.dihedral_interval(x, y).members)
          if (!in.count(m)) {
            missing(x, y, m);
            break;
          }
      }
  } else {
    for (int g : comp)
      if (auto p = ctx.find_pair_among(g, a)) {
        missing(p->first, p->second, g);
        break;
      }
  }

  // peel certifies finite biclosed sets (N is a bijection onto them)
  std::optional<Word> peeled;
  if (opt.finite) {
    auto p = peel(store, a);
    if (auto* w = std::get_if<Word>(&p)) peeled = *w;
  }

  // coclosed
  c.coclosed = {true, Exactness::Window, nullptr};
  for (int g : a)
    if (auto p = ctx.find_pair_among(g, comp)) {
      c.coclosed = {false, Exactness::Exact,
                    {{"pair", {root_json(store, p->first), root_json(store, p->second)}}, {"member", root_json(store, g)}}};
      break;
    }
  if (c.coclosed.value && opt.finite && c.closed.value && peeled) c.coclosed.exactness = Exactness::Exact;

  // convex: a complement root inside cone(A)
  std::vector<Vector> agens;
  for (int i : a) agens.push_back(store.vec(i));
  std::vector<Vector> cgens;
  for (int i : comp) cgens.push_back(store.vec(i));
  c.convex = {true, Exactness::Window, nullptr};
  if (!c.closed.value && c.closed.exactness == Exactness::Exact) {
    // a missing interval member lies in cone(A)
    c.convex = {false, Exactness::Exact, c.closed.witness};
  } else {
    for (int g : comp) {
      auto cert = in_cone(store.vec(g), agens);
      if (cert.member) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& x : cert.coefficients) coeffs.push_back(x.str());
        c.convex = {false, Exactness::Exact, {{"root", root_json(store, g)}, {"coefficients", coeffs}}};
        break;
      }
    }
  }
  c.coconvex = {true, Exactness::Window, nullptr};
  if (!c.coclosed.value) {
    c.coconvex = {false, Exactness::Exact, c.coclosed.witness};
  } else {
    for (int g : a) {
      auto cert = in_cone(store.vec(g), cgens);
      if (cert.member) {
        c.coconvex = {false, Exactness::Exact, {{"root", root_json(store, g)}}};
        break;
      }
    }
  }
  if (opt.finite && peeled) {
    if (c.convex.value) c.convex.exactness = Exactness::Exact;
    if (c.coconvex.value) c.coconvex.exactness = Exactness::Exact;
  }

  // separable
  if (!c.convex.value && c.convex.exactness == Exactness::Exact) {
    c.separable = {false, Exactness::Exact, {{"reason", "not convex"}}};
  } else if (!c.coconvex.value && c.coconvex.exactness == Exactness::Exact) {
    c.separable = {false, Exactness::Exact, {{"reason", "not coconvex"}}};
  } else {
    auto sep = strictly_separate(normalized_points(store, a), normalized_points(store, comp));
    if (!sep.hyperplane) {
      c.separable = {false, Exactness::Exact, {{"common_point", vector_json(sep.common_point)}}};
    } else {
      bool side_ok = true;
      for (const auto& z : opt.imaginary)
        if (dot(sep.hyperplane->rho, z).sign() >= 0) side_ok = false;
      c.separable = {true, opt.finite && side_ok ? Exactness::Exact : Exactness::Window,
                     {{"functional", vector_json(sep.hyperplane->rho)}, {"gap", sep.hyperplane->gap.str()}}};
      if (opt.finite && !side_ok && peeled) c.separable.exactness = Exactness::Exact;
    }
  }
  return c;
}

inline nlohmann::json flag_json(const Flag& f, int depth) {
  nlohmann::json j{{"value", f.value}, {"exactness", exactness_name(f.exactness)}, {"depth", depth}};
  if (!f.witness.is_null()) j["witness"] = f.witness;
  return j;
}

inline nlohmann::json classification_json(const Classification& c) {
  return {{"closed", flag_json(c.closed, c.depth)},       {"coclosed", flag_json(c.coclosed, c.depth)},
          {"convex", flag_json(c.convex, c.depth)},       {"coconvex", flag_json(c.coconvex, c.depth)},
          {"separable", flag_json(c.separable, c.depth)}, {"finite", c.finite}};
}

// ---------------------------------------------------------------------------
// fast profile of small finite sets, for exhaustive scans

struct FiniteProfile {
  bool closed = false, coclosed = false, convex = false, coconvex = false, separable = false, peel = false;
  bool biclosed() const { return closed && coclosed; }
  bool biconvex() const { return convex && coconvex; }
};

/// Same semantics as classify(ctx, a) on finite sets, restricted to the six booleans. Closedness and
/// coclosedness come from interval and witness-pair tables; when either fails its witness certifies
/// non-convexity (resp. non-coconvexity) and non-separability, so LPs run only on biclosed sets.
class FiniteScanner {
 public:
  explicit FiniteScanner(WindowContext& ctx) : ctx_(ctx) {}

  FiniteProfile profile(const std::vector<int>& a) {
    RootStore& store = ctx_.store();
    FiniteProfile p;
    auto peeled = peel(store, a);
    p.peel = std::holds_alternative<Word>(peeled);
    p.closed = closed(a);
    p.coclosed = coclosed(a);
    if (!p.closed || !p.coclosed) return p;  // convex/coconvex/separable fail with the same witness
    std::vector<Vector> agens, cgens;
    std::set<int> in(a.begin(), a.end());
    std::vector<int> comp;
    for (int i : a) agens.push_back(store.vec(i));
    for (int g : ctx_.universe())
      if (!in.count(g)) {
        comp.push_back(g);
        cgens.push_back(store.vec(g));
      }
    p.convex = true;
    for (int g : comp)
      if (in_cone(store.vec(g), agens).member) {
        p.convex = false;
        break;
      }
    p.coconvex = true;
    for (int g : a)
      if (in_cone(store.vec(g), cgens).member) {
        p.coconvex = false;
        break;
      }
    p.separable = p.convex && p.coconvex &&
                  strictly_separate(normalized_points(store, a), normalized_points(store, comp)).hyperplane.has_value();
    return p;
  }

  bool closed(const std::vector<int>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        const auto& iv = interval(a[i], a[j]);
        if (iv.infinite) return false;
        for (int m : iv.members)
          if (std::find(a.begin(), a.end(), m) == a.end()) return false;
      }
    return true;
  }

  bool coclosed(const std::vector<int>& a) {
    auto outside = [&](int r) { return std::find(a.begin(), a.end(), r) == a.end(); };
    for (int g : a)
      if (ctx_.find_pair(g, outside)) return false;
    return true;
  }

 private:
  const Interval& interval(int x, int y) {
    if (x > y) std::swap(x, y);
    auto key = std::make_pair(x, y);
    auto it = intervals_.find(key);
    if (it != intervals_.end()) return it->second;
    RootStore& store = ctx_.store();
    Interval iv;
    if (store.system().bilinear(store.vec(x), store.vec(y)) <= Scalar(-1)) iv.infinite = true;
    else iv = store.dihedral_interval(x, y);
    return intervals_.emplace(key, std::move(iv)).first->second;
  }

  WindowContext& ctx_;
  std::map<std::pair<int, int>, Interval> intervals_;
};

}  // namespace coxwo
