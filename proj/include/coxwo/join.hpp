#pragma once

// Deciding whether a finite set X of elements has a join in the weak order.
//
// The join exists iff cone_Φ(N(X)) is the inversion set of an element, and then
// N(⋁X) = cone_Φ(N(X)). The procedure tries, in order:
//   1. a pair of roots of N(X) with B <= -1 (infinitely many roots in the cone),
//   2. a point of a small orbit sample of W·K inside conv(N̂(X)),
//   3. a breadth-first search over elements g with N(g) ⊆ cone(N(X)),
//   4. on budget exhaustion, the full orbit sample.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coxwo/convexity.hpp"
#include "coxwo/imagcone.hpp"

namespace coxwo {

struct JoinOptions {
  std::size_t node_budget = 100000;  // Phase A elements
  int orbit_depth = 12;              // Phase B after the budget is spent
  int early_orbit_depth = 3;         // Phase B before the search
};

enum class Verdict { Exists, NotExists, Unknown };

inline std::string verdict_name(Verdict v) {
  return v == Verdict::Exists ? "exists" : v == Verdict::NotExists ? "not_exists" : "unknown";
}

struct JoinResult {
  Verdict verdict = Verdict::Unknown;
  Word word;                       // Exists
  std::vector<int> inversions;     // Exists: N(word)
  std::string witness;             // NotExists: "imaginary_point" or "multiple_maxima"
  std::vector<Word> maxima;        // multiple_maxima
  Vector point;                    // imaginary_point, normalized
  std::vector<Vector> hull_points; // N̂(X) points carrying the hull weights
  std::vector<Scalar> weights;     // point = Σ weights · hull_points
  std::string point_origin;        // "dihedral" (pair with B <= -1) or "orbit"
  Word orbit_word;                 // orbit: point = orbit_word · z
  std::size_t explored = 0;
  std::string note;
};

namespace detail {

inline void fill_dihedral_witness(JoinResult& r, const RootStore& store, int x, int y) {
  r.verdict = Verdict::NotExists;
  r.witness = "imaginary_point";
  r.point_origin = "dihedral";
  Vector sum = store.vec(x) + store.vec(y);
  r.point = RootStore::normalize(sum);
  // point = (σx / (σx+σy)) x̂ + (σy / (σx+σy)) ŷ with σ the coordinate sums
  const Scalar sx = store.vec(x).sum(), sy = store.vec(y).sum();
  r.hull_points = {RootStore::normalize(store.vec(x)), RootStore::normalize(store.vec(y))};
  r.weights = {sx / (sx + sy), sy / (sx + sy)};
}

inline std::optional<JoinResult> orbit_witness(const RootStore& store, const std::vector<int>& nx,
                                               const std::vector<OrbitPoint>& orbit) {
  const auto hull = normalized_points(store, nx);
  for (const auto& op : orbit) {
    auto cert = in_hull(op.point, hull);
    if (!cert.member) continue;
    JoinResult r;
    r.verdict = Verdict::NotExists;
    r.witness = "imaginary_point";
    r.point_origin = "orbit";
    r.point = op.point;
    r.orbit_word = op.word;
    r.hull_points = hull;
    r.weights = cert.weights;
    return r;
  }
  return std::nullopt;
}

}  // namespace detail

inline JoinResult decide_join(RootStore& store, const std::vector<Word>& xs, const JoinOptions& opt = {}) {
  const CoxeterSystem& sys = store.system();
  std::set<int> nxset;
  for (const auto& x : xs)
    for (int r : inversion_set(store, reduce(store, x))) nxset.insert(r);
  const std::vector<int> nx(nxset.begin(), nxset.end());

  JoinResult result;
  if (nx.empty()) {
    result.verdict = Verdict::Exists;
    return result;
  }

  // 1. pairs with B <= -1: cone(N(X)) holds infinitely many roots
  for (std::size_t i = 0; i < nx.size(); ++i)
    for (std::size_t j = i + 1; j < nx.size(); ++j)
      if (sys.bilinear(store.vec(nx[i]), store.vec(nx[j])) <= Scalar(-1)) {
        detail::fill_dihedral_witness(result, store, nx[i], nx[j]);
        return result;
      }

  // 2. a small orbit sample of W·K
  const ImaginaryDomain dom = build_K(sys);
  if (!dom.empty) {
    const auto orbit = orbit_sample(sys, dom, opt.early_orbit_depth);
    if (auto w = detail::orbit_witness(store, nx, orbit)) return *w;
  }

  // 3. breadth-first search over {g : N(g) ⊆ cone(N(X))}
  std::vector<Vector> gens;
  for (int r : nx) gens.push_back(store.vec(r));
  std::map<int, bool> in_cone_cache;
  auto admitted = [&](int r) {
    auto it = in_cone_cache.find(r);
    if (it != in_cone_cache.end()) return it->second;
    const bool ok = nxset.count(r) || in_cone(store.vec(r), gens).member;
    in_cone_cache.emplace(r, ok);
    return ok;
  };
  std::vector<int> accepted(nx.begin(), nx.end());  // roots known to lie in cone_Φ(N(X))
  std::set<int> accepted_set(nx.begin(), nx.end());

  struct Node {
    Word word;
    std::vector<int> inv;  // sorted
  };
  std::vector<Node> nodes;
  std::set<std::vector<int>> seen;
  std::deque<std::size_t> queue;
  nodes.push_back({Word{}, {}});
  seen.insert({});
  queue.push_back(0);
  std::vector<bool> has_child(1, false);
  bool closed = true;
  while (!queue.empty()) {
    if (nodes.size() > opt.node_budget) {
      closed = false;
      break;
    }
    const std::size_t id = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      const SignedIndex r = apply_word(store, nodes[id].word, static_cast<SignedIndex>(s));
      if (!is_positive(r) || !admitted(r)) continue;
      if (accepted_set.insert(r).second) {
        for (int y : accepted)
          if (sys.bilinear(store.vec(r), store.vec(y)) <= Scalar(-1)) {
            detail::fill_dihedral_witness(result, store, y, r);
            result.explored = nodes.size();
            result.note = "found while exploring cone(N(X))";
            return result;
          }
        accepted.push_back(r);
      }
      has_child[id] = true;
      std::vector<int> inv = nodes[id].inv;
      inv.insert(std::upper_bound(inv.begin(), inv.end(), r), r);
      if (!seen.insert(inv).second) continue;
      nodes.push_back({nodes[id].word * Word({s}), std::move(inv)});
      has_child.push_back(false);
      queue.push_back(nodes.size() - 1);
    }
  }
  result.explored = nodes.size();

  if (closed) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (!std::includes(nodes[i].inv.begin(), nodes[i].inv.end(), nx.begin(), nx.end())) continue;
      if (best && nodes[*best].inv.size() == nodes[i].inv.size())
        throw std::logic_error("two minimal upper bounds with equal length: join uniqueness violated");
      if (!best || nodes[i].inv.size() < nodes[*best].inv.size()) best = i;
    }
    if (best) {
      result.verdict = Verdict::Exists;
      result.inversions = nodes[*best].inv;
      auto p = peel(store, result.inversions);
      result.word = std::holds_alternative<Word>(p) ? std::get<Word>(p) : nodes[*best].word;
      return result;
    }
    result.verdict = Verdict::NotExists;
    result.witness = "multiple_maxima";
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (!has_child[i]) result.maxima.push_back(nodes[i].word);
    return result;
  }

  // 4. budget spent: the full orbit sample
  if (!dom.empty) {
    const auto orbit = orbit_sample(sys, dom, opt.orbit_depth);
    if (auto w = detail::orbit_witness(store, nx, orbit)) {
      w->explored = result.explored;
      return *w;
    }
  }
  result.verdict = Verdict::Unknown;
  result.note = "node budget of " + std::to_string(opt.node_budget) + " exhausted";
  return result;
}

inline nlohmann::json join_json(const RootStore& store, const JoinResult& r) {
  const CoxeterSystem& sys = store.system();
  nlohmann::json j{{"verdict", verdict_name(r.verdict)}, {"explored", r.explored}};
  if (r.verdict == Verdict::Exists) {
    j["word"] = r.word.str(sys);
    j["inversions"] = r.inversions.size();
    nlohmann::json roots = nlohmann::json::array();
    for (int i : r.inversions) roots.push_back(root_json(store, i));
    j["inversion_set"] = roots;
  } else if (r.verdict == Verdict::NotExists) {
    j["witness"] = r.witness;
    if (r.witness == "multiple_maxima") {
      nlohmann::json m = nlohmann::json::array();
      for (const auto& w : r.maxima) m.push_back(w.str(sys));
      j["maxima"] = m;
    } else {
      nlohmann::json pts = nlohmann::json::array(), ws = nlohmann::json::array();
      for (const auto& p : r.hull_points) pts.push_back(vector_json(p));
      for (const auto& w : r.weights) ws.push_back(w.str());
      j["point"] = vector_json(r.point);
      j["origin"] = r.point_origin;
      j["hull_points"] = pts;
      j["weights"] = ws;
      if (r.point_origin == "orbit") j["orbit_word"] = r.orbit_word.str(sys);
    }
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace coxwo
