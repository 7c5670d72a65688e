#pragma once

// The fundamental domain K = {u ∈ conv(Δ̂) : B(u, α_s) <= 0 ∀s}, exact points
// of the orbit W·K, limit-root samples and the probe comparing w_n·z with β̂_n.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coxwo/infwords.hpp"
#include "coxwo/lp.hpp"

namespace coxwo {

struct ImaginaryDomain {
  bool empty = true;
  bool strict = false;  // B(z, α_s) < 0 for all s and z in the open simplex
  Vector point;         // z, normalized
  Scalar slack;         // max over K of min_s -B(u, α_s)
};

/// max ε s.t. B(u, α_s) <= -ε, u >= 0, Σu = 1 (plus an optional lower bound t <= u_s when ε is fixed).
inline ImaginaryDomain build_K(const CoxeterSystem& sys) {
  const std::size_t n = sys.rank();
  ImaginaryDomain dom;
  // variables: u_0..u_{n-1}, ε, w_0..w_{n-1}
  // rows: Σ_t G_st u_t + ε + w_s = 0 (n rows), Σ u = 1
  const std::size_t cols = 2 * n + 1;
  std::vector<std::vector<Scalar>> a(n + 1, std::vector<Scalar>(cols));
  std::vector<Scalar> b(n + 1);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) a[s][t] = sys.gram(s, t);
    a[s][n] = Scalar(1);
    a[s][n + 1 + s] = Scalar(1);
  }
  for (std::size_t t = 0; t < n; ++t) a[n][t] = Scalar(1);
  b[n] = Scalar(1);
  std::vector<Scalar> c(cols);
  c[n] = Scalar(1);
  auto res = lp::solve(a, b, c);
  if (res.status != lp::Status::Optimal) return dom;  // K empty
  dom.empty = false;
  dom.slack = res.value;
  Vector u(n);
  for (std::size_t t = 0; t < n; ++t) u[t] = res.x[t];
  if (dom.slack.sign() == 0) {
    dom.point = std::move(u);
    dom.strict = false;
    return dom;
  }
  // the centroid is preferred when it is strictly inside
  {
    Vector cen(n);
    for (std::size_t s = 0; s < n; ++s) cen[s] = Scalar::rational(1, static_cast<long>(n));
    bool strict = true;
    for (std::size_t s = 0; s < n; ++s)
      if (sys.form_with_simple(s, cen).sign() >= 0) strict = false;
    if (strict) {
      dom.point = std::move(cen);
      dom.strict = true;
      return dom;
    }
  }
  // second stage: keep half the slack and push away from the simplex boundary
  // variables u (n), w (n), v (n), t; rows: G u + w = -ε/2, u - v - t = 0, Σu = 1; maximize t
  const Scalar half = dom.slack / Scalar(2);
  const std::size_t cols2 = 3 * n + 1;
  std::vector<std::vector<Scalar>> a2(2 * n + 1, std::vector<Scalar>(cols2));
  std::vector<Scalar> b2(2 * n + 1);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) a2[s][t] = sys.gram(s, t);
    a2[s][n + s] = Scalar(1);
    b2[s] = -half;
    a2[n + s][s] = Scalar(1);
    a2[n + s][2 * n + s] = Scalar(-1);
    a2[n + s][3 * n] = Scalar(-1);
  }
  for (std::size_t t = 0; t < n; ++t) a2[2 * n][t] = Scalar(1);
  b2[2 * n] = Scalar(1);
  std::vector<Scalar> c2(cols2);
  c2[3 * n] = Scalar(1);
  auto res2 = lp::solve(a2, b2, c2);
  if (res2.status == lp::Status::Optimal) {
    for (std::size_t t = 0; t < n; ++t) u[t] = res2.x[t];
  }
  bool interior = true;
  for (std::size_t t = 0; t < n; ++t)
    if (u[t].sign() <= 0) interior = false;
  dom.point = std::move(u);
  dom.strict = interior;
  return dom;
}

/// w·x = normalize(w(x)); throws InputError when w(x) has nonpositive coordinate sum.
inline Vector act(const CoxeterSystem& sys, const Word& w, const Vector& x) {
  Vector v = x;
  for (std::size_t k = w.size(); k-- > 0;) v = sys.reflect_simple(w.letters[k], v);
  if (v.sum().sign() <= 0) throw InputError("w(x) has nonpositive coordinate sum; x is outside the imaginary cone");
  return RootStore::normalize(v);
}

struct OrbitPoint {
  Word word;
  Vector point;
};

/// All w·z with ℓ(w) <= depth, deduplicated on exact coordinates, in BFS order.
inline std::vector<OrbitPoint> orbit_sample(const CoxeterSystem& sys, const ImaginaryDomain& dom, int depth,
                                            std::size_t max_points = 200000) {
  std::vector<OrbitPoint> out;
  if (dom.empty) return out;
  std::map<Vector, bool, CanonicalLess> seen;
  out.push_back({Word{}, dom.point});
  seen.emplace(dom.point, true);
  std::size_t begin = 0;
  for (int d = 0; d < depth; ++d) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        Vector v = sys.reflect_simple(s, out[i].point);
        const Scalar sum = v.sum();
        if (sum.sign() <= 0) continue;
        v /= sum;
        if (!seen.emplace(v, true).second) continue;
        Word w = Word({s}) * out[i].word;
        out.push_back({std::move(w), std::move(v)});
        if (out.size() > max_points) throw BudgetExceeded("orbit sample exceeded its point budget");
      }
    begin = end;
  }
  return out;
}

struct LimitCluster {
  Cluster cluster;
  double isotropy_residual = 0;  // |B(c, c)| at the centroid c
};

inline double form_approx(const CoxeterSystem& sys, const std::vector<double>& x) {
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += sys.gram(i, j).to_double() * x[i] * x[j];
  return s;
}

/// Normalized roots of depth in [depth - band, depth], clustered at tol.
inline std::vector<LimitCluster> limit_root_sample(RootStore& store, int depth, double tol, int band = 0) {
  store.ensure_depth(depth);
  std::vector<std::vector<double>> pts;
  for (std::size_t i = 0; i < store.size(); ++i) {
    const int d = store.depth(static_cast<int>(i));
    if (d < depth - band || d > depth) continue;
    pts.push_back(RootStore::normalize_approx(store.approx(static_cast<int>(i))));
  }
  std::vector<LimitCluster> out;
  for (auto& c : cluster_points(pts, tol)) {
    LimitCluster lc;
    lc.isotropy_residual = std::fabs(form_approx(store.system(), c.centroid));
    lc.cluster = std::move(c);
    out.push_back(std::move(lc));
  }
  return out;
}

struct ProbeReport {
  bool connected = true;
  std::size_t n = 0;
  double distance = 0;             // |w_n·z − β̂_n|
  std::vector<double> orbit_point; // w_n·z
  std::vector<double> root_point;  // β̂_n
  double orbit_tail_diameter = 0;  // spread of the last tail points of each sequence
  double root_tail_diameter = 0;
  double isotropy_residual = 0;    // |B(x, x)| at the midpoint of the two final points
  std::string note;
};

/// Compares the sequences w_n·z and β̂_n for an infinite word (exact iteration, float distances).
inline ProbeReport probe_conjecture_4_8(const CoxeterSystem& sys, const InfWord& w, const ImaginaryDomain& dom,
                                        std::size_t n, std::size_t tail = 10) {
  ProbeReport rep;
  rep.n = n;
  rep.connected = is_connected(sys, w);
  if (!rep.connected)
    rep.note = "word is not connected: its inversion roots may accumulate at several limit roots";
  if (dom.empty) {
    rep.note = "K is empty (finite group)";
    return rep;
  }
  ElementMatrix m(sys.rank());
  std::vector<std::vector<double>> orbit_tail, root_tail;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t s = w.letter(i);
    const Vector beta = m.column(s);  // β_{i+1} = w_i(α_s)
    m.right_multiply(sys, s);         // w_{i+1}
    if (i + tail >= n) {
      orbit_tail.push_back(normalized_approx(m.apply(dom.point)));
      root_tail.push_back(normalized_approx(beta));
    }
  }
  rep.orbit_point = orbit_tail.back();
  rep.root_point = root_tail.back();
  rep.distance = distance(rep.orbit_point, rep.root_point);
  for (auto& a : orbit_tail)
    for (auto& b : orbit_tail) rep.orbit_tail_diameter = std::max(rep.orbit_tail_diameter, distance(a, b));
  for (auto& a : root_tail)
    for (auto& b : root_tail) rep.root_tail_diameter = std::max(rep.root_tail_diameter, distance(a, b));
  std::vector<double> mid(rep.orbit_point.size());
  for (std::size_t k = 0; k < mid.size(); ++k) mid[k] = (rep.orbit_point[k] + rep.root_point[k]) / 2;
  rep.isotropy_residual = std::fabs(form_approx(sys, mid));
  return rep;
}

/// Vertices of K inside the simplex, by intersecting pairs of its defining lines (rank 3 only).
inline std::vector<Vector> k_vertices(const CoxeterSystem& sys) {
  std::vector<Vector> out;
  if (sys.rank() != 3) return out;
  // constraints a.u <= 0 in homogeneous coordinates: rows of G (B(u,α_s) <= 0) and -e_s (u_s >= 0)
  std::vector<Vector> cons;
  for (std::size_t s = 0; s < 3; ++s) cons.push_back(Vector(sys.gram_matrix()[s]));
  for (std::size_t s = 0; s < 3; ++s) cons.push_back(-Vector::unit(3, s));
  for (std::size_t i = 0; i < cons.size(); ++i)
    for (std::size_t j = i + 1; j < cons.size(); ++j) {
      const Vector& p = cons[i];
      const Vector& q = cons[j];
      Vector x{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
      const Scalar sum = x.sum();
      if (sum.is_zero()) continue;
      x /= sum;
      bool ok = true;
      for (const auto& c : cons)
        if (dot(c, x).sign() > 0) ok = false;
      if (ok && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
    }
  return out;
}

}  // namespace coxwo
