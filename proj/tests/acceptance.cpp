// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coxwo/convexity.hpp"
#include "coxwo/imagcone.hpp"
#include "coxwo/infwords.hpp"
#include "coxwo/join.hpp"
#include "property_checks.hpp"
#include "support.hpp"

using namespace coxwo;
using testing_support::load;
using testing_support::vec;
using testing_support::word;

namespace {

// Collects failed expectations of one criterion.
struct Check {
  std::vector<std::string> failed;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
  void note(const std::string& n) { notes.push_back(n); }
};

std::vector<Word> words(const CoxeterSystem& sys, std::initializer_list<const char*> ws) {
  std::vector<Word> out;
  for (const char* w : ws) out.push_back(word(sys, w));
  return out;
}

testing_support::VectorSet as_set(std::initializer_list<Vector> vs) { return testing_support::VectorSet(vs); }

bool hull_certificate_ok(const JoinResult& r) {
  if (r.witness != "imaginary_point" || r.hull_points.size() != r.weights.size() || r.hull_points.empty()) return false;
  Vector sum(r.point.size());
  Scalar total;
  for (std::size_t k = 0; k < r.weights.size(); ++k) {
    if (r.weights[k].sign() < 0) return false;
    sum.axpy(r.weights[k], r.hull_points[k]);
    total += r.weights[k];
  }
  return total == Scalar(1) && sum == r.point;
}

// ---------------------------------------------------------------------------

void a2_lattice(Check& c) {
  RootStore store(load("a2"));
  const auto& sys = store.system();
  const auto all = words(sys, {"e", "s1", "s2", "s1.s2", "s2.s1", "s1.s2.s1"});
  // six distinct elements, and nothing else: the longest element has length 3
  std::set<std::vector<int>> images;
  for (const auto& w : all) {
    auto n = inversion_set(store, w);
    std::sort(n.begin(), n.end());
    images.insert(n);
  }
  c.expect(images.size() == 6, "six distinct inversion sets");
  c.expect(longest_element(store).size() == 3, "longest element has length 3");

  const Vector a1 = vec({1, 0}), a2 = vec({0, 1}), a12 = vec({1, 1});
  const std::vector<testing_support::VectorSet> expected{
      {}, as_set({a1}), as_set({a2}), as_set({a1, a12}), as_set({a2, a12}), as_set({a1, a2, a12})};
  for (std::size_t k = 0; k < all.size(); ++k)
    c.expect(testing_support::vectors(store, inversion_set(store, all[k])) == expected[k],
             "N(" + all[k].str(sys) + ") matches the lattice picture");

  int agree = 0;
  for (const auto& x : all)
    for (const auto& y : all) {
      const auto r = decide_join(store, {x, y});
      if (r.verdict == Verdict::Exists &&
          inversion_set(store, r.word) == inversion_set(store, finite_group_join(store, {x, y})))
        ++agree;
    }
  c.expect(agree == 36, "decide_join agrees with finite_group_join on " + std::to_string(agree) + "/36 pairs");
  c.expect(meet(store, words(sys, {"s1.s2", "s2.s1"})).size() == 0, "meet(s1s2, s2s1) = e");

  auto ctx = WindowContext::full(store, 3);
  const auto cl = classify(ctx, {*store.lookup(a12)});
  c.expect(cl.closed.value && cl.closed.exactness == Exactness::Exact, "{α1+α2} closed (exact)");
  c.expect(!cl.coclosed.value && cl.coclosed.exactness == Exactness::Exact, "{α1+α2} not coclosed (exact)");
}

void affine_c2_joins(Check& c) {
  RootStore store(load("c2tilde"));  // a = s_α, b = s_β, g = s_γ
  const auto& sys = store.system();
  const auto yes = decide_join(store, words(sys, {"a", "g.b"}));
  c.expect(yes.verdict == Verdict::Exists, "join(s_α, s_γ s_β) exists");
  if (yes.verdict == Verdict::Exists) {
    c.expect(inversion_set(store, yes.word) == inversion_set(store, word(sys, "g.a.b.a.b")),
             "join equals s_γ s_α s_β s_α s_β as a group element");
    c.expect(yes.inversions.size() == 5, "|N(join)| = 5");
    c.note("join word " + yes.word.str(sys));
  }

  const auto no = decide_join(store, words(sys, {"a", "b.g"}));
  c.expect(no.verdict == Verdict::NotExists, "join(s_α, s_β s_γ) does not exist");
  const Vector delta{Scalar(1), Scalar::root_of(2), Scalar(1)};
  for (std::size_t s = 0; s < 3; ++s) c.expect(sys.form_with_simple(s, delta).is_zero(), "B(δ, α_s) = 0");
  c.expect(no.point == RootStore::normalize(delta), "witness point is δ̂");
  c.expect(hull_certificate_ok(no), "hull certificate reconstructs δ̂ from N̂(X)");
  std::vector<int> nx = inversion_set(store, word(sys, "a"));
  for (int i : inversion_set(store, word(sys, "b.g"))) nx.push_back(i);
  c.expect(in_hull(RootStore::normalize(delta), normalized_points(store, nx)).member, "δ̂ ∈ conv(N̂(X)) by a fresh LP");
}

void infinite_dihedral(Check& c) {
  RootStore store(load("dihedral_inf"));
  const auto& sys = store.system();
  const InfWord st = InfWord::parse(sys, "|(s.t)"), ts = InfWord::parse(sys, "|(t.s)");
  for (std::size_t n = 0; n <= 50; ++n) {
    const auto got = truncate_inversions(sys, st, n);
    bool ok = got.size() == n;
    for (std::size_t k = 0; ok && k < n; ++k) ok = got[k] == vec({static_cast<long>(k) + 1, static_cast<long>(k)});
    if (!ok) {
      c.expect(false, "truncation n = " + std::to_string(n));
      break;
    }
  }
  const auto j = decide_join(store, words(sys, {"s", "t"}));
  c.expect(j.verdict == Verdict::NotExists, "join(s, t) does not exist");
  c.expect(hull_certificate_ok(j), "join(s, t) certificate");
  const auto cmp = compare(sys, st, ts);
  c.expect(cmp.order == Order::Incomparable, "(st)^∞ and (ts)^∞ incomparable, got " + order_name(cmp.order));
}

void biclosed_not_biconvex(Check& c) {
  RootStore store(load("universal3"));  // r, t, s
  const auto& sys = store.system();
  const Vector ar = sys.simple_root(0), at = sys.simple_root(1), as = sys.simple_root(2);
  const Vector sar = sys.reflect_simple(2, ar), sat = sys.reflect_simple(2, at);
  c.expect(sys.bilinear(ar, at) == Scalar(-1) && sys.bilinear(sar, sat) == Scalar(-1) &&
               sys.bilinear(ar, sar) == Scalar(-1) && sys.bilinear(at, sat) == Scalar(-1),
           "B = -1 on the four edges");
  c.expect(sys.bilinear(ar, sat) == Scalar(-3) && sys.bilinear(sar, at) == Scalar(-3), "B = -3 on the diagonals");

  const Vector tsar = sys.reflect_simple(1, sar);
  c.expect(tsar == ar + Scalar(2) * as + Scalar(6) * at, "ts(α_r) = α_r + 2α_s + 6α_t");
  c.expect(tsar == ar + Scalar(5) * at + sat, "ts(α_r) = α_r + 5α_t + s(α_t)");

  const int depth = 8;
  auto idx = [&](const Vector& v) { return store.find_or_extend(v); };
  const auto big = subsystem(store, {idx(sar), idx(sat), idx(ar), idx(at)}, depth);
  const auto par = subsystem(store, {idx(at), idx(ar), idx(sat)}, depth);
  c.expect(big.simple.size() == 4 && par.simple.size() == 3, "simple systems of sizes 4 and 3");
  WindowContext ctx(store, big.roots, depth);
  ClassifyOptions opt;
  opt.finite = false;
  const auto cl = classify(ctx, par.roots, opt);
  c.expect(cl.closed.value && cl.coclosed.value, "Φ_I⁺ biclosed in the window");
  c.expect(!cl.convex.value && cl.convex.exactness == Exactness::Exact, "Φ_I⁺ not convex (exact)");

  const int w = idx(tsar);
  const std::set<int> in(par.roots.begin(), par.roots.end());
  c.expect(ctx.contains(w) && !in.count(w), "ts(α_r) ∈ Φ'⁺ \\ Φ_I⁺");
  std::vector<Vector> gens;
  for (int i : par.roots) gens.push_back(store.vec(i));
  c.expect(in_cone(tsar, gens).member, "ts(α_r) ∈ cone(Φ_I⁺)");
  c.note(std::to_string(par.roots.size()) + " of " + std::to_string(big.roots.size()) + " window roots");
}

void biconvex_not_separable(Check& c) {
  RootStore store(load("a3tilde"));
  const auto& sys = store.system();
  const auto xs = words(sys, {"s2.s1.s3.s2.s1", "s2.s1.s4"});
  const Vector delta = vec({1, 1, 1, 1});
  for (std::size_t s = 0; s < 4; ++s) c.expect(sys.form_with_simple(s, delta).is_zero(), "B(δ, α_s) = 0");
  const Vector dhat = RootStore::normalize(delta);

  std::vector<int> nx;
  for (const auto& x : xs)
    for (int i : inversion_set(store, x)) nx.push_back(i);
  c.expect(in_hull(dhat, normalized_points(store, nx)).member, "δ̂ ∈ conv(N̂(X))");

  const int depth = 8;
  const auto a = cone_closure(store, nx, depth);
  auto ctx = WindowContext::full(store, depth);
  const std::set<int> in(a.begin(), a.end());
  std::vector<int> comp;
  for (int g : ctx.universe())
    if (!in.count(g)) comp.push_back(g);
  c.expect(in_hull(dhat, normalized_points(store, comp)).member, "δ̂ ∈ conv of the window complement");

  ClassifyOptions opt;
  opt.finite = false;
  const auto cl = classify(ctx, a, opt);
  c.expect(cl.convex.value && cl.coconvex.value, "cone_Φ(N(X)) biconvex in the window");
  c.expect(!cl.separable.value && cl.separable.exactness == Exactness::Exact, "not separable (exact)");

  const auto j = decide_join(store, xs);
  c.expect(j.verdict != Verdict::Exists, "join never reported as existing");
  if (j.verdict == Verdict::NotExists) {
    c.expect(hull_certificate_ok(j), "imaginary witness certificate");
    c.expect(j.point == dhat, "witness is δ̂");
  }
  c.note("join " + verdict_name(j.verdict) + ", |A ∩ window| = " + std::to_string(a.size()) + " of " +
         std::to_string(ctx.universe().size()));
}

void affine_a2_words(Check& c) {
  RootStore store(load("a2tilde"));
  const auto& sys = store.system();
  const InfWord w = InfWord::parse(sys, "|(a.b.c)"), w2 = InfWord::parse(sys, "b|(a.b.c)");
  const auto cmp = compare(sys, w, w2);
  c.expect(cmp.order == Order::Less, "ω ≺ ω′ strictly, got " + order_name(cmp.order));
  c.expect(word_prefix_of(store, word(sys, "b"), w) == Tri::No, "s_β not a prefix of ω");
  const std::size_t b = sys.generator("b");
  const std::size_t n = 60;
  const auto nw = truncate_inversions(sys, w, n);
  const auto nw2 = truncate_inversions(sys, w2, n + 1);
  bool aligned = nw2[0] == sys.simple_root(b);
  for (std::size_t k = 0; aligned && k < n; ++k) aligned = nw2[k + 1] == sys.reflect_simple(b, nw[k]);
  c.expect(aligned, "N(ω′) = {α_β} ∪ s_β(N(ω)) index-aligned through 60");
}

void property_suite(Check& c) {
  for (const char* name : {"a2", "dihedral_inf", "a2tilde", "c2tilde", "universal3", "universal3_sixfifths"}) {
    RootStore store(load(name));
    const auto a = testing_support::check_peel(store);
    const auto b = testing_support::check_disjoint_union(store);
    const auto cc = testing_support::check_finite_equivalences(store);
    const auto d = testing_support::check_join_against_ball(store);
    c.expect(a.ok(), std::string(name) + " (a) " + a.summary());
    c.expect(b.ok(), std::string(name) + " (b) " + b.summary());
    c.expect(cc.ok(), std::string(name) + " (c) " + cc.summary());
    c.expect(d.ok(), std::string(name) + " (d) " + d.summary());
    c.note(std::string(name) + ": " + std::to_string(cc.cases) + " subsets, " + std::to_string(d.decided) +
           " decided joins");
  }
}

void limits_and_imaginary(Check& c) {
  {
    RootStore store(load("dihedral_inf"));
    const auto cl = limit_root_sample(store, 30, 0.05);
    c.expect(cl.size() == 1, "one limit cluster in the infinite dihedral group");
    if (cl.size() == 1)
      c.expect(std::fabs(cl[0].cluster.centroid[0] - 0.5) < 1e-6 && std::fabs(cl[0].cluster.centroid[1] - 0.5) < 1e-6,
               "cluster at (1/2, 1/2)");
  }
  {
    const auto sys = load("a2tilde");
    const auto dom = build_K(sys);
    const Vector third = RootStore::normalize(vec({1, 1, 1}));
    const auto verts = k_vertices(sys);
    c.expect(!dom.empty && !dom.strict && dom.point == third, "Ã₂: K contains δ̂ only on the boundary");
    c.expect(verts.size() == 1 && verts[0] == third, "Ã₂: K = {δ̂}");
  }
  const auto sys = load("universal3_sixfifths");
  const auto dom = build_K(sys);
  c.expect(dom.strict && dom.point == RootStore::normalize(vec({1, 1, 1})), "centroid is interior to K");
  for (std::size_t s = 0; s < 3; ++s)
    c.expect(sys.form_with_simple(s, dom.point) == Scalar::rational(-7, 15), "B(z, α_s) = -7/15");

  // isotropic point of [α̂, β̂] nearest α̂: λ = 1/2 + √11/22
  const Scalar lambda(mpq_class(1, 2), mpq_class(1, 22), 11);
  const Vector x{lambda, Scalar(1) - lambda, Scalar(0)};
  c.expect(sys.bilinear(x, x).is_zero(), "limit direction is isotropic (exact)");
  const auto rep = probe_conjecture_4_8(sys, InfWord::parse(sys, "|(a.b)"), dom, 1000);
  const auto xf = normalized_approx(x);
  c.expect(distance(rep.orbit_point, xf) < 1e-4, "w_n·z within 1e-4 of the isotropic point");
  c.expect(distance(rep.root_point, xf) < 1e-4, "β̂_n within 1e-4 of the isotropic point");
  std::ostringstream n;
  n << "distances " << distance(rep.orbit_point, xf) << ", " << distance(rep.root_point, xf);
  c.note(n.str());
}

struct Criterion {
  int id;
  const char* title;
  double seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "A2 lattice, joins, meet, closed non-coclosed root", 1, a2_lattice},
      {2, "affine C2 join and non-join", 5, affine_c2_joins},
      {3, "infinite dihedral truncations, join, incomparability", 1, infinite_dihedral},
      {4, "rank-3 biclosed set that is not biconvex", 10, biclosed_not_biconvex},
      {5, "affine A3 biconvex set that is not separable", 30, biconvex_not_separable},
      {6, "affine A2 infinite words", 1, affine_a2_words},
      {7, "property suite", 300, property_suite},
      {8, "limit roots and imaginary cone probes", 60, limits_and_imaginary},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failed.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.seconds) c.failed.push_back("took longer than " + std::to_string(cr.seconds) + " s");
    const bool ok = c.failed.empty();
    failures += !ok;
    std::printf("criterion %d: %s  %-55s %7.2fs", cr.id, ok ? "PASS" : "FAIL", cr.title, secs);
    for (const auto& n : c.notes) std::printf("  [%s]", n.c_str());
    std::printf("\n");
    for (const auto& f : c.failed) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
