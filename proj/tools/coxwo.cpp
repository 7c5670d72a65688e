// coxwo: command-line access to roots, weak order joins, convexity classes, infinite words and
// imaginary cone probes of a Coxeter system given as a JSON spec.
//
// Machine output (JSON) goes to stdout, prose to stderr.
// Exit codes: 0 ok, 2 input error, 3 budget exhausted or unknown verdict, 4 internal error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coxwo/convexity.hpp"
#include "coxwo/imagcone.hpp"
#include "coxwo/infwords.hpp"
#include "coxwo/join.hpp"
#include "plot.hpp"

using namespace coxwo;
using nlohmann::json;

namespace {

constexpr int kExitInput = 2, kExitBudget = 3, kExitInternal = 4;

struct Config {
  int depth = 10;
  std::size_t node_budget = 100000;
  int orbit_depth = 12;
  double tol = 1e-6;
  unsigned seed = 1;
  std::size_t max_roots = 4'000'000;

  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read config file " + path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw InputError(std::string("config: ") + e.what());
    }
    depth = j.value("depth", depth);
    node_budget = j.value("node_budget", node_budget);
    orbit_depth = j.value("orbit_depth", orbit_depth);
    tol = j.value("tol", tol);
    seed = j.value("seed", seed);
    max_roots = j.value("max_roots", max_roots);
  }

  void load_env() {
    if (const char* b = std::getenv("COXWO_BUDGET")) node_budget = std::stoul(b);
    if (const char* s = std::getenv("COXWO_SEED")) seed = static_cast<unsigned>(std::stoul(s));
  }

  json to_json() const {
    return {{"depth", depth}, {"node_budget", node_budget}, {"orbit_depth", orbit_depth},
            {"tol", tol},     {"seed", seed},               {"max_roots", max_roots}};
  }
};

CoxeterSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read system file " + path);
  try {
    return CoxeterSystem::from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw InputError(std::string("system spec: ") + e.what());
  }
}

Vector parse_root(const CoxeterSystem& sys, const json& j) {
  if (!j.is_array() || j.size() != sys.rank()) throw InputError("root literal must list " + std::to_string(sys.rank()) + " coordinates");
  std::vector<Scalar> c;
  for (const auto& x : j) {
    if (x.is_string()) c.push_back(Scalar::parse(x.get<std::string>(), sys.field()));
    else if (x.is_number_integer()) c.emplace_back(x.get<long>());
    else throw InputError("root coordinate must be a scalar literal string or an integer");
  }
  return Vector(std::move(c));
}

std::vector<int> parse_set(RootStore& store, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("set literal: ") + e.what());
  }
  if (!j.is_array()) throw InputError("set literal must be a JSON array of roots");
  std::vector<int> out;
  for (const auto& r : j) out.push_back(store.find_or_extend(parse_root(store.system(), r)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json set_json(const RootStore& store, const std::vector<int>& a) {
  json j = json::array();
  for (int i : a) j.push_back(root_json(store, i));
  return j;
}

json doubles(const std::vector<double>& v) { return json(v); }


// rejects non-reduced words (inversion_set throws NotReduced)
std::vector<Word> parse_words(RootStore& store, const std::vector<std::string>& ws) {
  std::vector<Word> out;
  for (const auto& w : ws) {
    out.push_back(Word::parse(store.system(), w));
    inversion_set(store, out.back());
  }
  return out;
}

struct Session {
  Config cfg;
  std::string system_path;
  std::optional<RootStore> store_;

  RootStore& store() {
    if (!store_) {
      if (system_path.empty()) throw InputError("--system is required for this command");
      store_.emplace(load_system(system_path), cfg.max_roots);
    }
    return *store_;
  }
  const CoxeterSystem& sys() { return store().system(); }
};

Session* g_session = nullptr;

// Every output records the depth the root store reached.
void emit(json j) {
  if (j.is_object() && g_session && g_session->store_) j["store_depth"] = g_session->store_->frontier();
  std::cout << j.dump(2) << std::endl;
}

// ---------------------------------------------------------------------------

int cmd_define(Session& s, const std::string& path) {
  s.system_path = path;
  const auto& sys = s.sys();
  const auto sig = sys.signature();
  json j = sys.to_json();
  j["rank"] = sys.rank();
  j["finite"] = sys.is_finite();
  j["affine"] = sys.is_affine_type();
  j["irreducible"] = sys.is_irreducible();
  j["signature"] = {sig.positive, sig.zero, sig.negative};
  emit(j);
  std::cerr << "rank " << sys.rank() << ", signature (" << sig.positive << ',' << sig.zero << ',' << sig.negative << ")"
            << (sys.is_finite() ? ", finite" : sys.is_affine_type() ? ", affine" : "") << '\n';
  return 0;
}

int cmd_roots(Session& s, int depth) {
  auto& store = s.store();
  store.ensure_depth(depth);
  json roots = json::array();
  for (int i : store.indices_up_to(depth)) roots.push_back({{"root", root_json(store, i)}, {"depth", store.depth(i)}});
  emit({{"depth", depth}, {"count", roots.size()}, {"exhausted", store.exhausted()}, {"roots", roots}});
  std::cerr << roots.size() << " positive roots of depth <= " << depth << (store.exhausted() ? " (all roots)" : "")
            << '\n';
  return 0;
}

int cmd_join(Session& s, const std::vector<std::string>& ws) {
  auto& store = s.store();
  JoinOptions opt;
  opt.node_budget = s.cfg.node_budget;
  opt.orbit_depth = s.cfg.orbit_depth;
  const auto r = decide_join(store, parse_words(store, ws), opt);
  emit(join_json(store, r));
  std::cerr << "join: " << verdict_name(r.verdict);
  if (r.verdict == Verdict::Exists) std::cerr << " " << r.word.str(store.system());
  std::cerr << '\n';
  return r.verdict == Verdict::Unknown ? kExitBudget : 0;
}

int cmd_meet(Session& s, const std::vector<std::string>& ws) {
  auto& store = s.store();
  const Word m = meet(store, parse_words(store, ws));
  emit({{"word", m.str(store.system())}, {"inversion_set", set_json(store, inversion_set(store, m))}});
  return 0;
}

int cmd_closure(Session& s, const std::string& set, bool cone, int depth) {
  auto& store = s.store();
  const auto a = parse_set(store, set);
  if (cone) {
    store.ensure_depth(depth);
    const auto c = cone_closure(store, a, depth);
    emit({{"kind", "cone"}, {"depth", depth}, {"size", c.size()}, {"roots", set_json(store, c)}});
    return 0;
  }
  const auto c = two_closure(store, a);
  if (c.infinite) {
    emit({{"kind", "two"},
          {"infinite", true},
          {"witness", {root_json(store, c.witness.first), root_json(store, c.witness.second)}}});
    std::cerr << "the 2-closure is infinite: the witness pair has B <= -1\n";
  } else {
    emit({{"kind", "two"}, {"infinite", false}, {"size", c.roots.size()}, {"roots", set_json(store, c.roots)}});
  }
  return 0;
}

int cmd_classify(Session& s, const std::string& set, const std::string& word, int depth, bool window) {
  auto& store = s.store();
  store.ensure_depth(depth + 2);
  std::vector<int> a;
  if (!word.empty()) a = inversion_set(store, Word::parse(store.system(), word));
  else a = parse_set(store, set);
  auto ctx = WindowContext::full(store, window ? depth : depth + 2);
  if (window) {
    std::vector<int> kept;
    for (int i : a)
      if (store.depth(i) <= depth) kept.push_back(i);
    a = std::move(kept);
  }
  ClassifyOptions opt;
  opt.finite = !window;
  const auto c = classify(ctx, a, opt);
  json j = classification_json(c);
  j["set"] = set_json(store, a);
  emit(j);
  std::cerr << "biclosed " << c.biclosed() << ", biconvex " << c.biconvex() << ", separable " << c.separable.value
            << " (window depth " << c.depth << ")\n";
  return 0;
}

int cmd_infword(Session& s, const std::string& lit, std::size_t n, const std::string& other, const std::string& prefix) {
  auto& store = s.store();
  const auto& sys = store.system();
  const InfWord w = InfWord::parse(sys, lit);
  const std::size_t certified = verify_reduced(sys, w, n);
  json roots = json::array();
  for (const auto& v : truncate_inversions(sys, w, n)) roots.push_back(vector_json(v));
  json j{{"word", w.str(sys)},
         {"reduced_through", certified},
         {"connected", is_connected(sys, w)},
         {"n", n},
         {"inversions", roots}};
  int code = 0;
  if (!other.empty()) {
    const InfWord v = InfWord::parse(sys, other);
    verify_reduced(sys, v, n);
    const auto c = compare(sys, w, v, n);
    auto side = [](const Containment& x) {
      json k{{"holds", tri_name(x.holds)}, {"exact", x.exact}, {"checked", x.checked}};
      if (x.witness) k["witness"] = vector_json(*x.witness);
      return k;
    };
    j["compare"] = {{"other", v.str(sys)}, {"order", order_name(c.order)}, {"forward", side(c.forward)},
                    {"backward", side(c.backward)}};
    std::cerr << w.str(sys) << " vs " << v.str(sys) << ": " << order_name(c.order) << '\n';
    if (c.order == Order::Unknown) code = kExitBudget;
  }
  if (!prefix.empty()) {
    const Tri t = word_prefix_of(store, parse_words(store, {prefix})[0], w);
    j["prefix_of"] = {{"word", prefix}, {"result", tri_name(t)}};
  }
  emit(j);
  return code;
}

int cmd_limits(Session& s, int depth, double tol, int band) {
  auto& store = s.store();
  json out = json::array();
  for (const auto& c : limit_root_sample(store, depth, tol, band))
    out.push_back({{"centroid", doubles(c.cluster.centroid)},
                   {"diameter", c.cluster.diameter},
                   {"size", c.cluster.size},
                   {"isotropy_residual", c.isotropy_residual}});
  emit({{"depth", depth}, {"band", band}, {"tol", tol}, {"clusters", out}});
  std::cerr << out.size() << " clusters of normalized roots at depth " << depth << '\n';
  return 0;
}

int cmd_imaginary(Session& s, int orbit_depth) {
  const auto& sys = s.sys();
  const auto dom = build_K(sys);
  json j{{"empty", dom.empty}};
  if (!dom.empty) {
    j["strict"] = dom.strict;
    j["point"] = vector_json(dom.point);
    j["slack"] = dom.slack.str();
    json verts = json::array();
    for (const auto& v : k_vertices(sys)) verts.push_back(vector_json(v));
    j["k_vertices"] = verts;
    json orbit = json::array();
    for (const auto& p : orbit_sample(sys, dom, orbit_depth))
      orbit.push_back({{"word", p.word.str(sys)}, {"point", vector_json(p.point)}, {"approx", doubles(normalized_approx(p.point))}});
    j["orbit_depth"] = orbit_depth;
    j["orbit"] = orbit;
  }
  emit(j);
  std::cerr << (dom.empty ? "K is empty (finite group)" : dom.strict ? "K has a strict interior point" : "K is degenerate (slack 0)")
            << '\n';
  return 0;
}

int cmd_probe(Session& s, const std::string& question, const std::string& conjecture, const std::vector<std::string>& args,
              std::size_t n) {
  auto& store = s.store();
  const auto& sys = store.system();
  if (question == "3.5") {
    // Does the join exist when cone_Φ(N(X)) is finite? Report the cone closure growth and the verdict.
    const auto xs = parse_words(store, args);
    std::set<int> nx;
    for (const auto& x : xs)
      for (int i : inversion_set(store, x)) nx.insert(i);
    const std::vector<int> gens(nx.begin(), nx.end());
    json growth = json::array();
    for (int d = 2; d <= s.cfg.depth; d += 2) {
      store.ensure_depth(d);
      growth.push_back({{"depth", d}, {"size", cone_closure(store, gens, d).size()}});
    }
    JoinOptions opt;
    opt.node_budget = s.cfg.node_budget;
    opt.orbit_depth = s.cfg.orbit_depth;
    const auto r = decide_join(store, xs, opt);
    emit({{"question", "3.5"}, {"cone_growth", growth}, {"join", join_json(store, r)}});
    return r.verdict == Verdict::Unknown ? kExitBudget : 0;
  }
  if (conjecture == "4.8") {
    if (args.size() != 1) throw InputError("probe --conjecture 4.8 takes one infinite word literal");
    const InfWord w = InfWord::parse(sys, args[0]);
    verify_reduced(sys, w);
    const auto rep = probe_conjecture_4_8(sys, w, build_K(sys), n);
    emit({{"conjecture", "4.8"},
          {"word", w.str(sys)},
          {"connected", rep.connected},
          {"n", rep.n},
          {"distance", rep.distance},
          {"orbit_point", doubles(rep.orbit_point)},
          {"root_point", doubles(rep.root_point)},
          {"orbit_tail_diameter", rep.orbit_tail_diameter},
          {"root_tail_diameter", rep.root_tail_diameter},
          {"isotropy_residual", rep.isotropy_residual},
          {"note", rep.note}});
    std::cerr << "|w_n.z - beta_n| = " << rep.distance << " at n = " << n << '\n';
    if (!rep.note.empty()) std::cerr << rep.note << '\n';
    return 0;
  }
  throw InputError("probe needs --question 3.5 or --conjecture 4.8");
}

int cmd_plot(Session& s, const std::string& svg_path, const std::string& spec_path) {
  auto& store = s.store();
  const auto& sys = store.system();
  if (sys.rank() < 2 || sys.rank() > 4) throw InputError("plot supports ranks 2, 3 and 4");
  json spec = json::object();
  if (!spec_path.empty()) {
    std::ifstream in(spec_path);
    if (!in) throw InputError("cannot read plot spec " + spec_path);
    try {
      spec = json::parse(in);
    } catch (const json::exception& e) {
      throw InputError(std::string("plot spec: ") + e.what());
    }
  }
  plot::Figure fig;
  fig.title = spec.value("title", sys.label());
  fig.conic = spec.value("conic", true);
  const int depth = spec.value("depth", std::min(s.cfg.depth, 8));
  store.ensure_depth(depth);
  for (int i : store.indices_up_to(depth)) {
    fig.roots.push_back(RootStore::normalize_approx(store.approx(i)));
    fig.depths.push_back(store.depth(i));
  }
  for (const auto& h : spec.value("sets", json::array())) {
    plot::Highlight hl;
    hl.fill = h.value("fill", hl.fill);
    std::vector<int> idx;
    if (h.contains("word")) idx = inversion_set(store, Word::parse(sys, h["word"].get<std::string>()));
    if (h.contains("roots")) idx = parse_set(store, h["roots"].dump());
    for (int i : idx) hl.points.push_back(RootStore::normalize_approx(store.approx(i)));
    fig.sets.push_back(std::move(hl));
  }
  const auto dom = build_K(sys);
  if (!dom.empty && spec.value("imaginary", true)) {
    for (const auto& v : k_vertices(sys)) fig.k_polygon.push_back(normalized_approx(v));
    const int od = spec.value("orbit_depth", 0);
    for (const auto& p : orbit_sample(sys, dom, od)) fig.orbit.push_back(normalized_approx(p.point));
  }
  for (const auto& t : spec.value("trails", json::array())) {
    plot::Trail tr;
    const InfWord w = InfWord::parse(sys, t.at("word").get<std::string>());
    for (const auto& v : truncate_inversions(sys, w, t.value("n", 20))) tr.points.push_back(normalized_approx(v));
    tr.stroke = t.value("stroke", tr.stroke);
    fig.trails.push_back(std::move(tr));
  }
  std::vector<double> centre(sys.rank(), 1.0 / static_cast<double>(sys.rank()));
  if (!dom.empty) centre = normalized_approx(dom.point);
  const std::string svg = plot::render(sys, fig, centre);
  std::ofstream out(svg_path);
  if (!out) throw InputError("cannot write " + svg_path);
  out << svg;
  emit({{"svg", svg_path}, {"roots", fig.roots.size()}, {"sets", fig.sets.size()}, {"bytes", svg.size()}});
  return 0;
}

// Batch driver over a directory of system specs: join verdict distribution on random pairs, finite-set
// equivalence violations in a small window, and cluster counts for connected infinite-word probes.
int cmd_scan(Session& s, const std::string& dir, std::size_t samples) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  json report = json::array();
  for (const auto& f : files) {
    RootStore store(load_system(f.string()), s.cfg.max_roots);
    const auto& sys = store.system();
    std::mt19937 rng(s.cfg.seed);
    JoinOptions opt;
    opt.node_budget = s.cfg.node_budget;
    opt.orbit_depth = s.cfg.orbit_depth;
    auto random_word = [&](std::size_t max_len) {
      std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, sys.rank() - 1);
      Word w;
      const std::size_t l = len(rng);
      for (std::size_t k = 0; k < l; ++k) {
        const std::size_t t = gen(rng);
        if (is_positive(apply_word(store, w, static_cast<SignedIndex>(t)))) w.letters.push_back(t);
      }
      return w;
    };
    json verdicts{{"exists", 0}, {"not_exists", 0}, {"unknown", 0}};
    for (std::size_t k = 0; k < samples; ++k) {
      const auto r = decide_join(store, {random_word(4), random_word(4)}, opt);
      verdicts[verdict_name(r.verdict)] = verdicts[verdict_name(r.verdict)].get<int>() + 1;
    }
    // finite-set equivalences on random subsets of the depth-3 window
    const int window = sys.rank() >= 4 ? 2 : 3;
    const auto pool = store.indices_up_to(window);
    auto ctx = WindowContext::full(store, window + 2);
    FiniteScanner scanner(ctx);
    std::size_t violations = 0, sets_checked = 0;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), size(1, 3);
    for (std::size_t k = 0; k < samples; ++k) {
      std::set<int> a;
      const std::size_t m = size(rng);
      while (a.size() < std::min(m, pool.size())) a.insert(pool[pick(rng)]);
      const auto p = scanner.profile(std::vector<int>(a.begin(), a.end()));
      ++sets_checked;
      if (p.biclosed() != p.peel || p.biconvex() != p.peel || p.separable != p.peel) ++violations;
    }
    json entry{{"system", f.filename().string()},
               {"label", sys.label()},
               {"rank", sys.rank()},
               {"join_samples", samples},
               {"verdicts", verdicts},
               {"sets_checked", sets_checked},
               {"equivalence_violations", violations}};
    if (sys.rank() == 3 && !sys.is_finite()) {
      json probes = json::array();
      for (const auto& period : std::vector<std::vector<std::size_t>>{{0, 1, 2}, {0, 1}, {0, 1, 2, 1}}) {
        InfWord w;
        w.period = Word(period);
        try {
          verify_reduced(sys, w);
        } catch (const NotReduced&) {
          continue;
        }
        if (!is_connected(sys, w)) continue;
        probes.push_back({{"word", w.str(sys)}, {"clusters", accumulation_estimate(sys, w, 300, 0.05).size()}});
      }
      entry["infword_probes"] = probes;
    }
    report.push_back(entry);
    std::cerr << f.filename().string() << ": " << verdicts.dump() << ", " << violations << " equivalence violations\n";
  }
  emit({{"seed", s.cfg.seed}, {"systems", report}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak order, convexity and limit roots of Coxeter systems", "coxwo"};
  app.require_subcommand(1);
  app.fallthrough();
  Session s;
  g_session = &s;
  std::string config_path;
  std::optional<std::size_t> budget;
  std::optional<unsigned> seed;
  app.add_option("--system,-s", s.system_path, "System spec (JSON)");
  app.add_option("--config", config_path, "Config file (JSON: depth, node_budget, orbit_depth, tol, seed, max_roots)");
  app.add_option("--budget", budget, "Join node budget (overrides COXWO_BUDGET)");
  app.add_option("--seed", seed, "Random seed (overrides COXWO_SEED)");

  std::string define_path;
  auto* define = app.add_subcommand("define", "Load and validate a system spec");
  define->add_option("path", define_path)->required();

  int depth = -1;
  auto* roots = app.add_subcommand("roots", "Positive roots up to a depth");
  roots->add_option("--depth", depth);

  std::vector<std::string> words;
  auto* join = app.add_subcommand("join", "Decide whether the join of reduced words exists");
  join->add_option("words", words)->required();
  auto* meetc = app.add_subcommand("meet", "Meet of reduced words");
  meetc->add_option("words", words)->required();

  std::string set_lit, word_lit;
  bool two = false, cone = false, window = false;
  auto* closure = app.add_subcommand("closure", "2-closure or cone closure of a set of roots");
  closure->add_flag("--two", two);
  closure->add_flag("--cone", cone);
  closure->add_option("--depth", depth);
  closure->add_option("set", set_lit, "JSON array of roots, e.g. '[[\"1\",\"0\",\"0\"]]'")->required();

  auto* classifyc = app.add_subcommand("classify", "Closed / convex / separable flags of a set");
  classifyc->add_option("set", set_lit);
  classifyc->add_option("--word", word_lit, "Classify N(w) instead of a literal set");
  classifyc->add_option("--depth", depth);
  classifyc->add_flag("--window", window, "Treat the set as a truncation to the depth window");

  std::string inf_lit, other, prefix;
  std::size_t n = 0;
  auto* infword = app.add_subcommand("infword", "Inversion roots and comparison of infinite words");
  infword->add_option("word", inf_lit)->required();
  infword->add_option("--n", n);
  infword->add_option("--compare", other);
  infword->add_option("--prefix", prefix, "Test whether a finite word is a prefix");

  double tol = -1;
  int band = 0;
  auto* limits = app.add_subcommand("limits", "Clusters of normalized roots near the limit set");
  limits->add_option("--depth", depth);
  limits->add_option("--tol", tol);
  limits->add_option("--band", band);

  int orbit_depth = -1;
  auto* imaginary = app.add_subcommand("imaginary", "The domain K and its orbit points");
  imaginary->add_option("--orbit-depth", orbit_depth);

  std::string question, conjecture;
  std::vector<std::string> probe_args;
  auto* probe = app.add_subcommand("probe", "Evidence for open questions");
  probe->add_option("--question", question);
  probe->add_option("--conjecture", conjecture);
  probe->add_option("--n", n);
  probe->add_option("args", probe_args);

  std::string svg_path, plot_spec;
  auto* plotc = app.add_subcommand("plot", "Render the projective picture as SVG");
  plotc->add_option("--svg", svg_path)->required();
  plotc->add_option("spec", plot_spec, "Figure spec (JSON)");

  std::string scan_dir;
  std::size_t samples = 30;
  auto* scan = app.add_subcommand("scan", "Batch report over a directory of systems");
  scan->add_option("--systems", scan_dir)->required();
  scan->add_option("--samples", samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (!config_path.empty()) s.cfg.load_file(config_path);
    s.cfg.load_env();
    if (budget) s.cfg.node_budget = *budget;
    if (seed) s.cfg.seed = *seed;

    if (*define) return cmd_define(s, define_path);
    if (*roots) return cmd_roots(s, depth >= 0 ? depth : s.cfg.depth);
    if (*join) return cmd_join(s, words);
    if (*meetc) return cmd_meet(s, words);
    if (*closure) {
      if (two == cone) throw InputError("closure needs exactly one of --two and --cone");
      return cmd_closure(s, set_lit, cone, depth >= 0 ? depth : s.cfg.depth);
    }
    if (*classifyc) {
      if (set_lit.empty() == word_lit.empty()) throw InputError("classify needs a set literal or --word");
      return cmd_classify(s, set_lit, word_lit, depth >= 0 ? depth : 6, window);
    }
    if (*infword) return cmd_infword(s, inf_lit, n ? n : 20, other, prefix);
    if (*limits) return cmd_limits(s, depth >= 0 ? depth : s.cfg.depth, tol > 0 ? tol : 0.05, band);
    if (*imaginary) return cmd_imaginary(s, orbit_depth >= 0 ? orbit_depth : std::min(s.cfg.orbit_depth, 6));
    if (*probe) return cmd_probe(s, question, conjecture, probe_args, n ? n : 1000);
    if (*plotc) return cmd_plot(s, svg_path, plot_spec);
    if (*scan) return cmd_scan(s, scan_dir, samples);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
