#include "slift/suite.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "slift/map_search.hpp"

namespace slift {

void CheckResult::fail(std::string witness) {
  status = "fail";
  witnesses.push_back(std::move(witness));
}

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

namespace {

using nlohmann::json;

const std::vector<std::string>& homotopy_checks() {
  static const std::vector<std::string> v{"homotopy-relation", "trivial-dual-retract", "properness", "finality"};
  return v;
}

const std::vector<std::string>& equivalence_checks() {
  static const std::vector<std::string> v{"cartesian-iso", "absolute-fibrant", "marked-rfib-agreement",
                                          "cocartesian-fibrant"};
  return v;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Lazily computed facts about the plain maps of a corpus.
class Context {
 public:
  Context(const Corpus& c, int height, int budget) : corpus(c), height(height), budget(budget) {}

  const Classification& classification(std::size_t k) {
    auto it = classes_.find(k);
    if (it == classes_.end()) it = classes_.emplace(k, classify_fibration(corpus.maps[k].value, height)).first;
    return it->second;
  }

  bool is_infinity_category(const FiniteSimplicialSet& x) {
    return has_rlp(to_point(x), horn_generators(HornKind::inner, height)).holds;
  }

  bool marked_right(std::size_t k) {
    auto it = marked_right_.find(k);
    if (it == marked_right_.end())
      it = marked_right_.emplace(k, has_rlp(corpus.marked_maps[k].value, preset("marked-right", height)).holds).first;
    return it->second;
  }

  bool marked_left(std::size_t k) {
    auto it = marked_left_.find(k);
    if (it == marked_left_.end())
      it = marked_left_.emplace(k, has_rlp(corpus.marked_maps[k].value, preset("marked-left", height)).holds).first;
    return it->second;
  }

  const Corpus& corpus;
  int height;
  int budget;

 private:
  std::map<std::size_t, Classification> classes_;
  std::map<std::size_t, bool> marked_right_, marked_left_;
};

// A failing square must commute and admit no filler.
void reverify_failing(CheckResult& r, const RlpResult& rlp, const std::string& what) {
  if (rlp.holds || !rlp.failing) return;
  ++r.reverified;
  if (!check_square(*rlp.failing).empty() || find_lift(*rlp.failing)) {
    ++r.reverify_failures;
    r.fail(what + ": failing square does not re-verify");
  }
}

void reverify_certificate(CheckResult& r, const DeformationRetractCertificate& c, const std::string& what) {
  ++r.reverified;
  const auto errors = verify(c);
  if (!errors.empty()) {
    ++r.reverify_failures;
    r.fail(what + ": certificate does not re-verify (" + errors.front() + ")");
  }
}

void generator_equivalence(Context& ctx, CheckResult& r) {
  const auto boxes = preset("right-anodyne", ctx.height);
  const auto horns = horn_generators(HornKind::right, ctx.height);
  for (const auto& m : ctx.corpus.maps) {
    if (m.has_tag("truncated")) {
      ++r.excluded;
      continue;
    }
    ++r.instances;
    const auto a = has_rlp(m.value, boxes);
    const auto b = has_rlp(m.value, horns);
    reverify_failing(r, a, m.name);
    reverify_failing(r, b, m.name);
    if (a.holds != b.holds) r.fail(m.name + ": boxes=" + yes_no(a.holds) + " horns=" + yes_no(b.holds));
  }
  if (r.excluded) r.notes.push_back("maps through truncated nerves excluded");
}

template <class Entries>
void relation_pairs(Context& ctx, CheckResult& r, const Entries& objects, Flavor flavor) {
  std::vector<const MarkedSimplicialSet*> fibrant;
  std::vector<MarkedSimplicialSet> values;
  for (const auto& o : objects) {
    if constexpr (std::is_same_v<std::decay_t<decltype(o.value)>, FiniteSimplicialSet>)
      values.push_back(flat(o.value));
    else
      values.push_back(o.value);
  }
  // A nerve truncated at the height has no room for homotopies out of its top simplices.
  for (std::size_t k = 0; k < values.size(); ++k)
    if (!objects[k].has_tag("truncated") && is_fibrant(values[k], WeqSide::contra, flavor, ctx.height))
      fibrant.push_back(&values[k]);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (objects[k].has_tag("truncated")) {
      ++r.excluded;
      continue;
    }
    for (const auto* w : fibrant) {
      const std::string what = objects[k].name + "->" + w->underlying().name();
      try {
        const auto t = homotopy_classes(values[k], *w, flavor);
        ++r.instances;
        r.reverified += t.generating.size();
        const auto errors = verify(t);
        if (!errors.empty()) {
          ++r.reverify_failures;
          r.fail(what + ": " + errors.front());
        }
        if (!t.relation_closed) r.fail(what + ": generated relation is not an equivalence relation");
      } catch (const DimCapOverflow&) {
        ++r.excluded;
      }
    }
  }
}

void homotopy_relation(Context& ctx, CheckResult& r) {
  relation_pairs(ctx, r, ctx.corpus.objects, Flavor::plain);
  relation_pairs(ctx, r, ctx.corpus.marked_objects, Flavor::marked);
  if (r.excluded) r.notes.push_back("truncated nerves and pairs whose cylinder exceeds the dim_cap excluded");
}

void trivial_dual_retract(Context& ctx, CheckResult& r) {
  for (std::size_t k = 0; k < ctx.corpus.maps.size(); ++k) {
    const auto& m = ctx.corpus.maps[k];
    if (!ctx.classification(k).trivial.holds) continue;
    if (m.has_tag("truncated")) {
      ++r.excluded;
      continue;
    }
    ++r.instances;
    try {
      const auto c = find_deformation_retract(m.value, RetractDirection::dual_right);
      if (!c) {
        r.fail(m.name + ": no dual right deformation retract");
        continue;
      }
      reverify_certificate(r, *c, m.name);
    } catch (const DimCapOverflow& e) {
      r.fail(m.name + ": " + e.what());
    }
  }
  if (r.excluded) r.notes.push_back("maps through truncated nerves excluded");
}

void cartesian_edge_agreement(Context& ctx, CheckResult& r) {
  for (std::size_t k = 0; k < ctx.corpus.maps.size(); ++k) {
    const auto& m = ctx.corpus.maps[k];
    if (!ctx.classification(k).inner.holds) continue;
    for (const auto& v : cartesian_edges(m.value, CartesianMethod::cross, ctx.height)) {
      ++r.instances;
      if (!v.agreement) r.fail(m.name + ":" + v.label + ": c2=" + yes_no(v.c2) + " c3=" + yes_no(v.c3));
    }
  }
}

class CartesianCache {
 public:
  CartesianCache(const SimplicialMap& p, int height) : p_(p), height_(height) {}
  bool operator()(const Simplex& e) {
    auto it = cache_.find(e);
    if (it == cache_.end())
      it = cache_.emplace(e, is_p_cartesian(p_, e, CartesianMethod::c2, height_, true).is_cartesian).first;
    return it->second;
  }

 private:
  const SimplicialMap& p_;
  int height_;
  std::map<Simplex, bool> cache_;
};

void cartesian_iso(Context& ctx, CheckResult& r) {
  for (std::size_t k = 0; k < ctx.corpus.maps.size(); ++k) {
    const auto& m = ctx.corpus.maps[k];
    const auto& p = m.value;
    if (!ctx.classification(k).inner.holds) continue;
    if (!ctx.is_infinity_category(p.source()) || !ctx.is_infinity_category(p.target())) continue;
    const HomotopyCategory hx(p.source(), ctx.height), hs(p.target(), ctx.height);
    CartesianCache cart(p, ctx.height);
    const auto& x = p.source();
    for (int e = 0; e < x.count(1); ++e) {
      ++r.instances;
      const auto edge = Simplex::nondegenerate(1, e);
      const bool lhs = is_equivalence(hx, edge);
      const bool rhs = cart(edge) && is_equivalence(hs, p(edge));
      if (lhs != rhs)
        r.fail(m.name + ":" + x.label(edge) + ": equivalence=" + yes_no(lhs) + " cartesian-over-equivalence=" +
               yes_no(rhs));
    }
  }
}

void cartesian_cancel(Context& ctx, CheckResult& r) {
  for (std::size_t k = 0; k < ctx.corpus.maps.size(); ++k) {
    const auto& m = ctx.corpus.maps[k];
    if (!ctx.classification(k).inner.holds) continue;
    const auto& x = m.value.source();
    CartesianCache cart(m.value, ctx.height);
    for (int t = 0; t < x.count(2); ++t) {
      const auto s = Simplex::nondegenerate(2, t);
      const auto g = x.face(s, 0), h = x.face(s, 1), f = x.face(s, 2);
      if (!cart(g)) continue;
      ++r.instances;
      if (cart(f) != cart(h))
        r.fail(m.name + ":" + x.label(s) + ": f cartesian=" + yes_no(cart(f)) + " h cartesian=" + yes_no(cart(h)));
    }
  }
}

void marked_rfib_agreement(Context& ctx, CheckResult& r) {
  for (const auto& m : ctx.corpus.marked_maps) {
    ++r.instances;
    const auto v = is_marked_right_fibration(m.value, RfibMethod::cross, ctx.height);
    if (!v.agreement)
      r.fail(m.name + ": generators=" + yes_no(v.by_generators.value_or(false)) +
             " characterization=" + yes_no(v.by_characterization.value_or(false)));
    if (v.witness) {
      ++r.reverified;
      if (!check_square(*v.witness).empty() || find_lift(*v.witness)) {
        ++r.reverify_failures;
        r.fail(m.name + ": witness square does not re-verify");
      }
    }
  }
  r.notes.push_back("J♭ → J♯ stands in for the walking-isomorphism generator");
}

void cocartesian_fibrant(Context& ctx, CheckResult& r) {
  for (const auto& m : ctx.corpus.maps) {
    if (!m.has_tag("grothendieck")) continue;
    if (!is_cartesian_fibration(m.value, ctx.height).holds) {
      r.notes.push_back(m.name + " is not a Cartesian fibration");
      continue;
    }
    ++r.instances;
    const MarkedMap q(natural_marking(m.value, ctx.height), sharp(m.value.target()), m.value);
    const auto v = is_marked_right_fibration(q, RfibMethod::cross, ctx.height);
    if (!v.holds) r.fail(m.name + ": natural marking is not a marked right fibration (" + v.reason + ")");
    if (!v.agreement) r.fail(m.name + ": methods disagree");
  }
  if (r.instances < 3) r.fail("fewer than three Cartesian fibrations from Grothendieck constructions");
}

void absolute_fibrant(Context& ctx, CheckResult& r) {
  for (const auto& m : ctx.corpus.marked_objects) {
    const auto& x = m.value.underlying();
    if (!ctx.is_infinity_category(x)) continue;
    ++r.instances;
    const HomotopyCategory hc(x, ctx.height);
    bool equivalences = true;
    for (int e = 0; e < x.count(1); ++e)
      equivalences = equivalences && m.value.marks()[e] == is_equivalence(hc, Simplex::nondegenerate(1, e));
    const auto bang = to_point(x);
    const MarkedMap q(m.value, sharp(bang.target()), bang);
    const bool fibrant = is_marked_right_fibration(q, RfibMethod::cross, ctx.height).holds;
    if (fibrant != equivalences)
      r.fail(m.name + ": fibrant=" + yes_no(fibrant) + " marked-equals-equivalences=" + yes_no(equivalences));
  }
}

struct ProperCase {
  std::string name;
  MarkedSimplicialSet l;
};

void properness_cases(Context& ctx, CheckResult& r, Flavor flavor, const std::vector<std::pair<std::string, MarkedMap>>& lefts,
                      const std::vector<MarkedMap>& rights, const std::vector<ProperCase>& bases) {
  for (const auto& [pname, p] : lefts) {
    for (const auto& base : bases) {
      try {
        const Cylinder cl(base.l, flavor);
        const auto i = cl.end(1);
        MapSearch s(cl.object().underlying(), p.target().underlying());
        if (flavor == Flavor::marked) s.preserve_marking(cl.object().marks(), p.target().marks());
        for (const auto& u : s.all()) {
          const MarkedMap mu(cl.object(), p.target(), u);
          const MarkedPullback pb(p, mu, "X");
          const std::string what = pname + " over " + to_string(flavor) + " " + base.name + " via " +
                                   std::to_string(r.instances);
          try {
            const auto rep = properness_experiment(i, pb.second(), flavor, rights, ctx.height);
            ++r.instances;
            reverify_certificate(r, rep.base, what + " (base)");
            if (rep.certificate) reverify_certificate(r, *rep.certificate, what);
            reverify_failing(r, rep.llp, what);
            if (!rep.holds) r.fail(what + ": " + rep.failure);
          } catch (const DimCapOverflow&) {
            ++r.excluded;
          }
        }
      } catch (const DimCapOverflow&) {
        ++r.excluded;
      }
    }
  }
}

void properness(Context& ctx, CheckResult& r) {
  std::vector<std::pair<std::string, MarkedMap>> lefts;
  std::vector<MarkedMap> rights;
  for (std::size_t k = 0; k < ctx.corpus.maps.size(); ++k) {
    const auto& c = ctx.classification(k);
    if (c.left.holds) lefts.emplace_back(ctx.corpus.maps[k].name, flat(ctx.corpus.maps[k].value));
    if (c.right.holds) rights.push_back(flat(ctx.corpus.maps[k].value));
  }
  const std::vector<ProperCase> plain_bases{{"D0", flat(standard_simplex(0))},
                                            {"D1", flat(standard_simplex(1))},
                                            {"S0", flat(boundary(1))}};
  properness_cases(ctx, r, Flavor::plain, lefts, rights, plain_bases);

  lefts.clear();
  rights.clear();
  for (std::size_t k = 0; k < ctx.corpus.marked_maps.size(); ++k) {
    if (ctx.marked_left(k)) lefts.emplace_back(ctx.corpus.marked_maps[k].name, ctx.corpus.marked_maps[k].value);
    if (ctx.marked_right(k)) rights.push_back(ctx.corpus.marked_maps[k].value);
  }
  const std::vector<ProperCase> marked_bases{{"D0", sharp(standard_simplex(0))},
                                             {"D1f", flat(standard_simplex(1))},
                                             {"D1s", sharp(standard_simplex(1))}};
  properness_cases(ctx, r, Flavor::marked, lefts, rights, marked_bases);
  if (r.excluded) r.notes.push_back("pullbacks whose cylinder exceeds the dim_cap excluded");
}

void finality(Context& ctx, CheckResult& r) {
  const auto gens = preset("right-anodyne", ctx.height);
  for (const auto& g : gens.members) {
    ++r.instances;
    const auto f = g.map.underlying();
    const auto res = certify_final(f, ctx.budget, ctx.height);
    if (!res.certified) {
      r.fail(g.label + ": " + res.status);
      continue;
    }
    ++r.reverified;
    const auto errors = verify(res, f, ctx.height);
    if (!errors.empty()) {
      ++r.reverify_failures;
      r.fail(g.label + ": certificate does not re-verify (" + errors.front() + ")");
    }
  }
  for (int n = 0; n <= ctx.height; ++n) {
    const auto dn = standard_simplex(n, std::max(kDefaultDimCap, ctx.height + 1));
    const auto initial = box_end(SimplicialMap::from_empty(dn), 0).comparison.underlying();
    ++r.instances;
    const auto res = certify_final(initial, ctx.budget, ctx.height);
    if (res.certified)
      r.fail("{0}xD" + std::to_string(n) + ": unexpected certificate");
    else
      r.notes.push_back("{0}xD" + std::to_string(n) + ": no certificate found (" + res.status + ")");
  }
}

std::size_t naive_count(const LiftingSquare& sq, const std::vector<SimplicialMap>& candidates) {
  std::size_t n = 0;
  for (const auto& h : candidates)
    if (verify_filler(sq, MarkedMap(sq.i.target(), sq.p.source(), h))) ++n;
  return n;
}

constexpr std::size_t kNaiveLimit = 10000;

void compare_fillers(CheckResult& r, const std::string& pname, const MarkedMap& p, const GeneratorSet& g) {
  for (const auto& gen : g.members) {
    const auto candidates = hom_enumerate(gen.map.target().underlying(), p.source().underlying(), kNaiveLimit + 1);
    const bool naive = candidates.size() <= kNaiveLimit;
    GeneratorSet single{g.name, g.flavor, g.height, {gen}, {}};
    for_each_square(p, single, [&](const Generator&, const LiftingSquare& sq) {
      ++r.instances;
      const auto h = find_lift(sq);
      if (h) {
        ++r.reverified;
        if (!verify_filler(sq, *h)) {
          ++r.reverify_failures;
          r.fail(pname + " vs " + gen.label + ": filler does not re-verify");
        }
      }
      if (naive) {
        const auto fast = count_lifts(sq);
        const auto slow = naive_count(sq, candidates);
        if (fast != slow)
          r.fail(pname + " vs " + gen.label + ": " + std::to_string(fast) + " fillers, naive count " +
                 std::to_string(slow));
      } else {
        ++r.excluded;
      }
      return true;
    });
  }
}

void engine_soundness(Context& ctx, CheckResult& r) {
  const int h = std::min(ctx.height, 2);
  const auto horns = horn_generators(HornKind::kan, h);
  const auto bounds = boundary_generators(h);
  const auto boxes = preset("right-anodyne", std::min(ctx.height, 1));
  for (const auto& m : ctx.corpus.maps) {
    const auto p = flat(m.value);
    compare_fillers(r, m.name, p, horns);
    compare_fillers(r, m.name, p, bounds);
    compare_fillers(r, m.name, p, boxes);
  }
  const auto marked = preset("marked-right", std::min(ctx.height, 2));
  for (const auto& m : ctx.corpus.marked_maps) compare_fillers(r, m.name, m.value, marked);

  // Factorization traces for the corpus monomorphisms.
  const auto ra = preset("right-anodyne", ctx.height);
  for (const auto& m : ctx.corpus.maps) {
    if (!is_mono(m.value) || m.has_tag("truncated")) continue;
    const auto fac = bounded_factorize(m.value, ra, ctx.budget);
    ++r.reverified;
    const auto errors = verify(fac, flat(m.value), ra);
    if (!errors.empty()) {
      ++r.reverify_failures;
      r.fail(m.name + ": factorization trace does not re-verify (" + errors.front() + ")");
    }
  }
  if (r.excluded) r.notes.push_back("squares with more than 10000 candidate maps compared by filler re-verification only");
}

void llp_rlp_duality(Context& ctx, CheckResult& r) {
  const auto gens = horn_generators(HornKind::kan, std::min(ctx.height, 2));
  for (const auto& m : ctx.corpus.maps) {
    for (const auto& g : gens.members) {
      ++r.instances;
      const GeneratorSet single{g.label, Flavor::plain, ctx.height, {g}, {}};
      if (has_llp(g.map, {flat(m.value)}).holds != has_rlp(flat(m.value), single).holds)
        r.fail(m.name + " vs " + g.label);
    }
  }
}

void exactness(Context& ctx, CheckResult& r) {
  std::vector<MarkedMap> monos;
  for (const auto& m : ctx.corpus.maps)
    if (is_mono(m.value) && m.value.target().dim() <= ctx.height - 1) monos.push_back(flat(m.value));
  r.instances = monos.size();
  for (const auto& f : exactness_audit(monos, Flavor::plain)) r.fail(f);
  const auto model = marked_cellular_model(ctx.height);
  std::vector<MarkedMap> marked;
  for (const auto& g : model.members) marked.push_back(g.map);
  r.instances += marked.size();
  for (const auto& f : exactness_audit(marked, Flavor::marked)) r.fail(f);
}

using CheckFn = void (*)(Context&, CheckResult&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks{
      {"generator-equivalence", generator_equivalence},
      {"homotopy-relation", homotopy_relation},
      {"trivial-dual-retract", trivial_dual_retract},
      {"cartesian-edge-agreement", cartesian_edge_agreement},
      {"cartesian-iso", cartesian_iso},
      {"cartesian-cancel", cartesian_cancel},
      {"marked-rfib-agreement", marked_rfib_agreement},
      {"cocartesian-fibrant", cocartesian_fibrant},
      {"absolute-fibrant", absolute_fibrant},
      {"properness", properness},
      {"finality", finality},
      {"engine-soundness", engine_soundness},
      {"llp-rlp-duality", llp_rlp_duality},
      {"exactness", exactness},
  };
  return checks;
}

CheckResult run_in(Context& ctx, const std::string& name) {
  CheckResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  bool found = false;
  for (const auto& [n, fn] : registry())
    if (n == name) {
      found = true;
      try {
        fn(ctx, r);
      } catch (const Error& e) {
        r.fail(std::string("error: ") + e.what());
      }
    }
  if (!found) throw Error("unknown check '" + name + "'");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string joined(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
  return out;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& [n, fn] : registry()) out.push_back(n);
  return out;
}

SuiteConfig load_suite_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  json j;
  try {
    in >> j;
    SuiteConfig c;
    c.corpus_dir = j.value("corpus", std::string{});
    c.dim_cap = j.value("dim_cap", kDefaultHeight);
    c.budget = j.value("budget", 10);
    c.checks = j.value("checks", std::vector<std::string>{});
    c.output = j.value("output", std::string{});
    if (!c.corpus_dir.empty() && std::filesystem::path(c.corpus_dir).is_relative())
      c.corpus_dir = (path.parent_path() / c.corpus_dir).string();
    return c;
  } catch (const json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void validate_config(const SuiteConfig& config) {
  const auto names = check_names();
  for (const auto& c : config.checks) {
    if (!contains(names, c)) throw Error("unknown check '" + c + "'");
    if (contains(equivalence_checks(), c) && config.dim_cap < 3)
      throw PreconditionError("unsound height: check '" + c + "' needs dim_cap >= 3");
    if (contains(homotopy_checks(), c) && config.dim_cap < 2)
      throw PreconditionError("unsound height: check '" + c + "' needs dim_cap >= 2");
  }
  if (config.dim_cap < 0 || config.dim_cap + 1 > kMaxDim) throw Error("dim_cap out of range");
  if (config.budget <= 0) throw Error("budget must be positive");
  if (!config.corpus_dir.empty() && !std::filesystem::is_directory(config.corpus_dir))
    throw Error("corpus directory " + config.corpus_dir + " does not exist");
}

CheckResult run_check(const std::string& name, const Corpus& corpus, int height, int budget) {
  Context ctx(corpus, height, budget);
  return run_in(ctx, name);
}

Report run_suite(const SuiteConfig& config, const Corpus& corpus) {
  validate_config(config);
  Report rep;
  rep.corpus = config.corpus_dir.empty() ? "builtin" : config.corpus_dir;
  rep.dim_cap = config.dim_cap;
  rep.budget = config.budget;
  rep.presets = {"right-anodyne", "right-horns", "inner-horns", "boundaries", "marked-right", "marked-left"};
  Context ctx(corpus, config.dim_cap, config.budget);
  for (const auto& name : config.checks) rep.checks.push_back(run_in(ctx, name));
  return rep;
}

Report run_suite(const SuiteConfig& config) {
  validate_config(config);
  return run_suite(config, config.corpus_dir.empty() ? builtin_corpus() : read_corpus(config.corpus_dir));
}

std::string render_text(const Report& r, bool timing) {
  std::ostringstream out;
  out << "suite corpus=" << quoted(r.corpus) << " dim_cap=" << r.dim_cap << " budget=" << r.budget
      << " presets=" << joined(r.presets, ",") << " checks=" << r.checks.size() << "\n";
  for (const auto& c : r.checks) {
    out << "check=" << c.name << " status=" << c.status << " instances=" << c.instances << " excluded=" << c.excluded
        << " reverified=" << c.reverified << " reverify_failures=" << c.reverify_failures
        << " witnesses=" << c.witnesses.size();
    if (timing) out << " time_ms=" << static_cast<long long>(c.seconds * 1000);
    if (!c.witnesses.empty()) out << " witness=" << quoted(joined(c.witnesses, " | "));
    if (!c.notes.empty()) out << " note=" << quoted(joined(c.notes, " | "));
    out << "\n";
  }
  return out.str();
}

std::string render_json(const Report& r, bool timing) {
  json j;
  j["corpus"] = r.corpus;
  j["dim_cap"] = r.dim_cap;
  j["budget"] = r.budget;
  j["presets"] = r.presets;
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json cj{{"name", c.name},           {"status", c.status},     {"instances", c.instances},
            {"excluded", c.excluded},   {"reverified", c.reverified}, {"reverify_failures", c.reverify_failures},
            {"witnesses", c.witnesses}, {"notes", c.notes}};
    if (timing) cj["time_ms"] = static_cast<long long>(c.seconds * 1000);
    j["checks"].push_back(cj);
  }
  return j.dump(2) + "\n";
}

}  // namespace slift
