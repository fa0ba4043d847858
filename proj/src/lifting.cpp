#include "slift/lifting.hpp"

#include <algorithm>

#include "slift/category.hpp"
#include "slift/map_search.hpp"

namespace slift {

namespace {

int generator_cap(int height) { return std::max(kDefaultDimCap, height + 1); }

bool has_marks(const MarkedSimplicialSet& m) { return m.marked_count() > 0; }

MapSearch marked_search(const MarkedSimplicialSet& from, const MarkedSimplicialSet& to) {
  MapSearch s(from.underlying(), to.underlying());
  if (has_marks(from)) s.preserve_marking(from.marks(), to.marks());
  return s;
}

}  // namespace

LiftingSquare plain_square(const SimplicialMap& i, const SimplicialMap& p, const SimplicialMap& top,
                           const SimplicialMap& bottom) {
  return LiftingSquare{flat(i), flat(p), flat(top), flat(bottom)};
}

std::vector<std::string> check_square(const LiftingSquare& sq) {
  std::vector<std::string> out;
  if (!(sq.top.source() == sq.i.source())) out.push_back("top does not start at the source of i");
  if (!(sq.bottom.source() == sq.i.target())) out.push_back("bottom does not start at the target of i");
  if (!(sq.top.target() == sq.p.source())) out.push_back("top does not end at the source of p");
  if (!(sq.bottom.target() == sq.p.target())) out.push_back("bottom does not end at the target of p");
  if (!out.empty()) return out;
  for (const auto* m : {&sq.i, &sq.p, &sq.top, &sq.bottom})
    for (const auto& e : validate(*m)) out.push_back(m->underlying().name() + ": " + e);
  if (!out.empty()) return out;
  if (compose(sq.p.underlying(), sq.top.underlying()).images() != compose(sq.bottom.underlying(), sq.i.underlying()).images())
    out.push_back("square does not commute");
  return out;
}

namespace {

MapSearch lift_search(const LiftingSquare& sq) {
  const auto problems = check_square(sq);
  if (!problems.empty()) throw PreconditionError("lifting square: " + problems.front());
  MapSearch s = marked_search(sq.i.target(), sq.p.source());
  s.agree_on(sq.i.underlying(), sq.top.underlying()).over(sq.p.underlying(), sq.bottom.underlying());
  return s;
}

}  // namespace

std::optional<MarkedMap> find_lift(const LiftingSquare& sq) {
  auto h = lift_search(sq).first();
  if (!h) return std::nullopt;
  return MarkedMap(sq.i.target(), sq.p.source(), h->named("lift"));
}

std::size_t count_lifts(const LiftingSquare& sq, std::size_t limit) { return lift_search(sq).count(limit); }

bool verify_filler(const LiftingSquare& sq, const MarkedMap& h) {
  if (!(h.source() == sq.i.target()) || !(h.target() == sq.p.source())) return false;
  if (!validate(h).empty()) return false;
  return compose(h.underlying(), sq.i.underlying()).images() == sq.top.underlying().images() &&
         compose(sq.p.underlying(), h.underlying()).images() == sq.bottom.underlying().images();
}

const char* to_string(HornKind k) {
  switch (k) {
    case HornKind::right: return "right";
    case HornKind::inner: return "inner";
    case HornKind::left: return "left";
    case HornKind::kan: return "kan";
  }
  return "?";
}

GeneratorSet horn_generators(HornKind kind, int height) {
  GeneratorSet g{std::string(to_string(kind)) + "-horns", Flavor::plain, height, {}, {}};
  for (int n = 1; n <= height; ++n)
    for (int k = 0; k <= n; ++k) {
      const bool keep = kind == HornKind::kan || (kind == HornKind::right && k > 0) ||
                        (kind == HornKind::left && k < n) || (kind == HornKind::inner && k > 0 && k < n);
      if (keep)
        g.members.push_back({"horn(" + std::to_string(n) + "," + std::to_string(k) + ")",
                             flat(horn_inclusion(n, k, generator_cap(height)))});
    }
  return g;
}

GeneratorSet boundary_generators(int height) {
  GeneratorSet g{"boundaries", Flavor::plain, height, {}, {}};
  for (int n = 0; n <= height; ++n)
    g.members.push_back({"boundary(" + std::to_string(n) + ")", flat(boundary_inclusion(n, generator_cap(height)))});
  return g;
}

GeneratorSet end_box_generators(int e, int height) {
  return anodyne_generators(GeneratorSet{"none", Flavor::plain, height, {}, {}}, boundary_generators(height), 0,
                            e == 1 ? Side::right : Side::left);
}

GeneratorSet anodyne_generators(const GeneratorSet& s, const GeneratorSet& m, int depth, Side side) {
  const int e = side == Side::right ? 1 : 0;
  GeneratorSet out{std::string(side == Side::right ? "right" : "left") + "-anodyne", m.flavor,
                   std::max(s.height, m.height), s.members, {}};
  std::vector<Generator> level;
  for (const auto& gen : m.members) {
    const std::string label = "box" + std::to_string(e) + "(" + gen.label + ")";
    try {
      level.push_back({label, box_end(gen.map, e, m.flavor).comparison});
    } catch (const DimCapOverflow&) {
      out.dropped.push_back(label);
    }
  }
  out.members.insert(out.members.end(), level.begin(), level.end());
  std::vector<Generator> previous = out.members;
  for (int d = 1; d <= depth; ++d) {
    std::vector<Generator> next;
    for (const auto& gen : previous) {
      const std::string label = "boxI(" + gen.label + ")";
      try {
        next.push_back({label, box_boundary(gen.map, m.flavor).comparison});
      } catch (const DimCapOverflow&) {
        out.dropped.push_back(label);
      }
    }
    out.members.insert(out.members.end(), next.begin(), next.end());
    previous = std::move(next);
  }
  return out;
}

GeneratorSet marked_inner_horns(int height) {
  GeneratorSet g = horn_generators(HornKind::inner, height);
  g.name = "marked-inner-horns";
  g.flavor = Flavor::marked;
  return g;
}

GeneratorSet walking_iso_marking(int height) {
  const auto j = nerve(walking_isomorphism(), height);
  return GeneratorSet{"walking-iso-marking", Flavor::marked, height,
                      {{"mark(J)", MarkedMap(flat(j), sharp(j), SimplicialMap::identity(j).named("mark"))}}, {}};
}

GeneratorSet marked_cellular_model(int height) {
  const int cap = generator_cap(height);
  const auto d1 = standard_simplex(1, cap);
  GeneratorSet g{"marked-cellular", Flavor::marked, height, {}, {}};
  g.members.push_back({"mark(1)", MarkedMap(flat(d1), sharp(d1), SimplicialMap::identity(d1).named("mark"))});
  for (int n = 0; n < height; ++n)
    g.members.push_back({"boundary(" + std::to_string(n) + ")", flat(boundary_inclusion(n, cap))});
  return g;
}

std::vector<std::string> preset_names() {
  return {"right-anodyne", "left-anodyne", "marked-right", "marked-left", "inner-horns",
          "right-horns",   "left-horns",   "kan-horns",    "boundaries"};
}

GeneratorSet preset(const std::string& name, int height, int depth) {
  GeneratorSet out;
  if (name == "right-anodyne" || name == "left-anodyne") {
    const Side side = name == "right-anodyne" ? Side::right : Side::left;
    out = anodyne_generators(GeneratorSet{"none", Flavor::plain, height, {}, {}}, boundary_generators(height), depth,
                             side);
  } else if (name == "marked-right" || name == "marked-left") {
    GeneratorSet s = marked_inner_horns(height);
    for (auto& gen : walking_iso_marking(height).members) s.members.push_back(gen);
    out = anodyne_generators(s, marked_cellular_model(height), depth,
                             name == "marked-right" ? Side::right : Side::left);
  } else if (name == "inner-horns") {
    out = horn_generators(HornKind::inner, height);
  } else if (name == "right-horns") {
    out = horn_generators(HornKind::right, height);
  } else if (name == "left-horns") {
    out = horn_generators(HornKind::left, height);
  } else if (name == "kan-horns") {
    out = horn_generators(HornKind::kan, height);
  } else if (name == "boundaries") {
    out = boundary_generators(height);
  } else {
    throw Error("unknown generator preset '" + name + "'");
  }
  out.name = name;
  return out;
}

void for_each_square(const MarkedMap& p, const GeneratorSet& g,
                     const std::function<bool(const Generator&, const LiftingSquare&)>& visit) {
  bool stop = false;
  for (const auto& gen : g.members) {
    if (stop) return;
    const auto& i = gen.map;
    marked_search(i.target(), p.target()).run([&](const SimplicialMap& b) {
      const MarkedMap bottom(i.target(), p.target(), b.named("bottom"));
      const auto bi = compose(b, i.underlying());
      marked_search(i.source(), p.source()).over(p.underlying(), bi).run([&](const SimplicialMap& t) {
        const LiftingSquare sq{i, p, MarkedMap(i.source(), p.source(), t.named("top")), bottom};
        if (!visit(gen, sq)) stop = true;
        return !stop;
      });
      return !stop;
    });
  }
}

RlpResult has_rlp(const MarkedMap& p, const GeneratorSet& g) {
  RlpResult r;
  for_each_square(p, g, [&](const Generator& gen, const LiftingSquare& sq) {
    ++r.squares;
    if (find_lift(sq)) return true;
    r.holds = false;
    r.failing = sq;
    r.failing_generator = gen.label;
    return false;
  });
  return r;
}

RlpResult has_rlp(const SimplicialMap& p, const GeneratorSet& g) { return has_rlp(flat(p), g); }

RlpResult has_llp(const MarkedMap& i, const std::vector<MarkedMap>& fibrations) {
  GeneratorSet single{"single", Flavor::marked, kDefaultHeight, {{i.underlying().name(), i}}, {}};
  RlpResult total;
  for (const auto& p : fibrations) {
    auto r = has_rlp(p, single);
    total.squares += r.squares;
    if (!r.holds) {
      r.squares = total.squares;
      r.failing_generator = p.underlying().name();
      return r;
    }
  }
  return total;
}

RlpResult has_llp(const SimplicialMap& i, const std::vector<SimplicialMap>& fibrations) {
  std::vector<MarkedMap> ps;
  for (const auto& p : fibrations) ps.push_back(flat(p));
  return has_llp(flat(i), ps);
}

Classification classify_fibration(const SimplicialMap& p, int height) {
  Classification c;
  c.height = height;
  auto flag = [&](const GeneratorSet& g) {
    const auto r = has_rlp(p, g);
    return Classification::Flag{r.holds, r.failing, r.failing_generator};
  };
  c.inner = flag(horn_generators(HornKind::inner, height));
  c.left = flag(horn_generators(HornKind::left, height));
  c.right = flag(horn_generators(HornKind::right, height));
  c.kan = flag(horn_generators(HornKind::kan, height));
  c.trivial = flag(boundary_generators(height));
  return c;
}

namespace {

struct Candidate {
  std::string generator;
  LiftingSquare square;
};

struct Applied {
  MarkedMap leg;
  MarkedMap p;
};

Applied apply_step(const LiftingSquare& sq, const MarkedMap& p, const std::string& name) {
  MarkedPushout po(sq.i, sq.top, name);
  return Applied{po.second(), po.induce(sq.bottom, p)};
}

}  // namespace

Factorization bounded_factorize(const MarkedMap& f, const GeneratorSet& g, int budget) {
  if (budget <= 0) throw PreconditionError("budget must be positive");
  Factorization fac;
  fac.budget = budget;
  fac.i = identity(f.source());
  fac.p = f;
  // While p is mono, largest generators are tried first: attaching a big cell
  // in one step beats filling its skeleton piece by piece.
  GeneratorSet largest_first = g;
  std::stable_sort(largest_first.members.begin(), largest_first.members.end(), [](const Generator& a, const Generator& b) {
    return a.map.target().underlying().total() > b.map.target().underlying().total();
  });
  for (int step = 0; step <= budget; ++step) {
    // Prefer squares whose pushout keeps p mono, so that a mono f is factored
    // through monos as long as possible.
    const bool mono = is_mono(fac.p.underlying());
    std::vector<Candidate> failing;
    for_each_square(fac.p, mono ? largest_first : g, [&](const Generator& gen, const LiftingSquare& sq) {
      if (find_lift(sq)) return true;
      failing.push_back({gen.label, sq});
      return mono && failing.size() < 64;
    });
    if (failing.empty()) {
      fac.complete = true;
      return fac;
    }
    if (step == budget) break;
    const std::string name = "A" + std::to_string(step + 1);
    std::optional<std::pair<std::size_t, Applied>> chosen;
    if (mono)
      for (std::size_t c = 0; c < failing.size() && !chosen; ++c) {
        auto applied = apply_step(failing[c].square, fac.p, name);
        if (is_mono(applied.p.underlying())) chosen.emplace(c, std::move(applied));
      }
    if (!chosen) chosen.emplace(0, apply_step(failing[0].square, fac.p, name));
    const auto& [c, applied] = *chosen;
    fac.steps.push_back({failing[c].generator, failing[c].square, applied.leg});
    fac.i = compose(applied.leg, fac.i);
    fac.p = applied.p;
  }
  return fac;
}

Factorization bounded_factorize(const SimplicialMap& f, const GeneratorSet& g, int budget) {
  return bounded_factorize(flat(f), g, budget);
}

std::vector<std::string> verify(const Factorization& fac, const MarkedMap& f, const GeneratorSet& g) {
  std::vector<std::string> out;
  MarkedMap i = identity(f.source());
  MarkedMap p = f;
  for (std::size_t k = 0; k < fac.steps.size(); ++k) {
    const auto& step = fac.steps[k];
    const std::string where = "step " + std::to_string(k + 1) + ": ";
    bool member = false;
    for (const auto& gen : g.members) member = member || (gen.label == step.generator && gen.map == step.square.i);
    if (!member) out.push_back(where + "generator '" + step.generator + "' is not in " + g.name);
    for (const auto& e : check_square(step.square)) out.push_back(where + e);
    if (!(step.square.p == p)) out.push_back(where + "square does not end at the current map");
    if (!out.empty()) return out;
    const auto applied = apply_step(step.square, p, "A" + std::to_string(k + 1));
    if (!(applied.leg == step.leg)) out.push_back(where + "recorded pushout leg differs from the recomputed one");
    i = compose(applied.leg, i);
    p = applied.p;
  }
  if (!(i == fac.i)) out.push_back("recorded i differs from the composite of the legs");
  if (!(p == fac.p)) out.push_back("recorded p differs from the replayed map");
  if (compose(p.underlying(), i.underlying()).images() != f.underlying().images()) out.push_back("p o i != f");
  if (fac.complete && !has_rlp(p, g).holds) out.push_back("p does not have the right lifting property");
  return out;
}

}  // namespace slift
