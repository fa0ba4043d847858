#include "slift/homotopy.hpp"

#include <numeric>
#include <set>

#include "slift/map_search.hpp"

namespace slift {

namespace {

MapSearch marked_search(const MarkedSimplicialSet& from, const MarkedSimplicialSet& to) {
  MapSearch s(from.underlying(), to.underlying());
  if (from.marked_count() > 0) s.preserve_marking(from.marks(), to.marks());
  return s;
}

bool same(const SimplicialMap& a, const SimplicialMap& b) { return a.images() == b.images(); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::optional<MarkedMap> i_homotopy(const MarkedMap& f, const MarkedMap& g, Flavor flavor) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw PreconditionError("homotopy: maps do not share source and target");
  const Cylinder c(f.source(), flavor);
  MapSearch s = marked_search(c.object(), f.target());
  s.agree_on(c.end(0).underlying(), f.underlying()).agree_on(c.end(1).underlying(), g.underlying());
  auto h = s.first();
  if (!h) return std::nullopt;
  return MarkedMap(c.object(), f.target(), h->named("h"));
}

std::optional<SimplicialMap> i_homotopy(const SimplicialMap& f, const SimplicialMap& g) {
  auto h = i_homotopy(flat(f), flat(g), Flavor::plain);
  if (!h) return std::nullopt;
  return h->underlying();
}

int HomotopyClassTable::index_of(const SimplicialMap& f) const {
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (same(maps[k].underlying(), f)) return static_cast<int>(k);
  return -1;
}

HomotopyClassTable homotopy_classes(const MarkedSimplicialSet& x, const MarkedSimplicialSet& w, Flavor flavor) {
  HomotopyClassTable t;
  t.flavor = flavor;
  t.x = x;
  t.w = w;
  std::map<ImageTable, int> lookup;
  marked_search(x, w).run([&](const SimplicialMap& f) {
    lookup.emplace(f.images(), static_cast<int>(t.maps.size()));
    t.maps.emplace_back(x, w, f.named("f" + std::to_string(t.maps.size())));
    return true;
  });

  const Cylinder c(x, flavor);
  std::set<std::pair<int, int>> seen;
  marked_search(c.object(), w).run([&](const SimplicialMap& h) {
    const int a = lookup.at(compose(h, c.end(0).underlying()).images());
    const int b = lookup.at(compose(h, c.end(1).underlying()).images());
    if (seen.emplace(a, b).second) t.generating.push_back({a, b, MarkedMap(c.object(), w, h.named("h"))});
    return true;
  });

  UnionFind uf(t.maps.size());
  for (const auto& p : t.generating) uf.unite(p.from, p.to);
  std::map<int, int> numbering;
  std::vector<int> sizes;
  for (std::size_t k = 0; k < t.maps.size(); ++k) {
    auto [it, fresh] = numbering.emplace(uf.find(static_cast<int>(k)), static_cast<int>(numbering.size()));
    if (fresh) sizes.push_back(0);
    t.class_of.push_back(it->second);
    ++sizes[it->second];
  }
  t.class_count = static_cast<int>(sizes.size());
  std::size_t closure = 0;
  for (int s : sizes) closure += static_cast<std::size_t>(s) * s;
  t.relation_closed = closure == seen.size();
  return t;
}

HomotopyClassTable homotopy_classes(const FiniteSimplicialSet& x, const FiniteSimplicialSet& w) {
  return homotopy_classes(flat(x), flat(w), Flavor::plain);
}

std::vector<std::string> verify(const HomotopyClassTable& t) {
  std::vector<std::string> out;
  const Cylinder c(t.x, t.flavor);
  for (const auto& p : t.generating) {
    const auto& h = p.homotopy;
    if (!(h.source() == c.object()) || !validate(h).empty()) {
      out.push_back("homotopy " + std::to_string(p.from) + "~" + std::to_string(p.to) + " is not a map from the cylinder");
      continue;
    }
    if (!same(compose(h.underlying(), c.end(0).underlying()), t.maps.at(p.from).underlying()) ||
        !same(compose(h.underlying(), c.end(1).underlying()), t.maps.at(p.to).underlying()))
      out.push_back("homotopy " + std::to_string(p.from) + "~" + std::to_string(p.to) + " has the wrong ends");
    if (t.class_of.at(p.from) != t.class_of.at(p.to))
      out.push_back("related maps " + std::to_string(p.from) + " and " + std::to_string(p.to) + " in different classes");
  }
  for (const auto& f : t.maps)
    if (!validate(f).empty()) out.push_back("invalid map " + f.underlying().name());
  return out;
}

const char* to_string(RetractDirection d) {
  switch (d) {
    case RetractDirection::right: return "right";
    case RetractDirection::left: return "left";
    case RetractDirection::dual_right: return "dual-right";
    case RetractDirection::dual_left: return "dual-left";
  }
  return "?";
}

RetractDirection retract_direction_from(const std::string& s) {
  for (auto d : {RetractDirection::right, RetractDirection::left, RetractDirection::dual_right,
                 RetractDirection::dual_left})
    if (s == to_string(d)) return d;
  throw Error("unknown retract direction '" + s + "'");
}

namespace {

bool is_dual(RetractDirection d) { return d == RetractDirection::dual_right || d == RetractDirection::dual_left; }
// The end at which the homotopy is the identity.
int identity_end(RetractDirection d) {
  return d == RetractDirection::right || d == RetractDirection::dual_right ? 0 : 1;
}

}  // namespace

std::vector<std::string> verify(const DeformationRetractCertificate& c) {
  std::vector<std::string> out;
  const auto& a = c.i.source();
  const auto& x = c.i.target();
  if (!(c.r.source() == x) || !(c.r.target() == a)) return {"r does not go from the target of i to its source"};
  const Cylinder cx(x, c.flavor);
  if (!(c.h.source() == cx.object()) || !(c.h.target() == x)) return {"h is not a map I ⊗ X → X"};
  for (const auto* m : {&c.i, &c.r, &c.h})
    for (const auto& e : validate(*m)) out.push_back(m->underlying().name() + ": " + e);
  if (!out.empty()) return out;

  const auto ir = compose(c.i.underlying(), c.r.underlying());
  if (!same(compose(c.r.underlying(), c.i.underlying()), SimplicialMap::identity(a.underlying())))
    out.push_back("r i is not the identity");
  const int e = identity_end(c.direction);
  if (!same(compose(c.h.underlying(), cx.end(e).underlying()), SimplicialMap::identity(x.underlying())))
    out.push_back("h" + std::to_string(e) + " is not the identity");
  if (!same(compose(c.h.underlying(), cx.end(1 - e).underlying()), ir))
    out.push_back("h" + std::to_string(1 - e) + " is not i r");
  if (is_dual(c.direction)) {
    if (!same(compose(c.r.underlying(), c.h.underlying()), compose(c.r.underlying(), cx.collapse().underlying())))
      out.push_back("r h is not r σ");
  } else {
    const Cylinder ca(a, c.flavor);
    if (!same(compose(c.h.underlying(), cylinder_map(ca, cx, c.i).underlying()),
              compose(c.i.underlying(), ca.collapse().underlying())))
      out.push_back("h (I ⊗ i) is not i σ");
  }
  return out;
}

std::optional<DeformationRetractCertificate> find_deformation_retract(const MarkedMap& m, RetractDirection direction,
                                                                      Flavor flavor) {
  const bool dual = is_dual(direction);
  const auto& x = dual ? m.source() : m.target();
  const auto& a = dual ? m.target() : m.source();
  const Cylinder cx(x, flavor);
  const int e = identity_end(direction);
  std::optional<DeformationRetractCertificate> found;

  const auto try_pair = [&](const MarkedMap& i, const MarkedMap& r) {
    const auto ir = compose(i, r);
    MapSearch s = marked_search(cx.object(), x);
    s.agree_on(cx.end(e).underlying(), SimplicialMap::identity(x.underlying()))
        .agree_on(cx.end(1 - e).underlying(), ir.underlying());
    if (dual) {
      s.over(r.underlying(), compose(r, cx.collapse()).underlying());
    } else {
      const Cylinder ca(a, flavor);
      s.agree_on(cylinder_map(ca, cx, i).underlying(), compose(i, ca.collapse()).underlying());
    }
    auto h = s.first();
    if (!h) return true;
    found = DeformationRetractCertificate{direction, flavor, i, r, MarkedMap(cx.object(), x, h->named("h"))};
    return false;
  };

  if (dual) {
    marked_search(a, x).over(m.underlying(), SimplicialMap::identity(a.underlying())).run([&](const SimplicialMap& i) {
      return try_pair(MarkedMap(a, x, i.named("i")), m);
    });
  } else {
    marked_search(x, a).agree_on(m.underlying(), SimplicialMap::identity(a.underlying())).run([&](const SimplicialMap& r) {
      return try_pair(m, MarkedMap(x, a, r.named("r")));
    });
  }
  return found;
}

std::optional<DeformationRetractCertificate> find_deformation_retract(const SimplicialMap& m,
                                                                      RetractDirection direction) {
  return find_deformation_retract(flat(m), direction, Flavor::plain);
}

const char* to_string(WeqSide s) { return s == WeqSide::contra ? "contra" : "co"; }

WeqSide weq_side_from(const std::string& s) {
  if (s == "contra") return WeqSide::contra;
  if (s == "co") return WeqSide::co;
  throw Error("unknown side '" + s + "'");
}

bool is_fibrant(const MarkedSimplicialSet& w, WeqSide side, Flavor flavor, int height) {
  const auto bang = to_point(w.underlying());
  if (flavor == Flavor::plain)
    return has_rlp(bang, horn_generators(side == WeqSide::contra ? HornKind::right : HornKind::left, height)).holds;
  const MarkedMap q(w, sharp(bang.target()), bang);
  return has_rlp(q, preset(side == WeqSide::contra ? "marked-right" : "marked-left", height)).holds;
}

CorpusWeqVerdict corpus_weak_equivalence(const MarkedMap& f, WeqSide side, const std::vector<MarkedSimplicialSet>& corpus,
                                         Flavor flavor, int height) {
  CorpusWeqVerdict v;
  for (const auto& w : corpus) {
    if (!is_fibrant(w, side, flavor, height))
      throw PreconditionError("corpus member " + w.underlying().name() + " is not fibrant");
    const auto tb = homotopy_classes(f.target(), w, flavor);
    const auto ta = homotopy_classes(f.source(), w, flavor);
    std::map<ImageTable, int> class_in_a;
    for (std::size_t k = 0; k < ta.maps.size(); ++k) class_in_a.emplace(ta.maps[k].underlying().images(), ta.class_of[k]);
    // f* on classes, read off from representatives of every map.
    std::vector<int> image(static_cast<std::size_t>(tb.class_count), -1);
    bool well_defined = true;
    for (std::size_t k = 0; k < tb.maps.size(); ++k) {
      const int c = class_in_a.at(compose(tb.maps[k].underlying(), f.underlying()).images());
      int& slot = image[tb.class_of[k]];
      if (slot >= 0 && slot != c) well_defined = false;
      slot = c;
    }
    if (!well_defined) throw Error("precomposition does not respect homotopy classes");
    CorpusWeqVerdict::PerObject row;
    row.w = w.underlying().name();
    row.target_classes = tb.class_count;
    row.source_classes = ta.class_count;
    const std::set<int> hit(image.begin(), image.end());
    row.injective = hit.size() == image.size();
    row.surjective = static_cast<int>(hit.size()) == ta.class_count;
    v.bijective_for_corpus = v.bijective_for_corpus && row.bijective();
    v.per_object.push_back(row);
  }
  return v;
}

CorpusWeqVerdict corpus_weak_equivalence(const SimplicialMap& f, WeqSide side,
                                         const std::vector<FiniteSimplicialSet>& corpus, int height) {
  std::vector<MarkedSimplicialSet> flats;
  for (const auto& w : corpus) flats.push_back(flat(w));
  return corpus_weak_equivalence(flat(f), side, flats, Flavor::plain, height);
}

FinalityResult certify_final(const SimplicialMap& f, int budget, int height) {
  if (budget <= 0) throw PreconditionError("budget must be positive");
  FinalityResult r;
  r.factorization = bounded_factorize(f, preset("right-anodyne", height), budget);
  if (!r.factorization.complete) {
    r.status = "inconclusive: budget " + std::to_string(budget) + " exhausted";
    return r;
  }
  r.residual = has_rlp(r.factorization.p, boundary_generators(height));
  r.certified = r.residual.holds;
  r.status = r.certified ? "certified" : "inconclusive: residual map is not a trivial fibration";
  return r;
}

std::vector<std::string> verify(const FinalityResult& r, const SimplicialMap& f, int height) {
  auto out = verify(r.factorization, flat(f), preset("right-anodyne", height));
  if (r.certified && !has_rlp(r.factorization.p, boundary_generators(height)).holds)
    out.push_back("residual map is not a trivial fibration");
  return out;
}

PropernessReport properness_experiment(const MarkedMap& i, const MarkedMap& p, Flavor flavor,
                                       const std::vector<MarkedMap>& right_fibrations, int height) {
  if (!(i.target() == p.target())) throw PreconditionError("properness: i and p have different targets");
  const bool left = flavor == Flavor::plain ? has_rlp(p, horn_generators(HornKind::left, height)).holds
                                            : has_rlp(p, preset("marked-left", height)).holds;
  if (!left) throw PreconditionError("properness: p is not a left fibration");
  auto base = find_deformation_retract(i, RetractDirection::right, flavor);
  if (!base) throw PreconditionError("properness: i is not a right deformation retract");

  PropernessReport rep;
  rep.base = *base;
  const MarkedPullback pb(p, i, "A");
  rep.j = pb.first();
  const auto& x = p.source();
  const auto& a = pb.object();

  const auto box = box_end(rep.j, 0, flavor);
  const Cylinder ca(a, flavor), cx(x, flavor), cy(p.target(), flavor);
  auto top = marked_search(box.corner, x)
                 .agree_on(box.from_ends.underlying(), SimplicialMap::identity(x.underlying()))
                 .agree_on(box.from_cylinder.underlying(), compose(rep.j, ca.collapse()).underlying())
                 .first();
  if (!top) throw Error("properness: corner map is not determined by its legs");
  const auto bottom = compose(base->h, cylinder_map(cx, cy, p));
  rep.square = LiftingSquare{box.comparison, p, MarkedMap(box.corner, x, *top), bottom};
  const auto k = find_lift(*rep.square);
  if (!k) {
    rep.failure = "no lift against p";
  } else {
    const auto k1 = compose(*k, cx.end(1));
    const auto s = pb.induce(k1, compose(base->r, p));
    rep.certificate = DeformationRetractCertificate{RetractDirection::right, flavor, rep.j, s, *k};
    rep.certificate_errors = verify(*rep.certificate);
    if (!rep.certificate_errors.empty()) rep.failure = "certificate: " + rep.certificate_errors.front();
  }
  rep.llp = has_llp(rep.j, right_fibrations);
  if (rep.failure.empty() && !rep.llp.holds) rep.failure = "no LLP against " + rep.llp.failing_generator;
  rep.holds = rep.failure.empty();
  return rep;
}

PropernessReport properness_experiment(const SimplicialMap& i, const SimplicialMap& p,
                                       const std::vector<SimplicialMap>& right_fibrations, int height) {
  std::vector<MarkedMap> fibs;
  for (const auto& q : right_fibrations) fibs.push_back(flat(q));
  return properness_experiment(flat(i), flat(p), Flavor::plain, fibs, height);
}

}  // namespace slift
