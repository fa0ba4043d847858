#include "slift/cartesian.hpp"

#include <numeric>

#include "slift/map_search.hpp"

namespace slift {

const char* to_string(CartesianMethod m) {
  switch (m) {
    case CartesianMethod::c2: return "c2";
    case CartesianMethod::c3: return "c3";
    case CartesianMethod::cross: return "cross";
  }
  return "?";
}

CartesianMethod cartesian_method_from(const std::string& s) {
  if (s == "c2") return CartesianMethod::c2;
  if (s == "c3") return CartesianMethod::c3;
  if (s == "cross") return CartesianMethod::cross;
  throw Error("unknown method '" + s + "' (expected c2, c3 or cross)");
}

const char* to_string(RfibMethod m) {
  switch (m) {
    case RfibMethod::generators: return "gen";
    case RfibMethod::characterization: return "char";
    case RfibMethod::cross: return "cross";
  }
  return "?";
}

RfibMethod rfib_method_from(const std::string& s) {
  if (s == "gen" || s == "generators") return RfibMethod::generators;
  if (s == "char" || s == "characterization") return RfibMethod::characterization;
  if (s == "cross") return RfibMethod::cross;
  throw Error("unknown method '" + s + "' (expected gen, char or cross)");
}

void require_inner(const SimplicialMap& p, int height) {
  const auto r = has_rlp(p, horn_generators(HornKind::inner, height));
  if (!r.holds) throw PreconditionError("'" + p.name() + "' is not an inner fibration (fails " + r.failing_generator + ")");
}

namespace {

/// A mono K → L with a marked-out edge Δ¹ → K that the squares route through the tested edge.
struct EdgeShape {
  std::string label;
  SimplicialMap i;
  SimplicialMap edge;
};

struct Probe {
  std::vector<EdgeShape> horns;  // condition (2)
  std::vector<EdgeShape> boxes;  // condition (3)
};

Probe make_probe(int height, bool want_horns, bool want_boxes) {
  const int cap = std::max(kDefaultDimCap, height + 1);
  Probe probe;
  if (want_horns)
    for (int n = 2; n <= height; ++n) {
      const auto i = horn_inclusion(n, n, cap);
      const auto e = *i.source().find(std::to_string(n - 1) + std::to_string(n));
      probe.horns.push_back({"horn(" + std::to_string(n) + "," + std::to_string(n) + ")", i,
                             classifying_map(i.source(), e)});
    }
  if (want_boxes)
    for (int n = 1; n < height; ++n) {
      const auto simplex = standard_simplex(n, cap);
      const auto box = box_end(boundary_inclusion(n, cap), 1);
      const auto cyl = cylinder_on(simplex);
      const Simplex last = *simplex.find(std::to_string(n));
      const Simplex target = cyl.pair(Simplex::nondegenerate(1, 0), degeneracy(last, 0));
      const auto& cmp = box.comparison.underlying();
      for (int k = 0; k < cmp.source().count(1); ++k)
        if (cmp.image(1, k) == target) {
          probe.boxes.push_back({"box1(boundary(" + std::to_string(n) + "))", cmp,
                                 classifying_map(cmp.source(), Simplex::nondegenerate(1, k))});
          break;
        }
    }
  return probe;
}

struct ShapeOutcome {
  bool filled = true;
  std::size_t squares = 0;
  std::optional<LiftingSquare> witness;
};

ShapeOutcome fill_through_edge(const SimplicialMap& p, const SimplicialMap& f, const std::vector<EdgeShape>& shapes) {
  ShapeOutcome out;
  const auto pf = compose(p, f);
  for (const auto& shape : shapes) {
    MapSearch(shape.i.target(), p.target())
        .agree_on(compose(shape.i, shape.edge), pf)
        .run([&](const SimplicialMap& b) {
          const auto bi = compose(b, shape.i);
          MapSearch(shape.i.source(), p.source())
              .over(p, bi)
              .agree_on(shape.edge, f)
              .run([&](const SimplicialMap& top) {
                ++out.squares;
                const auto sq = plain_square(shape.i, p, top, b);
                if (find_lift(sq)) return true;
                out.filled = false;
                out.witness = sq;
                return false;
              });
          return out.filled;
        });
    if (!out.filled) break;
  }
  return out;
}

EdgeVerdict judge(const SimplicialMap& p, const Simplex& edge, CartesianMethod method, const Probe& probe) {
  if (edge.dim != 1) throw PreconditionError("is_p_cartesian: not an edge");
  EdgeVerdict v;
  v.edge = edge;
  v.label = p.source().label(edge);
  v.method = method;
  const auto f = classifying_map(p.source(), edge);
  if (method != CartesianMethod::c3) {
    const auto r = fill_through_edge(p, f, probe.horns);
    v.c2 = r.filled;
    v.squares += r.squares;
    if (!r.filled) v.witness = r.witness;
  }
  if (method != CartesianMethod::c2) {
    const auto r = fill_through_edge(p, f, probe.boxes);
    v.c3 = r.filled;
    v.squares += r.squares;
    if (!r.filled && !v.witness) v.witness = r.witness;
  }
  switch (method) {
    case CartesianMethod::c2: v.is_cartesian = v.c2; break;
    case CartesianMethod::c3: v.is_cartesian = v.c3; break;
    case CartesianMethod::cross:
      v.agreement = v.c2 == v.c3;
      v.is_cartesian = v.c2 && v.c3;
      break;
  }
  return v;
}

}  // namespace

EdgeVerdict is_p_cartesian(const SimplicialMap& p, const Simplex& edge, CartesianMethod method, int height,
                           bool inner_checked) {
  if (!inner_checked) require_inner(p, height);
  return judge(p, edge, method, make_probe(height, method != CartesianMethod::c3, method != CartesianMethod::c2));
}

std::vector<EdgeVerdict> cartesian_edges(const SimplicialMap& p, CartesianMethod method, int height) {
  require_inner(p, height);
  const Probe probe = make_probe(height, method != CartesianMethod::c3, method != CartesianMethod::c2);
  std::vector<EdgeVerdict> out;
  const auto& x = p.source();
  for (int k = 0; x.dim() >= 1 && k < x.count(1); ++k)
    out.push_back(judge(p, Simplex::nondegenerate(1, k), method, probe));
  return out;
}

MarkedSimplicialSet natural_marking(const SimplicialMap& p, int height) {
  std::vector<bool> marks;
  for (const auto& v : cartesian_edges(p, CartesianMethod::c2, height)) marks.push_back(v.is_cartesian);
  return natural_marking(p, marks);
}

CartesianFibrationVerdict is_cartesian_fibration(const SimplicialMap& p, int height) {
  CartesianFibrationVerdict out;
  const auto r = has_rlp(p, horn_generators(HornKind::inner, height));
  out.inner = r.holds;
  if (!r.holds) {
    out.failure = "not an inner fibration (fails " + r.failing_generator + ")";
    return out;
  }
  const Probe probe = make_probe(height, true, false);
  const auto& x = p.source();
  const auto& a = p.target();
  if (a.dim() < 0 || x.dim() < 0) {
    out.holds = true;
    return out;
  }
  for (const auto& abar : a.simplices(1))
    for (int y = 0; y < x.count(0); ++y) {
      const Simplex vy = Simplex::nondegenerate(0, y);
      if (p(vy) != a.face(abar, 0)) continue;
      std::vector<Simplex> candidates;
      if (abar.degenerate()) candidates.push_back(degeneracy(vy, 0));
      for (int idx : x.with_face0(1, vy))
        if (p(x.simplices(1)[idx]) == abar) candidates.push_back(x.simplices(1)[idx]);
      std::optional<Simplex> chosen;
      for (const auto& f : candidates)
        if (judge(p, f, CartesianMethod::c2, probe).is_cartesian) {
          chosen = f;
          break;
        }
      if (!chosen) {
        out.failure = "no p-Cartesian lift of " + a.label(abar) + " ending at " + x.cell(0, y).id;
        return out;
      }
      out.lifts.push_back({{abar, vy}, *chosen});
    }
  out.holds = true;
  return out;
}

HomotopyCategory::HomotopyCategory(const FiniteSimplicialSet& x, int height) : x_(x) {
  if (height < 3) throw PreconditionError("unsound height: equivalence detection needs height >= 3");
  const auto r = has_rlp(to_point(x), horn_generators(HornKind::inner, height));
  if (!r.holds) throw PreconditionError("not an infinity-category (fails " + r.failing_generator + ")");
  if (x.dim() < 0) return;
  const auto& edges = x.simplices(1);
  std::vector<int> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  const auto& triangles = x.simplices(2);
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
    const auto& fs = x.faces_at(2, t);
    if (fs[0].degenerate()) unite(x.index_of(fs[2]), x.index_of(fs[1]));
    if (fs[2].degenerate()) unite(x.index_of(fs[0]), x.index_of(fs[1]));
  }
  std::vector<int> class_of_root(edges.size(), -1);
  edge_class_.resize(edges.size());
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const int root = find(e);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<int>(reps_.size());
      reps_.push_back(edges[e]);
      source_.push_back(x.face(edges[e], 1).base);
      target_.push_back(x.face(edges[e], 0).base);
    }
    edge_class_[e] = class_of_root[root];
  }
  for (int v = 0; v < x.count(0); ++v) identity_.push_back(class_of(degeneracy(Simplex::nondegenerate(0, v), 0)));
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
    const auto& fs = x.faces_at(2, t);
    const auto key = std::make_pair(class_of(fs[0]), class_of(fs[2]));
    const int value = class_of(fs[1]);
    auto [it, inserted] = composition_.emplace(key, value);
    if (!inserted && it->second != value)
      throw Error("homotopy category: composition is not well defined at " + x.label(triangles[t]));
  }
}

int HomotopyCategory::class_of(const Simplex& edge) const { return edge_class_.at(x_.index_of(edge)); }

int HomotopyCategory::compose(int g, int f) const {
  auto it = composition_.find({g, f});
  return it == composition_.end() ? -1 : it->second;
}

bool HomotopyCategory::is_isomorphism(int cls) const {
  for (int g = 0; g < class_count(); ++g)
    if (compose(g, cls) == identity(source(cls)) && compose(cls, g) == identity(target(cls))) return true;
  return false;
}

bool is_equivalence(const HomotopyCategory& hc, const Simplex& edge) { return hc.is_isomorphism(hc.class_of(edge)); }

MarkedRfibVerdict is_marked_right_fibration(const MarkedMap& q, RfibMethod method, int height) {
  MarkedRfibVerdict v;
  v.method = method;
  if (method != RfibMethod::characterization) {
    const auto r = has_rlp(q, preset("marked-right", height));
    v.by_generators = r.holds;
    if (!r.holds) {
      v.reason = "no filler against " + r.failing_generator;
      v.witness = r.failing;
    }
  }
  if (method != RfibMethod::generators) {
    const auto& p = q.underlying();
    const auto& x = p.source();
    const auto& a = p.target();
    std::string reason;
    const auto inner = has_rlp(p, horn_generators(HornKind::inner, height));
    if (!inner.holds) {
      reason = "underlying map is not inner (fails " + inner.failing_generator + ")";
    } else {
      // marked edges of the base lift to marked edges with any prescribed target
      for (int k = 0; reason.empty() && a.dim() >= 1 && k < a.count(1); ++k) {
        if (!q.target().marks()[k]) continue;
        const Simplex abar = Simplex::nondegenerate(1, k);
        for (int y = 0; reason.empty() && y < x.count(0); ++y) {
          const Simplex vy = Simplex::nondegenerate(0, y);
          if (p(vy) != a.face(abar, 0)) continue;
          bool found = false;
          for (int idx : x.with_face0(1, vy)) {
            const Simplex f = x.simplices(1)[idx];
            if (p(f) == abar && q.source().is_marked(f)) found = true;
          }
          if (!found) reason = "marked edge " + a.label(abar) + " has no marked lift ending at " + x.cell(0, y).id;
        }
      }
      const Probe probe = make_probe(height, true, false);
      for (int k = 0; reason.empty() && x.dim() >= 1 && k < x.count(1); ++k) {
        const Simplex f = Simplex::nondegenerate(1, k);
        const bool marked = q.source().marks()[k];
        const bool image_marked = q.target().is_marked(p(f));
        const bool expected = image_marked && judge(p, f, CartesianMethod::c2, probe).is_cartesian;
        if (marked != expected)
          reason = "edge " + x.label(f) + (marked ? " is marked but" : " is unmarked but") +
                   (marked ? " not p-Cartesian over a marked edge" : " p-Cartesian over a marked edge");
      }
    }
    v.by_characterization = reason.empty();
    if (!reason.empty() && v.reason.empty()) v.reason = reason;
  }
  if (method == RfibMethod::cross) {
    v.agreement = *v.by_generators == *v.by_characterization;
    v.holds = *v.by_generators && *v.by_characterization;
  } else {
    v.holds = method == RfibMethod::generators ? *v.by_generators : *v.by_characterization;
  }
  return v;
}

}  // namespace slift
