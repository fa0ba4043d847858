#include "slift/marked.hpp"

namespace slift {

MarkedSimplicialSet::MarkedSimplicialSet(FiniteSimplicialSet underlying, std::vector<bool> marks)
    : underlying_(std::move(underlying)), marks_(std::move(marks)) {
  marks_.resize(static_cast<std::size_t>(underlying_.dim() >= 1 ? underlying_.count(1) : 0), false);
}

bool MarkedSimplicialSet::is_marked(const Simplex& edge) const {
  if (edge.dim != 1) throw Error("is_marked: not an edge");
  return edge.degenerate() || marks_.at(edge.base);
}

int MarkedSimplicialSet::marked_count() const {
  int n = 0;
  for (bool b : marks_) n += b ? 1 : 0;
  return n;
}

MarkedMap::MarkedMap(MarkedSimplicialSet source, MarkedSimplicialSet target, SimplicialMap underlying)
    : source_(std::move(source)), target_(std::move(target)), underlying_(std::move(underlying)) {
  if (!(underlying_.source() == source_.underlying()) || !(underlying_.target() == target_.underlying()))
    throw Error("marked map does not match its marked endpoints");
}

MarkedMap compose(const MarkedMap& g, const MarkedMap& f) {
  if (!(f.target() == g.source())) throw Error("cannot compose marked maps: markings differ");
  return MarkedMap(f.source(), g.target(), compose(g.underlying(), f.underlying()));
}

std::vector<std::string> validate(const MarkedMap& f) {
  auto report = validate(f.underlying());
  if (!report.empty()) return report;
  const auto& src = f.source();
  for (int k = 0; k < static_cast<int>(src.marks().size()); ++k)
    if (src.marks()[k] && !f.target().is_marked(f.underlying().image(1, k)))
      report.push_back("marked edge '" + src.underlying().cell(1, k).id + "' maps to an unmarked edge");
  return report;
}

MarkedMap identity(const MarkedSimplicialSet& m) { return MarkedMap(m, m, SimplicialMap::identity(m.underlying())); }

MarkedSimplicialSet flat(const FiniteSimplicialSet& x) { return MarkedSimplicialSet(x, {}); }

MarkedSimplicialSet sharp(const FiniteSimplicialSet& x) {
  return MarkedSimplicialSet(x, std::vector<bool>(static_cast<std::size_t>(x.dim() >= 1 ? x.count(1) : 0), true));
}

MarkedMap flat(const SimplicialMap& f) { return MarkedMap(flat(f.source()), flat(f.target()), f); }
MarkedMap sharp(const SimplicialMap& f) { return MarkedMap(sharp(f.source()), sharp(f.target()), f); }

SimplicialMap mu(const MarkedSimplicialSet& m) {
  const auto& x = m.underlying();
  // Every face of a kept simplex has a subset of its edges, so keeping the
  // simplices whose edges are all marked is already closed under faces.
  return subobject(
      x,
      [&](int d, int k) {
        const Simplex s = Simplex::nondegenerate(d, k);
        for (int a = 0; a <= d; ++a)
          for (int b = a + 1; b <= d; ++b)
            if (!m.is_marked(x.act(s, Monotone{a, b}))) return false;
        return true;
      },
      "mu" + x.name());
}

std::vector<bool> image_marks(const MarkedSimplicialSet& source, const SimplicialMap& f) {
  const auto& t = f.target();
  std::vector<bool> marks(static_cast<std::size_t>(t.dim() >= 1 ? t.count(1) : 0), false);
  for (int k = 0; k < static_cast<int>(source.marks().size()); ++k)
    if (source.marks()[k]) {
      const Simplex e = f.image(1, k);
      if (!e.degenerate()) marks[e.base] = true;
    }
  return marks;
}

MarkedPullback::MarkedPullback(const MarkedMap& p, const MarkedMap& u, std::string name)
    : plain_(p.underlying(), u.underlying(), std::move(name)) {
  const auto& obj = plain_.object();
  std::vector<bool> marks(static_cast<std::size_t>(obj.dim() >= 1 ? obj.count(1) : 0));
  for (int k = 0; k < static_cast<int>(marks.size()); ++k)
    marks[k] = p.source().is_marked(plain_.first().image(1, k)) && u.source().is_marked(plain_.second().image(1, k));
  object_ = MarkedSimplicialSet(obj, std::move(marks));
  first_ = MarkedMap(object_, p.source(), plain_.first());
  second_ = MarkedMap(object_, u.source(), plain_.second());
}

MarkedMap MarkedPullback::induce(const MarkedMap& f, const MarkedMap& g) const {
  return MarkedMap(f.source(), object_, plain_.induce(f.underlying(), g.underlying()));
}

MarkedPullback marked_product(const MarkedSimplicialSet& m, const MarkedSimplicialSet& n, std::string name) {
  const int cap = std::max(m.underlying().dim_cap(), n.underlying().dim_cap());
  const auto pt = sharp(standard_simplex(0, cap));
  const MarkedMap pm(m, pt, to_point(m.underlying()).with_target(pt.underlying()));
  const MarkedMap pn(n, pt, to_point(n.underlying()).with_target(pt.underlying()));
  return MarkedPullback(pm, pn, name.empty() ? m.underlying().name() + "x" + n.underlying().name() : name);
}

MarkedPushout::MarkedPushout(const MarkedMap& f, const MarkedMap& g, std::string name)
    : plain_(f.underlying(), g.underlying(), std::move(name)) {
  auto marks = image_marks(f.target(), plain_.first());
  const auto more = image_marks(g.target(), plain_.second());
  for (std::size_t k = 0; k < marks.size(); ++k) marks[k] = marks[k] || more[k];
  object_ = MarkedSimplicialSet(plain_.object(), std::move(marks));
  first_ = MarkedMap(f.target(), object_, plain_.first());
  second_ = MarkedMap(g.target(), object_, plain_.second());
}

MarkedMap MarkedPushout::induce(const MarkedMap& a, const MarkedMap& b) const {
  return MarkedMap(object_, a.target(), plain_.induce(a.underlying(), b.underlying()));
}

MarkedPushout marked_coproduct(const MarkedSimplicialSet& m, const MarkedSimplicialSet& n, std::string name) {
  const auto empty = flat(FiniteSimplicialSet{});
  return MarkedPushout(MarkedMap(empty, m, SimplicialMap::from_empty(m.underlying())),
                       MarkedMap(empty, n, SimplicialMap::from_empty(n.underlying())),
                       name.empty() ? m.underlying().name() + "+" + n.underlying().name() : name);
}

MarkedSimplicialSet natural_marking(const SimplicialMap& p, const std::vector<bool>& cartesian_edges) {
  return MarkedSimplicialSet(p.source(), cartesian_edges);
}

}  // namespace slift
