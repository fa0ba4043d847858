#include "slift/cylinder.hpp"

namespace slift {

const char* to_string(Flavor f) { return f == Flavor::plain ? "plain" : "marked"; }

MarkedSimplicialSet segment(Flavor flavor, int dim_cap) {
  const auto d1 = standard_simplex(1, dim_cap).renamed("I");
  return flavor == Flavor::plain ? flat(d1) : sharp(d1);
}

namespace {

SimplicialMap constant_vertex(const FiniteSimplicialSet& x, const FiniteSimplicialSet& target, int vertex) {
  ImageTable images(static_cast<std::size_t>(x.dim() + 1));
  for (int d = 0; d <= x.dim(); ++d)
    images[d].assign(x.count(d), Simplex{vertex, 0, static_cast<std::uint8_t>(d), static_cast<std::uint16_t>((1U << d) - 1)});
  return SimplicialMap(x, target, std::move(images), "const" + std::to_string(vertex));
}

// When the comparison is mono, name the corner's simplices after their images in I ⊗ L.
void adopt_target_ids(BoxProductResult& r) {
  const auto& f = r.comparison.underlying();
  if (!is_mono(f)) return;
  const auto& src = f.source();
  std::vector<std::vector<std::string>> ids(static_cast<std::size_t>(src.dim() + 1));
  for (int d = 0; d <= src.dim(); ++d)
    for (int k = 0; k < src.count(d); ++k) ids[d].push_back(f.target().cell(f.image(d, k)).id);
  const auto renamed = src.relabeled(ids);
  r.corner = MarkedSimplicialSet(renamed, r.corner.marks());
  r.comparison = MarkedMap(r.corner, r.comparison.target(), f.with_source(renamed));
  r.from_ends = MarkedMap(r.from_ends.source(), r.corner, r.from_ends.underlying().with_target(renamed));
  r.from_cylinder = MarkedMap(r.from_cylinder.source(), r.corner, r.from_cylinder.underlying().with_target(renamed));
}

}  // namespace

Cylinder::Cylinder(const MarkedSimplicialSet& x, Flavor flavor) : flavor_(flavor), base_(x) {
  const int cap = x.underlying().dim_cap();
  product_ = std::make_shared<MarkedPullback>(marked_product(segment(flavor, cap), x, "I" + x.underlying().name()));
  const auto& seg = product_->first().target();
  for (int e = 0; e < 2; ++e) {
    const MarkedMap c(x, seg, constant_vertex(x.underlying(), seg.underlying(), e));
    ends_[e] = product_->induce(c, identity(x));
  }
}

Cylinder cylinder_on(const FiniteSimplicialSet& x) { return Cylinder(flat(x), Flavor::plain); }
Cylinder cylinder_on(const MarkedSimplicialSet& m, Flavor flavor) { return Cylinder(m, flavor); }

MarkedMap cylinder_map(const Cylinder& from, const Cylinder& to, const MarkedMap& f) {
  return to.product().induce(from.coordinate(), compose(f, from.collapse()));
}

BoxProductResult box_end(const MarkedMap& i, int e, Flavor flavor) {
  const Cylinder ck(i.source(), flavor);
  const Cylinder cl(i.target(), flavor);
  MarkedPushout po(i, ck.end(e), "box" + std::to_string(e));
  BoxProductResult r;
  r.corner = po.object();
  r.comparison = po.induce(cl.end(e), cylinder_map(ck, cl, i));
  r.from_ends = po.first();
  r.from_cylinder = po.second();
  r.trace = {"pushout of " + i.underlying().name() + " and d" + std::to_string(e) + " on the source cylinder",
             "comparison induced by d" + std::to_string(e) + " on the target and the cylinder on the map"};
  adopt_target_ids(r);
  return r;
}

BoxProductResult box_end(const SimplicialMap& i, int e) { return box_end(flat(i), e, Flavor::plain); }

BoxProductResult box_boundary(const MarkedMap& i, Flavor flavor) {
  const Cylinder ck(i.source(), flavor);
  const Cylinder cl(i.target(), flavor);
  const auto kk = marked_coproduct(i.source(), i.source());
  const auto ll = marked_coproduct(i.target(), i.target());
  const auto i_twice = kk.induce(compose(ll.first(), i), compose(ll.second(), i));
  const auto ends_k = kk.induce(ck.end(0), ck.end(1));
  MarkedPushout po(i_twice, ends_k, "boxd");
  BoxProductResult r;
  r.corner = po.object();
  r.comparison = po.induce(ll.induce(cl.end(0), cl.end(1)), cylinder_map(ck, cl, i));
  r.from_ends = po.first();
  r.from_cylinder = po.second();
  r.trace = {"pushout of " + i.underlying().name() + " on both ends and both ends of the source cylinder",
             "comparison induced by both ends of the target and the cylinder on the map"};
  adopt_target_ids(r);
  return r;
}

BoxProductResult box_boundary(const SimplicialMap& i) { return box_boundary(flat(i), Flavor::plain); }

std::vector<std::string> exactness_audit(const std::vector<MarkedMap>& monos, Flavor flavor) {
  std::vector<std::string> failures;
  for (const auto& j : monos) {
    const std::string name = j.underlying().name();
    try {
      if (!is_mono(box_boundary(j, flavor).comparison.underlying())) failures.push_back(name + ": boundary box not mono");
      for (int e = 0; e < 2; ++e)
        if (!is_mono(box_end(j, e, flavor).comparison.underlying()))
          failures.push_back(name + ": end box " + std::to_string(e) + " not mono");
    } catch (const DimCapOverflow& ex) {
      failures.push_back(name + ": " + ex.what());
    }
  }
  return failures;
}

}  // namespace slift
