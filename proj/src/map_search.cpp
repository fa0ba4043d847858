#include "slift/map_search.hpp"

#include "slift/constructions.hpp"

namespace slift {

MapSearch::MapSearch(FiniteSimplicialSet source, FiniteSimplicialSet target)
    : source_(std::move(source)), target_(std::move(target)) {
  pins_.resize(static_cast<std::size_t>(source_.dim() + 1));
  for (int d = 0; d <= source_.dim(); ++d) pins_[d].resize(source_.count(d));
}

MapSearch& MapSearch::agree_on(const SimplicialMap& i, const SimplicialMap& top) {
  if (!(i.target() == source_) || !(top.target() == target_) || !(i.source() == top.source()))
    throw Error("map search: constraint maps do not fit the search");
  for (int d = 0; d <= i.source().dim(); ++d)
    for (int k = 0; k < i.source().count(d); ++k) {
      const Simplex at = i.image(d, k);
      const Simplex value = top.image(d, k);
      pins_[at.base_dim][at.base].push_back(Pin{at.degen, value});
      if (at.degen == 0)
        for (const Pin& other : pins_[at.base_dim][at.base])
          if (other.word == 0 && other.value != value) inconsistent_ = true;
    }
  return *this;
}

MapSearch& MapSearch::over(const SimplicialMap& p, const SimplicialMap& bottom) {
  if (!(p.source() == target_) || !(bottom.source() == source_) || !(p.target() == bottom.target()))
    throw Error("map search: base maps do not fit the search");
  base_ = p;
  bottom_ = bottom;
  return *this;
}

MapSearch& MapSearch::preserve_marking(std::vector<bool> source_marked, std::vector<bool> target_marked) {
  source_marked_ = std::move(source_marked);
  target_marked_ = std::move(target_marked);
  marked_ = true;
  return *this;
}

std::size_t MapSearch::run(const std::function<bool(const SimplicialMap&)>& visit, std::size_t limit) const {
  if (inconsistent_ || limit == 0) return 0;
  const int top_dim = source_.dim();
  if (top_dim < 0) {
    visit(SimplicialMap(source_, target_, {}, "h"));
    return 1;
  }
  if (target_.dim() < 0) return 0;

  std::vector<std::pair<int, int>> order;
  for (int d = 0; d <= top_dim; ++d)
    for (int k = 0; k < source_.count(d); ++k) order.emplace_back(d, k);

  ImageTable assign(static_cast<std::size_t>(top_dim + 1));
  for (int d = 0; d <= top_dim; ++d) assign[d].resize(source_.count(d));
  auto value = [&](const Simplex& s) { return degenerate_by(assign[s.base_dim][s.base], s.dim, s.degen); };

  std::size_t found = 0;
  bool stop = false;

  auto acceptable = [&](int d, int k, const Simplex& c, const std::vector<Simplex>* faces) {
    const Cell& cell = source_.cell(d, k);
    for (int f = 0; f < d; ++f) {
      const Simplex want = value(cell.faces[f + 1]);
      const Simplex have = faces ? (*faces)[f + 1] : target_.face(c, f + 1);
      if (want != have) return false;
    }
    if (!faces && d > 0 && target_.face(c, 0) != value(cell.faces[0])) return false;
    for (const Pin& pin : pins_[d][k])
      if (degenerate_by(c, pin.value.dim, pin.word) != pin.value) return false;
    if (base_ && (*base_)(c) != bottom_->image(d, k)) return false;
    if (marked_ && d == 1 && source_marked_[k] && !c.degenerate() && !target_marked_[c.base]) return false;
    return true;
  };

  std::function<void(std::size_t)> step = [&](std::size_t pos) {
    if (stop) return;
    if (pos == order.size()) {
      ++found;
      if (!visit(SimplicialMap(source_, target_, assign, "h")) || found >= limit) stop = true;
      return;
    }
    const auto [d, k] = order[pos];
    const Pin* fixed = nullptr;
    for (const Pin& pin : pins_[d][k])
      if (pin.word == 0) fixed = &pin;
    if (fixed) {
      if (fixed->value.dim != d || !acceptable(d, k, fixed->value, nullptr)) return;
      assign[d][k] = fixed->value;
      step(pos + 1);
      return;
    }
    const auto& table = target_.simplices(d);
    auto try_index = [&](int idx) {
      const Simplex c = table[idx];
      if (!acceptable(d, k, c, d > 0 ? &target_.faces_at(d, idx) : nullptr)) return;
      assign[d][k] = c;
      step(pos + 1);
    };
    if (d == 0) {
      for (int idx = 0; idx < static_cast<int>(table.size()) && !stop; ++idx) try_index(idx);
    } else {
      for (int idx : target_.with_face0(d, value(source_.cell(d, k).faces[0]))) {
        if (stop) break;
        try_index(idx);
      }
    }
  };
  step(0);
  return found;
}

std::optional<SimplicialMap> MapSearch::first() const {
  std::optional<SimplicialMap> out;
  run([&](const SimplicialMap& h) {
    out = h;
    return false;
  }, 1);
  return out;
}

std::size_t MapSearch::count(std::size_t limit) const {
  return run([](const SimplicialMap&) { return true; }, limit);
}

std::vector<SimplicialMap> MapSearch::all(std::size_t limit) const {
  std::vector<SimplicialMap> out;
  run([&](const SimplicialMap& h) {
    out.push_back(h);
    return true;
  }, limit);
  return out;
}

std::vector<SimplicialMap> hom_enumerate(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y,
                                         std::size_t limit) {
  return MapSearch(x, y).all(limit);
}

std::optional<SimplicialMap> map_from_vertices(const FiniteSimplicialSet& src, const FiniteSimplicialSet& tgt,
                                               const std::vector<Simplex>& vertex_images) {
  if (static_cast<int>(vertex_images.size()) != src.count(0)) throw Error("map_from_vertices: wrong vertex count");
  // Pin the vertices through the inclusion of the 0-skeleton.
  SimplicialMap skeleton = subobject(src, [](int d, int) { return d == 0; }, "sk0");
  ImageTable top{vertex_images};
  return MapSearch(src, tgt).agree_on(skeleton, SimplicialMap(skeleton.source(), tgt, top, "v")).first();
}

}  // namespace slift
