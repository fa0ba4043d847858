#include "slift/simplicial_map.hpp"

#include <unordered_set>

namespace slift {

SimplicialMap::SimplicialMap(FiniteSimplicialSet source, FiniteSimplicialSet target, ImageTable images,
                             std::string name)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)), name_(std::move(name)) {
  images_.resize(static_cast<std::size_t>(source_.dim() + 1));
  for (int d = 0; d <= source_.dim(); ++d)
    if (static_cast<int>(images_[d].size()) != source_.count(d)) throw Error("image table does not match source");
}

SimplicialMap SimplicialMap::identity(const FiniteSimplicialSet& x) {
  ImageTable images(static_cast<std::size_t>(x.dim() + 1));
  for (int d = 0; d <= x.dim(); ++d)
    for (int k = 0; k < x.count(d); ++k) images[d].push_back(Simplex::nondegenerate(d, k));
  return SimplicialMap(x, x, std::move(images), "id");
}

SimplicialMap SimplicialMap::from_empty(const FiniteSimplicialSet& target) {
  return SimplicialMap(FiniteSimplicialSet{}, target, {}, "empty");
}

Simplex SimplicialMap::operator()(const Simplex& s) const {
  return degenerate_by(images_.at(s.base_dim).at(s.base), s.dim, s.degen);
}

SimplicialMap SimplicialMap::named(std::string name) const {
  SimplicialMap out = *this;
  out.name_ = std::move(name);
  return out;
}

SimplicialMap SimplicialMap::with_source(FiniteSimplicialSet s) const {
  return SimplicialMap(std::move(s), target_, images_, name_);
}

SimplicialMap SimplicialMap::with_target(FiniteSimplicialSet t) const {
  return SimplicialMap(source_, std::move(t), images_, name_);
}

bool SimplicialMap::operator==(const SimplicialMap& other) const {
  return images_ == other.images_ && source_ == other.source_ && target_ == other.target_;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target() == g.source()))
    throw Error("cannot compose: target of '" + f.name() + "' is not the source of '" + g.name() + "'");
  ImageTable images(f.images().size());
  for (std::size_t d = 0; d < f.images().size(); ++d)
    for (const auto& s : f.images()[d]) images[d].push_back(g(s));
  return SimplicialMap(f.source(), g.target(), std::move(images), g.name() + "*" + f.name());
}

std::vector<std::string> validate(const SimplicialMap& f) {
  std::vector<std::string> report;
  const auto& src = f.source();
  const auto& tgt = f.target();
  for (int d = 0; d <= src.dim(); ++d)
    for (int k = 0; k < src.count(d); ++k) {
      const Simplex& img = f.image(d, k);
      const std::string where = "image of '" + src.cell(d, k).id + "'";
      if (img.dim != d) {
        report.push_back(where + ": dimension mismatch");
        continue;
      }
      if (img.base < 0 || img.base >= tgt.count(img.base_dim) ||
          img.base_dim + word_length(img.degen) != img.dim) {
        report.push_back(where + ": not a simplex of the target");
        continue;
      }
    }
  if (!report.empty()) return report;
  for (int d = 1; d <= src.dim(); ++d)
    for (int k = 0; k < src.count(d); ++k) {
      const Simplex x = Simplex::nondegenerate(d, k);
      for (int i = 0; i <= d; ++i) {
        const Simplex lhs = f(src.face(x, i));
        const Simplex rhs = tgt.face(f.image(d, k), i);
        if (lhs != rhs)
          report.push_back("'" + src.cell(d, k).id + "': image of d" + std::to_string(i) + " is " + tgt.label(lhs) +
                           " but d" + std::to_string(i) + " of the image is " + tgt.label(rhs));
      }
    }
  return report;
}

bool is_mono(const SimplicialMap& f) {
  std::unordered_set<Simplex, SimplexHash> seen;
  for (const auto& level : f.images())
    for (const auto& s : level) {
      if (s.degenerate()) return false;
      if (!seen.insert(s).second) return false;
    }
  return true;
}

bool is_iso(const SimplicialMap& f) {
  if (!is_mono(f)) return false;
  for (int d = 0; d <= f.target().dim(); ++d)
    if (f.source().count(d) != f.target().count(d)) return false;
  return true;
}

}  // namespace slift
