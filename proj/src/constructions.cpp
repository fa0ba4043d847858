#include "slift/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace slift {

namespace {

std::string vertex_list_id(const std::vector<int>& vs, int n) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (n > 9 && i > 0) out += ',';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::string compact_word(std::uint16_t word) {
  std::string out;
  for (int j = kMaxDim; j >= 0; --j)
    if ((word >> j) & 1U) out += "s" + std::to_string(j);
  return out;
}

std::string component_label(const FiniteSimplicialSet& x, const Simplex& s) {
  const std::string& id = x.cell(s.base_dim, s.base).id;
  if (!s.degenerate()) return id;
  return compact_word(s.degen) + ":" + id;
}

// Appends primes until the identifier is unused.
std::string unique_id(std::string id, std::unordered_set<std::string>& used) {
  while (!used.insert(id).second) id += '\'';
  return id;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

FiniteSimplicialSet empty_set(int dim_cap) { return SSetBuilder("empty", dim_cap).build(); }

FiniteSimplicialSet standard_simplex(int n, int dim_cap) {
  if (n < 0) throw PreconditionError("negative simplex dimension");
  if (n > dim_cap)
    throw DimCapOverflow("standard_simplex(" + std::to_string(n) + ") exceeds dim_cap " + std::to_string(dim_cap));
  // Nonempty subsets of [n], grouped by size and ordered lexicographically.
  std::vector<std::vector<std::vector<int>>> by_dim(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t mask = 1; mask < (1U << (n + 1)); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v <= n; ++v)
      if ((mask >> v) & 1U) vs.push_back(v);
    by_dim[vs.size() - 1].push_back(vs);
  }
  for (auto& level : by_dim) std::sort(level.begin(), level.end());
  SSetBuilder b("D" + std::to_string(n), dim_cap);
  for (int d = 0; d <= n; ++d)
    for (const auto& vs : by_dim[d]) {
      std::vector<Simplex> faces;
      if (d > 0)
        for (int i = 0; i <= d; ++i) {
          std::vector<int> f = vs;
          f.erase(f.begin() + i);
          const auto& lower = by_dim[d - 1];
          const int idx = static_cast<int>(std::lower_bound(lower.begin(), lower.end(), f) - lower.begin());
          faces.push_back(Simplex::nondegenerate(d - 1, idx));
        }
      b.add(d, vertex_list_id(vs, n), std::move(faces));
    }
  return b.build();
}

SimplicialMap subobject(const FiniteSimplicialSet& x, const std::function<bool(int, int)>& keep, std::string name) {
  SSetBuilder b(name.empty() ? x.name() + "_sub" : name, x.dim_cap());
  std::vector<std::vector<int>> new_index(static_cast<std::size_t>(x.dim() + 1));
  ImageTable images;
  for (int d = 0; d <= x.dim(); ++d) {
    new_index[d].assign(x.count(d), -1);
    for (int k = 0; k < x.count(d); ++k) {
      if (!keep(d, k)) continue;
      std::vector<Simplex> faces;
      for (Simplex f : x.cell(d, k).faces) {
        const int ni = new_index[f.base_dim][f.base];
        if (ni < 0) throw Error("subobject selection is not closed under faces at '" + x.cell(d, k).id + "'");
        f.base = ni;
        faces.push_back(f);
      }
      new_index[d][k] = b.add(d, x.cell(d, k).id, std::move(faces));
      if (static_cast<int>(images.size()) <= d) images.resize(d + 1);
      images[d].push_back(Simplex::nondegenerate(d, k));
    }
  }
  FiniteSimplicialSet sub = b.build();
  images.resize(static_cast<std::size_t>(sub.dim() + 1));
  return SimplicialMap(sub, x, std::move(images), "incl");
}

SimplicialMap boundary_inclusion(int n, int dim_cap) {
  FiniteSimplicialSet simplex = standard_simplex(n, dim_cap);
  return subobject(simplex, [n](int d, int) { return d < n; }, "dD" + std::to_string(n));
}

SimplicialMap horn_inclusion(int n, int k, int dim_cap) {
  if (k < 0 || k > n) throw PreconditionError("horn index out of range");
  FiniteSimplicialSet simplex = standard_simplex(n, dim_cap);
  // The face opposite vertex k is the (n-1)-simplex not containing k.
  std::string missing;
  for (int v = 0; v <= n; ++v)
    if (v != k) missing += std::to_string(v);
  if (n > 9) throw PreconditionError("horns are limited to n <= 9");
  return subobject(
      simplex,
      [&](int d, int idx) { return d < n && !(d == n - 1 && simplex.cell(d, idx).id == missing); },
      "L" + std::to_string(n) + "_" + std::to_string(k));
}

FiniteSimplicialSet boundary(int n, int dim_cap) { return boundary_inclusion(n, dim_cap).source(); }
FiniteSimplicialSet horn(int n, int k, int dim_cap) { return horn_inclusion(n, k, dim_cap).source(); }

SimplicialMap vertex_inclusion(int n, int v, int dim_cap) {
  FiniteSimplicialSet simplex = standard_simplex(n, dim_cap);
  const std::string id = std::to_string(v);
  return subobject(simplex, [&](int d, int idx) { return d == 0 && simplex.cell(d, idx).id == id; },
                   "v" + std::to_string(v) + "D" + std::to_string(n));
}

SimplicialMap to_point(const FiniteSimplicialSet& x) {
  FiniteSimplicialSet pt = standard_simplex(0, std::max(x.dim_cap(), 0));
  ImageTable images(static_cast<std::size_t>(x.dim() + 1));
  for (int d = 0; d <= x.dim(); ++d)
    images[d].assign(x.count(d), Simplex{0, 0, static_cast<std::uint8_t>(d), static_cast<std::uint16_t>((1U << d) - 1)});
  return SimplicialMap(x, pt, std::move(images), "bang");
}

SimplicialMap classifying_map(const FiniteSimplicialSet& x, const Simplex& s) {
  FiniteSimplicialSet simplex = standard_simplex(s.dim, std::max<int>(x.dim_cap(), s.dim));
  ImageTable images(static_cast<std::size_t>(s.dim) + 1);
  for (int d = 0; d <= s.dim; ++d)
    for (const auto& c : simplex.cells(d)) {
      Monotone theta;
      for (char ch : c.id)
        if (ch != ',') theta.push_back(ch - '0');
      if (s.dim > 9) throw PreconditionError("classifying_map limited to dimension 9");
      images[d].push_back(x.act(s, theta));
    }
  return SimplicialMap(simplex, x, std::move(images), "chi");
}

SimplicialMap image_inclusion(const SimplicialMap& f, std::string name) {
  const auto& t = f.target();
  std::vector<std::unordered_set<int>> hit(static_cast<std::size_t>(std::max(t.dim(), 0) + 1));
  for (const auto& level : f.images())
    for (const auto& s : level) hit[s.base_dim].insert(s.base);
  return subobject(t, [&](int d, int k) { return hit[d].count(k) > 0; }, name.empty() ? "im" : name);
}

// ---------------------------------------------------------------- pullback

Pullback::Pullback(const SimplicialMap& p, const SimplicialMap& u, std::string name) {
  if (!(p.target() == u.target())) throw Error("pullback: maps do not share a codomain");
  const auto& x = p.source();
  const auto& bset = u.source();
  const int cap = std::max({x.dim_cap(), bset.dim_cap(), p.target().dim_cap()});
  SSetBuilder builder(name.empty() ? "pb" : name, cap);
  std::unordered_set<std::string> used;
  ImageTable first_images, second_images;
  if (x.dim() >= 0 && bset.dim() >= 0) {
    const int top = std::min(x.dim() + bset.dim(), cap + 1);
    for (int m = 0; m <= top; ++m) {
      std::unordered_map<Simplex, std::vector<Simplex>, SimplexHash> over;
      for (const auto& b : bset.simplices(m)) over[u(b)].push_back(b);
      std::vector<std::pair<Simplex, Simplex>> found;
      for (const auto& xs : x.simplices(m)) {
        auto it = over.find(p(xs));
        if (it == over.end()) continue;
        for (const auto& b : it->second)
          if ((xs.degen & b.degen) == 0) found.emplace_back(xs, b);
      }
      if (found.empty()) continue;
      if (m > cap)
        throw DimCapOverflow("pullback/product has a nondegenerate " + std::to_string(m) +
                             "-simplex, above dim_cap " + std::to_string(cap));
      first_images.resize(m + 1);
      second_images.resize(m + 1);
      for (const auto& [xs, b] : found) {
        std::vector<Simplex> faces;
        if (m > 0) {
          const auto& xf = x.faces_at(m, x.index_of(xs));
          const auto& bf = bset.faces_at(m, bset.index_of(b));
          for (int i = 0; i <= m; ++i) faces.push_back(pair(xf[i], bf[i]));
        }
        const std::string id =
            unique_id("(" + component_label(x, xs) + "," + component_label(bset, b) + ")", used);
        const int idx = builder.add(m, id, std::move(faces));
        lookup_.emplace(std::make_pair(xs.key(), b.key()), Simplex::nondegenerate(m, idx));
        first_images[m].push_back(xs);
        second_images[m].push_back(b);
      }
    }
  }
  object_ = builder.build();
  first_images.resize(static_cast<std::size_t>(object_.dim() + 1));
  second_images.resize(static_cast<std::size_t>(object_.dim() + 1));
  first_ = SimplicialMap(object_, x, std::move(first_images), "pr1");
  second_ = SimplicialMap(object_, bset, std::move(second_images), "pr2");
}

Simplex Pullback::pair(const Simplex& xs, const Simplex& b) const {
  const std::uint16_t common = xs.degen & b.degen;
  const Simplex xr = strip_degeneracies(xs, common);
  const Simplex br = strip_degeneracies(b, common);
  auto it = lookup_.find(std::make_pair(xr.key(), br.key()));
  if (it == lookup_.end()) throw Error("pullback: pair is not a simplex of the pullback");
  return degenerate_by(it->second, xs.dim, common);
}

SimplicialMap Pullback::induce(const SimplicialMap& f, const SimplicialMap& g) const {
  if (!(f.source() == g.source())) throw Error("pullback induce: maps do not share a source");
  ImageTable images(f.images().size());
  for (std::size_t d = 0; d < f.images().size(); ++d)
    for (std::size_t k = 0; k < f.images()[d].size(); ++k)
      images[d].push_back(pair(f.images()[d][k], g.images()[d][k]));
  return SimplicialMap(f.source(), object_, std::move(images), "induced");
}

Pullback product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y, std::string name) {
  const int cap = std::max(x.dim_cap(), y.dim_cap());
  SimplicialMap px = to_point(x);
  SimplicialMap py = to_point(y);
  // Both must land in the same Δ⁰ table.
  FiniteSimplicialSet pt = standard_simplex(0, cap);
  return Pullback(px.with_target(pt), py.with_target(pt), name.empty() ? x.name() + "x" + y.name() : name);
}

SimplicialMap product_map(const Pullback& from, const Pullback& into, const SimplicialMap& f, const SimplicialMap& g) {
  return into.induce(compose(f, from.first()), compose(g, from.second()));
}

// ---------------------------------------------------------------- pushout

Pushout::Pushout(const SimplicialMap& f, const SimplicialMap& g, std::string name) {
  if (!(f.source() == g.source())) throw Error("pushout: maps do not share a domain");
  const auto& k = f.source();
  const auto& x = f.target();
  const auto& y = g.target();
  const int cap = std::max({x.dim_cap(), y.dim_cap(), k.dim_cap()});
  const int top = std::max(x.dim(), y.dim());
  SSetBuilder builder(name.empty() ? "po" : name, cap);

  // Levelwise quotient of X_d ⊔ Y_d.
  std::vector<UnionFind> classes;
  std::vector<int> nx(static_cast<std::size_t>(top + 1));
  for (int d = 0; d <= top; ++d) {
    const auto& xs = x.dim() >= 0 ? x.simplices(d) : std::vector<Simplex>{};
    const auto& ys = y.dim() >= 0 ? y.simplices(d) : std::vector<Simplex>{};
    nx[d] = static_cast<int>(xs.size());
    UnionFind uf(xs.size() + ys.size());
    if (k.dim() >= 0)
      for (const auto& s : k.simplices(d)) uf.unite(x.index_of(f(s)), nx[d] + y.index_of(g(s)));
    classes.push_back(std::move(uf));
  }
  auto member = [&](int d, int e) -> std::pair<bool, Simplex> {
    if (e < nx[d]) return {true, x.simplices(d)[e]};
    return {false, y.simplices(d)[e - nx[d]]};
  };

  // A class is degenerate iff it has a degenerate member.
  std::vector<std::vector<int>> degenerate_member(static_cast<std::size_t>(top + 1));
  for (int d = 0; d <= top; ++d) {
    const int n = static_cast<int>(classes[d].parent.size());
    degenerate_member[d].assign(n, -1);
    for (int e = 0; e < n; ++e) {
      const int root = classes[d].find(e);
      if (member(d, e).second.degenerate() && degenerate_member[d][root] < 0) degenerate_member[d][root] = e;
    }
  }

  std::vector<std::unordered_map<int, int>> class_index(static_cast<std::size_t>(top + 1));
  std::unordered_set<std::string> used;
  reps_.resize(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<std::string>> ids(static_cast<std::size_t>(top + 1));
  for (int d = 0; d <= top; ++d) {
    auto consider = [&](bool from_first, const FiniteSimplicialSet& side, int offset) {
      for (int c = 0; c < side.count(d); ++c) {
        const Simplex s = Simplex::nondegenerate(d, c);
        const int root = classes[d].find(offset + side.index_of(s));
        if (degenerate_member[d][root] >= 0 || class_index[d].count(root)) continue;
        class_index[d].emplace(root, static_cast<int>(reps_[d].size()));
        reps_[d].push_back(Rep{from_first, s});
        ids[d].push_back(side.cell(d, c).id);
      }
    };
    if (y.dim() >= d) consider(false, y, nx[d]);
    if (x.dim() >= d) consider(true, x, 0);
  }
  // Y identifiers take priority over X identifiers.
  std::vector<std::vector<std::string>> final_ids(ids.size());
  for (int pass = 0; pass < 2; ++pass)
    for (int d = 0; d <= top; ++d) {
      final_ids[d].resize(ids[d].size());
      for (std::size_t r = 0; r < ids[d].size(); ++r)
        if (reps_[d][r].from_first == (pass == 1)) final_ids[d][r] = unique_id(ids[d][r], used);
    }

  std::function<Simplex(int, int)> normal_form = [&](int d, int root) -> Simplex {
    auto it = class_index[d].find(root);
    if (it != class_index[d].end()) return Simplex::nondegenerate(d, it->second);
    const int e = degenerate_member[d][root];
    auto [from_first, s] = member(d, e);
    const FiniteSimplicialSet& side = from_first ? x : y;
    const int offset = from_first ? 0 : nx[s.base_dim];
    const Simplex base = Simplex::nondegenerate(s.base_dim, s.base);
    const int base_root = classes[s.base_dim].find(offset + side.index_of(base));
    return degenerate_by(normal_form(s.base_dim, base_root), d, s.degen);
  };
  auto class_of = [&](bool from_first, const Simplex& s) {
    const FiniteSimplicialSet& side = from_first ? x : y;
    const int offset = from_first ? 0 : nx[s.dim];
    return normal_form(s.dim, classes[s.dim].find(offset + side.index_of(s)));
  };

  for (int d = 0; d <= top; ++d)
    for (std::size_t r = 0; r < reps_[d].size(); ++r) {
      const Rep& rep = reps_[d][r];
      const FiniteSimplicialSet& side = rep.from_first ? x : y;
      std::vector<Simplex> faces;
      if (d > 0)
        for (const auto& fc : side.faces_at(d, side.index_of(rep.simplex))) faces.push_back(class_of(rep.from_first, fc));
      builder.add(d, final_ids[d][r], std::move(faces));
    }
  object_ = builder.build();

  auto leg = [&](bool from_first, const FiniteSimplicialSet& side) {
    ImageTable images(static_cast<std::size_t>(side.dim() + 1));
    for (int d = 0; d <= side.dim(); ++d)
      for (int c = 0; c < side.count(d); ++c) images[d].push_back(class_of(from_first, Simplex::nondegenerate(d, c)));
    return SimplicialMap(side, object_, std::move(images), from_first ? "in1" : "in2");
  };
  first_ = leg(true, x);
  second_ = leg(false, y);
}

SimplicialMap Pushout::induce(const SimplicialMap& a, const SimplicialMap& b) const {
  if (!(a.target() == b.target())) throw Error("pushout induce: maps do not share a codomain");
  ImageTable images(static_cast<std::size_t>(object_.dim() + 1));
  for (int d = 0; d <= object_.dim(); ++d)
    for (const auto& rep : reps_[d]) images[d].push_back(rep.from_first ? a(rep.simplex) : b(rep.simplex));
  return SimplicialMap(object_, a.target(), std::move(images), "induced");
}

Pushout coproduct(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y, std::string name) {
  return Pushout(SimplicialMap::from_empty(x), SimplicialMap::from_empty(y),
                 name.empty() ? x.name() + "+" + y.name() : name);
}

}  // namespace slift
