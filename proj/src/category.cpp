#include "slift/category.hpp"

#include <map>
#include <tuple>

namespace slift {

int SmallCategory::add_object(std::string name) {
  objects_.push_back(name);
  const int c = static_cast<int>(objects_.size()) - 1;
  morphisms_.push_back(Morphism{"1" + name, c, c});
  identities_.push_back(static_cast<int>(morphisms_.size()) - 1);
  grow_table();
  const int id = identities_.back();
  table_[id][id] = id;
  return c;
}

int SmallCategory::add_morphism(std::string name, int source, int target) {
  morphisms_.push_back(Morphism{std::move(name), source, target});
  grow_table();
  const int m = static_cast<int>(morphisms_.size()) - 1;
  table_[m][identities_.at(source)] = m;
  table_[identities_.at(target)][m] = m;
  return m;
}

void SmallCategory::grow_table() {
  const std::size_t n = morphisms_.size();
  for (auto& row : table_) row.resize(n, -1);
  table_.resize(n, std::vector<int>(n, -1));
}

void SmallCategory::set_composite(int g, int f, int h) {
  if (morphisms_.at(f).target != morphisms_.at(g).source) throw Error("set_composite: arrows are not composable");
  table_[g][f] = h;
}

bool SmallCategory::is_identity(int m) const { return identities_.at(morphisms_.at(m).source) == m; }

int SmallCategory::compose(int g, int f) const { return table_.at(g).at(f); }

int SmallCategory::find_object(const std::string& name) const {
  for (int c = 0; c < object_count(); ++c)
    if (objects_[c] == name) return c;
  return -1;
}

int SmallCategory::find_morphism(const std::string& name) const {
  for (int m = 0; m < morphism_count(); ++m)
    if (morphisms_[m].name == name) return m;
  return -1;
}

std::vector<std::string> SmallCategory::validate() const {
  std::vector<std::string> out;
  const int n = morphism_count();
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      const bool composable = morphisms_[f].target == morphisms_[g].source;
      const int h = table_[g][f];
      if (composable && h < 0) out.push_back("missing composite " + morphisms_[g].name + " o " + morphisms_[f].name);
      if (!composable && h >= 0) out.push_back("composite of non-composable arrows " + morphisms_[g].name);
      if (h >= 0 && (morphisms_[h].source != morphisms_[f].source || morphisms_[h].target != morphisms_[g].target))
        out.push_back("composite " + morphisms_[g].name + " o " + morphisms_[f].name + " has wrong endpoints");
    }
  if (!out.empty()) return out;
  for (int f = 0; f < n; ++f) {
    if (table_[identities_[morphisms_[f].target]][f] != f || table_[f][identities_[morphisms_[f].source]] != f)
      out.push_back("unit law fails for " + morphisms_[f].name);
    for (int g = 0; g < n; ++g) {
      if (table_[g][f] < 0) continue;
      for (int h = 0; h < n; ++h)
        if (table_[h][g] >= 0 && table_[table_[h][g]][f] != table_[h][table_[g][f]])
          out.push_back("associativity fails for " + morphisms_[h].name + ", " + morphisms_[g].name + ", " +
                        morphisms_[f].name);
    }
  }
  return out;
}

SmallCategory poset_category(const std::vector<std::string>& names, const std::function<bool(int, int)>& leq,
                             std::string name) {
  SmallCategory c(std::move(name));
  const int n = static_cast<int>(names.size());
  for (const auto& o : names) c.add_object(o);
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    arrow[a][a] = c.identity(a);
    for (int b = 0; b < n; ++b)
      if (a != b && leq(a, b)) arrow[a][b] = c.add_morphism(names[a] + "-" + names[b], a, b);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        if (arrow[a][b] >= 0 && arrow[b][d] >= 0) c.set_composite(arrow[b][d], arrow[a][b], arrow[a][d]);
  return c;
}

SmallCategory ordinal(int n) {
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back(std::to_string(i));
  return poset_category(names, [](int a, int b) { return a <= b; }, "[" + std::to_string(n) + "]");
}

SmallCategory discrete_category(const std::vector<std::string>& names) {
  return poset_category(names, [](int a, int b) { return a == b; }, "disc");
}

SmallCategory walking_isomorphism() {
  SmallCategory c("J");
  const int a = c.add_object("a");
  const int b = c.add_object("b");
  const int f = c.add_morphism("f", a, b);
  const int g = c.add_morphism("g", b, a);
  c.set_composite(g, f, c.identity(a));
  c.set_composite(f, g, c.identity(b));
  return c;
}

namespace {

std::string chain_id(const SmallCategory& c, const std::vector<int>& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ',';
    out += c.morphism(chain[i]).name;
  }
  return out;
}

// Removes identities from a chain; returns the object when nothing is left.
struct Normalized {
  std::vector<int> chain;
  std::uint16_t word = 0;
  int object = -1;
};

Normalized normalize(const SmallCategory& c, const std::vector<int>& chain, int start_object) {
  Normalized out;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    if (c.is_identity(chain[j]))
      out.word |= static_cast<std::uint16_t>(1U << j);
    else
      out.chain.push_back(chain[j]);
  }
  out.object = chain.empty() ? start_object : c.morphism(chain.front()).source;
  return out;
}

}  // namespace

FiniteSimplicialSet nerve(const SmallCategory& c, int dim_cap) {
  SSetBuilder b("N" + c.name(), dim_cap);
  std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(dim_cap) + 1);
  for (int o = 0; o < c.object_count(); ++o) index[0][{o}] = b.add(0, c.object(o), {});

  auto lookup = [&](const std::vector<int>& chain, int start_object) {
    const Normalized n = normalize(c, chain, start_object);
    const int d = static_cast<int>(chain.size());
    const int base_dim = static_cast<int>(n.chain.size());
    const int idx = base_dim == 0 ? index[0].at({n.object}) : index[base_dim].at(n.chain);
    return Simplex{idx, static_cast<std::uint8_t>(base_dim), static_cast<std::uint8_t>(d), n.word};
  };

  if (dim_cap < 1) return b.build();
  std::vector<std::vector<std::vector<int>>> chains(static_cast<std::size_t>(dim_cap) + 1);
  for (int m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m)) chains[1].push_back({m});
  for (int d = 2; d <= dim_cap; ++d)
    for (const auto& ch : chains[d - 1])
      for (int m = 0; m < c.morphism_count(); ++m)
        if (!c.is_identity(m) && c.morphism(m).source == c.morphism(ch.back()).target) {
          auto next = ch;
          next.push_back(m);
          chains[d].push_back(std::move(next));
        }
  for (int d = 1; d <= dim_cap; ++d)
    for (const auto& ch : chains[d]) {
      std::vector<Simplex> faces;
      for (int i = 0; i <= d; ++i) {
        std::vector<int> face;
        int start = -1;
        if (i == 0) {
          face.assign(ch.begin() + 1, ch.end());
          start = c.morphism(ch.front()).target;
        } else if (i == d) {
          face.assign(ch.begin(), ch.end() - 1);
          start = c.morphism(ch.front()).source;
        } else {
          for (int j = 0; j < d; ++j) {
            if (j == i - 1) {
              face.push_back(c.compose(ch[i], ch[i - 1]));
              ++j;
            } else {
              face.push_back(ch[j]);
            }
          }
          start = c.morphism(ch.front()).source;
        }
        faces.push_back(lookup(face, start));
      }
      index[d][ch] = b.add(d, chain_id(c, ch), std::move(faces));
    }
  return b.build();
}

SimplicialMap nerve_map(const Functor& f, const FiniteSimplicialSet& source_nerve,
                        const FiniteSimplicialSet& target_nerve) {
  const SmallCategory& src = *f.source;
  const SmallCategory& tgt = *f.target;
  ImageTable images(static_cast<std::size_t>(source_nerve.dim() + 1));
  for (int d = 0; d <= source_nerve.dim(); ++d)
    for (const auto& cell : source_nerve.cells(d)) {
      std::vector<int> chain;
      int start = -1;
      if (d == 0) {
        start = f.on_objects.at(src.find_object(cell.id));
      } else {
        std::size_t pos = 0;
        while (pos <= cell.id.size()) {
          const std::size_t comma = std::min(cell.id.find(',', pos), cell.id.size());
          chain.push_back(f.on_morphisms.at(src.find_morphism(cell.id.substr(pos, comma - pos))));
          pos = comma + 1;
        }
      }
      const Normalized n = normalize(tgt, chain, start);
      const std::string id = n.chain.empty() ? tgt.object(n.object) : chain_id(tgt, n.chain);
      auto base = target_nerve.find(id);
      if (!base) throw Error("nerve_map: target nerve lacks '" + id + "'");
      images[d].push_back(degenerate_by(*base, d, n.word));
    }
  return SimplicialMap(source_nerve, target_nerve, std::move(images), "N");
}

CategoryDiagram set_diagram(bool contravariant, const std::vector<std::vector<std::string>>& sets,
                            const std::vector<std::vector<int>>& maps) {
  CategoryDiagram out;
  out.contravariant = contravariant;
  for (const auto& s : sets) out.fibers.push_back(discrete_category(s));
  for (std::size_t u = 0; u < maps.size(); ++u) {
    out.on_objects.push_back(maps[u]);
    std::vector<int> on_m;
    // fibers are discrete, so morphism index = identity index = object index
    if (!maps[u].empty()) {
      on_m = maps[u];
    }
    out.on_morphisms.push_back(std::move(on_m));
  }
  return out;
}

Grothendieck grothendieck(const SmallCategory& base, const CategoryDiagram& diagram) {
  Grothendieck g{SmallCategory("el" + base.name()), {}, {}};
  auto& total = g.total;
  const int nb = base.morphism_count();
  auto obj_map = [&](int u, int x) {
    if (u >= static_cast<int>(diagram.on_objects.size()) || diagram.on_objects[u].empty()) return x;
    return diagram.on_objects[u][x];
  };
  auto mor_map = [&](int u, int phi) {
    if (u >= static_cast<int>(diagram.on_morphisms.size()) || diagram.on_morphisms[u].empty()) return phi;
    return diagram.on_morphisms[u][phi];
  };

  std::map<std::pair<int, int>, int> object_of;  // (c, x)
  for (int c = 0; c < base.object_count(); ++c) {
    const auto& fib = diagram.fibers.at(c);
    for (int x = 0; x < fib.object_count(); ++x) {
      object_of[{c, x}] = total.add_object(base.object(c) + ":" + fib.object(x));
      g.base_object.push_back(c);
    }
  }
  g.base_morphism.resize(total.morphism_count());
  for (int c = 0; c < base.object_count(); ++c)
    for (int x = 0; x < diagram.fibers[c].object_count(); ++x)
      g.base_morphism[total.identity(object_of[{c, x}])] = base.identity(c);

  // A morphism over u : c → c' is (u, φ) where φ lives in the fiber of the
  // contravariant side (F(c)) or covariant side (F(c')).
  struct Arrow {
    int u;
    int phi;
  };
  std::vector<Arrow> arrows(static_cast<std::size_t>(total.morphism_count()));
  for (int c = 0; c < base.object_count(); ++c)
    for (int x = 0; x < diagram.fibers[c].object_count(); ++x)
      arrows[total.identity(object_of[{c, x}])] = Arrow{base.identity(c), diagram.fibers[c].identity(x)};

  // (u, φ) plus the endpoints determines an arrow
  std::map<std::tuple<int, int, int, int>, int> arrow_of;
  auto key = [&](int u, int phi, int from, int to) { return std::make_tuple(u, phi, from, to); };
  for (int m = 0; m < total.morphism_count(); ++m) arrow_of[key(arrows[m].u, arrows[m].phi, total.morphism(m).source, total.morphism(m).target)] = m;

  for (int u = 0; u < nb; ++u) {
    const int c = base.morphism(u).source;
    const int c2 = base.morphism(u).target;
    const auto& fc = diagram.fibers[c];
    const auto& fc2 = diagram.fibers[c2];
    for (int x = 0; x < fc.object_count(); ++x)
      for (int x2 = 0; x2 < fc2.object_count(); ++x2) {
        const auto& fiber = diagram.contravariant ? fc : fc2;
        const int from = diagram.contravariant ? x : obj_map(u, x);
        const int to = diagram.contravariant ? obj_map(u, x2) : x2;
        for (int phi = 0; phi < fiber.morphism_count(); ++phi) {
          if (fiber.morphism(phi).source != from || fiber.morphism(phi).target != to) continue;
          if (base.is_identity(u) && fiber.is_identity(phi)) continue;
          const std::string other = diagram.contravariant ? fc2.object(x2) : fc.object(x);
          const int m = total.add_morphism(base.morphism(u).name + "/" + fiber.morphism(phi).name + "/" + other,
                                           object_of[{c, x}], object_of[{c2, x2}]);
          arrows.push_back(Arrow{u, phi});
          arrow_of[key(u, phi, object_of[{c, x}], object_of[{c2, x2}])] = m;
          g.base_morphism.push_back(u);
        }
      }
  }

  for (int f = 0; f < total.morphism_count(); ++f)
    for (int h = 0; h < total.morphism_count(); ++h) {
      if (total.morphism(f).target != total.morphism(h).source) continue;
      const auto [u, phi] = arrows[f];
      const auto [v, psi] = arrows[h];
      const int vu = base.compose(v, u);
      int chi;
      if (diagram.contravariant) {
        // (v, ψ) o (u, φ) = (vu, F(u)(ψ) o φ) in F(c)
        const auto& fib = diagram.fibers[base.morphism(u).source];
        chi = fib.compose(mor_map(u, psi), phi);
      } else {
        // (v, ψ) o (u, φ) = (vu, ψ o F(v)(φ)) in F(c'')
        const auto& fib = diagram.fibers[base.morphism(v).target];
        chi = fib.compose(psi, mor_map(v, phi));
      }
      auto it = arrow_of.find(key(vu, chi, total.morphism(f).source, total.morphism(h).target));
      if (chi < 0 || it == arrow_of.end()) throw Error("grothendieck: diagram is not functorial");
      total.set_composite(h, f, it->second);
    }
  return g;
}

}  // namespace slift
