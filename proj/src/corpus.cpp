#include "slift/corpus.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "slift/cartesian.hpp"
#include "slift/category.hpp"
#include "slift/format.hpp"

namespace slift {

template <class T>
bool CorpusEntry<T>::has_tag(const std::string& t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

template struct CorpusEntry<FiniteSimplicialSet>;
template struct CorpusEntry<SimplicialMap>;
template struct CorpusEntry<MarkedSimplicialSet>;
template struct CorpusEntry<MarkedMap>;

namespace {

struct Fibration {
  std::string name;
  SimplicialMap p;
};

Fibration total_nerve(const std::string& name, const CategoryDiagram& diagram) {
  const auto base = ordinal(1);
  const auto el = grothendieck(base, diagram);
  const auto total = nerve(el.total).renamed(name);
  const auto nbase = nerve(base).renamed("N1");
  return {name, nerve_map(el.projection(base), total, nbase).named(name + "_p")};
}

CategoryDiagram cat_diagram(bool contravariant, std::vector<SmallCategory> fibers, std::vector<int> objects,
                            std::vector<int> morphisms) {
  CategoryDiagram d;
  d.contravariant = contravariant;
  d.fibers = std::move(fibers);
  d.on_objects = {{}, {}, std::move(objects)};
  d.on_morphisms = {{}, {}, std::move(morphisms)};
  return d;
}

SimplicialMap vertex_of(const FiniteSimplicialSet& x, const std::string& id, const std::string& name) {
  return map_from_vertices(standard_simplex(0), x, {*x.find(id)})->named(name);
}

}  // namespace

Corpus builtin_corpus() {
  Corpus c;
  const auto obj = [&](const std::string& name, const FiniteSimplicialSet& x, std::vector<std::string> tags = {}) {
    c.objects.push_back({name, x.renamed(name), std::move(tags)});
    return c.objects.back().value;
  };
  const auto map = [&](const std::string& name, const SimplicialMap& f, std::vector<std::string> tags = {}) {
    c.maps.push_back({name, f.named(name), std::move(tags)});
  };
  const auto mobj = [&](const std::string& name, const MarkedSimplicialSet& x, std::vector<std::string> tags = {}) {
    c.marked_objects.push_back({name, x.renamed(name), std::move(tags)});
  };
  const auto mmap = [&](const std::string& name, const MarkedMap& f, std::vector<std::string> tags = {}) {
    c.marked_maps.push_back({name, MarkedMap(f.source(), f.target(), f.underlying().named(name)), std::move(tags)});
  };

  const auto d0 = obj("D0", standard_simplex(0));
  const auto d1 = obj("D1", standard_simplex(1));
  const auto d2 = obj("D2", standard_simplex(2));
  obj("D3", standard_simplex(3));
  const auto s0 = obj("S0", boundary(1));
  obj("dD2", boundary(2));
  for (int k = 0; k <= 2; ++k) obj("L2_" + std::to_string(k), horn(2, k));
  const auto j = obj("J", nerve(walking_isomorphism(), 3).with_dim_cap(kDefaultDimCap), {"truncated"});
  const auto sq = obj("Sq", product(standard_simplex(1), standard_simplex(1)).object());
  const auto circle = obj("S1", Pushout(boundary_inclusion(1), to_point(boundary(1))).object());

  const std::vector<Fibration> groth{
      // [1]ᵒᵖ → Cat: F(0) = [1], F(1) = {y}, picking out 1.
      total_nerve("Cart", cat_diagram(true, {ordinal(1), discrete_category({"y"})}, {1}, {1})),
      // [1]ᵒᵖ → Set: two points over one.
      total_nerve("RFib", set_diagram(true, {{"x"}, {"p", "q"}}, {{}, {}, {0, 0}})),
      // [1]ᵒᵖ → Cat: F(0) = {x}, F(1) = [1], constant.
      total_nerve("Const", cat_diagram(true, {discrete_category({"x"}), ordinal(1)}, {0, 0}, {0, 0, 0})),
      // [1] → Set: two points onto one.
      total_nerve("LFib", set_diagram(false, {{"a", "b"}, {"c"}}, {{}, {}, {0, 0}})),
      // [1] → Cat: {y} ↦ 0 in [1].
      total_nerve("CoCart", cat_diagram(false, {discrete_category({"y"}), ordinal(1)}, {0}, {0})),
  };
  for (const auto& g : groth) obj(g.name, g.p.source());

  const auto incl = [&](const std::string& name, const SimplicialMap& f, const FiniteSimplicialSet& src,
                        const FiniteSimplicialSet& tgt) { map(name, f.with_source(src).with_target(tgt)); };
  incl("dD1_D1", boundary_inclusion(1), s0, d1);
  incl("dD2_D2", boundary_inclusion(2), boundary(2).renamed("dD2"), d2);
  for (int k = 0; k <= 2; ++k)
    incl("L2_" + std::to_string(k) + "_D2", horn_inclusion(2, k), horn(2, k).renamed("L2_" + std::to_string(k)), d2);
  map("v0_D1", vertex_of(d1, "0", "v0"));
  map("v1_D1", vertex_of(d1, "1", "v1"));
  map("v_J", vertex_of(j, "a", "v"), {"truncated"});
  map("D1_pt", to_point(d1));
  map("D2_pt", to_point(d2));
  map("fold", to_point(s0));
  map("L2_1_pt", to_point(horn(2, 1).renamed("L2_1")));
  map("S1_pt", to_point(circle));
  map("Sq_pt", to_point(sq));
  map("J_pt", to_point(j), {"truncated"});
  map("id_D1", SimplicialMap::identity(d1));
  map("id_D0", SimplicialMap::identity(d0));
  map("s0_D2", *map_from_vertices(d2, d1, {*d1.find("0"), *d1.find("0"), *d1.find("1")}));
  map("Sq_pr", product(standard_simplex(1), standard_simplex(1)).first().with_source(sq).with_target(d1));
  for (const auto& g : groth) map(g.name + "_p", g.p, {"grothendieck"});

  const auto pt = sharp(d0);
  mobj("D0s", pt);
  mobj("D1f", flat(d1));
  mobj("D1s", sharp(d1));
  mobj("Js", sharp(j), {"truncated"});
  mobj("Jf", flat(j), {"truncated"});
  mobj("S0s", sharp(s0));
  const auto to_pt = [&](const MarkedSimplicialSet& m) { return MarkedMap(m, pt, to_point(m.underlying())); };
  mmap("D1s_pt", to_pt(sharp(d1)));
  mmap("D1f_pt", to_pt(flat(d1)));
  mmap("D2f_pt", to_pt(flat(d2)));
  mmap("Js_pt", to_pt(sharp(j)), {"truncated"});
  mmap("Jf_pt", to_pt(flat(j)), {"truncated"});
  mmap("S0s_pt", to_pt(sharp(s0)));
  mmap("id_D0s", identity(pt));
  mmap("mark1", MarkedMap(flat(d1), sharp(d1), SimplicialMap::identity(d1)));
  mmap("v1s", sharp(vertex_of(d1, "1", "v1")));
  for (const auto& g : groth) {
    const auto natural = natural_marking(g.p).renamed(g.name + "n");
    mobj(g.name + "n", natural);
    mmap(g.name + "n_p", MarkedMap(natural, sharp(g.p.target()), g.p), {"grothendieck"});
  }
  mmap("LFibs_p", sharp(groth[3].p));
  return c;
}

namespace {

using nlohmann::json;

std::string file_for(const std::string& name, bool is_map) { return format_name(name) + (is_map ? ".smap" : ".sset"); }

template <class T>
void write_entries(json& manifest, const std::vector<CorpusEntry<T>>& entries, const std::string& kind,
                   const std::filesystem::path& dir) {
  constexpr bool is_map = std::is_same_v<T, SimplicialMap> || std::is_same_v<T, MarkedMap>;
  for (const auto& e : entries) {
    Document doc;
    doc.add(e.value);
    const auto file = file_for(e.name, is_map);
    save_document(doc, dir / file);
    manifest["entries"].push_back({{"name", e.name}, {"kind", kind}, {"file", file}, {"tags", e.tags}});
  }
}

}  // namespace

void write_corpus(const Corpus& c, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  json manifest;
  manifest["entries"] = json::array();
  write_entries(manifest, c.objects, "object", dir);
  write_entries(manifest, c.maps, "map", dir);
  write_entries(manifest, c.marked_objects, "marked-object", dir);
  write_entries(manifest, c.marked_maps, "marked-map", dir);
  std::ofstream out(dir / "manifest.json");
  if (!out) throw Error("cannot write " + (dir / "manifest.json").string());
  out << manifest.dump(1) << "\n";
}

Corpus read_corpus(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw Error("no manifest.json in corpus directory " + dir.string());
  json manifest;
  try {
    in >> manifest;
  } catch (const json::exception& e) {
    throw Error("manifest.json: " + std::string(e.what()));
  }
  Corpus c;
  for (const auto& e : manifest.at("entries")) {
    const std::string name = e.at("name");
    const std::string kind = e.at("kind");
    const auto tags = e.value("tags", std::vector<std::string>{});
    const auto doc = load_document(dir / e.at("file").get<std::string>());
    if (kind == "object") {
      if (doc.object_order.empty()) throw Error(name + ": no object in file");
      c.objects.push_back({name, doc.object(doc.object_order.front()).value.underlying().renamed(name), tags});
    } else if (kind == "marked-object") {
      if (doc.object_order.empty()) throw Error(name + ": no object in file");
      c.marked_objects.push_back({name, doc.object(doc.object_order.front()).value.renamed(name), tags});
    } else if (kind == "map") {
      c.maps.push_back({name, doc.last_map().value.underlying().named(name), tags});
    } else if (kind == "marked-map") {
      c.marked_maps.push_back({name, doc.last_map().value, tags});
    } else {
      throw Error(name + ": unknown kind '" + kind + "'");
    }
  }
  return c;
}

}  // namespace slift
