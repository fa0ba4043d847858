// slift: command-line front end for the lifting, fibration and homotopy checks.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slift/format.hpp"
#include "slift/suite.hpp"

using namespace slift;
using nlohmann::ordered_json;

namespace {

struct Globals {
  int height = kDefaultHeight;
  int budget = 10;
  std::string corpus;
  std::string format = "text";
};

// Records are printed as key=value lines or as one JSON document.
class Output {
 public:
  explicit Output(const Globals& g) : globals_(g) {}

  void record(ordered_json r) { records_.push_back(std::move(r)); }

  int finish() const {
    if (globals_.format == "structured") {
      std::cout << (records_.size() == 1 ? records_.front() : ordered_json(records_)).dump(2) << "\n";
      return 0;
    }
    for (const auto& r : records_) {
      bool first = true;
      for (const auto& [k, v] : r.items()) {
        std::cout << (first ? "" : " ") << k << "=";
        if (v.is_string()) {
          const auto s = v.get<std::string>();
          std::cout << (s.find(' ') == std::string::npos && !s.empty() ? s : v.dump());
        } else {
          std::cout << v.dump();
        }
        first = false;
      }
      std::cout << "\n";
    }
    return 0;
  }

 private:
  const Globals& globals_;
  std::vector<ordered_json> records_;
};

const Document::Map& pick_map(const Document& doc, const std::string& name) {
  return name.empty() ? doc.last_map() : doc.map(name);
}

std::string square_text(const LiftingSquare& sq) {
  Document doc;
  doc.add(sq.i);
  doc.add(sq.p);
  doc.add(sq.top);
  doc.add(sq.bottom);
  const auto n = doc.maps.size();
  doc.square = Document::Square{doc.maps[n - 4].name, doc.maps[n - 3].name, doc.maps[n - 2].name, doc.maps[n - 1].name};
  return emit(doc);
}

ordered_json witness_json(const std::optional<LiftingSquare>& sq) {
  if (!sq) return nullptr;
  return square_text(*sq);
}

std::string corpus_dir(const Globals& g) {
  if (!g.corpus.empty()) return g.corpus;
  if (const char* env = std::getenv("SLIFT_CORPUS")) return env;
  return {};
}

Corpus load_corpus(const Globals& g) {
  const auto dir = corpus_dir(g);
  return dir.empty() ? builtin_corpus() : read_corpus(dir);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slift: lifting problems, fibrations and homotopy for finite simplicial sets"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--dim-cap", g.height, "Dimension up to which lifting problems are checked")
      ->check(CLI::Range(0, kMaxDim - 1));
  app.add_option("--budget", g.budget, "Step budget for factorizations")->check(CLI::PositiveNumber);
  app.add_option("--corpus", g.corpus, "Corpus directory (default: $SLIFT_CORPUS, else the built-in corpus)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  Output out(g);
  std::function<void()> action;

  // lift
  auto* lift = app.add_subcommand("lift", "Solve a lifting square");
  std::string square_file;
  bool count = false;
  lift->add_option("--square", square_file, "Square file")->required();
  lift->add_flag("--count", count, "Count all fillers");
  lift->callback([&] {
    action = [&] {
      const auto doc = load_document(square_file);
      if (!doc.square) throw Error(square_file + ": no 'square' line");
      const LiftingSquare sq{doc.map(doc.square->i).value, doc.map(doc.square->p).value, doc.map(doc.square->top).value,
                             doc.map(doc.square->bottom).value};
      const auto h = find_lift(sq);
      ordered_json r{{"lift", h.has_value()}};
      if (count) r["fillers"] = count_lifts(sq);
      if (h) {
        Document d;
        d.add(*h);
        r["filler"] = emit(d);
        r["verified"] = verify_filler(sq, *h);
      }
      out.record(r);
    };
  });

  // classify
  auto* classify = app.add_subcommand("classify", "Classify a map by its lifting properties");
  std::string map_file, map_name;
  classify->add_option("--map", map_file, "Map file")->required();
  classify->add_option("--name", map_name, "Map within the file (default: the last one)");
  classify->callback([&] {
    action = [&] {
      const auto doc = load_document(map_file);
      const auto& m = pick_map(doc, map_name);
      const auto c = classify_fibration(m.value.underlying(), g.height);
      ordered_json r{{"map", m.name}, {"height", g.height}};
      for (const auto& [name, flag] : {std::pair{"inner", &c.inner}, {"left", &c.left}, {"right", &c.right},
                                       {"kan", &c.kan}, {"trivial", &c.trivial}})
        r[name] = flag->holds;
      out.record(r);
      for (const auto& [name, flag] : {std::pair{"inner", &c.inner}, {"left", &c.left}, {"right", &c.right},
                                       {"kan", &c.kan}, {"trivial", &c.trivial}})
        if (!flag->holds)
          out.record({{"class", name}, {"failing_generator", flag->generator}, {"witness", witness_json(flag->witness)}});
    };
  });

  // gens
  auto* gens = app.add_subcommand("gens", "List a generator preset");
  std::string preset_name;
  int depth = 0;
  gens->add_option("--preset", preset_name, "Preset name")->required()->check(CLI::IsMember(preset_names()));
  gens->add_option("--depth", depth, "Pushout-product depth")->check(CLI::NonNegativeNumber);
  gens->callback([&] {
    action = [&] {
      const auto set = preset(preset_name, g.height, depth);
      out.record({{"preset", set.name},
                  {"flavor", to_string(set.flavor)},
                  {"height", set.height},
                  {"members", set.members.size()},
                  {"dropped", set.dropped.size()}});
      for (const auto& m : set.members) {
        const auto& s = m.map.source().underlying();
        const auto& t = m.map.target().underlying();
        out.record({{"generator", m.label},
                    {"source_simplices", s.total()},
                    {"target_simplices", t.total()},
                    {"mono", is_mono(m.map.underlying())}});
      }
      for (const auto& d : set.dropped) out.record({{"dropped", d}});
    };
  });

  // factorize
  auto* factorize = app.add_subcommand("factorize", "Bounded small-object factorization");
  factorize->add_option("--map", map_file, "Map file")->required();
  factorize->add_option("--name", map_name, "Map within the file");
  factorize->add_option("--gens", preset_name, "Generator preset")->required()->check(CLI::IsMember(preset_names()));
  factorize->add_option("--budget", g.budget, "Step budget")->check(CLI::PositiveNumber);
  factorize->callback([&] {
    action = [&] {
      const auto doc = load_document(map_file);
      const auto& m = pick_map(doc, map_name);
      const auto set = preset(preset_name, g.height);
      const auto fac = bounded_factorize(m.value, set, g.budget);
      const auto errors = verify(fac, m.value, set);
      out.record({{"map", m.name},
                  {"complete", fac.complete},
                  {"steps", fac.steps.size()},
                  {"budget", fac.budget},
                  {"verified", errors.empty()}});
      for (std::size_t k = 0; k < fac.steps.size(); ++k)
        out.record({{"step", k}, {"generator", fac.steps[k].generator},
                    {"object_simplices", fac.steps[k].leg.target().underlying().total()}});
    };
  });

  // cartesian-edges
  auto* cedges = app.add_subcommand("cartesian-edges", "p-Cartesian verdicts for every edge");
  std::string method = "cross";
  cedges->add_option("--map", map_file, "Map file")->required();
  cedges->add_option("--name", map_name, "Map within the file");
  cedges->add_option("--method", method, "c2, c3 or cross")->check(CLI::IsMember({"c2", "c3", "cross"}));
  cedges->callback([&] {
    action = [&] {
      const auto doc = load_document(map_file);
      const auto& m = pick_map(doc, map_name);
      for (const auto& v : cartesian_edges(m.value.underlying(), cartesian_method_from(method), g.height)) {
        ordered_json r{{"edge", v.label}, {"cartesian", v.is_cartesian}, {"method", to_string(v.method)}};
        if (v.method == CartesianMethod::cross) {
          r["c2"] = v.c2;
          r["c3"] = v.c3;
          r["agreement"] = v.agreement;
        }
        r["squares"] = v.squares;
        out.record(r);
      }
    };
  });

  // marked-rfib
  auto* mrfib = app.add_subcommand("marked-rfib", "Marked right fibration test");
  std::string rmethod = "cross";
  mrfib->add_option("--map", map_file, "Marked map file")->required();
  mrfib->add_option("--name", map_name, "Map within the file");
  mrfib->add_option("--method", rmethod, "gen, char or cross")->check(CLI::IsMember({"gen", "char", "cross"}));
  mrfib->callback([&] {
    action = [&] {
      const auto doc = load_document(map_file);
      const auto& m = pick_map(doc, map_name);
      const auto v = is_marked_right_fibration(m.value, rfib_method_from(rmethod), g.height);
      ordered_json r{{"map", m.name}, {"holds", v.holds}, {"method", to_string(v.method)}};
      if (v.by_generators) r["generators"] = *v.by_generators;
      if (v.by_characterization) r["characterization"] = *v.by_characterization;
      r["agreement"] = v.agreement;
      r["walking_iso_surrogate"] = v.walking_iso_surrogate;
      if (!v.reason.empty()) r["reason"] = v.reason;
      if (v.witness) r["witness"] = square_text(*v.witness);
      out.record(r);
    };
  });

  // equivalences
  auto* equiv = app.add_subcommand("equivalences", "Equivalences among the edges of an infinity-category");
  std::string object_file, object_name;
  equiv->add_option("--object", object_file, "Object file")->required();
  equiv->add_option("--name", object_name, "Object within the file (default: the first one)");
  equiv->callback([&] {
    action = [&] {
      const auto doc = load_document(object_file);
      if (doc.object_order.empty()) throw Error(object_file + ": no object");
      const auto& x = doc.object(object_name.empty() ? doc.object_order.front() : object_name).value.underlying();
      const HomotopyCategory hc(x, g.height);
      out.record({{"object", x.name()}, {"classes", hc.class_count()}});
      for (int e = 0; e < x.count(1); ++e) {
        const auto edge = Simplex::nondegenerate(1, e);
        out.record({{"edge", x.label(edge)}, {"class", hc.class_of(edge)}, {"equivalence", is_equivalence(hc, edge)}});
      }
    };
  });

  // homotopy-classes
  auto* hclasses = app.add_subcommand("homotopy-classes", "I-homotopy classes of maps X -> W");
  std::string source_file, target_file;
  hclasses->add_option("--source", source_file, "Object file for X")->required();
  hclasses->add_option("--target", target_file, "Object file for W")->required();
  hclasses->callback([&] {
    action = [&] {
      const auto sd = load_document(source_file);
      const auto td = load_document(target_file);
      if (sd.object_order.empty() || td.object_order.empty()) throw Error("object file without an object");
      const auto& x = sd.object(sd.object_order.front());
      const auto& w = td.object(td.object_order.front());
      const bool marked = x.marked || w.marked;
      const auto t = homotopy_classes(x.value, w.value, marked ? Flavor::marked : Flavor::plain);
      out.record({{"source", x.value.underlying().name()},
                  {"target", w.value.underlying().name()},
                  {"flavor", to_string(t.flavor)},
                  {"maps", t.maps.size()},
                  {"classes", t.class_count},
                  {"generating_pairs", t.generating.size()},
                  {"relation_closed", t.relation_closed},
                  {"verified", verify(t).empty()}});
      for (std::size_t k = 0; k < t.maps.size(); ++k) {
        std::string images;
        const auto& f = t.maps[k].underlying();
        for (int v = 0; v < f.source().count(0); ++v)
          images += (v ? "," : "") + f.target().cell(f.image(0, v)).id;
        out.record({{"map", k}, {"class", t.class_of[k]}, {"vertices", images}});
      }
    };
  });

  // retract
  auto* retract = app.add_subcommand("retract", "Search for a deformation retract certificate");
  std::string direction = "right";
  retract->add_option("--map", map_file, "Map file")->required();
  retract->add_option("--name", map_name, "Map within the file");
  retract->add_option("--direction", direction, "right, left, dual-right or dual-left")
      ->check(CLI::IsMember({"right", "left", "dual-right", "dual-left"}));
  retract->callback([&] {
    action = [&] {
      const auto doc = load_document(map_file);
      const auto& m = pick_map(doc, map_name);
      const auto c = find_deformation_retract(m.value, retract_direction_from(direction),
                                              m.marked ? Flavor::marked : Flavor::plain);
      ordered_json r{{"map", m.name}, {"direction", direction}, {"found", c.has_value()}};
      if (c) {
        r["verified"] = verify(*c).empty();
        Document d;
        d.add(c->i.underlying().named("i"));
        d.add(c->r.underlying().named("r"));
        d.add(c->h.underlying().named("h"));
        r["certificate"] = emit(d);
      }
      out.record(r);
    };
  });

  // weq
  auto* weq = app.add_subcommand("weq", "Corpus-relative weak equivalence test");
  std::string side = "contra";
  weq->add_option("--map", map_file, "Map file")->required();
  weq->add_option("--name", map_name, "Map within the file");
  weq->add_option("--corpus", g.corpus, "Corpus directory");
  weq->add_option("--side", side, "contra (right) or co (left)")->check(CLI::IsMember({"co", "contra"}));
  weq->callback([&] {
    action = [&] {
      const auto doc = load_document(map_file);
      const auto& m = pick_map(doc, map_name);
      const auto c = load_corpus(g);
      const auto s = weq_side_from(side);
      const Flavor flavor = m.marked ? Flavor::marked : Flavor::plain;
      std::vector<MarkedSimplicialSet> ws;
      std::size_t skipped = 0;
      const auto consider = [&](const MarkedSimplicialSet& w) {
        if (is_fibrant(w, s, flavor, g.height))
          ws.push_back(w);
        else
          ++skipped;
      };
      if (m.marked)
        for (const auto& o : c.marked_objects) consider(o.value);
      else
        for (const auto& o : c.objects) consider(flat(o.value));
      const auto v = corpus_weak_equivalence(m.value, s, ws, flavor, g.height);
      out.record({{"map", m.name},
                  {"side", side},
                  {"fibrant_objects", ws.size()},
                  {"skipped_nonfibrant", skipped},
                  {"bijective_for_corpus", v.bijective_for_corpus}});
      for (const auto& row : v.per_object)
        out.record({{"object", row.w},
                    {"target_classes", row.target_classes},
                    {"source_classes", row.source_classes},
                    {"injective", row.injective},
                    {"surjective", row.surjective}});
    };
  });

  // certify-final
  auto* cfinal = app.add_subcommand("certify-final", "Right-anodyne then trivial-fibration certificate");
  cfinal->add_option("--map", map_file, "Map file")->required();
  cfinal->add_option("--name", map_name, "Map within the file");
  cfinal->add_option("--budget", g.budget, "Step budget")->check(CLI::PositiveNumber);
  cfinal->callback([&] {
    action = [&] {
      const auto doc = load_document(map_file);
      const auto& m = pick_map(doc, map_name);
      const auto f = m.value.underlying();
      const auto res = certify_final(f, g.budget, g.height);
      out.record({{"map", m.name},
                  {"certified", res.certified},
                  {"status", res.status},
                  {"steps", res.factorization.steps.size()},
                  {"verified", verify(res, f, g.height).empty()}});
    };
  });

  // properness
  auto* proper = app.add_subcommand("properness", "Pull back a deformation retract along a left fibration");
  std::string i_file, p_file;
  bool marked = false;
  proper->add_option("--i", i_file, "File with i : B -> Y")->required();
  proper->add_option("--p", p_file, "File with p : X -> Y")->required();
  proper->add_flag("--marked", marked, "Use the marked cylinder");
  proper->callback([&] {
    action = [&] {
      const auto id = load_document(i_file);
      const auto pd = load_document(p_file);
      const auto c = load_corpus(g);
      std::vector<MarkedMap> rights;
      const auto& i = id.last_map().value;
      const auto& p = pd.last_map().value;
      const Flavor flavor = marked ? Flavor::marked : Flavor::plain;
      if (marked) {
        for (const auto& q : c.marked_maps)
          if (has_rlp(q.value, preset("marked-right", g.height)).holds) rights.push_back(q.value);
      } else {
        for (const auto& q : c.maps)
          if (has_rlp(q.value, horn_generators(HornKind::right, g.height)).holds) rights.push_back(flat(q.value));
      }
      const auto rep = properness_experiment(i, p, flavor, rights, g.height);
      out.record({{"holds", rep.holds},
                  {"certificate", rep.certificate.has_value()},
                  {"certificate_verified", rep.certificate && rep.certificate_errors.empty()},
                  {"llp", rep.llp.holds},
                  {"right_fibrations", rights.size()},
                  {"pullback_simplices", rep.j.source().underlying().total()},
                  {"failure", rep.failure}});
    };
  });

  // boxprod
  auto* box = app.add_subcommand("boxprod", "Pushout product with the cylinder ends");
  std::string kind = "end1";
  std::string emit_file;
  box->add_option("--map", map_file, "Map file")->required();
  box->add_option("--name", map_name, "Map within the file");
  box->add_option("--kind", kind, "boundary, end0 or end1")->check(CLI::IsMember({"boundary", "end0", "end1"}));
  box->add_flag("--marked", marked, "Use the marked cylinder");
  box->add_option("--emit", emit_file, "Write the comparison map to this file");
  box->callback([&] {
    action = [&] {
      const auto doc = load_document(map_file);
      const auto& m = pick_map(doc, map_name);
      const Flavor flavor = marked ? Flavor::marked : Flavor::plain;
      const auto r = kind == "boundary" ? box_boundary(m.value, flavor) : box_end(m.value, kind == "end0" ? 0 : 1, flavor);
      const auto& x = r.corner.underlying();
      std::vector<int> counts;
      for (int d = 0; d <= x.dim(); ++d) counts.push_back(x.count(d));
      out.record({{"map", m.name},
                  {"kind", kind},
                  {"flavor", to_string(flavor)},
                  {"corner_counts", counts},
                  {"mono", is_mono(r.comparison.underlying())}});
      if (!emit_file.empty()) {
        Document d;
        if (marked)
          d.add(r.comparison);
        else
          d.add(r.comparison.underlying().named("box"));
        save_document(d, emit_file);
      }
    };
  });

  // suite
  auto* suite = app.add_subcommand("suite", "Run named checks over a corpus");
  std::string config_file, output_file;
  std::vector<std::string> checks;
  bool no_timing = false;
  suite->add_option("--config", config_file, "Suite configuration (JSON)");
  suite->add_option("--check", checks, "Check to run (repeatable; default: all)");
  suite->add_option("--output", output_file, "Write the report here instead of stdout");
  suite->add_flag("--no-timing", no_timing, "Omit timing fields");
  suite->callback([&] {
    action = [&] {
      SuiteConfig cfg;
      if (!config_file.empty()) {
        cfg = load_suite_config(config_file);
      } else {
        cfg.corpus_dir = corpus_dir(g);
        cfg.dim_cap = g.height;
        cfg.budget = g.budget;
        cfg.checks = checks.empty() ? check_names() : checks;
      }
      if (!output_file.empty()) cfg.output = output_file;
      const auto rep = run_suite(cfg);
      const auto text = g.format == "structured" ? render_json(rep, !no_timing) : render_text(rep, !no_timing);
      if (cfg.output.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(cfg.output);
        if (!f) throw Error("cannot write " + cfg.output);
        f << text;
      }
      if (!rep.all_passed()) std::exit(1);
    };
  });

  // corpus
  auto* corpus = app.add_subcommand("corpus", "Manage corpus directories");
  corpus->require_subcommand(1);
  auto* cemit = corpus->add_subcommand("emit", "Write the built-in corpus");
  std::string dir;
  cemit->add_option("dir", dir, "Target directory")->required();
  cemit->callback([&] {
    action = [&] {
      const auto c = builtin_corpus();
      write_corpus(c, dir);
      out.record({{"written", dir}, {"entries", c.size()}});
    };
  });
  auto* clist = corpus->add_subcommand("list", "List corpus entries");
  clist->callback([&] {
    action = [&] {
      const auto c = load_corpus(g);
      for (const auto& e : c.objects) out.record({{"name", e.name}, {"kind", "object"}, {"tags", e.tags}});
      for (const auto& e : c.maps) out.record({{"name", e.name}, {"kind", "map"}, {"tags", e.tags}});
      for (const auto& e : c.marked_objects) out.record({{"name", e.name}, {"kind", "marked-object"}, {"tags", e.tags}});
      for (const auto& e : c.marked_maps) out.record({{"name", e.name}, {"kind", "marked-map"}, {"tags", e.tags}});
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    action();
  } catch (const ParseError& e) {
    std::cerr << "slift: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "slift: " << e.what() << "\n";
    return 2;
  }
  return out.finish();
}
