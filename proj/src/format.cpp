#include "slift/format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace slift {

ParseError::ParseError(std::string origin, int line, const std::string& message)
    : Error(origin + ":" + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw Error("expected a number, got '" + std::string(s) + "'");
  return v;
}

// Resolves "<word>.<id>" against cells that are already known.
Simplex parse_label(std::string_view label, const std::map<std::string, Simplex, std::less<>>& ids) {
  const auto parts = split(label, '.');
  if (parts.size() < 2) throw Error("expected <word>.<id>, got '" + std::string(label) + "'");
  const auto id = parts.back();
  const auto it = ids.find(id);
  if (it == ids.end()) throw Error("unknown simplex '" + std::string(id) + "'");
  const std::vector<std::string_view> tokens(parts.begin(), parts.end() - 1);
  const int extra = tokens.size() == 1 && tokens[0] == "-" ? 0 : static_cast<int>(tokens.size());
  const int dim = it->second.dim + extra;
  if (dim > kMaxDim) throw Error("degeneracy word too long");
  const auto word = word_from_tokens(tokens, dim);
  return degenerate_by(it->second, dim, word);
}

class Parser {
 public:
  Parser(std::string_view text, std::string origin) : origin_(std::move(origin)) {
    for (auto line : split(text, '\n')) {
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.push_back(line);
    }
  }

  Document run() {
    while (next()) {
      const auto w = words(current_);
      if (w[0] == "sset") {
        object(w);
      } else if (w[0] == "smap") {
        map(w);
      } else if (w[0] == "square") {
        if (w.size() != 5) fail("expected 'square <i> <p> <top> <bottom>'");
        if (doc_.square) fail("more than one square");
        for (std::size_t k = 1; k < 5; ++k) lookup_map(w[k]);
        doc_.square = Document::Square{std::string(w[1]), std::string(w[2]), std::string(w[3]), std::string(w[4])};
        consume();
      } else {
        fail("expected 'sset', 'smap' or 'square', got '" + std::string(w[0]) + "'");
      }
    }
    return std::move(doc_);
  }

 private:
  // Advances to the next meaningful line without consuming it.
  bool next() {
    while (pos_ < lines_.size()) {
      const auto w = words(lines_[pos_]);
      if (!w.empty() && w[0][0] != '#') {
        current_ = lines_[pos_];
        return true;
      }
      ++pos_;
    }
    return false;
  }
  void consume() { ++pos_; }
  int line() const { return static_cast<int>(pos_) + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(origin_, line(), msg); }

  template <class F>
  auto guarded(F&& f) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  bool is_header(std::string_view w) const { return w == "sset" || w == "smap" || w == "square"; }

  void object(const std::vector<std::string_view>& w) {
    if (w.size() != 4 || w[2] != "dimcap") fail("expected 'sset <name> dimcap <N>'");
    const std::string name(w[1]);
    if (doc_.objects.count(name)) fail("object '" + name + "' defined twice");
    const int header = line();
    const int cap = guarded([&] { return parse_int(w[3]); });
    if (cap < 0 || cap > kMaxDim) fail("dimcap out of range");
    consume();

    SSetBuilder builder(name, cap);
    std::map<std::string, Simplex, std::less<>> ids;
    int dim = -1;
    bool marked = false;
    std::vector<bool> marks;
    std::optional<FiniteSimplicialSet> built;
    const auto finish = [&] {
      if (!built) built = guarded([&] { return builder.build(); });
      return *built;
    };
    while (next()) {
      const auto v = words(current_);
      if (is_header(v[0])) break;
      if (v[0] == "marked:" && v.size() == 1) {
        if (marked) fail("second 'marked:' section");
        marked = true;
        marks.assign(finish().count(1), false);
        consume();
        continue;
      }
      if (marked) {
        if (v.size() != 1) fail("expected one edge per line in 'marked:'");
        const auto s = guarded([&] { return parse_label(v[0], ids); });
        if (s.degenerate()) fail("degenerate edges are marked implicitly and must not be listed");
        if (s.dim != 1) fail("marked simplex '" + std::string(v[0]) + "' is not an edge");
        if (marks[s.base]) fail("edge '" + std::string(v[0]) + "' listed twice");
        marks[s.base] = true;
        consume();
        continue;
      }
      if (v[0] == "dim") {
        if (v.size() != 2 || v[1].back() != ':') fail("expected 'dim <d>:'");
        const int d = guarded([&] { return parse_int(v[1].substr(0, v[1].size() - 1)); });
        if (d != dim + 1) fail("expected 'dim " + std::to_string(dim + 1) + ":'");
        if (d > cap) fail("dimension " + std::to_string(d) + " exceeds dimcap " + std::to_string(cap));
        dim = d;
        consume();
        continue;
      }
      if (dim < 0) fail("simplex before any 'dim' line");
      const std::string id(v[0]);
      if (!valid_identifier(id)) fail("invalid identifier '" + id + "'");
      if (ids.count(id)) fail("duplicate identifier '" + id + "'");
      std::vector<Simplex> faces;
      if (dim == 0) {
        if (v.size() != 1) fail("vertices have no faces");
      } else {
        if (v.size() != static_cast<std::size_t>(dim) + 3 || v[1] != "|")
          fail("expected '" + id + " | d0=... d" + std::to_string(dim) + "=...'");
        for (int i = 0; i <= dim; ++i) {
          const auto item = v[static_cast<std::size_t>(i) + 2];
          const std::string key = "d" + std::to_string(i) + "=";
          if (item.substr(0, key.size()) != key) fail("expected '" + key + "...'");
          const auto f = guarded([&] { return parse_label(item.substr(key.size()), ids); });
          if (f.dim != dim - 1) fail("face " + key.substr(0, key.size() - 1) + " has dimension " + std::to_string(f.dim));
          faces.push_back(f);
        }
      }
      const int index = builder.add(dim, id, faces);
      ids.emplace(id, Simplex::nondegenerate(dim, index));
      consume();
    }
    const auto x = finish();
    const auto report = validate(x);
    if (!report.empty()) throw ParseError(origin_, header, "invalid simplicial set '" + name + "': " + report.front());
    if (!marked) marks.assign(x.count(1), false);
    doc_.object_order.push_back(name);
    doc_.objects.emplace(name, Document::Object{MarkedSimplicialSet(x, marks), marked});
  }

  const Document::Map& lookup_map(std::string_view name) const {
    for (const auto& m : doc_.maps)
      if (m.name == name) return m;
    fail("unknown map '" + std::string(name) + "'");
  }

  void map(const std::vector<std::string_view>& w) {
    if (w.size() != 6 || w[2] != ":" || w[4] != "->") fail("expected 'smap <name> : <source> -> <target>'");
    const std::string name(w[1]);
    for (const auto& m : doc_.maps)
      if (m.name == name) fail("map '" + name + "' defined twice");
    const auto src_it = doc_.objects.find(std::string(w[3]));
    const auto tgt_it = doc_.objects.find(std::string(w[5]));
    if (src_it == doc_.objects.end()) fail("unknown object '" + std::string(w[3]) + "'");
    if (tgt_it == doc_.objects.end()) fail("unknown object '" + std::string(w[5]) + "'");
    const int header = line();
    consume();
    const auto& src = src_it->second.value.underlying();
    const auto& tgt = tgt_it->second.value.underlying();
    std::map<std::string, Simplex, std::less<>> tgt_ids;
    for (int d = 0; d <= tgt.dim(); ++d)
      for (int k = 0; k < tgt.count(d); ++k) tgt_ids.emplace(tgt.cell(d, k).id, Simplex::nondegenerate(d, k));

    ImageTable images(static_cast<std::size_t>(src.dim() + 1));
    std::vector<std::vector<bool>> seen(images.size());
    for (int d = 0; d <= src.dim(); ++d) {
      images[d].resize(src.count(d));
      seen[d].assign(src.count(d), false);
    }
    while (next()) {
      const auto v = words(current_);
      if (is_header(v[0])) break;
      if (v.size() != 3 || v[1] != "->") fail("expected '<id> -> <word>.<id>'");
      const auto s = src.find(v[0]);
      if (!s) fail("unknown source simplex '" + std::string(v[0]) + "'");
      if (seen[s->dim][s->base]) fail("simplex '" + std::string(v[0]) + "' assigned twice");
      const auto t = guarded([&] { return parse_label(v[2], tgt_ids); });
      if (t.dim != s->dim) fail("image of '" + std::string(v[0]) + "' has the wrong dimension");
      images[s->dim][s->base] = t;
      seen[s->dim][s->base] = true;
      consume();
    }
    for (int d = 0; d <= src.dim(); ++d)
      for (int k = 0; k < src.count(d); ++k)
        if (!seen[d][k]) throw ParseError(origin_, header, "no image for '" + src.cell(d, k).id + "'");
    const SimplicialMap f(src, tgt, std::move(images), name);
    const bool marked = src_it->second.marked || tgt_it->second.marked;
    auto problems = validate(f);
    if (problems.empty() && marked) {
      const MarkedMap mf(src_it->second.value, tgt_it->second.value, f);
      problems = validate(mf);
    }
    if (!problems.empty()) throw ParseError(origin_, header, "invalid map '" + name + "': " + problems.front());
    doc_.maps.push_back({name, std::string(w[3]), std::string(w[5]),
                         MarkedMap(src_it->second.value, tgt_it->second.value, f), marked});
  }

  std::string origin_;
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
  std::string_view current_;
  Document doc_;
};

void emit_cells(std::ostream& out, const FiniteSimplicialSet& x, const std::string& name) {
  out << "sset " << name << " dimcap " << x.dim_cap() << "\n";
  for (int d = 0; d <= x.dim(); ++d) {
    out << "dim " << d << ":\n";
    for (const auto& c : x.cells(d)) {
      out << c.id;
      if (d > 0) {
        out << " |";
        for (std::size_t i = 0; i < c.faces.size(); ++i) out << " d" << i << "=" << x.label(c.faces[i]);
      }
      out << "\n";
    }
  }
}

void emit_marks(std::ostream& out, const MarkedSimplicialSet& m) {
  out << "marked:\n";
  const auto& x = m.underlying();
  for (int k = 0; k < x.count(1); ++k)
    if (m.marks()[k]) out << x.label(Simplex::nondegenerate(1, k)) << "\n";
}

}  // namespace

std::string format_name(const std::string& name) {
  std::string out;
  for (char c : name) out += (c == ' ' || c == '\t' || c == '\n' || c == '#') ? '_' : c;
  return out.empty() ? "X" : out;
}

const Document::Object& Document::object(const std::string& name) const {
  const auto it = objects.find(name);
  if (it == objects.end()) throw Error("no object named '" + name + "'");
  return it->second;
}

const Document::Map& Document::map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.name == name) return m;
  throw Error("no map named '" + name + "'");
}

const Document::Map& Document::last_map() const {
  if (maps.empty()) throw Error("document contains no map");
  return maps.back();
}

namespace {

std::string add_object(Document& doc, const MarkedSimplicialSet& x, bool marked) {
  const std::string base = format_name(x.underlying().name());
  std::string name = base;
  for (int k = 1;; ++k) {
    const auto it = doc.objects.find(name);
    if (it == doc.objects.end()) break;
    if (it->second.value == x && it->second.marked == marked) return name;
    name = base + "_" + std::to_string(k);
  }
  doc.object_order.push_back(name);
  doc.objects.emplace(name, Document::Object{x, marked});
  return name;
}

void add_map(Document& doc, const MarkedMap& f, bool marked) {
  const std::string src = add_object(doc, f.source(), marked);
  const std::string tgt = add_object(doc, f.target(), marked);
  const std::string base = format_name(f.underlying().name().empty() ? "f" : f.underlying().name());
  std::string name = base;
  for (int k = 1;; ++k) {
    bool taken = false;
    for (const auto& m : doc.maps) taken = taken || m.name == name;
    if (!taken) break;
    name = base + "_" + std::to_string(k);
  }
  doc.maps.push_back({name, src, tgt, f, marked});
}

}  // namespace

void Document::add(const FiniteSimplicialSet& x) { add_object(*this, flat(x), false); }
void Document::add(const MarkedSimplicialSet& x) { add_object(*this, x, true); }
void Document::add(const SimplicialMap& f) { add_map(*this, flat(f), false); }
void Document::add(const MarkedMap& f) { add_map(*this, f, true); }

Document parse_document(std::string_view text, const std::string& origin) { return Parser(text, origin).run(); }

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path.string());
}

std::string emit(const Document& doc) {
  std::ostringstream out;
  bool first = true;
  for (const auto& name : doc.object_order) {
    const auto& o = doc.objects.at(name);
    if (!first) out << "\n";
    first = false;
    emit_cells(out, o.value.underlying(), name);
    if (o.marked) emit_marks(out, o.value);
  }
  for (const auto& m : doc.maps) {
    if (!first) out << "\n";
    first = false;
    out << "smap " << m.name << " : " << m.source << " -> " << m.target << "\n";
    const auto& f = m.value.underlying();
    const auto& src = f.source();
    for (int d = 0; d <= src.dim(); ++d)
      for (int k = 0; k < src.count(d); ++k)
        out << src.cell(d, k).id << " -> " << f.target().label(f.image(d, k)) << "\n";
  }
  if (doc.square) {
    if (!first) out << "\n";
    out << "square " << doc.square->i << " " << doc.square->p << " " << doc.square->top << " " << doc.square->bottom
        << "\n";
  }
  return out.str();
}

void save_document(const Document& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << emit(doc);
}

std::string emit(const FiniteSimplicialSet& x) {
  Document doc;
  doc.add(x);
  return emit(doc);
}

std::string emit(const MarkedSimplicialSet& x) {
  Document doc;
  doc.add(x);
  return emit(doc);
}

}  // namespace slift
