#pragma once

#include <filesystem>
#include <map>
#include <optional>

#include "slift/marked.hpp"

namespace slift {

/// Grammar (one record per line, '#' starts a comment line, blank lines ignored):
///
///   sset <name> dimcap <N>
///   dim <d>:
///   <id>                                  (d = 0)
///   <id> | d0=<word>.<id> ... d<d>=<word>.<id>   (d > 0)
///   marked:                               (optional; makes the object marked)
///   <word>.<id>                           (a nondegenerate edge; word must be '-')
///
///   smap <name> : <source> -> <target>
///   <id> -> <word>.<id>                   (one line per nondegenerate source simplex)
///
///   square <i> <p> <top> <bottom>
///
/// A map refers to objects defined earlier in the same document. Words are
/// strictly decreasing degeneracy lists such as s2.s0, or '-' for none.
class ParseError : public Error {
 public:
  ParseError(std::string origin, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct Document {
  struct Object {
    MarkedSimplicialSet value;
    bool marked = false;
  };
  struct Map {
    std::string name, source, target;
    MarkedMap value;
    bool marked = false;
  };
  struct Square {
    std::string i, p, top, bottom;
  };

  std::vector<std::string> object_order;
  std::map<std::string, Object> objects;
  std::vector<Map> maps;
  std::optional<Square> square;

  const Object& object(const std::string& name) const;
  const Map& map(const std::string& name) const;
  /// The only map, or the last one when there are several.
  const Map& last_map() const;

  void add(const FiniteSimplicialSet& x);
  void add(const MarkedSimplicialSet& x);
  /// Adds the map together with its endpoints (renamed apart when needed).
  void add(const SimplicialMap& f);
  void add(const MarkedMap& f);
};

Document parse_document(std::string_view text, const std::string& origin = "<input>");
Document load_document(const std::filesystem::path& path);
std::string emit(const Document& doc);
void save_document(const Document& doc, const std::filesystem::path& path);

std::string emit(const FiniteSimplicialSet& x);
std::string emit(const MarkedSimplicialSet& x);

/// Object and map names usable in the format (whitespace replaced).
std::string format_name(const std::string& name);

}  // namespace slift
