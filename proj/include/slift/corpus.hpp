#pragma once

#include <filesystem>

#include "slift/marked.hpp"

namespace slift {

template <class T>
struct CorpusEntry {
  std::string name;
  T value;
  /// "truncated": involves a nerve cut off below its dim_cap, so lifting
  /// answers above the truncation are not those of the full nerve.
  /// "grothendieck": the projection of a Grothendieck construction onto its base.
  std::vector<std::string> tags;

  bool has_tag(const std::string& t) const;
};

struct Corpus {
  std::vector<CorpusEntry<FiniteSimplicialSet>> objects;
  std::vector<CorpusEntry<SimplicialMap>> maps;
  std::vector<CorpusEntry<MarkedSimplicialSet>> marked_objects;
  std::vector<CorpusEntry<MarkedMap>> marked_maps;

  std::size_t size() const { return objects.size() + maps.size() + marked_objects.size() + marked_maps.size(); }
};

/// The small hand-built corpus: simplices, boundaries, horns, nerves,
/// Grothendieck constructions and marked variants.
Corpus builtin_corpus();

/// One file per entry plus manifest.json recording kinds and tags.
void write_corpus(const Corpus& c, const std::filesystem::path& dir);
Corpus read_corpus(const std::filesystem::path& dir);

}  // namespace slift
