#include "slift/simplicial_set.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace slift {

namespace {

struct Level {
  std::vector<Simplex> simplices;
  std::unordered_map<Simplex, int, SimplexHash> index;
  std::vector<std::vector<Simplex>> faces;
  std::unordered_map<Simplex, std::vector<int>, SimplexHash> by_face0;
};

const std::vector<Cell> kNoCells;
const std::vector<int> kNoIndices;

// Subsets of {0..m-1} of the given size, as bitmasks.
void subsets_of_size(int m, int size, std::vector<std::uint16_t>& out) {
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask)
    if (std::popcount(mask) == size) out.push_back(static_cast<std::uint16_t>(mask));
}

}  // namespace

struct FiniteSimplicialSet::Impl {
  std::string name;
  int dim_cap = kDefaultDimCap;
  std::vector<std::vector<Cell>> cells;
  std::unordered_map<std::string, Simplex> by_id;

  mutable std::mutex table_mutex;
  mutable std::vector<std::unique_ptr<Level>> levels;
};

FiniteSimplicialSet::FiniteSimplicialSet() : impl_(std::make_shared<Impl>()) {}
FiniteSimplicialSet::FiniteSimplicialSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

const std::string& FiniteSimplicialSet::name() const { return impl_->name; }
int FiniteSimplicialSet::dim_cap() const { return impl_->dim_cap; }

int FiniteSimplicialSet::dim() const {
  for (int d = static_cast<int>(impl_->cells.size()) - 1; d >= 0; --d)
    if (!impl_->cells[d].empty()) return d;
  return -1;
}

int FiniteSimplicialSet::count(int d) const {
  if (d < 0 || d >= static_cast<int>(impl_->cells.size())) return 0;
  return static_cast<int>(impl_->cells[d].size());
}

std::size_t FiniteSimplicialSet::total() const {
  std::size_t n = 0;
  for (const auto& level : impl_->cells) n += level.size();
  return n;
}

const std::vector<Cell>& FiniteSimplicialSet::cells(int d) const {
  if (d < 0 || d >= static_cast<int>(impl_->cells.size())) return kNoCells;
  return impl_->cells[d];
}

const Cell& FiniteSimplicialSet::cell(int d, int index) const { return impl_->cells.at(d).at(index); }

std::optional<Simplex> FiniteSimplicialSet::find(std::string_view id) const {
  auto it = impl_->by_id.find(std::string(id));
  if (it == impl_->by_id.end()) return std::nullopt;
  return it->second;
}

std::string FiniteSimplicialSet::label(const Simplex& s) const {
  return word_to_string(s.degen) + "." + cell(s.base_dim, s.base).id;
}

Simplex FiniteSimplicialSet::act_nondeg(int n, int index, const Monotone& theta) const {
  const int k = static_cast<int>(theta.size()) - 1;
  EpiMono em = epi_mono(theta, n);
  const std::uint16_t word = word_of_surjection(em.surj);
  if (static_cast<int>(em.inj.size()) == n + 1)
    return Simplex{index, static_cast<std::uint8_t>(n), static_cast<std::uint8_t>(k), word};
  // Peel off the largest vertex missed by the injective part through a stored face.
  int missing = n;
  for (int v = n; v >= 0; --v) {
    if (!std::binary_search(em.inj.begin(), em.inj.end(), v)) {
      missing = v;
      break;
    }
  }
  const Simplex& f = cell(n, index).faces.at(missing);
  Monotone rest(em.inj.size());
  for (std::size_t t = 0; t < em.inj.size(); ++t) rest[t] = em.inj[t] > missing ? em.inj[t] - 1 : em.inj[t];
  const Simplex y = act(f, rest);
  return degenerate_by(y, k, word);
}

Simplex FiniteSimplicialSet::act(const Simplex& s, std::span<const int> theta) const {
  const Monotone sigma = surjection_from_word(s.dim, s.degen);
  return act_nondeg(s.base_dim, s.base, compose(sigma, theta));
}

Simplex FiniteSimplicialSet::face(const Simplex& s, int i) const {
  if (s.dim == 0) throw Error("face of a vertex");
  return act(s, coface(s.dim, i));
}

std::vector<Simplex> FiniteSimplicialSet::vertices_of(const Simplex& s) const {
  std::vector<Simplex> out;
  for (int v = 0; v <= s.dim; ++v) out.push_back(act(s, Monotone{v}));
  return out;
}

namespace {

const Level& level_of(const FiniteSimplicialSet& x, const FiniteSimplicialSet::Impl& impl, int d) {
  std::lock_guard lock(impl.table_mutex);
  if (d < static_cast<int>(impl.levels.size()) && impl.levels[d]) return *impl.levels[d];
  if (static_cast<int>(impl.levels.size()) <= d) impl.levels.resize(d + 1);
  auto level = std::make_unique<Level>();
  std::vector<std::pair<std::string, Simplex>> labelled;
  for (int n = 0; n <= d && n < static_cast<int>(impl.cells.size()); ++n) {
    std::vector<std::uint16_t> words;
    subsets_of_size(d, d - n, words);
    for (int idx = 0; idx < static_cast<int>(impl.cells[n].size()); ++idx)
      for (auto w : words) {
        Simplex s{idx, static_cast<std::uint8_t>(n), static_cast<std::uint8_t>(d), w};
        labelled.emplace_back(word_to_string(w) + "." + impl.cells[n][idx].id, s);
      }
  }
  std::sort(labelled.begin(), labelled.end());
  level->simplices.reserve(labelled.size());
  for (auto& [lab, s] : labelled) {
    level->index.emplace(s, static_cast<int>(level->simplices.size()));
    level->simplices.push_back(s);
  }
  level->faces.resize(level->simplices.size());
  for (std::size_t k = 0; k < level->simplices.size(); ++k) {
    if (d == 0) continue;
    auto& fs = level->faces[k];
    for (int i = 0; i <= d; ++i) fs.push_back(x.act(level->simplices[k], coface(d, i)));
    level->by_face0[fs[0]].push_back(static_cast<int>(k));
  }
  impl.levels[d] = std::move(level);
  return *impl.levels[d];
}

}  // namespace

const std::vector<Simplex>& FiniteSimplicialSet::simplices(int d) const { return level_of(*this, *impl_, d).simplices; }

int FiniteSimplicialSet::index_of(const Simplex& s) const {
  const Level& level = level_of(*this, *impl_, s.dim);
  auto it = level.index.find(s);
  if (it == level.index.end()) throw Error("simplex not in table");
  return it->second;
}

const std::vector<Simplex>& FiniteSimplicialSet::faces_at(int d, int index) const {
  return level_of(*this, *impl_, d).faces.at(index);
}

const std::vector<int>& FiniteSimplicialSet::with_face0(int d, const Simplex& face0) const {
  const Level& level = level_of(*this, *impl_, d);
  auto it = level.by_face0.find(face0);
  return it == level.by_face0.end() ? kNoIndices : it->second;
}

FiniteSimplicialSet FiniteSimplicialSet::renamed(std::string name) const {
  SSetBuilder b(std::move(name), dim_cap());
  for (int d = 0; d <= dim(); ++d)
    for (const auto& c : cells(d)) b.add(d, c.id, c.faces);
  return b.build();
}

FiniteSimplicialSet FiniteSimplicialSet::with_dim_cap(int cap) const {
  SSetBuilder b(name(), cap);
  for (int d = 0; d <= dim(); ++d)
    for (const auto& c : cells(d)) b.add(d, c.id, c.faces);
  return b.build();
}

FiniteSimplicialSet FiniteSimplicialSet::relabeled(const std::vector<std::vector<std::string>>& ids) const {
  SSetBuilder b(name(), dim_cap());
  for (int d = 0; d <= dim(); ++d)
    for (int k = 0; k < count(d); ++k) b.add(d, ids.at(d).at(k), cell(d, k).faces);
  return b.build();
}

bool FiniteSimplicialSet::operator==(const FiniteSimplicialSet& other) const {
  if (impl_ == other.impl_) return true;
  if (dim() != other.dim()) return false;
  for (int d = 0; d <= dim(); ++d)
    if (cells(d) != other.cells(d)) return false;
  return true;
}

SSetBuilder::SSetBuilder(std::string name, int dim_cap) : name_(std::move(name)), dim_cap_(dim_cap) {}

int SSetBuilder::add(int dim, std::string id, std::vector<Simplex> faces) {
  if (dim < 0 || dim > kMaxDim) throw Error("simplex dimension out of range");
  if (static_cast<int>(cells_.size()) <= dim) cells_.resize(dim + 1);
  cells_[dim].push_back(Cell{std::move(id), std::move(faces)});
  return static_cast<int>(cells_[dim].size()) - 1;
}

int SSetBuilder::count(int dim) const {
  return dim < static_cast<int>(cells_.size()) ? static_cast<int>(cells_[dim].size()) : 0;
}

FiniteSimplicialSet SSetBuilder::build() const {
  auto impl = std::make_shared<FiniteSimplicialSet::Impl>();
  impl->name = name_;
  impl->dim_cap = dim_cap_;
  impl->cells = cells_;
  while (!impl->cells.empty() && impl->cells.back().empty()) impl->cells.pop_back();
  for (int d = 0; d < static_cast<int>(impl->cells.size()); ++d)
    for (int k = 0; k < static_cast<int>(impl->cells[d].size()); ++k)
      impl->by_id.emplace(impl->cells[d][k].id, Simplex::nondegenerate(d, k));
  return FiniteSimplicialSet(std::move(impl));
}

FiniteSimplicialSet SSetBuilder::build_checked() const {
  FiniteSimplicialSet x = build();
  auto report = validate(x);
  if (!report.empty()) {
    std::string msg = "invalid simplicial set '" + name_ + "':";
    for (const auto& r : report) msg += "\n  " + r;
    throw Error(msg);
  }
  return x;
}

bool valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id)
    if (c == '.' || c == '|' || c == '=' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#')
      return false;
  return true;
}

std::vector<std::string> validate(const FiniteSimplicialSet& x) {
  std::vector<std::string> report;
  std::unordered_set<std::string> seen;
  if (x.dim() > x.dim_cap())
    report.push_back("dimension " + std::to_string(x.dim()) + " exceeds dim_cap " + std::to_string(x.dim_cap()));
  bool structural_ok = true;
  for (int d = 0; d <= x.dim(); ++d) {
    for (int k = 0; k < x.count(d); ++k) {
      const Cell& c = x.cell(d, k);
      const std::string where = "simplex '" + c.id + "' (dim " + std::to_string(d) + ")";
      if (!valid_identifier(c.id)) report.push_back(where + ": invalid identifier");
      if (!seen.insert(c.id).second) report.push_back(where + ": duplicate identifier");
      const std::size_t expected = d == 0 ? 0 : static_cast<std::size_t>(d) + 1;
      if (c.faces.size() != expected) {
        report.push_back(where + ": has " + std::to_string(c.faces.size()) + " faces, expected " +
                         std::to_string(expected));
        structural_ok = false;
        continue;
      }
      for (std::size_t i = 0; i < c.faces.size(); ++i) {
        const Simplex& f = c.faces[i];
        const std::string fw = where + " face d" + std::to_string(i);
        if (f.dim != d - 1) {
          report.push_back(fw + ": dimension mismatch (face has dimension " + std::to_string(f.dim) +
                           ", expected " + std::to_string(d - 1) + ")");
          structural_ok = false;
          continue;
        }
        if (f.base_dim + word_length(f.degen) != f.dim || (f.dim < 16 && (f.degen >> f.dim) != 0)) {
          report.push_back(fw + ": degeneracy word not in normal form for its dimension");
          structural_ok = false;
          continue;
        }
        if (f.base < 0 || f.base >= x.count(f.base_dim)) {
          report.push_back(fw + ": references a missing simplex of dimension " + std::to_string(f.base_dim));
          structural_ok = false;
        }
      }
    }
  }
  if (!structural_ok) return report;
  for (int d = 2; d <= x.dim(); ++d) {
    for (int k = 0; k < x.count(d); ++k) {
      const Simplex s = Simplex::nondegenerate(d, k);
      for (int j = 1; j <= d; ++j)
        for (int i = 0; i < j; ++i) {
          const Simplex lhs = x.face(x.face(s, j), i);
          const Simplex rhs = x.face(x.face(s, i), j - 1);
          if (lhs != rhs)
            report.push_back("simplex '" + x.cell(d, k).id + "': simplicial identity d" + std::to_string(i) + "d" +
                             std::to_string(j) + " = d" + std::to_string(j - 1) + "d" + std::to_string(i) +
                             " fails (" + x.label(lhs) + " vs " + x.label(rhs) + ")");
        }
    }
  }
  return report;
}

}  // namespace slift
