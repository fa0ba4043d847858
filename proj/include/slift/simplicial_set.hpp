#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slift/simplex.hpp"

namespace slift {

/// A nondegenerate simplex together with its faces in normal form.
struct Cell {
  std::string id;
  std::vector<Simplex> faces;

  bool operator==(const Cell&) const = default;
};

/// A finite simplicial set stored through its nondegenerate simplices.
///
/// Values are immutable and cheap to copy. All simplices of a given
/// dimension (degenerate ones included) are tabulated lazily on first use;
/// the table is shared between copies and guarded for concurrent readers.
class FiniteSimplicialSet {
 public:
  FiniteSimplicialSet();

  const std::string& name() const;
  int dim_cap() const;
  /// Highest dimension carrying a nondegenerate simplex, -1 when empty.
  int dim() const;
  int count(int d) const;
  std::size_t total() const;
  const std::vector<Cell>& cells(int d) const;
  const Cell& cell(int d, int index) const;
  const Cell& cell(const Simplex& nondeg) const { return cell(nondeg.base_dim, nondeg.base); }

  std::optional<Simplex> find(std::string_view id) const;
  /// "<word>.<id>", e.g. "s1.s0.v" or "-.v".
  std::string label(const Simplex& s) const;

  Simplex face(const Simplex& s, int i) const;
  /// theta^*(s) for a monotone theta : [k] -> [s.dim].
  Simplex act(const Simplex& s, std::span<const int> theta) const;
  /// The vertices of s in order.
  std::vector<Simplex> vertices_of(const Simplex& s) const;

  /// Every simplex of dimension d, sorted by label.
  const std::vector<Simplex>& simplices(int d) const;
  int index_of(const Simplex& s) const;
  /// Faces of simplices(d)[index].
  const std::vector<Simplex>& faces_at(int d, int index) const;
  /// Indices into simplices(d) whose 0-th face equals `face0`.
  const std::vector<int>& with_face0(int d, const Simplex& face0) const;

  /// Same tables under a new name or dim_cap.
  FiniteSimplicialSet renamed(std::string name) const;
  FiniteSimplicialSet with_dim_cap(int cap) const;
  /// Same tables with new identifiers (indexed like cells()).
  FiniteSimplicialSet relabeled(const std::vector<std::vector<std::string>>& ids) const;

  /// Identical identifier and face tables; the name is not compared.
  bool operator==(const FiniteSimplicialSet& other) const;
  bool same_instance(const FiniteSimplicialSet& other) const { return impl_ == other.impl_; }

  struct Impl;

 private:
  friend class SSetBuilder;
  explicit FiniteSimplicialSet(std::shared_ptr<const Impl> impl);
  Simplex act_nondeg(int n, int index, const Monotone& theta) const;
  std::shared_ptr<const Impl> impl_;
};

class SSetBuilder {
 public:
  explicit SSetBuilder(std::string name, int dim_cap = kDefaultDimCap);

  /// Adds a nondegenerate simplex; returns its index within `dim`. Face data is
  /// not checked here (see validate()).
  int add(int dim, std::string id, std::vector<Simplex> faces);
  int count(int dim) const;

  FiniteSimplicialSet build() const;
  /// Builds and throws Error listing every validation failure.
  FiniteSimplicialSet build_checked() const;

 private:
  std::string name_;
  int dim_cap_;
  std::vector<std::vector<Cell>> cells_;
};

/// Lists every violated invariant; empty iff the object is well formed.
std::vector<std::string> validate(const FiniteSimplicialSet& x);

bool valid_identifier(std::string_view id);

}  // namespace slift
