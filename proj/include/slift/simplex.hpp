#pragma once

#include <cstdint>
#include <bit>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slift {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a construction would produce a simplex above the object's dim_cap.
class DimCapOverflow : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMaxDim = 15;
inline constexpr int kDefaultDimCap = 4;
inline constexpr int kDefaultHeight = 3;

/// A simplex in Eilenberg-Zilber normal form: a degeneracy word applied to a
/// nondegenerate simplex.
///
/// The word is stored as the repeat set of the corresponding surjection
/// [dim] -> [base_dim]: bit j is set iff the surjection identifies j and j+1,
/// which is the same as s_j occurring in the strictly decreasing word.
struct Simplex {
  std::int32_t base = 0;
  std::uint8_t base_dim = 0;
  std::uint8_t dim = 0;
  std::uint16_t degen = 0;

  bool degenerate() const { return degen != 0; }
  static Simplex nondegenerate(int dim, int index) {
    return Simplex{index, static_cast<std::uint8_t>(dim), static_cast<std::uint8_t>(dim), 0};
  }

  bool operator==(const Simplex&) const = default;
  auto operator<=>(const Simplex&) const = default;

  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(base)) << 32) |
           (static_cast<std::uint64_t>(base_dim) << 24) | (static_cast<std::uint64_t>(dim) << 16) |
           degen;
  }
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const { return std::hash<std::uint64_t>{}(s.key()); }
};

// Monotone maps [k] -> [n] are vectors of length k+1.
using Monotone = std::vector<int>;

Monotone surjection_from_word(int dim, std::uint16_t word);
std::uint16_t word_of_surjection(std::span<const int> surj);
int word_length(std::uint16_t word);

/// Applies the degeneracy word (a surjection [new_dim] -> [y.dim]) to y.
Simplex degenerate_by(const Simplex& y, int new_dim, std::uint16_t word);

/// s_j applied to y.
Simplex degeneracy(const Simplex& y, int j);

/// Renders a word as "s2.s0", or "-" for the empty word.
std::string word_to_string(std::uint16_t word);
/// Parses the dot-separated tokens of a word; throws Error if not in normal form.
std::uint16_t word_from_tokens(std::span<const std::string_view> tokens, int result_dim);

/// The coface map d_i : [k-1] -> [k].
Monotone coface(int k, int i);
Monotone compose(std::span<const int> outer, std::span<const int> inner);  // outer o inner

/// Factors a monotone map as an injection after a surjection: theta = inj o surj.
struct EpiMono {
  Monotone surj;
  Monotone inj;
};
EpiMono epi_mono(std::span<const int> theta, int codomain_dim);

/// Splits off the common degeneracies given by `common` (a subset of s.degen):
/// returns s' with s = degenerate_by(s', s.dim, common).
Simplex strip_degeneracies(const Simplex& s, std::uint16_t common);

}  // namespace slift
