#include "slift/simplex.hpp"

#include <bit>
#include <charconv>

namespace slift {

Monotone surjection_from_word(int dim, std::uint16_t word) {
  Monotone out(static_cast<std::size_t>(dim) + 1, 0);
  for (int j = 0; j < dim; ++j) out[j + 1] = out[j] + (((word >> j) & 1U) ? 0 : 1);
  return out;
}

std::uint16_t word_of_surjection(std::span<const int> surj) {
  std::uint16_t w = 0;
  for (std::size_t j = 0; j + 1 < surj.size(); ++j)
    if (surj[j] == surj[j + 1]) w |= static_cast<std::uint16_t>(1U << j);
  return w;
}

int word_length(std::uint16_t word) { return std::popcount(word); }

Monotone compose(std::span<const int> outer, std::span<const int> inner) {
  Monotone out(inner.size());
  for (std::size_t t = 0; t < inner.size(); ++t) out[t] = outer[inner[t]];
  return out;
}

Simplex degenerate_by(const Simplex& y, int new_dim, std::uint16_t word) {
  if (word == 0) return y;
  if (new_dim - word_length(word) != y.dim) throw Error("degenerate_by: word does not match simplex dimension");
  const Monotone tau = surjection_from_word(new_dim, word);
  const Monotone sigma = surjection_from_word(y.dim, y.degen);
  const Monotone comp = compose(sigma, tau);
  return Simplex{y.base, y.base_dim, static_cast<std::uint8_t>(new_dim), word_of_surjection(comp)};
}

Simplex degeneracy(const Simplex& y, int j) {
  return degenerate_by(y, y.dim + 1, static_cast<std::uint16_t>(1U << j));
}

std::string word_to_string(std::uint16_t word) {
  if (word == 0) return "-";
  std::string out;
  for (int j = kMaxDim; j >= 0; --j) {
    if (!((word >> j) & 1U)) continue;
    if (!out.empty()) out += '.';
    out += 's';
    out += std::to_string(j);
  }
  return out;
}

std::uint16_t word_from_tokens(std::span<const std::string_view> tokens, int result_dim) {
  if (tokens.size() == 1 && tokens[0] == "-") return 0;
  if (tokens.empty()) throw Error("empty degeneracy word (use '-')");
  std::uint16_t word = 0;
  int previous = kMaxDim + 1;
  for (auto tok : tokens) {
    if (tok.size() < 2 || tok[0] != 's') throw Error("bad degeneracy token '" + std::string(tok) + "'");
    int j = -1;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), j);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || j < 0)
      throw Error("bad degeneracy token '" + std::string(tok) + "'");
    if (j >= previous) throw Error("degeneracy word not strictly decreasing");
    if (j >= result_dim) throw Error("degeneracy index s" + std::to_string(j) + " out of range");
    previous = j;
    word |= static_cast<std::uint16_t>(1U << j);
  }
  return word;
}

Monotone coface(int k, int i) {
  Monotone out(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) out[t] = t < i ? t : t + 1;
  return out;
}

EpiMono epi_mono(std::span<const int> theta, int codomain_dim) {
  EpiMono out;
  std::vector<bool> hit(static_cast<std::size_t>(codomain_dim) + 1, false);
  for (int v : theta) hit[v] = true;
  std::vector<int> rank(hit.size(), -1);
  int r = 0;
  for (std::size_t v = 0; v < hit.size(); ++v) {
    if (!hit[v]) continue;
    rank[v] = r++;
    out.inj.push_back(static_cast<int>(v));
  }
  out.surj.reserve(theta.size());
  for (int v : theta) out.surj.push_back(rank[v]);
  return out;
}

Simplex strip_degeneracies(const Simplex& s, std::uint16_t common) {
  if (common == 0) return s;
  const Monotone pi = surjection_from_word(s.dim, common);
  const Monotone sigma = surjection_from_word(s.dim, s.degen);
  const int m = s.dim - word_length(common);
  Monotone reduced(static_cast<std::size_t>(m) + 1, 0);
  for (int t = 0; t <= s.dim; ++t) reduced[pi[t]] = sigma[t];
  return Simplex{s.base, s.base_dim, static_cast<std::uint8_t>(m), word_of_surjection(reduced)};
}

}  // namespace slift
