#pragma once

// Lattice symmetries of Pic X generated by relabelling the five points and
// by quadratic (Cremona) transformations centred at three of them. Both
// kinds fix K and preserve the intersection pairing.

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "line_geometry.hpp"
#include "picard_lattice.hpp"

namespace delpezzo {

/// Relabelling of the points: point i becomes point images[i-1], so the
/// exceptional curve E_i is sent to E_{images[i-1]}.
class Permutation {
 public:
  constexpr Permutation() : images_{1, 2, 3, 4, 5} {}

  explicit Permutation(const std::array<int, kPoints>& images) : images_(images) {
    std::array<bool, kPoints> seen{};
    for (int v : images_) {
      if (v < 1 || v > kPoints || seen[static_cast<std::size_t>(v - 1)])
        throw InvalidPermutation("not a permutation of 1..5");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }

  static Permutation transposition(int i, int j) {
    std::array<int, kPoints> img{1, 2, 3, 4, 5};
    std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(j - 1)]);
    return Permutation(img);
  }

  constexpr int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  constexpr const std::array<int, kPoints>& images() const { return images_; }

  /// (*this after first)(i) = (*this)(first(i)).
  Permutation after(const Permutation& first) const {
    std::array<int, kPoints> img{};
    for (int i = 1; i <= kPoints; ++i) img[static_cast<std::size_t>(i - 1)] = (*this)(first(i));
    return Permutation(img);
  }

  constexpr bool is_identity() const { return images_ == std::array<int, kPoints>{1, 2, 3, 4, 5}; }

  friend constexpr bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::array<int, kPoints> images_;
};

/// Quadratic transformation centred at three distinct points, stored sorted.
class QuadraticTriple {
 public:
  QuadraticTriple(int i, int j, int k) : idx_{i, j, k} {
    for (int v : idx_)
      if (v < 1 || v > kPoints) throw InvalidTriple("quadratic centre index out of range 1..5");
    std::sort(idx_.begin(), idx_.end());
    if (idx_[0] == idx_[1] || idx_[1] == idx_[2]) throw InvalidTriple("quadratic centres must be distinct");
  }

  constexpr const std::array<int, 3>& indices() const { return idx_; }

  constexpr bool contains(int p) const { return idx_[0] == p || idx_[1] == p || idx_[2] == p; }

  friend constexpr bool operator==(const QuadraticTriple&, const QuadraticTriple&) = default;

 private:
  std::array<int, 3> idx_;
};

using WeylGenerator = std::variant<Permutation, QuadraticTriple>;

/// Applied left to right; the empty word is the identity.
using WeylWord = std::vector<WeylGenerator>;

inline DivisorClass apply_generator(const Permutation& sigma, const DivisorClass& d) {
  DivisorClass r{d.a, {}};
  for (int i = 1; i <= kPoints; ++i) r.b[static_cast<std::size_t>(sigma(i) - 1)] = d.at(i);
  return r;
}

/// a' = 2a - b_i - b_j - b_k, b_i' = a - b_j - b_k (and cyclically), other
/// b unchanged. An involution that fixes K and sends F_ij to E_k.
inline DivisorClass apply_generator(const QuadraticTriple& t, const DivisorClass& d) {
  using namespace checked;
  const auto [i, j, k] = t.indices();
  const Coeff bi = d.at(i), bj = d.at(j), bk = d.at(k);
  DivisorClass r = d;
  r.a = sub(sub(sub(mul(Coeff{2}, d.a), bi), bj), bk);
  r.b[static_cast<std::size_t>(i - 1)] = sub(sub(d.a, bj), bk);
  r.b[static_cast<std::size_t>(j - 1)] = sub(sub(d.a, bi), bk);
  r.b[static_cast<std::size_t>(k - 1)] = sub(sub(d.a, bi), bj);
  return r;
}

inline DivisorClass apply_generator(const WeylGenerator& g, const DivisorClass& d) {
  return std::visit([&](const auto& gen) { return apply_generator(gen, d); }, g);
}

inline DivisorClass apply_word(std::span<const WeylGenerator> word, DivisorClass d) {
  for (const auto& g : word) d = apply_generator(g, d);
  return d;
}

// ---------------------------------------------------------------------------
// Word text form: `p(2,1,3,4,5)` and `q(1,2,3)`, comma separated.

inline std::string to_text(const WeylGenerator& g) {
  std::string s;
  auto join = [&s](const auto& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(values[i]);
    }
  };
  if (const auto* p = std::get_if<Permutation>(&g)) {
    s = "p(";
    join(p->images());
  } else {
    s = "q(";
    join(std::get<QuadraticTriple>(g).indices());
  }
  s += ')';
  return s;
}

inline std::string to_text(std::span<const WeylGenerator> word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ',';
    s += to_text(word[i]);
  }
  return s;
}

/// Parses a comma-separated word. The empty string is the empty word.
/// Syntax errors raise ParseError; repeated or out-of-range quadratic
/// centres raise InvalidTriple; bad permutations raise InvalidPermutation.
inline WeylWord parse_word(std::string_view text) {
  WeylWord word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!word.empty()) {
      if (text[pos] != ',') throw ParseError("expected ',' between generators", pos);
      ++pos;
    }
    if (pos >= text.size()) throw ParseError("expected a generator", pos);
    const char tag = text[pos];
    if (tag != 'p' && tag != 'q') throw ParseError("expected 'p' or 'q'", pos);
    ++pos;
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<Coeff> args;
    while (true) {
      args.push_back(detail::parse_coeff(text, pos));
      if (pos >= text.size()) throw ParseError("unterminated generator", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] != ',') throw ParseError("expected ',' or ')'", pos);
      ++pos;
    }
    auto small = [](Coeff v) { return static_cast<int>(std::clamp<Coeff>(v, -1, kPoints + 1)); };
    if (tag == 'p') {
      if (args.size() != kPoints) throw ParseError("a permutation needs five images", pos - 1);
      std::array<int, kPoints> img{};
      for (std::size_t i = 0; i < img.size(); ++i) img[i] = small(args[i]);
      word.emplace_back(Permutation(img));
    } else {
      if (args.size() != 3) throw ParseError("a quadratic transformation needs three centres", pos - 1);
      word.emplace_back(QuadraticTriple(small(args[0]), small(args[1]), small(args[2])));
    }
  }
  return word;
}

// ---------------------------------------------------------------------------
// Re-marking: moving any five skew lines to E1..E5

namespace detail {

inline void push_and_apply(WeylWord& word, std::array<DivisorClass, 5>& current, WeylGenerator g) {
  for (auto& c : current) c = apply_generator(g, c);
  word.push_back(std::move(g));
}

}  // namespace detail

/// Returns a word w with apply_word(w, lines[i]) == E_{i+1}. The lines are
/// placed one at a time; once E_1..E_{m-1} are in place only generators
/// whose support avoids those indices are used, so they stay fixed.
///   E_j   -> transposition (j m)
///   F_jk  -> quadratic at {j,k,t}, t the smallest free index outside
///            {j,k}, which yields E_t; then the E_j step
///   G     -> quadratic at the smallest free triple, which yields a secant
/// Throws NotALine or NotSkew on invalid input.
inline WeylWord blowdown_marking(const std::array<DivisorClass, 5>& lines) {
  for (const auto& l : lines) classify_line(l);
  for (std::size_t u = 0; u < lines.size(); ++u)
    for (std::size_t v = u + 1; v < lines.size(); ++v)
      if (intersect(lines[u], lines[v]) != 0)
        throw NotSkew(to_text(lines[u]) + " and " + to_text(lines[v]) + " are not skew");

  WeylWord word;
  auto current = lines;
  for (int m = 1; m <= kPoints; ++m) {
    std::vector<int> free_indices;
    for (int p = m; p <= kPoints; ++p) free_indices.push_back(p);

    LineKind kind = classify_line(current[static_cast<std::size_t>(m - 1)]);
    if (kind.type == LineKind::Type::Conic) {
      // G meets every E_p, so it can only come up before anything is placed.
      if (free_indices.size() < 3) throw std::logic_error("conic line after placement");
      detail::push_and_apply(word, current, QuadraticTriple(free_indices[0], free_indices[1], free_indices[2]));
      kind = classify_line(current[static_cast<std::size_t>(m - 1)]);
    }
    if (kind.type == LineKind::Type::Secant) {
      const auto third = std::find_if(free_indices.begin(), free_indices.end(),
                                      [&](int p) { return p != kind.i && p != kind.j; });
      if (kind.i < m || kind.j < m || third == free_indices.end())
        throw std::logic_error("secant line meets an already placed exceptional curve");
      detail::push_and_apply(word, current, QuadraticTriple(kind.i, kind.j, *third));
      kind = classify_line(current[static_cast<std::size_t>(m - 1)]);
    }
    if (kind.type != LineKind::Type::Exceptional || kind.i < m)
      throw std::logic_error("re-marking did not reach a free exceptional curve");
    if (kind.i != m) detail::push_and_apply(word, current, Permutation::transposition(kind.i, m));
  }
  return word;
}

inline WeylWord blowdown_marking(std::span<const LineIndex, 5> indices) {
  std::array<DivisorClass, 5> lines{};
  for (std::size_t i = 0; i < lines.size(); ++i) lines[i] = enumerate_lines().at(indices[i]);
  return blowdown_marking(lines);
}

// ---------------------------------------------------------------------------
// The finite group generated by all generators

/// A lattice automorphism given by the images of l, e_1, ..., e_5.
struct LatticeMap {
  std::array<DivisorClass, 6> images{};

  static LatticeMap identity() {
    LatticeMap m;
    m.images[0] = classes::plane_line;
    for (int i = 1; i <= kPoints; ++i) m.images[static_cast<std::size_t>(i)] = classes::exceptional(i);
    return m;
  }

  /// D = a*l - sum b_i*e_i  |->  a*f(l) - sum b_i*f(e_i).
  DivisorClass operator()(const DivisorClass& d) const {
    DivisorClass r = scale(d.a, images[0]);
    for (int i = 1; i <= kPoints; ++i) r = r - scale(d.at(i), images[static_cast<std::size_t>(i)]);
    return r;
  }

  /// The map "this, then g".
  LatticeMap then(const WeylGenerator& g) const {
    LatticeMap m;
    for (std::size_t k = 0; k < images.size(); ++k) m.images[k] = apply_generator(g, images[k]);
    return m;
  }

  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;
  friend auto operator<=>(const LatticeMap&, const LatticeMap&) = default;
};

/// All 120 relabellings followed by all 10 quadratic transformations.
inline std::vector<WeylGenerator> all_generators() {
  std::vector<WeylGenerator> gens;
  std::array<int, kPoints> img{1, 2, 3, 4, 5};
  do {
    gens.emplace_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  for (int i = 1; i <= kPoints; ++i)
    for (int j = i + 1; j <= kPoints; ++j)
      for (int k = j + 1; k <= kPoints; ++k) gens.emplace_back(QuadraticTriple(i, j, k));
  return gens;
}

/// Breadth-first closure of all_generators() under composition.
inline std::set<LatticeMap> group_closure() {
  const auto gens = all_generators();
  std::set<LatticeMap> seen{LatticeMap::identity()};
  std::deque<LatticeMap> frontier{LatticeMap::identity()};
  while (!frontier.empty()) {
    const LatticeMap m = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      LatticeMap next = m.then(g);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return seen;
}

}  // namespace delpezzo
