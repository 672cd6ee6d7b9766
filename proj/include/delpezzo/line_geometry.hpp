#pragma once

// The 16 lines of the quartic Del Pezzo surface, their incidence graph and
// the five-tuples of mutually skew lines.
//
// Canonical order (index 0..15): E1..E5, F12, F13, F14, F15, F23, ..., F45, G.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "picard_lattice.hpp"

namespace delpezzo {

inline constexpr std::size_t kLineCount = 16;

using LineIndex = std::size_t;

struct LineKind {
  enum class Type { Exceptional, Secant, Conic };

  Type type = Type::Exceptional;
  int i = 0;  // 1-based; Exceptional and Secant
  int j = 0;  // 1-based; Secant only, i < j

  static constexpr LineKind exceptional(int i) { return {Type::Exceptional, i, 0}; }
  static constexpr LineKind secant(int i, int j) { return {Type::Secant, std::min(i, j), std::max(i, j)}; }
  static constexpr LineKind conic() { return {Type::Conic, 0, 0}; }

  friend constexpr bool operator==(const LineKind&, const LineKind&) = default;

  /// `E1`..`E5`, `F12`..`F45`, `G`.
  std::string label() const {
    switch (type) {
      case Type::Exceptional:
        return "E" + std::to_string(i);
      case Type::Secant:
        return "F" + std::to_string(i) + std::to_string(j);
      case Type::Conic:
        return "G";
    }
    return {};
  }

  DivisorClass divisor_class() const {
    switch (type) {
      case Type::Exceptional:
        return classes::exceptional(i);
      case Type::Secant:
        return classes::secant(i, j);
      case Type::Conic:
        return classes::conic_g;
    }
    return {};
  }

  /// Position in the canonical order.
  constexpr LineIndex index() const {
    switch (type) {
      case Type::Exceptional:
        return static_cast<LineIndex>(i - 1);
      case Type::Secant: {
        // pairs (i,j) lexicographic, offset by the five exceptional curves
        LineIndex k = 5;
        for (int p = 1; p < i; ++p) k += static_cast<LineIndex>(kPoints - p);
        return k + static_cast<LineIndex>(j - i - 1);
      }
      case Type::Conic:
        return 15;
    }
    return 0;
  }
};

inline std::ostream& operator<<(std::ostream& os, const LineKind& k) { return os << k.label(); }

namespace detail {

/// Recognizes the three coordinate patterns of line classes. Says nothing
/// about whether the class actually is a line beyond the pattern.
inline std::optional<LineKind> match_line_pattern(const DivisorClass& d) {
  int minus_ones = 0, ones = 0, zeros = 0;
  int first_one = 0, second_one = 0, minus_one_at = 0;
  for (int i = 1; i <= kPoints; ++i) {
    const Coeff v = d.at(i);
    if (v == 0) {
      ++zeros;
    } else if (v == 1) {
      (ones == 0 ? first_one : second_one) = i;
      ++ones;
    } else if (v == -1) {
      minus_one_at = i;
      ++minus_ones;
    }
  }
  if (d.a == 0 && minus_ones == 1 && zeros == 4) return LineKind::exceptional(minus_one_at);
  if (d.a == 1 && ones == 2 && zeros == 3) return LineKind::secant(first_one, second_one);
  if (d.a == 2 && ones == 5) return LineKind::conic();
  return std::nullopt;
}

inline std::array<DivisorClass, kLineCount> search_lines() {
  // a <= 2 follows from Cauchy-Schwarz applied to 3a - 1 = sum b_i and
  // a^2 + 1 = sum b_i^2; the b-range is wider than needed so the search
  // confirms there are no solutions with negative or large b_i.
  std::vector<DivisorClass> found;
  DivisorClass d;
  for (d.a = 0; d.a <= 2; ++d.a)
    for (d.b[0] = -1; d.b[0] <= 2; ++d.b[0])
      for (d.b[1] = -1; d.b[1] <= 2; ++d.b[1])
        for (d.b[2] = -1; d.b[2] <= 2; ++d.b[2])
          for (d.b[3] = -1; d.b[3] <= 2; ++d.b[3])
            for (d.b[4] = -1; d.b[4] <= 2; ++d.b[4])
              if (degree(d) == 1 && self_intersection(d) == -1) found.push_back(d);

  if (found.size() != kLineCount) throw std::logic_error("line search did not find 16 classes");
  std::array<DivisorClass, kLineCount> ordered{};
  std::array<bool, kLineCount> filled{};
  for (const auto& c : found) {
    const auto kind = match_line_pattern(c);
    if (!kind) throw std::logic_error("line search found an unexpected class " + to_text(c));
    const LineIndex k = kind->index();
    if (filled[k]) throw std::logic_error("line search found a duplicate kind");
    ordered[k] = c;
    filled[k] = true;
  }
  return ordered;
}

}  // namespace detail

/// The 16 line classes in canonical order, found by bounded brute force
/// over degree 1, self-intersection -1 classes. Computed once.
inline const std::array<DivisorClass, kLineCount>& enumerate_lines() {
  static const std::array<DivisorClass, kLineCount> lines = detail::search_lines();
  return lines;
}

inline std::optional<LineIndex> line_index(const DivisorClass& d) {
  const auto& lines = enumerate_lines();
  const auto it = std::find(lines.begin(), lines.end(), d);
  if (it == lines.end()) return std::nullopt;
  return static_cast<LineIndex>(it - lines.begin());
}

inline bool is_line(const DivisorClass& d) { return line_index(d).has_value(); }

/// Throws NotALine unless `d` is one of the 16 lines.
inline LineKind classify_line(const DivisorClass& d) {
  if (degree(d) != 1) throw NotALine(to_text(d) + " has degree " + std::to_string(degree(d)) + ", not 1");
  if (self_intersection(d) != -1)
    throw NotALine(to_text(d) + " has self-intersection " + std::to_string(self_intersection(d)) + ", not -1");
  if (!is_line(d)) throw NotALine(to_text(d) + " is not one of the 16 lines");
  const auto kind = detail::match_line_pattern(d);
  if (!kind) throw std::logic_error("enumerated line without a known pattern");
  return *kind;
}

inline LineKind line_kind(LineIndex k) { return classify_line(enumerate_lines().at(k)); }

inline std::string line_label(LineIndex k) { return line_kind(k).label(); }

// ---------------------------------------------------------------------------

class IncidenceGraph {
 public:
  IncidenceGraph() : vertices_(enumerate_lines()) {
    for (LineIndex u = 0; u < kLineCount; ++u) {
      for (LineIndex v = 0; v < kLineCount; ++v) {
        if (u == v) continue;
        const Coeff m = intersect(vertices_[u], vertices_[v]);
        if (m != 0 && m != 1) throw std::logic_error("distinct lines with intersection outside {0,1}");
        adjacency_[u][v] = (m == 1);
      }
    }
  }

  const std::array<DivisorClass, kLineCount>& vertices() const { return vertices_; }

  bool adjacent(LineIndex u, LineIndex v) const { return adjacency_.at(u).at(v); }

  std::size_t vertex_degree(LineIndex u) const {
    return static_cast<std::size_t>(std::count(adjacency_.at(u).begin(), adjacency_.at(u).end(), true));
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (LineIndex u = 0; u < kLineCount; ++u) twice += vertex_degree(u);
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::array<LineIndex, 2>> edges() const {
    std::vector<std::array<LineIndex, 2>> out;
    for (LineIndex u = 0; u < kLineCount; ++u)
      for (LineIndex v = u + 1; v < kLineCount; ++v)
        if (adjacency_[u][v]) out.push_back({u, v});
    return out;
  }

  /// Undirected DOT graph, vertices in canonical order.
  std::string to_dot() const {
    std::ostringstream os;
    os << "graph lines {\n";
    for (LineIndex u = 0; u < kLineCount; ++u)
      os << "  " << line_label(u) << " [class=\"" << to_text(vertices_[u]) << "\"];\n";
    for (const auto& [u, v] : edges()) os << "  " << line_label(u) << " -- " << line_label(v) << ";\n";
    os << "}\n";
    return os.str();
  }

 private:
  std::array<DivisorClass, kLineCount> vertices_;
  std::array<std::array<bool, kLineCount>, kLineCount> adjacency_{};
};

inline const IncidenceGraph& incidence_graph() {
  static const IncidenceGraph graph;
  return graph;
}

using SkewTuple = std::array<LineIndex, 5>;

/// All 5-subsets of pairwise skew lines, as sorted index sets in
/// lexicographic order.
inline const std::vector<SkewTuple>& skew_five_tuples() {
  static const std::vector<SkewTuple> tuples = [] {
    const auto& g = incidence_graph();
    std::vector<SkewTuple> out;
    SkewTuple t{};
    // Depth-first over increasing index sequences, which yields
    // lexicographic order directly.
    auto extend = [&](auto&& self, std::size_t depth, LineIndex start) -> void {
      if (depth == t.size()) {
        out.push_back(t);
        return;
      }
      for (LineIndex v = start; v < kLineCount; ++v) {
        bool skew = true;
        for (std::size_t k = 0; k < depth && skew; ++k) skew = !g.adjacent(t[k], v);
        if (!skew) continue;
        t[depth] = v;
        self(self, depth + 1, v + 1);
      }
    };
    extend(extend, 0, 0);
    return out;
  }();
  return tuples;
}

}  // namespace delpezzo
