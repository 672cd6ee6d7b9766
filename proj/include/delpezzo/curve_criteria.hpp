#pragma once

// Very-ampleness and irreducible-curve criteria on the quartic Del Pezzo
// surface. Everything reduces to intersection numbers against the 16 lines.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "line_geometry.hpp"
#include "picard_lattice.hpp"
#include "weyl_action.hpp"

namespace delpezzo {

/// Coefficients c_0..c_5 in the basis
///   D0 = l, D1 = l-e1, D2 = 2l-e1-e2, D3 = 2l-e1-e2-e3,
///   D4 = 2l-e1-e2-e3-e4, D5 = 3l-e1-...-e5.
struct Decomposition {
  std::array<Coeff, 6> c{};

  friend constexpr bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline const std::array<DivisorClass, 6>& decomposition_basis() {
  static const std::array<DivisorClass, 6> basis{{
      {1, {0, 0, 0, 0, 0}},
      {1, {1, 0, 0, 0, 0}},
      {2, {1, 1, 0, 0, 0}},
      {2, {1, 1, 1, 0, 0}},
      {2, {1, 1, 1, 1, 0}},
      {3, {1, 1, 1, 1, 1}},
  }};
  return basis;
}

inline Decomposition lemma_decomposition(const DivisorClass& d) {
  using namespace checked;
  Decomposition r;
  r.c[5] = d.b[4];
  r.c[4] = sub(d.b[3], d.b[4]);
  r.c[3] = sub(d.b[2], d.b[3]);
  r.c[2] = sub(d.b[1], d.b[2]);
  r.c[1] = sub(d.b[0], d.b[1]);
  r.c[0] = sub(sub(sub(d.a, d.b[0]), d.b[1]), d.b[4]);
  return r;
}

inline DivisorClass reconstruct(const Decomposition& dec) {
  DivisorClass d;
  for (std::size_t k = 0; k < dec.c.size(); ++k) d = d + scale(dec.c[k], decomposition_basis()[k]);
  return d;
}

/// Sufficient condition for very-ampleness: c_0..c_4 >= 0 and c_5 > 0,
/// equivalently b_1 >= ... >= b_5 > 0 and a >= b_1 + b_2 + b_5.
inline bool lemma_very_ample_test(const DivisorClass& d) {
  const auto dec = lemma_decomposition(d);
  const bool by_cone = std::all_of(dec.c.begin(), dec.c.end() - 1, [](Coeff v) { return v >= 0; }) && dec.c[5] > 0;

  bool by_inequalities = d.b[4] > 0 && d.a >= checked::add(checked::add(d.b[0], d.b[1]), d.b[4]);
  for (std::size_t i = 0; i + 1 < d.b.size(); ++i) by_inequalities = by_inequalities && d.b[i] >= d.b[i + 1];

  if (by_cone != by_inequalities) throw std::logic_error("cone and inequality forms of the lemma disagree");
  return by_cone;
}

/// D.L > 0 for every line L. Equivalent to ampleness and to very-ampleness.
inline bool is_very_ample(const DivisorClass& d) {
  const auto& lines = enumerate_lines();
  return std::all_of(lines.begin(), lines.end(), [&](const DivisorClass& l) { return intersect(d, l) > 0; });
}

inline bool is_ample(const DivisorClass& d) { return is_very_ample(d); }

/// degree 2 and D^2 = 0 (then p_a = 0).
inline bool is_conic_class(const DivisorClass& d) {
  const bool conic = degree(d) == 2 && self_intersection(d) == 0;
  if (conic && arithmetic_genus(d) != 0) throw std::logic_error("conic class with nonzero genus");
  return conic;
}

// ---------------------------------------------------------------------------

struct GreedyResult {
  /// Chosen lines E1'..E5' as canonical indices.
  std::array<LineIndex, 5> marking{};
  /// Sends marking[i] to E_{i+1}.
  WeylWord word;
  /// apply_word(word, D).
  DivisorClass normalized;
  /// Whether `normalized` satisfies the very-ampleness lemma.
  bool normal_form = false;
};

/// Picks E5' minimising D.L over all lines, E4' over lines skew to E5', E3'
/// over lines skew to both; of the three lines skew to all of those, the
/// two mutually skew ones become E1', E2' with D.E1' >= D.E2'. Ties go to
/// the earlier line in canonical order. Then re-marks so that E_i' = E_i.
///
/// When D.L > 0 for all lines the result has b_1 >= ... >= b_5 > 0 and
/// a >= b_1 + b_2 + b_5.
inline GreedyResult greedy_normalize(const DivisorClass& d) {
  const auto& lines = enumerate_lines();
  const auto& graph = incidence_graph();

  std::vector<LineIndex> chosen;  // E5', E4', E3'
  auto skew_to_chosen = [&](LineIndex v) {
    return std::none_of(chosen.begin(), chosen.end(),
                        [&](LineIndex u) { return u == v || graph.adjacent(u, v); });
  };
  for (int step = 0; step < 3; ++step) {
    std::optional<LineIndex> best;
    for (LineIndex v = 0; v < kLineCount; ++v) {
      if (!skew_to_chosen(v)) continue;
      if (!best || intersect(d, lines[v]) < intersect(d, lines[*best])) best = v;
    }
    if (!best) throw std::logic_error("no skew line left during greedy selection");
    chosen.push_back(*best);
  }

  std::vector<LineIndex> rest;
  for (LineIndex v = 0; v < kLineCount; ++v)
    if (skew_to_chosen(v)) rest.push_back(v);
  if (rest.size() != 3) throw std::logic_error("expected exactly three lines skew to a skew triple");

  // Drop the one meeting the other two.
  std::vector<LineIndex> pair;
  for (LineIndex v : rest) {
    const auto meets = std::count_if(rest.begin(), rest.end(), [&](LineIndex u) { return graph.adjacent(u, v); });
    if (meets != 2) pair.push_back(v);
  }
  if (pair.size() != 2 || graph.adjacent(pair[0], pair[1]))
    throw std::logic_error("remaining lines are not a skew pair plus a transversal");
  if (intersect(d, lines[pair[0]]) < intersect(d, lines[pair[1]])) std::swap(pair[0], pair[1]);

  GreedyResult r;
  r.marking = {pair[0], pair[1], chosen[2], chosen[1], chosen[0]};
  r.word = blowdown_marking(std::span<const LineIndex, 5>(r.marking));
  r.normalized = apply_word(r.word, d);
  r.normal_form = lemma_very_ample_test(r.normalized);
  return r;
}

// ---------------------------------------------------------------------------

struct IrreducibleVerdict {
  enum class Kind { Line, Conic, Positive, No };

  Kind kind = Kind::No;
  std::optional<LineKind> line;  // set iff kind == Line

  friend bool operator==(const IrreducibleVerdict&, const IrreducibleVerdict&) = default;

  /// `line`, `conic`, `positive` or `no`.
  std::string name() const {
    switch (kind) {
      case Kind::Line:
        return "line";
      case Kind::Conic:
        return "conic";
      case Kind::Positive:
        return "positive";
      case Kind::No:
        return "no";
    }
    return {};
  }
};

/// Whether the class contains an irreducible (equivalently, irreducible
/// nonsingular) curve. Cases are tested in order: one of the 16 lines, a
/// conic class, D.L >= 0 for all lines with D^2 > 0.
inline IrreducibleVerdict contains_irreducible(const DivisorClass& d) {
  using K = IrreducibleVerdict::Kind;
  if (is_line(d)) return {K::Line, classify_line(d)};
  if (is_conic_class(d)) return {K::Conic, std::nullopt};
  const auto& lines = enumerate_lines();
  const bool nef = std::all_of(lines.begin(), lines.end(), [&](const DivisorClass& l) { return intersect(d, l) >= 0; });
  if (nef && self_intersection(d) > 0) return {K::Positive, std::nullopt};
  return {K::No, std::nullopt};
}

}  // namespace delpezzo
