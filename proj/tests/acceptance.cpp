// Acceptance suite: one pass/fail line per criterion, exit status 1 if any
// criterion fails. All checks are exact.

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "delpezzo/delpezzo.hpp"

using namespace delpezzo;
namespace C = delpezzo::classes;

namespace {

struct Criterion {
  std::string name;
  std::function<std::string()> check;  // empty string on success, else the reason
};

std::string capture(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::string out;
  std::array<char, 1 << 16> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

std::string line_census() {
  const auto& lines = enumerate_lines();
  if (lines.size() != 16) return "expected 16 lines";
  std::array<int, 3> kinds{};
  for (const auto& l : lines) {
    if (degree(l) != 1 || self_intersection(l) != -1 || arithmetic_genus(l) != 0)
      return "line " + to_text(l) + " has wrong invariants";
    ++kinds[static_cast<std::size_t>(classify_line(l).type)];
  }
  if (kinds != std::array<int, 3>{5, 10, 1}) return "partition is not 5/10/1";
  return {};
}

std::string negative_uniqueness() {
  std::set<DivisorClass> negative;
  for_each_in_box(6, [&](const DivisorClass& d) {
    if (self_intersection(d) < 0 && contains_irreducible(d).kind != IrreducibleVerdict::Kind::No) negative.insert(d);
  });
  const auto& lines = enumerate_lines();
  if (negative != std::set<DivisorClass>(lines.begin(), lines.end()))
    return std::to_string(negative.size()) + " irreducible classes with D^2 < 0, expected the 16 lines";
  return {};
}

std::string riemann_roch() {
  if (euler_characteristic(2 * C::hyperplane) != 13) return "chi(2h) != 13";
  if (euler_characteristic(C::zero) != 1) return "chi(0) != 1";
  return {};
}

std::string weyl_order() {
  const auto group = group_closure();
  if (group.size() != 1920) return "closure has " + std::to_string(group.size()) + " elements";
  const auto& lines = enumerate_lines();
  const std::set<DivisorClass> line_set(lines.begin(), lines.end());
  for (const auto& m : group) {
    if (m(C::canonical) != C::canonical) return "an element moves K";
    std::set<DivisorClass> image;
    for (const auto& l : lines) image.insert(m(l));
    if (image != line_set) return "an element does not permute the lines";
  }
  return {};
}

std::string cremona_anchors() {
  const QuadraticTriple q(1, 2, 3);
  if (apply_generator(q, C::secant(1, 2)) != C::exceptional(3)) return "q(1,2,3) F12 != E3";
  if (apply_generator(q, C::conic_g) != C::secant(4, 5)) return "q(1,2,3) G != F45";
  return {};
}

std::string marking_completeness() {
  const auto& tuples = skew_five_tuples();
  if (tuples.size() != 16) return std::to_string(tuples.size()) + " skew tuples";
  std::size_t verified = 0;
  for (const auto& t : tuples) {
    auto ordered = t;
    do {
      const auto word = blowdown_marking(std::span<const LineIndex, 5>(ordered));
      for (std::size_t i = 0; i < 5; ++i)
        if (apply_word(word, enumerate_lines()[ordered[i]]) != C::exceptional(static_cast<int>(i + 1)))
          return "word " + to_text(word) + " does not mark the tuple";
      ++verified;
    } while (std::next_permutation(ordered.begin(), ordered.end()));
  }
  if (verified != 16 * 120) return std::to_string(verified) + " orderings checked";
  return {};
}

std::string ampleness_equivalence() {
  std::size_t mismatches = 0;
  for_each_in_box(4, [&](const DivisorClass& d) {
    const bool va = is_very_ample(d);
    if (lemma_very_ample_test(d) && !va) ++mismatches;
    if (va && !lemma_very_ample_test(greedy_normalize(d).normalized)) ++mismatches;
  });
  if (mismatches) return std::to_string(mismatches) + " mismatches";
  return {};
}

std::string incidence_structure() {
  const auto& g = incidence_graph();
  for (LineIndex u = 0; u < kLineCount; ++u)
    if (g.vertex_degree(u) != 5) return "vertex " + line_label(u) + " has degree " + std::to_string(g.vertex_degree(u));
  if (g.edge_count() != 40) return std::to_string(g.edge_count()) + " edges";
  for (LineIndex u = 0; u < kLineCount; ++u)
    for (LineIndex v = u + 1; v < kLineCount; ++v)
      for (LineIndex w = v + 1; w < kLineCount; ++w)
        if (g.adjacent(u, v) && g.adjacent(v, w) && g.adjacent(u, w)) return "triangle found";
  return {};
}

std::string determinism() {
  const std::string cmd = std::string("\"") + DELPEZZO_CLI_PATH + "\" sweep --bound 2";
  const std::string first = capture(cmd);
  const std::string second = capture(cmd);
  if (first.empty()) return "sweep produced no output";
  if (first != second) return "outputs differ";
  std::ostringstream in_process;
  write_sweep(in_process, 2, SweepFormat::Json, 4);
  if (in_process.str() != first) return "multi-threaded in-process sweep differs from CLI output";
  return {};
}

std::string property_suites() {
  std::size_t failures = 0;
  const auto gens = all_generators();
  std::vector<DivisorClass> probes(enumerate_lines().begin(), enumerate_lines().end());
  probes.push_back(C::plane_line);

  for_each_in_box(3, [&](const DivisorClass& d) {
    // pairing: symmetry and bilinearity against a spanning set of probes
    for (const auto& p : probes) {
      if (intersect(d, p) != intersect(p, d)) ++failures;
      if (intersect(d + p, d) != intersect(d, d) + intersect(p, d)) ++failures;
      if (intersect(scale(3, d), p) != 3 * intersect(d, p)) ++failures;
    }
    if (2 * arithmetic_genus(d) - 2 != intersect(d, d + C::canonical)) ++failures;
    if (reconstruct(lemma_decomposition(d)) != d) ++failures;
    const Decomposition dec{{d.a, d.b[0], d.b[1], d.b[2], d.b[3], d.b[4]}};
    if (lemma_decomposition(reconstruct(dec)) != dec) ++failures;
  });

  for (const auto& g : gens) {
    std::vector<DivisorClass> moved;
    for (const auto& p : probes) moved.push_back(apply_generator(g, p));
    const WeylWord twice{g, g};
    const bool involution = std::holds_alternative<QuadraticTriple>(g) ||
                            std::get<Permutation>(g).after(std::get<Permutation>(g)).is_identity();
    for_each_in_box(3, [&](const DivisorClass& d) {
      const DivisorClass gd = apply_generator(g, d);
      if (self_intersection(gd) != self_intersection(d)) ++failures;
      for (std::size_t k = 0; k < probes.size(); ++k)
        if (intersect(gd, moved[k]) != intersect(d, probes[k])) ++failures;
      if (involution && apply_word(twice, d) != d) ++failures;
    });
  }
  if (failures) return std::to_string(failures) + " property failures";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 line census: 16 lines, 5/10/1, (deg, D^2, p_a) = (1, -1, 0)", line_census},
      {"2 negative self-intersection: irreducible with D^2 < 0 are the 16 lines (B = 6)", negative_uniqueness},
      {"3 Riemann-Roch: chi(2h) = 13, chi(0) = 1", riemann_roch},
      {"4 Weyl group: closure of 1920 elements fixing K and permuting lines", weyl_order},
      {"5 Cremona anchors: q(1,2,3) F12 -> E3, G -> F45", cremona_anchors},
      {"6 marking: 16 skew tuples, all 120 orderings re-marked to E1..E5", marking_completeness},
      {"7 ampleness equivalence sweep (B = 4): zero mismatches", ampleness_equivalence},
      {"8 incidence graph: 5-regular, 40 edges, triangle-free", incidence_structure},
      {"9 determinism: sweep --bound 2 byte-identical across runs", determinism},
      {"10 property suites on the B = 3 box", property_suites},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string reason;
    try {
      reason = c.check();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    if (reason.empty()) {
      std::cout << "[PASS] " << c.name << '\n';
    } else {
      std::cout << "[FAIL] " << c.name << " -- " << reason << '\n';
      ++failed;
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
