#pragma once

// Exhaustive evaluation of every class in the box |a| <= B, |b_i| <= B.

#include <cstddef>
#include <functional>
#include <future>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "curve_criteria.hpp"
#include "errors.hpp"
#include "picard_lattice.hpp"

namespace delpezzo {

inline constexpr Coeff kMaxSweepBound = 6;

struct SweepRow {
  DivisorClass divisor;
  Coeff degree = 0;
  Coeff self_intersection = 0;
  Coeff genus = 0;
  Coeff euler = 0;
  bool very_ample = false;
  IrreducibleVerdict verdict;
};

struct SweepReport {
  Coeff bound = 0;
  std::vector<SweepRow> rows;
};

inline SweepRow evaluate(const DivisorClass& d) {
  return {d, degree(d), self_intersection(d), arithmetic_genus(d), euler_characteristic(d), is_very_ample(d),
          contains_irreducible(d)};
}

/// Visits the classes with the given `a` and |b_i| <= bound in
/// lexicographic order of (b_1, ..., b_5).
template <class Fn>
void for_each_in_slab(Coeff a, Coeff bound, Fn&& fn) {
  DivisorClass d{a, {}};
  for (d.b[0] = -bound; d.b[0] <= bound; ++d.b[0])
    for (d.b[1] = -bound; d.b[1] <= bound; ++d.b[1])
      for (d.b[2] = -bound; d.b[2] <= bound; ++d.b[2])
        for (d.b[3] = -bound; d.b[3] <= bound; ++d.b[3])
          for (d.b[4] = -bound; d.b[4] <= bound; ++d.b[4]) fn(static_cast<const DivisorClass&>(d));
}

/// Visits every class of the box in lexicographic coordinate order.
template <class Fn>
void for_each_in_box(Coeff bound, Fn&& fn) {
  for (Coeff a = -bound; a <= bound; ++a) for_each_in_slab(a, bound, fn);
}

inline void check_sweep_bound(Coeff bound) {
  if (bound < 1) throw std::invalid_argument("sweep bound must be at least 1");
  if (bound > kMaxSweepBound)
    throw BoundTooLarge("sweep bound " + std::to_string(bound) + " exceeds " + std::to_string(kMaxSweepBound));
}

/// Evaluates each a-slab of the box on up to `workers` threads and hands
/// the slabs to `sink` in increasing order of a, so the result does not
/// depend on the worker count.
template <class SlabFn, class Sink>
void for_each_slab_parallel(Coeff bound, unsigned workers, SlabFn&& per_slab, Sink&& sink) {
  if (workers == 0) workers = 1;
  for (Coeff first = -bound; first <= bound; first += static_cast<Coeff>(workers)) {
    std::vector<std::future<std::invoke_result_t<SlabFn&, Coeff>>> batch;
    for (Coeff a = first; a <= bound && a < first + static_cast<Coeff>(workers); ++a)
      batch.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async, per_slab, a));
    for (auto& f : batch) sink(f.get());
  }
}

inline SweepReport sweep(Coeff bound, unsigned workers = 1) {
  check_sweep_bound(bound);
  SweepReport report{bound, {}};
  for_each_slab_parallel(
      bound, workers,
      [bound](Coeff a) {
        std::vector<SweepRow> rows;
        for_each_in_slab(a, bound, [&](const DivisorClass& d) { rows.push_back(evaluate(d)); });
        return rows;
      },
      [&](std::vector<SweepRow> rows) { report.rows.insert(report.rows.end(), rows.begin(), rows.end()); });
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::json verdict_json(const IrreducibleVerdict& v) {
  nlohmann::json j;
  j["verdict"] = v.name();
  j["kind"] = v.line ? nlohmann::json(v.line->label()) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json row_json(const SweepRow& r) {
  return {{"class", to_text(r.divisor)},
          {"degree", r.degree},
          {"self_intersection", r.self_intersection},
          {"genus", r.genus},
          {"euler", r.euler},
          {"very_ample", r.very_ample},
          {"verdict", verdict_json(r.verdict)}};
}

inline constexpr const char* kCsvHeader = "class,degree,self_intersection,genus,euler,very_ample,verdict";

/// The class field is quoted because its text form contains commas.
inline std::string row_csv(const SweepRow& r) {
  return "\"" + to_text(r.divisor) + "\"," + std::to_string(r.degree) + "," + std::to_string(r.self_intersection) +
         "," + std::to_string(r.genus) + "," + std::to_string(r.euler) + "," + (r.very_ample ? "true" : "false") +
         "," + r.verdict.name();
}

enum class SweepFormat { Json, Csv };

/// Streams the report slab by slab; the full box at B = 6 has 4.8M rows and
/// is never held in memory at once.
inline void write_sweep(std::ostream& os, Coeff bound, SweepFormat format, unsigned workers = 1) {
  check_sweep_bound(bound);
  bool first_row = true;
  if (format == SweepFormat::Csv)
    os << kCsvHeader << '\n';
  else
    os << "{\"bound\":" << bound << ",\"rows\":[";

  for_each_slab_parallel(
      bound, workers,
      [bound, format](Coeff a) {
        std::vector<std::string> lines;
        for_each_in_slab(a, bound, [&](const DivisorClass& d) {
          const SweepRow r = evaluate(d);
          lines.push_back(format == SweepFormat::Csv ? row_csv(r) : row_json(r).dump());
        });
        return lines;
      },
      [&](const std::vector<std::string>& lines) {
        for (const auto& line : lines) {
          if (format == SweepFormat::Csv) {
            os << line << '\n';
          } else {
            os << (first_row ? "\n" : ",\n") << line;
            first_row = false;
          }
        }
      });

  if (format == SweepFormat::Json) os << "\n]}\n";
}

}  // namespace delpezzo
