#pragma once

// Command layer behind the `delpezzo` tool. Kept in a header so tests can
// drive every subcommand in-process through run().

#include <exception>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "curve_criteria.hpp"
#include "errors.hpp"
#include "line_geometry.hpp"
#include "picard_lattice.hpp"
#include "sweep.hpp"
#include "weyl_action.hpp"

namespace delpezzo::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kDomain = 3 };

namespace detail {

inline const char* boolean(bool v) { return v ? "true" : "false"; }

inline std::string verdict_text(const IrreducibleVerdict& v) {
  return v.line ? v.name() + " " + v.line->label() : v.name();
}

inline void cmd_info(std::ostream& out, const std::string& text, const std::string& format) {
  const SweepRow r = evaluate(parse_class(text));
  if (format == "json") {
    out << row_json(r).dump() << '\n';
    return;
  }
  out << "class: " << to_text(r.divisor) << '\n'
      << "degree: " << r.degree << '\n'
      << "self_intersection: " << r.self_intersection << '\n'
      << "genus: " << r.genus << '\n'
      << "euler: " << r.euler << '\n'
      << "very_ample: " << boolean(r.very_ample) << '\n'
      << "verdict: " << verdict_text(r.verdict) << '\n';
}

inline void cmd_lines(std::ostream& out, const std::string& format) {
  const auto& lines = enumerate_lines();
  if (format == "dot") {
    out << incidence_graph().to_dot();
  } else if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& l : lines) arr.push_back(to_text(l));
    out << arr.dump() << '\n';
  } else {
    for (LineIndex k = 0; k < kLineCount; ++k) out << line_label(k) << '\t' << to_text(lines[k]) << '\n';
  }
}

inline void cmd_skew(std::ostream& out, const std::string& format) {
  const auto& tuples = skew_five_tuples();
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : tuples) {
      nlohmann::json labels = nlohmann::json::array();
      for (LineIndex k : t) labels.push_back(line_label(k));
      arr.push_back(labels);
    }
    out << arr.dump() << '\n';
    return;
  }
  for (const auto& t : tuples) {
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << line_label(t[i]);
    out << '\n';
  }
}

inline void cmd_cremona(std::ostream& out, const std::string& word_text, const std::string& class_text,
                        const std::string& format) {
  const WeylWord word = parse_word(word_text);
  const DivisorClass d = parse_class(class_text);
  const DivisorClass image = apply_word(word, d);
  if (format == "json")
    out << nlohmann::json{{"word", to_text(word)}, {"class", to_text(d)}, {"image", to_text(image)}}.dump() << '\n';
  else
    out << to_text(image) << '\n';
}

inline void cmd_normalize(std::ostream& out, const std::string& text, const std::string& format) {
  const GreedyResult r = greedy_normalize(parse_class(text));
  nlohmann::json marking = nlohmann::json::array();
  std::string marking_text;
  for (LineIndex k : r.marking) {
    marking.push_back(line_label(k));
    marking_text += (marking_text.empty() ? "" : " ") + line_label(k);
  }
  if (format == "json") {
    out << nlohmann::json{{"marking", marking},
                          {"word", to_text(r.word)},
                          {"class", to_text(r.normalized)},
                          {"normal_form", r.normal_form}}
               .dump()
        << '\n';
    return;
  }
  out << "marking: " << marking_text << '\n'
      << "word: " << to_text(r.word) << '\n'
      << "class: " << to_text(r.normalized) << '\n'
      << "normal_form: " << boolean(r.normal_form) << '\n';
}

inline void cmd_ample(std::ostream& out, const std::string& text, const std::string& format) {
  const DivisorClass d = parse_class(text);
  const bool va = is_very_ample(d);
  if (format == "json") {
    out << nlohmann::json{{"class", to_text(d)}, {"very_ample", va}, {"ample", is_ample(d)}}.dump() << '\n';
    return;
  }
  out << "very_ample: " << boolean(va) << '\n' << "ample: " << boolean(is_ample(d)) << '\n';
}

inline void cmd_irreducible(std::ostream& out, const std::string& text, const std::string& format) {
  const IrreducibleVerdict v = contains_irreducible(parse_class(text));
  if (format == "json")
    out << verdict_json(v).dump() << '\n';
  else
    out << verdict_text(v) << '\n';
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor classes, lines and ampleness on the quartic Del Pezzo surface", "delpezzo"};
  app.require_subcommand(1);

  std::string class_text, word_text, format = "text";
  Coeff bound = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto add_class = [&](CLI::App* sub) {
    sub->add_option("class", class_text, "Class as a;b1,b2,b3,b4,b5")->required();
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed, std::string fallback) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed));
    sub->preparse_callback([&format, fallback](std::size_t) { format = fallback; });
  };

  auto* info = app.add_subcommand("info", "Numerical invariants, ampleness and irreducibility of a class");
  add_class(info);
  add_format(info, {"text", "json"}, "text");

  auto* lines = app.add_subcommand("lines", "The 16 lines (dot: incidence graph)");
  add_format(lines, {"text", "json", "dot"}, "text");

  auto* skew = app.add_subcommand("skew", "The five-tuples of mutually skew lines");
  add_format(skew, {"text", "json"}, "text");

  auto* cremona = app.add_subcommand("cremona", "Apply a word of relabellings and quadratic transformations");
  cremona->add_option("--word", word_text, "Word such as q(1,2,3),p(2,1,3,4,5)")->required();
  add_class(cremona);
  add_format(cremona, {"text", "json"}, "text");

  auto* normalize = app.add_subcommand("normalize", "Greedy re-marking to the very-ampleness normal form");
  add_class(normalize);
  add_format(normalize, {"text", "json"}, "text");

  auto* ample = app.add_subcommand("ample", "Very-ampleness test against all lines");
  add_class(ample);
  add_format(ample, {"text", "json"}, "text");

  auto* irreducible = app.add_subcommand("irreducible", "Whether the class contains an irreducible curve");
  add_class(irreducible);
  add_format(irreducible, {"text", "json"}, "text");

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate every class with |a|,|b_i| <= B");
  sweep_cmd->add_option("--bound", bound, "Box bound B, 1..6")->required();
  sweep_cmd->add_option("--jobs", jobs, "Worker threads; output does not depend on it")->check(CLI::PositiveNumber);
  add_format(sweep_cmd, {"json", "csv"}, "json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (info->parsed()) detail::cmd_info(out, class_text, format);
    if (lines->parsed()) detail::cmd_lines(out, format);
    if (skew->parsed()) detail::cmd_skew(out, format);
    if (cremona->parsed()) detail::cmd_cremona(out, word_text, class_text, format);
    if (normalize->parsed()) detail::cmd_normalize(out, class_text, format);
    if (ample->parsed()) detail::cmd_ample(out, class_text, format);
    if (irreducible->parsed()) detail::cmd_irreducible(out, class_text, format);
    if (sweep_cmd->parsed())
      write_sweep(out, bound, format == "csv" ? SweepFormat::Csv : SweepFormat::Json, jobs);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}

}  // namespace delpezzo::cli
