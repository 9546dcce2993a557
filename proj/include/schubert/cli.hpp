#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it in-process with string streams.
//
// Exit codes: 0 success, 1 invalid input (including size limits), 2 internal
// assertion failure. Errors go to the error stream as one line prefixed with
// "error[<kind>]: ".

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schubert/classic.hpp"
#include "schubert/classify.hpp"
#include "schubert/orthodontia.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/tableaux.hpp"
#include "schubert/weyl.hpp"

namespace schubert::cli {

enum class OutputMode { Plain, Structured };

namespace detail {

template <class Seq>
std::string join(const Seq& values, const char* sep = ",") {
  std::string out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += sep;
    first = false;
    out += std::to_string(v);
  }
  return out;
}

inline std::string read_input_file(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline void print_polynomial(std::ostream& out, const Polynomial& p, OutputMode mode) {
  if (mode == OutputMode::Structured)
    out << to_structured(p);
  else
    out << to_string(p) << '\n';
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert polynomials: expansions, orthodontia, tableaux, flagged Weyl characters, zero-one tests",
               "schubert"};
  app.require_subcommand(1);
  app.fallthrough();

  bool structured = false;
  bool checked = false;
  std::optional<int> limit;
  app.add_flag("--structured", structured, "Line-oriented key=value output");
  app.add_flag("--checked", checked, "Cross-check results; disagreement exits with status 2");
  app.add_option("--limit", limit, "Override the size limit of the selected computation");

  std::string perm_text;
  std::string method = "classic";
  auto* expand = app.add_subcommand("expand", "Expand the Schubert polynomial of a permutation");
  expand->add_option("perm", perm_text, "Permutation in one-line notation")->required();
  expand->add_option("--method", method, "classic | orthodontia | tableaux | weyl")
      ->check(CLI::IsMember({"classic", "orthodontia", "tableaux", "weyl"}));

  bool trace = false;
  auto* ortho = app.add_subcommand("orthodontia", "Orthodontic sequence of a permutation");
  ortho->add_option("perm", perm_text, "Permutation in one-line notation")->required();
  ortho->add_flag("--trace", trace, "Print the intermediate diagrams O(w,r)");

  std::optional<int> stage;
  bool check_fillings = false;
  auto* tab = app.add_subcommand("tableaux", "List the tableau family of a permutation");
  tab->add_option("perm", perm_text, "Permutation in one-line notation")->required();
  tab->add_option("--stage", stage, "List the partial stage r instead");
  tab->add_flag("--check", check_fillings, "Assert that every word is a column-strict row-flagged filling");

  std::string diagram_path;
  auto* chr = app.add_subcommand("char", "Dual character of the flagged Weyl module of a diagram");
  chr->add_option("diagram-file", diagram_path, "Diagram file ('-' for stdin)")->required();

  int row = 0;
  int col = 0;
  bool show_f = false;
  auto* dom = app.add_subcommand("dominance", "Check chi_D - M chi_Dhat(x_k=0) >= 0 for one row and column");
  dom->add_option("diagram-file", diagram_path, "Diagram file ('-' for stdin)")->required();
  dom->add_option("--row", row, "Row k")->required();
  dom->add_option("--col", col, "Column l")->required();
  dom->add_flag("--show-f", show_f, "Also print the remainder F");

  bool all_methods = false;
  auto* zo = app.add_subcommand("zero-one", "Decide whether the Schubert polynomial is zero-one");
  zo->add_option("perm", perm_text, "Permutation in one-line notation")->required();
  zo->add_flag("--all-methods", all_methods, "Include the expansion criterion");

  int survey_n = 0;
  std::string survey_methods = "fast";
  unsigned threads = 0;
  auto* sv = app.add_subcommand("survey", "Count zero-one permutations in S_n");
  sv->add_option("n", survey_n, "Size")->required();
  sv->add_option("--methods", survey_methods, "fast | all")->check(CLI::IsMember({"fast", "all"}));
  sv->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[invalid-input]: " << e.what() << '\n';
    return 1;
  }

  const OutputMode mode = structured ? OutputMode::Structured : OutputMode::Plain;
  auto warn_limit = [&](int default_limit) {
    if (limit && *limit > default_limit)
      err << "warning: size limit raised from " << default_limit << " to " << *limit
          << "; running time grows quickly\n";
    return limit.value_or(default_limit);
  };

  try {
    if (expand->parsed()) {
      const Permutation w = parse_permutation(perm_text);
      Polynomial p;
      if (method == "classic")
        p = schubert_classic(w);
      else if (method == "orthodontia")
        p = schubert_orthodontic(w);
      else if (method == "tableaux")
        p = schubert_from_tableaux(w);
      else
        p = dual_character(rothe_diagram(w), warn_limit(kDefaultWeylLimit));
      if (checked && method != "classic" && p != schubert_classic(w))
        throw InternalError("expand: method " + method + " disagrees with the classical expansion");
      detail::print_polynomial(out, p, mode);
      return 0;
    }

    if (ortho->parsed()) {
      const Permutation w = parse_permutation(perm_text);
      const OrthodontiaTrace tr = orthodontia(w);
      const auto& seq = tr.sequence;
      if (checked)
        schubert::detail::ensure(column_equivalent(build_D_im(seq, w.size()), tr.stage(0)),
                                 "orthodontia: D_{i,m} is not column-equivalent to D(w)");
      if (mode == OutputMode::Structured) {
        out << "orthodontia perm=" << to_string(w) << " length=" << seq.length() << '\n';
        out << "i=" << detail::join(seq.teeth) << '\n';
        out << "k=" << detail::join(seq.interval_multiplicities) << '\n';
        out << "m=" << detail::join(seq.step_multiplicities) << '\n';
      } else {
        out << "i=(" << detail::join(seq.teeth) << ")\n";
        out << "k=(" << detail::join(seq.interval_multiplicities) << ")\n";
        out << "m=(" << detail::join(seq.step_multiplicities) << ")\n";
      }
      if (trace) {
        for (int r = 0; r <= tr.length(); ++r) {
          const auto& removed = tr.removed[static_cast<std::size_t>(r)];
          if (mode == OutputMode::Structured) {
            const Diagram& d = tr.stage(r);
            for (int c = 1; c <= d.num_columns(); ++c)
              out << "stage r=" << r << " column=" << c << " rows=" << detail::join(d.column(c).elements()) << '\n';
            out << "removed r=" << r << " columns=" << detail::join(removed) << '\n';
          } else {
            out << "O(w," << r << "):\n" << format_diagram(tr.stage(r));
            out << "removed(" << r << ")=(" << detail::join(removed) << ")\n";
          }
        }
      }
      return 0;
    }

    if (tab->parsed()) {
      const Permutation w = parse_permutation(perm_text);
      const FillingContext ctx(w);
      const int l = ctx.trace.length();
      if (stage && (*stage < 0 || *stage > l))
        throw std::invalid_argument("stage must lie in [0, " + std::to_string(l) + "]");
      const WordSet& words = ctx.stages[static_cast<std::size_t>(stage.value_or(0))];
      for (const Word& word : words) {
        if (mode == OutputMode::Structured) out << "word=";
        out << to_string(word, w.size()) << '\n';
      }
      if (check_fillings) {
        std::size_t checked_words = 0;
        const int lo = stage.value_or(0);
        const int hi = stage.value_or(l);
        for (int r = lo; r <= hi; ++r) {
          schubert::detail::ensure(has_northwest_property(ctx.trace.stage(r)),
                                   "O(w," + std::to_string(r) + ") lacks the northwest property");
          for (const Word& word : ctx.stages[static_cast<std::size_t>(r)]) {
            read_into_diagram(ctx, word, r);
            ++checked_words;
          }
        }
        out << "check=ok stages=" << (hi - lo + 1) << " words=" << checked_words << '\n';
      }
      return 0;
    }

    if (chr->parsed()) {
      const Diagram d = parse_diagram(detail::read_input_file(diagram_path));
      detail::print_polynomial(out, dual_character(d, warn_limit(kDefaultWeylLimit)), mode);
      return 0;
    }

    if (dom->parsed()) {
      const Diagram d = parse_diagram(detail::read_input_file(diagram_path));
      const DominanceResult res = pattern_dominance_check(d, row, col, warn_limit(kDefaultWeylLimit));
      if (checked) {
        schubert::detail::ensure(res.rank_monotone, "dominance: groupwise rank inequality failed");
        schubert::detail::ensure(!res.augmentation_checked || res.augmentation_ok,
                                 "dominance: augmentation check failed");
      }
      const std::string m = format_monomial(res.multiplier, d.rows());
      out << "M=" << (m.empty() ? "1" : m) << '\n';
      out << "ok=" << (res.ok ? "true" : "false") << '\n';
      out << "rank_monotone=" << (res.rank_monotone ? "true" : "false") << '\n';
      if (show_f) {
        if (mode == OutputMode::Structured)
          out << "F:\n" << to_structured(res.remainder);
        else
          out << "F=" << to_string(res.remainder) << '\n';
      }
      return 0;
    }

    if (zo->parsed()) {
      const Permutation w = parse_permutation(perm_text);
      const ZeroOneStatus s = zero_one_status(w, all_methods, checked);
      auto yes_no = [](bool b) { return b ? "true" : "false"; };
      if (mode == OutputMode::Plain) out << yes_no(s.verdict()) << '\n';
      else out << "zero_one=" << yes_no(s.verdict()) << '\n';
      if (s.pattern_witness)
        out << "pattern=" << to_string(s.pattern_witness->pattern) << " realization=("
            << detail::join(s.pattern_witness->realization) << ")\n";
      if (s.configuration_witness) out << "configuration=" << to_string(*s.configuration_witness) << '\n';
      if (s.by_expansion) out << "by_expansion=" << yes_no(*s.by_expansion) << '\n';
      out << "by_patterns=" << yes_no(s.by_patterns) << '\n';
      out << "by_configurations=" << yes_no(s.by_configurations) << '\n';
      out << "by_multiplicity_free=" << yes_no(s.by_multiplicity_free) << '\n';
      out << "agree=" << yes_no(s.agree()) << '\n';
      return 0;
    }

    if (sv->parsed()) {
      const SurveyMethods methods = survey_methods == "all" ? SurveyMethods::All : SurveyMethods::Fast;
      const int lim = warn_limit(default_survey_limit(methods));
      const SurveySummary s = survey(survey_n, methods, lim, threads);
      if (mode == OutputMode::Structured)
        out << "survey n=" << s.n << " methods=" << survey_methods << " total=" << s.total
            << " zero_one=" << s.zero_one << " disagreements=" << s.disagreements << '\n';
      else
        out << s.zero_one << " of " << s.total << '\n' << "disagreements=" << s.disagreements << '\n';
      if (checked && s.disagreements > 0)
        throw InternalError("survey: predicates disagree, first at " + to_string(*s.first_disagreement));
      return 0;
    }
  } catch (const InternalError& e) {
    err << "error[internal]: " << e.what() << '\n';
    return 2;
  } catch (const LimitExceeded& e) {
    err << "error[limit-exceeded]: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error[invalid-input]: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error[invalid-input]: " << e.what() << '\n';
    return 1;
  }
  err << "error[invalid-input]: no subcommand\n";
  return 1;
}

}  // namespace schubert::cli
