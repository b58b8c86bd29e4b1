#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abelext.hpp"
#include "commutator.hpp"
#include "constructions.hpp"
#include "io.hpp"
#include "report.hpp"

namespace moufkit::cli {

enum exit_code : int { ok = 0, domain_failure = 1, io_failure = 2 };

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(::moufkit::detail::trim(cur));
  return out;
}

inline std::size_t to_count(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw loop_error(errc::spec_invalid, "expected a non-negative integer, got \"" + s + "\"");
  return v;
}

/// "0,1,5" or "all".
inline std::vector<element> parse_elements(const std::string& s, const FiniteLoop& q) {
  std::vector<element> out;
  if (s == "all") {
    for (std::size_t a = 0; a < q.order(); ++a) out.push_back(static_cast<element>(a));
    return out;
  }
  for (const auto& tok : split(s, ',')) {
    std::size_t v = to_count(tok);
    if (v >= q.order())
      throw loop_error(errc::not_a_subloop, "element " + tok + " is out of range for order " + std::to_string(q.order()));
    out.push_back(static_cast<element>(v));
  }
  return out;
}

/// Generators "a,b;c,d" as coordinate vectors.
inline std::vector<std::vector<std::size_t>> parse_generators(const std::string& s) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& g : split(s, ';')) {
    std::vector<std::size_t> c;
    for (const auto& t : split(g, ',')) c.push_back(to_count(t));
    out.push_back(std::move(c));
  }
  return out;
}

inline void print_set(std::ostream& out, const std::vector<element>& s) {
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << "}\n";
}

/// Normal closure of the given elements, with a notice when it is larger.
inline Subloop normal_from(const FiniteLoop& q, const std::vector<element>& elems, const char* name, std::ostream& err) {
  Subloop n = normal_closure(q, elems);
  std::vector<element> given = elems;
  given.push_back(0);
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (given != n.elements())
    err << "notice: " << name << " replaced by its normal closure of order " << n.size() << "\n";
  return n;
}

}  // namespace detail

/// Runs the command line given as arguments (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite loop toolkit", "moufkit"};
  app.require_subcommand(1);

  std::string path, json_path, out_path;
  AnalysisOptions opt;

  auto* validate = app.add_subcommand("validate", "check that a .loop file is a loop");
  validate->add_option("path", path, "table file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "full analysis report as JSON");
  analyze_cmd->add_option("path", path, "table file")->required();
  analyze_cmd->add_option("--json", json_path, "write the report here instead of stdout");
  analyze_cmd->add_option("--max-order", opt.max_order, "order limit for cubic scans");
  analyze_cmd->add_option("--max-inn", opt.max_inn, "size limit for the inner mapping group");
  analyze_cmd->add_option("--max-normal-lattice", opt.max_normal_lattice, "order limit for normal-subloop searches");

  auto* construct = app.add_subcommand("construct", "write a constructed loop as .loop");
  construct->require_subcommand(1);
  construct->add_option("--out", out_path, "output file (stdout if omitted)");
  std::string w_factors, b_gens, f_gens, form_text = "0";
  auto* example = construct->add_subcommand("example", "quadratic-form loop on F x W");
  example->add_option("--w", w_factors, "invariant factors of W, e.g. 2,4")->required();
  example->add_option("--b", b_gens, "generators of B, e.g. \"0,2\" or \"0,1,0;0,0,1\"")->required();
  example->add_option("--f", f_gens, "generator of F (defaults to --b)");
  example->add_option("--form", form_text, "quadratic form on W/B, e.g. u1u2 + u3");
  example->add_option("--out", out_path, "output file");
  std::vector<std::string> fixture_words;
  auto* fixture_cmd = construct->add_subcommand("fixture", "named fixture, e.g. cyclic 7 or 'paige-M2'");
  fixture_cmd->add_option("name", fixture_words, "fixture name and parameters")->required();
  fixture_cmd->add_option("--out", out_path, "output file");

  std::string x_text, y_text;
  auto* comm = app.add_subcommand("commutator", "the commutator [X,Y] of two normal subloops");
  comm->add_option("path", path, "table file")->required();
  comm->add_option("--x", x_text, "elements of X or \"all\"")->required();
  comm->add_option("--y", y_text, "elements of Y or \"all\"")->required();

  auto* solv = app.add_subcommand("solvability", "nilpotency and solvability verdicts with series");
  solv->add_option("path", path, "table file")->required();
  solv->add_option("--max-normal-lattice", opt.max_normal_lattice, "order limit for the congruence search");

  bool central = false;
  auto* dec = app.add_subcommand("decompose", "extension data of Q over a normal commutative subloop");
  dec->add_option("path", path, "table file")->required();
  dec->add_option("--x", x_text, "elements generating X")->required();
  dec->add_flag("--central", central, "require a central extension");
  dec->add_option("--json", json_path, "write the extension data here instead of stdout");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return io_failure;
  }

  auto emit = [&](const std::string& text, const std::string& dest) {
    if (dest.empty())
      out << text;
    else
      write_text_file(dest, text);
  };

  try {
    if (*validate) {
      FiniteLoop q = read_loop_file(path);
      out << "order " << q.order() << "\n";
      if (q.relabeled())
        out << "identity 0 (input element " << q.original_labels()[0] << ", relabeled)\n";
      else
        out << "identity 0\n";
      return ok;
    }
    if (*analyze_cmd) {
      FiniteLoop q = read_loop_file(path);
      emit(analyze(q, opt, path).dump(2) + "\n", json_path);
      return ok;
    }
    if (*construct) {
      FiniteLoop q;
      if (*example) {
        FiniteAbelianGroupSpec spec;
        for (const auto& t : detail::split(w_factors, ',')) spec.factors.push_back(detail::to_count(t));
        spec.b_generators = detail::parse_generators(b_gens);
        spec.f_generators = detail::parse_generators(f_gens.empty() ? b_gens : f_gens);
        GroupChain chain = validate_chain(spec);
        q = build_quadratic_loop(spec, parse_form(form_text, chain.dimension)).loop;
      } else {
        std::string name = fixture_words.front();
        if (fixture_words.size() > 1) {
          name += "(";
          for (std::size_t i = 1; i < fixture_words.size(); ++i) name += (i > 1 ? "," : "") + fixture_words[i];
          name += ")";
        }
        q = fixture(name);
      }
      emit(serialize_loop(q), out_path);
      return ok;
    }
    if (*comm) {
      FiniteLoop q = read_loop_file(path);
      Subloop x = detail::normal_from(q, detail::parse_elements(x_text, q), "X", err);
      Subloop y = detail::normal_from(q, detail::parse_elements(y_text, q), "Y", err);
      Subloop c = commutator(q, x, y);
      detail::print_set(out, c.elements());
      if (x == y) out << (c.is_trivial() ? "X is abelian in Q\n" : "X is not abelian in Q\n");
      if (y.is_whole()) out << (c.is_trivial() ? "X is central in Q\n" : "X is not central in Q\n");
      return ok;
    }
    if (*solv) {
      FiniteLoop q = read_loop_file(path);
      nlohmann::json j;
      ::moufkit::detail::section(j, "nilpotent", [&] { return ::moufkit::detail::series_json(nilpotent(q)); });
      ::moufkit::detail::section(j, "classical_solvable",
                                 [&] { return ::moufkit::detail::series_json(classical_solvable(q)); });
      ::moufkit::detail::section(j, "congruence_solvable", [&] {
        return ::moufkit::detail::series_json(congruence_solvable(q, opt.max_normal_lattice));
      });
      out << j.dump(2) << "\n";
      return ok;
    }
    if (*dec) {
      FiniteLoop q = read_loop_file(path);
      Subloop x = detail::normal_from(q, detail::parse_elements(x_text, q), "X", err);
      auto r = central ? decompose_central(q, x) : decompose(q, x);
      if (!r) {
        err << "no extension data: " << r.failure << "\n";
        return domain_failure;
      }
      emit(serialize_extension(*r.data), json_path);
      return ok;
    }
  } catch (const io_error& e) {
    err << e.what() << "\n";
    return io_failure;
  } catch (const loop_error& e) {
    err << e.what() << "\n";
    return e.code() == errc::parse_error ? io_failure : domain_failure;
  }
  return ok;
}

}  // namespace moufkit::cli
