// Command-line front end: batch checks, surface invariants, the two-element
// census, algebra export, word evaluation and the relation-word calculus.
//
// Exit codes: 0 success, 1 check failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "frobspan/json_io.hpp"
#include "frobspan/linearize.hpp"
#include "frobspan/tqft.hpp"

namespace {

using frobspan::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw frobspan::ParseError("cannot open \"" + path + "\"");
  return json::parse(in);  // throws json::parse_error with position info
}

void emit(const json& report, const std::string& format, const std::string& table_text) {
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << table_text;
}

std::string matrix_table(const frobspan::MultiplicityMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.src().size(); ++i) {
    out += m.src().label(i) + " :";
    for (std::size_t j = 0; j < m.dst().size(); ++j) out += " " + m.at(i, j).str();
    out += "\n";
  }
  if (m.src().empty()) out = "(empty)\n";
  return out;
}

int cmd_check(const std::string& path, const std::string& format) {
  json input = load_file(path);
  frobspan::TruncatedSS2 t = frobspan::tss2_from_json(input);

  json report;
  std::string table;
  bool ok = true;

  json violations = json::array();
  for (const auto& v : frobspan::validate_truncated(t)) {
    violations.push_back({{"check", "simplicial"}, {"rule", v.rule}, {"element", v.element}});
    table += "simplicial identity violated: " + v.rule + " at " + v.element + "\n";
    ok = false;
  }
  report["simplicial_identities"] = ok;

  bool unit_ok = false, assoc_ok = false;
  if (ok) {
    for (const auto& v : frobspan::unit_condition_violations(t)) {
      int condition = v.rule == "unit.condition_1" ? 1 : 2;
      violations.push_back(
          {{"check", "unit"}, {"condition", condition}, {"element", v.element}});
      table += "unit condition " + std::to_string(condition) + " violated at " + v.element + "\n";
    }
    unit_ok = frobspan::check_unit_conditions(t);
    assoc_ok = frobspan::check_associativity_fibers(t);
    if (!assoc_ok) {
      violations.push_back({{"check", "associativity"}, {"condition", "fibers"}});
      table += "associativity fiber counts differ\n";
    }
    ok = unit_ok && assoc_ok;
  }
  report["unit_conditions"] = unit_ok;
  report["associativity_fibers"] = assoc_ok;

  if (input.contains("alpha_hat")) {
    if (ok) {
      frobspan::FrobeniusDatum f(t,
                                 frobspan::set_map_from_json(input.at("alpha_hat"), t.X1, t.X1));
      frobspan::FrobeniusReport fr = frobspan::check_frobenius(f);
      report["frobenius"] = fr.ok();
      for (const auto& failure : fr.failures) {
        int condition = failure.condition == "frobenius.condition_1" ? 1 : 2;
        violations.push_back({{"check", "frobenius"},
                              {"condition", condition},
                              {"element", failure.element},
                              {"detail", failure.detail}});
        table += "frobenius condition " + std::to_string(condition) + " violated at " +
                 failure.element + "\n";
      }
      ok = ok && fr.ok();
      if (fr.ok()) {
        bool commutative = frobspan::check_commutative(f);
        bool symmetric = frobspan::check_symmetric(f);
        report["commutative"] = commutative;
        report["symmetric"] = symmetric;
        table += std::string("commutative: ") + (commutative ? "yes" : "no") + "\n";
        table += std::string("symmetric: ") + (symmetric ? "yes" : "no") + "\n";
      }
    } else {
      report["frobenius"] = false;
    }
  }

  report["violations"] = violations;
  report["ok"] = ok;
  if (ok) table += "all checks passed\n";
  emit(report, format, table);
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_invariant(const std::string& path, std::optional<unsigned> genus,
                  std::optional<unsigned> max_genus, const std::string& format) {
  frobspan::FrobeniusDatum f = frobspan::frobenius_from_json(load_file(path));
  if (!frobspan::check_frobenius(f).ok()) {
    std::cerr << "input is not a Frobenius object\n";
    return kExitCheckFailed;
  }
  unsigned lo = genus ? *genus : 0;
  unsigned hi = genus ? *genus : max_genus.value_or(0);
  json rows = json::array();
  std::string table;
  for (unsigned g = lo; g <= hi; ++g) {
    frobspan::Nat z = frobspan::partition_function(f, g);
    rows.push_back({{"genus", g}, {"Z", z.str()}});
    table += std::to_string(g) + " " + z.str() + "\n";
  }
  emit(rows, format, table);
  return kExitOk;
}

int cmd_classify(unsigned x1_size, unsigned max_count, const std::string& format) {
  if (x1_size != 2) {
    std::cerr << "only --x1-size 2 is implemented\n";
    return kExitUsage;
  }
  json rows = json::array();
  std::string table = "n_bab n_bbb alpha monoid frobenius\n";
  for (unsigned n_bab = 0; n_bab <= max_count; ++n_bab)
    for (unsigned n_bbb = 0; n_bbb <= max_count; ++n_bbb)
      for (auto choice : {frobspan::TwoElementAlpha::id, frobspan::TwoElementAlpha::swap}) {
        frobspan::TwoElementDatum d = frobspan::two_element_family(n_bab, n_bbb, choice);
        const frobspan::TruncatedSS2& t = d.datum.base;
        bool monoid = frobspan::validate_truncated(t).empty() &&
                      frobspan::check_unit_conditions(t) &&
                      frobspan::check_associativity_fibers(t);
        bool frob = frobspan::check_frobenius(d.datum).ok();
        std::string alpha = choice == frobspan::TwoElementAlpha::id ? "id" : "swap";
        rows.push_back({{"n_bab", n_bab},
                        {"n_bbb", n_bbb},
                        {"alpha", alpha},
                        {"monoid", monoid},
                        {"frobenius", frob}});
        table += std::to_string(n_bab) + " " + std::to_string(n_bbb) + " " + alpha + " " +
                 (monoid ? "yes" : "no") + " " + (frob ? "yes" : "no") + "\n";
      }
  emit(rows, format, table);
  return kExitOk;
}

int cmd_algebra(const std::string& path, const std::string& out_path,
                const std::string& format) {
  frobspan::FrobeniusDatum f = frobspan::frobenius_from_json(load_file(path));
  if (!frobspan::check_frobenius(f).ok()) {
    std::cerr << "input is not a Frobenius object\n";
    return kExitCheckFailed;
  }
  frobspan::FrobeniusAlgebraPresentation alg = frobspan::linearize(f);
  auto violations = frobspan::verify_frobenius_algebra(alg);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << v << "\n";
    return kExitCheckFailed;
  }
  json j = frobspan::algebra_to_json(alg);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw frobspan::ParseError("cannot write \"" + out_path + "\"");
    out << j.dump(2) << "\n";
    std::cout << "wrote " << out_path << "\n";
  } else {
    emit(j, format, j.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_eval(const std::string& path, const std::string& word_path, const std::string& format) {
  frobspan::FrobeniusDatum f = frobspan::frobenius_from_json(load_file(path));
  frobspan::GeneratorWord w = frobspan::generator_word_from_json(load_file(word_path));
  frobspan::MultiplicityMatrix m = frobspan::evaluate_word(f, w);
  if (m.src() == frobspan::FiniteSet::point() && m.dst() == frobspan::FiniteSet::point()) {
    emit(json{{"value", m.at("*", "*").str()}}, format, m.at("*", "*").str() + "\n");
  } else {
    emit(frobspan::matrix_to_json(m), format, matrix_table(m));
  }
  return kExitOk;
}

int cmd_ww(const std::string& path, const std::string& mode, const std::string& format) {
  frobspan::RelationWord w = frobspan::relation_word_from_json(load_file(path));
  if (mode == "reduce") {
    frobspan::RelationWord reduced = frobspan::reduce_word(w);
    json j = frobspan::relation_word_to_json(reduced);
    std::string table = "letters: " + std::to_string(reduced.length()) + "\n";
    for (const auto& r : reduced.letters) {
      table += "  ";
      for (const auto& [x, y] : r.label_pairs()) table += "(" + x + "," + y + ") ";
      table += "\n";
    }
    emit(j, format, table);
    return kExitOk;
  }
  if (mode == "trajectories") {
    frobspan::MultiplicityMatrix m = frobspan::span_to_matrix(frobspan::word_trajectories(w));
    emit(frobspan::matrix_to_json(m), format, matrix_table(m));
    return kExitOk;
  }
  std::cerr << "mode must be \"reduce\" or \"trajectories\"\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of Frobenius objects in finite spans"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string file, out_path, word_file, ww_mode;
  std::optional<unsigned> genus, max_genus;
  unsigned x1_size = 2, max_count = 5;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* check = app.add_subcommand("check", "run the structure checks on a file");
  check->add_option("file", file)->required();
  add_format(check);

  CLI::App* invariant = app.add_subcommand("invariant", "closed-surface invariants");
  invariant->add_option("file", file)->required();
  invariant->add_option("--genus", genus, "single genus");
  invariant->add_option("--max-genus", max_genus, "print genus 0..G");
  add_format(invariant);

  CLI::App* classify = app.add_subcommand("classify", "census of two-element structures");
  classify->add_option("--x1-size", x1_size, "size of the edge set (only 2)");
  classify->add_option("--max-count", max_count, "bound on the free fiber sizes");
  add_format(classify);

  CLI::App* algebra = app.add_subcommand("algebra", "export the induced algebra");
  algebra->add_option("file", file)->required();
  algebra->add_option("--out", out_path, "write to a file instead of stdout");
  add_format(algebra);

  CLI::App* eval = app.add_subcommand("eval", "evaluate a generator word");
  eval->add_option("file", file)->required();
  eval->add_option("word", word_file)->required();
  add_format(eval);

  CLI::App* ww = app.add_subcommand("ww", "relation-word calculus");
  ww->add_option("file", file)->required();
  ww->add_option("mode", ww_mode, "reduce | trajectories")->required();
  add_format(ww);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(file, format);
    if (app.got_subcommand(invariant)) {
      if (!genus && !max_genus) {
        std::cerr << "one of --genus or --max-genus is required\n";
        return kExitUsage;
      }
      return cmd_invariant(file, genus, max_genus, format);
    }
    if (app.got_subcommand(classify)) return cmd_classify(x1_size, max_count, format);
    if (app.got_subcommand(algebra)) return cmd_algebra(file, out_path, format);
    if (app.got_subcommand(eval)) return cmd_eval(file, word_file, format);
    if (app.got_subcommand(ww)) return cmd_ww(file, ww_mode, format);
  } catch (const frobspan::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const frobspan::WordError& e) {
    std::cerr << "word error at " << e.subtree() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const frobspan::PreconditionError& e) {
    std::cerr << "check failed [" << e.condition() << "]: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const frobspan::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
