#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "fixmahon/error.hpp"
#include "fixmahon/hook_bijections.hpp"
#include "fixmahon/lyndon_bijections.hpp"
#include "fixmahon/perm_bijections.hpp"
#include "fixmahon/perm_core.hpp"
#include "fixmahon/qseries.hpp"
#include "fixmahon/verify.hpp"
#include "fixmahon/word_core.hpp"

namespace fixmahon::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxPolynomialDegree = 10;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
  std::string format = "text";
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> r_max;
  std::optional<std::size_t> alphabet_max;
  std::size_t t_order = 10;
  std::string method = "geometric";
};

struct Field {
  std::string key;
  std::string value;
  bool scalar = true;  // printed on the summary line in text mode
};

// One result per input; `fields` feed csv/json, `text` is the plain rendering.
struct Row {
  std::vector<Field> fields;
  std::string text;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const std::vector<Row>& rows, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::text:
      for (const Row& r : rows) out << r.text;
      break;
    case ReportFormat::csv:
      if (rows.empty()) break;
      for (std::size_t i = 0; i < rows.front().fields.size(); ++i)
        out << (i ? "," : "") << csv_field(rows.front().fields[i].key);
      out << '\n';
      for (const Row& r : rows) {
        for (std::size_t i = 0; i < r.fields.size(); ++i) out << (i ? "," : "") << csv_field(r.fields[i].value);
        out << '\n';
      }
      break;
    case ReportFormat::json: {
      auto object = [](const Row& r) {
        Json j = Json::object();
        for (const Field& f : r.fields) {
          const bool numeric = f.scalar && !f.value.empty() &&
                               f.value.find_first_not_of("0123456789") == std::string::npos;
          if (numeric) {
            j[f.key] = std::stoull(f.value);
          } else {
            j[f.key] = f.value;
          }
        }
        return j;
      };
      Json j;
      if (rows.size() == 1) {
        j = object(rows.front());
      } else {
        j = Json::array();
        for (const Row& r : rows) j.push_back(object(r));
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
}

std::string summary_text(const std::vector<Field>& fields) {
  std::string line, rest;
  for (const Field& f : fields) {
    if (f.scalar) {
      line += (line.empty() ? "" : " ") + f.key + "=" + f.value;
    } else {
      rest += f.key + ": " + f.value + "\n";
    }
  }
  return line + "\n" + rest;
}

// "-" reads one input per nonblank line of `in`.
std::vector<std::string> inputs_from(const std::string& value, std::istream& in) {
  if (value != "-") return {value};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

template <class Fn>
std::vector<Row> for_each_input(const std::string& value, std::istream& in, Fn fn) {
  const std::vector<std::string> inputs = inputs_from(value, in);
  std::vector<Row> rows;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    try {
      rows.push_back(fn(inputs[k]));
    } catch (const ParseError& e) {
      if (value != "-") throw;
      throw ParseError("line " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  return rows;
}

// Permutations accept the same compact digit form as words.
Permutation parse_perm(const std::string& s) { return parse_permutation(to_string(parse_word_lenient(s))); }

std::string set_text(const PositionSet& s) { return "{" + to_string(s) + "}"; }

std::string join(const std::vector<Word>& words) { return join_words(words, " | "); }

Row word_stats_row(const std::string& input) {
  const Word w = parse_word_lenient(input);
  const WordStats st = word_stats(w);
  const WordClass cls = classify(w);
  std::string classes;
  auto add = [&](bool on, const char* name) {
    if (on) classes += (classes.empty() ? "" : ",") + std::string(name);
  };
  add(cls.niw, "niw");
  add(cls.v_word, "v-word");
  add(cls.u_word, "u-word");
  add(cls.l_word, "l-word");
  add(cls.h_word, "h-word");
  add(cls.desarrangement, "desarrangement");
  add(cls.hook, "hook");
  if (classes.empty()) classes = "none";
  const HFactorization hf = h_factorize(w);
  std::vector<Word> hparts{hf.head};
  hparts.insert(hparts.end(), hf.hooks.begin(), hf.hooks.end());

  Row row;
  row.fields = {
      {"word", to_string(w), false},
      {"tot", std::to_string(st.tot)},
      {"inv", std::to_string(st.inv)},
      {"rinv", std::to_string(st.rinv)},
      {"des", std::to_string(st.des)},
      {"maj", std::to_string(st.maj)},
      {"dec", std::to_string(st.dec)},
      {"single", std::to_string(st.single)},
      {"wlec", std::to_string(st.wlec)},
      {"wpix", std::to_string(st.wpix)},
      {"Single", to_string(single_stat(w).single_word), false},
      {"decreases", set_text(decreases(w).positions), false},
      {"lyndon", join(lyndon_factorize(w).factors), false},
      {"hfact", join(hparts), false},
      {"class", classes, false},
  };
  row.text = summary_text(row.fields);
  return row;
}

Row perm_stats_row(const std::string& input) {
  const Permutation sigma = parse_perm(input);
  const PermStats st = perm_stats(sigma);
  const ZStats z = z_stats(sigma);
  const HookFactorizationP hf = hook_factorize(sigma);
  std::vector<Word> hparts{hf.prefix};
  hparts.insert(hparts.end(), hf.hooks.begin(), hf.hooks.end());

  Row row;
  row.fields = {
      {"perm", to_string(sigma), false},
      {"exc", std::to_string(st.exc)},
      {"des", std::to_string(st.des)},
      {"maj", std::to_string(st.maj)},
      {"fix", std::to_string(st.fix)},
      {"inv", std::to_string(st.inv)},
      {"iexc", std::to_string(st.iexc)},
      {"ides", std::to_string(st.ides)},
      {"imaj", std::to_string(st.imaj)},
      {"lec", std::to_string(st.lec)},
      {"pix", std::to_string(st.pix)},
      {"dez", std::to_string(z.dez)},
      {"maz", std::to_string(z.maz)},
      {"maf", std::to_string(z.maf)},
      {"Ligne", set_text(st.ligne), false},
      {"Iligne", set_text(st.iligne), false},
      {"LAC", to_string(lac(sigma)), false},
      {"ILAC", to_string(ilac(sigma)), false},
      {"hook", join(hparts), false},
  };
  row.text = summary_text(row.fields);
  return row;
}

Row io_row(const std::string& input, const std::string& output) {
  Row row;
  row.fields = {{"input", input, false}, {"output", output, false}};
  row.text = output + "\n";
  return row;
}

Letter alphabet_of(const DStarSequence& d) {
  Letter r = d.head.empty() ? 0 : d.head.max();
  for (const DPair& p : d.pairs)
    if (!p.word.empty()) r = std::max(r, p.word.max() + 1);
  return r;
}

Letter alphabet_of(const Word& w) { return w.empty() ? 0 : w.max(); }

struct MapRequest {
  std::string phi, psi, transform, step;
  bool inverse = false;
  std::optional<Letter> r;
  std::string input;
};

std::string map_one(const MapRequest& m, const std::string& input) {
  auto pick = [&](Letter minimal) { return m.r.value_or(minimal); };
  if (!m.phi.empty()) {
    const bool fix_version = m.phi == "fix";
    if (!m.inverse) {
      const DStarSequence d = parse_dstar(input);
      const Letter r = pick(alphabet_of(d));
      return to_string(fix_version ? phi_fix(d, r) : phi_pix(d, r));
    }
    const Word w = parse_word_lenient(input);
    const Letter r = pick(alphabet_of(w));
    return to_string(fix_version ? phi_fix_inverse(w, r) : phi_pix_inverse(w, r));
  }
  if (!m.psi.empty()) {
    const bool fix_version = m.psi == "fix";
    if (!m.inverse) {
      const Word w = parse_word_lenient(input);
      const Letter r = pick(alphabet_of(w));
      return to_string(fix_version ? psi_fix(w, r) : psi_pix(w, r));
    }
    const StatPair p = parse_stat_pair(input);
    const std::size_t descents = fix_version ? des(p.sigma) : des(p.sigma.inverse());
    const Letter r = pick(static_cast<Letter>(alphabet_of(p.c) + descents));
    return to_string(fix_version ? psi_fix_inverse(p, r) : psi_pix_inverse(p, r));
  }
  if (!m.transform.empty()) {
    const Word w = parse_word_lenient(input);
    if (m.transform == "Phi") return to_string(m.inverse ? phi_second_inverse(w) : phi_second(w));
    const Letter r = pick(alphabet_of(w));
    return to_string(m.inverse ? transform_f_inverse(w, r) : transform_f(w, r));
  }
  if (!m.inverse) {
    const DStarSequence d = parse_dstar(input);
    const VStarSequence v = d_star_to_v_star(d);
    if (m.step == "v-star") return to_string(v);
    const UStarSequence u = v_star_to_u_star(v);
    if (m.step == "u-star") return to_string(u);
    return to_string(u_star_to_l_star(u));
  }
  const Word w = parse_word_lenient(input);
  const LStarSequence l = word_to_l_star(w);
  if (m.step == "l-star") return to_string(l);
  const UStarSequence u = l_star_to_u_star(l);
  if (m.step == "u-star") return to_string(u);
  return to_string(u_star_to_v_star(u));
}

int run_verify(const GlobalOptions& g, const std::string& suite, std::ostream& out) {
  const ReportFormat format = parse_report_format(g.format);
  const Caps caps{g.n_max, g.r_max, g.alphabet_max};
  if (suite == "all") {
    const std::vector<Report> reports = run_all_suites(caps);
    out << render_reports(reports, format);
    return merge_reports("all", reports).passed ? kExitOk : kExitFailed;
  }
  const Report report = run_suite(suite, caps);
  out << render_report(report, format);
  return report.passed ? kExitOk : kExitFailed;
}

int run_tables(const GlobalOptions& g, const std::string& which, std::ostream& out) {
  const ReportFormat format = parse_report_format(g.format);
  std::vector<std::string> names = which == "all" ? table_names() : std::vector<std::string>{which};
  bool all_match = true;
  for (const std::string& name : names) {
    const TableReproduction t = reproduce_table(name);
    all_match = all_match && t.matches();
    out << render_table(t, format);
  }
  return all_match ? kExitOk : kExitFailed;
}

ExpansionMethod parse_method(const std::string& name) {
  if (name == "direct") return ExpansionMethod::direct;
  if (name == "geometric") return ExpansionMethod::geometric;
  throw ParseError("bad token '" + name + "': expected direct or geometric");
}

int run_poly(const GlobalOptions& g, std::optional<std::size_t> an, const std::vector<std::size_t>& cn,
             const std::string& spec, std::ostream& out) {
  const ReportFormat format = parse_report_format(g.format);
  const int selected = (an ? 1 : 0) + (cn.empty() ? 0 : 1);
  if (selected > 1 || (selected == 0 && spec.empty()))
    throw UsageError("poly needs exactly one of --An n or --Cn n r, or --spec NAME");

  if (!spec.empty()) {
    if (!cn.empty()) throw UsageError("--spec applies to A_n; use it with --An or alone");
    SpecializationOptions options;
    options.n_max = an.value_or(g.n_max.value_or(options.n_max));
    options.t_order = g.t_order;
    if (options.n_max > kMaxPolynomialDegree)
      throw PreconditionError("n " + std::to_string(options.n_max) + " exceeds the limit " +
                              std::to_string(kMaxPolynomialDegree));
    const SpecializationReport r = specialization_check(parse_specialization(spec), options);
    Row row;
    row.fields = {{"spec", r.name},
                  {"status", r.passed ? "pass" : "fail"},
                  {"checked", std::to_string(r.checked)},
                  {"n_max", std::to_string(options.n_max)},
                  {"first_failure", r.first_failure}};
    row.text = r.name + ": " + (r.passed ? "PASS" : "FAIL") + " (" + std::to_string(r.checked) + " checks, n <= " +
               std::to_string(options.n_max) + ")\n" + (r.passed ? "" : "  " + r.first_failure + "\n");
    emit({row}, format, out);
    return r.passed ? kExitOk : kExitFailed;
  }

  Row row;
  if (an) {
    if (*an > kMaxPolynomialDegree)
      throw PreconditionError("n " + std::to_string(*an) + " exceeds the limit " +
                              std::to_string(kMaxPolynomialDegree));
    const std::string p = to_string(extract_an(*an));
    row.fields = {{"n", std::to_string(*an)}, {"polynomial", p}};
    row.text = p + "\n";
  } else {
    const std::size_t n = cn[0], r = cn[1];
    if (n > kMaxPolynomialDegree || r > kMaxPolynomialDegree)
      throw PreconditionError("n and r are limited to " + std::to_string(kMaxPolynomialDegree));
    const std::string p = to_string(expand_c(r, n, parse_method(g.method))[n]);
    row.fields = {{"n", std::to_string(n)}, {"r", std::to_string(r)}, {"polynomial", p}};
    row.text = p + "\n";
  }
  emit({row}, format, out);
  return kExitOk;
}

std::string one_line(std::string message) {
  for (char& c : message)
    if (c == '\n') c = ' ';
  return message;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Statistics, bijections and generating polynomials for words and permutations", "fixmahon"};
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "key=value file with defaults for the options below");

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--n-max", g.n_max, "Largest length or degree for verification");
  app.add_option("--r-max", g.r_max, "Largest alphabet bound r for verification");
  app.add_option("--alphabet-max", g.alphabet_max, "Largest letter for word-level merges");
  app.add_option("--t-order", g.t_order, "Truncation order in t for the Eulerian check");
  app.add_option("--method", g.method, "Expansion method for --Cn")->check(CLI::IsMember({"direct", "geometric"}));

  std::string perm_input, word_input;
  auto* stats = app.add_subcommand("stats", "Print every statistic of a permutation or word");
  auto* perm_opt = stats->add_option("--perm", perm_input, "Permutation, e.g. \"3 1 2\" or 312; - reads stdin");
  auto* word_opt = stats->add_option("--word", word_input, "Word, e.g. \"2 1 3 2\" or 2132; - reads stdin");
  perm_opt->excludes(word_opt);

  std::string lyndon_input, hfact_input, hook_input;
  auto* factorize = app.add_subcommand("factorize", "Lyndon, H- or hook factorization");
  auto* lyndon_opt = factorize->add_option("--lyndon", lyndon_input, "Word to factorize into Lyndon words");
  auto* hfact_opt = factorize->add_option("--hfact", hfact_input, "Word to split into head and H-words");
  auto* hook_opt = factorize->add_option("--hook", hook_input, "Permutation to split into prefix and hooks");
  lyndon_opt->excludes(hfact_opt)->excludes(hook_opt);
  hfact_opt->excludes(hook_opt);

  MapRequest m;
  std::optional<std::size_t> map_r;
  auto* map = app.add_subcommand("map", "Apply one of the bijections");
  auto* phi_opt = map->add_option("--phi", m.phi, "D* sequence to word")->check(CLI::IsMember({"fix", "pix"}));
  auto* psi_opt = map->add_option("--psi", m.psi, "Word to (permutation ; word)")->check(CLI::IsMember({"fix", "pix"}));
  auto* transform_opt =
      map->add_option("--transform", m.transform, "Word transformation")->check(CLI::IsMember({"F", "Phi"}));
  auto* step_opt = map->add_option("--step", m.step, "One stage of the D* to word chain")
                       ->check(CLI::IsMember({"v-star", "u-star", "l-star"}));
  map->add_flag("--inverse", m.inverse, "Apply the inverse map");
  map->add_option("--r", map_r, "Alphabet bound (defaults to the smallest legal value)");
  map->add_option("input", m.input, "Input value; - reads one per line from stdin")->required();
  phi_opt->excludes(psi_opt)->excludes(transform_opt)->excludes(step_opt);
  psi_opt->excludes(transform_opt)->excludes(step_opt);
  transform_opt->excludes(step_opt);

  std::optional<std::size_t> an;
  std::vector<std::size_t> cn;
  std::string spec;
  auto* poly = app.add_subcommand("poly", "Generating polynomials A_n and C_n(r)");
  poly->add_option("--An", an, "Print A_n(s,t,q,Y)");
  poly->add_option("--Cn", cn, "Print C_n(r) for n r")->expected(2);
  poly->add_option("--spec", spec, "Check a specialization of A_n up to n")
      ->check(CLI::IsMember({"sw18_19", "gr113_114", "bivariate115_116", "eulerian117", "derangementSym118",
                             "complementReverse119"}));

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite, "Suite name or all")->required()->check(CLI::IsMember(suites));

  std::string which;
  auto* tables = app.add_subcommand("tables", "Regenerate a reference table and diff it against its fixture");
  std::vector<std::string> table_choices = table_names();
  table_choices.push_back("all");
  tables->add_option("--which", which, "Table name or all")->required()->check(CLI::IsMember(table_choices));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  }

  try {
    if (map_r) m.r = static_cast<Letter>(*map_r);
    const ReportFormat format = parse_report_format(g.format);
    if (stats->parsed()) {
      if (!perm_opt->count() && !word_opt->count()) throw UsageError("stats needs --perm or --word");
      auto rows = perm_opt->count() ? for_each_input(perm_input, in, perm_stats_row)
                                    : for_each_input(word_input, in, word_stats_row);
      emit(rows, format, out);
      return kExitOk;
    }
    if (factorize->parsed()) {
      std::vector<Row> rows;
      if (lyndon_opt->count()) {
        rows = for_each_input(lyndon_input, in, [](const std::string& s) {
          return io_row(s, join(lyndon_factorize(parse_word_lenient(s)).factors));
        });
      } else if (hfact_opt->count()) {
        rows = for_each_input(hfact_input, in, [](const std::string& s) {
          const HFactorization hf = h_factorize(parse_word_lenient(s));
          std::vector<Word> parts{hf.head};
          parts.insert(parts.end(), hf.hooks.begin(), hf.hooks.end());
          return io_row(s, join(parts));
        });
      } else if (hook_opt->count()) {
        rows = for_each_input(hook_input, in, [](const std::string& s) {
          const HookFactorizationP hf = hook_factorize(parse_perm(s));
          std::vector<Word> parts{hf.prefix};
          parts.insert(parts.end(), hf.hooks.begin(), hf.hooks.end());
          return io_row(s, join(parts));
        });
      } else {
        throw UsageError("factorize needs --lyndon, --hfact or --hook");
      }
      emit(rows, format, out);
      return kExitOk;
    }
    if (map->parsed()) {
      if (m.phi.empty() && m.psi.empty() && m.transform.empty() && m.step.empty())
        throw UsageError("map needs one of --phi, --psi, --transform or --step");
      emit(for_each_input(m.input, in, [&](const std::string& s) { return io_row(s, map_one(m, s)); }), format,
           out);
      return kExitOk;
    }
    if (poly->parsed()) return run_poly(g, an, cn, spec, out);
    if (verify->parsed()) return run_verify(g, suite, out);
    if (tables->parsed()) return run_tables(g, which, out);
  } catch (const UsageError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const CapExceededError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << one_line(e.what()) << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace fixmahon::cli
