#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "fixmahon/enumerate.hpp"
#include "fixmahon/error.hpp"
#include "fixmahon/hook_bijections.hpp"
#include "fixmahon/lyndon_bijections.hpp"
#include "fixmahon/perm_bijections.hpp"
#include "fixmahon/perm_core.hpp"
#include "fixmahon/verify.hpp"
#include "golden_data.hpp"

namespace fixmahon {
namespace {

// Inputs of the worked examples. Everything else in the tables is computed.
constexpr std::string_view kRunningDStar =
    "6 5 3 2 | 2 1 1 1 : 2 | 5 3 3 : 2 | 1 1 : 1 | 2 2 : 1 | 5 5 2 1 : 3 | 5 5 2 : 2";
constexpr Letter kRunningAlphabet = 6;
constexpr std::string_view kComposition = "455116";
constexpr std::string_view kLacPermutation = "3 4 8 1 9 2 5 10 12 7 6 11";
constexpr std::string_view kHookPermutation = "1 3 4 14 12 2 5 11 15 8 6 7 13 9 10";
constexpr std::string_view kZStatsPermutation = "8 2 1 3 5 6 4 9 7";

std::string compact(const Word& w) { return to_compact_string(w); }

std::string compact(const Permutation& sigma) { return to_compact_string(sigma.as_word()); }

std::string join_compact(const std::vector<Word>& words, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += compact(words[i]);
  }
  return out;
}

template <class Tag>
std::string compact(const FactorSequence<Tag>& s) {
  std::string out = compact(s.head);
  for (const Word& f : s.factors) out += " | " + compact(f);
  return out;
}

std::string compact(const DStarSequence& d) {
  std::string out = compact(d.head);
  for (const DPair& p : d.pairs) out += " | " + compact(p.word) + ":" + std::to_string(p.index);
  return out;
}

std::string render_s4_table() {
  using Row = std::tuple<std::size_t, PositionSet, Permutation>;
  std::vector<Row> desarrangements, derangements;
  for (const Permutation& sigma : all_permutations(4)) {
    const PermStats st = perm_stats(sigma);
    if (st.pix == 0) desarrangements.emplace_back(st.lec, st.iligne, sigma);
    if (st.fix == 0) derangements.emplace_back(st.iexc, st.iligne, sigma);
  }
  std::sort(desarrangements.begin(), desarrangements.end());
  std::sort(derangements.begin(), derangements.end());

  std::ostringstream out;
  out << "lec | Iligne | desarrangement | derangement | Iligne | iexc\n";
  const std::size_t rows = std::max(desarrangements.size(), derangements.size());
  for (std::size_t k = 0; k < rows; ++k) {
    if (k < desarrangements.size()) {
      const auto& [lec_value, set, sigma] = desarrangements[k];
      out << lec_value << " | " << to_string(set) << " | " << compact(sigma);
    } else {
      out << "- | - | -";
    }
    out << " | ";
    if (k < derangements.size()) {
      const auto& [iexc_value, set, sigma] = derangements[k];
      out << compact(sigma) << " | " << to_string(set) << " | " << iexc_value;
    } else {
      out << "- | - | -";
    }
    out << '\n';
  }
  return out.str();
}

std::string render_v_decomposition_1223() {
  std::ostringstream out;
  out << "w | dec | w0 ; v1, ..., vk\n";
  for (const Word& w : all_rearrangements(Word{1, 2, 2, 3})) {
    const VStarSequence s = v_decompose(w);
    const Word head = s.head.reversed();
    out << compact(w) << " | " << dec(w) << " | " << compact(head) << " ; "
        << (s.factors.empty() ? std::string("e") : join_compact(s.factors, ", ")) << '\n';
  }
  return out.str();
}

std::string render_running_example() {
  const DStarSequence d = parse_dstar(kRunningDStar);
  const Letter r = kRunningAlphabet;
  const VStarSequence v = d_star_to_v_star(d);
  const UStarSequence u = v_star_to_u_star(v);
  const LStarSequence l = u_star_to_l_star(u);
  const Word w = phi_fix(d, r);
  const SingleStat single = single_stat(w);
  const PsiFixTrace fix_trace = psi_fix_trace(w, r);
  const Word h = phi_pix(d, r);
  const HFactorization hf = h_factorize(h);
  const PsiPixTrace pix_trace = psi_pix_trace(h, r);

  std::vector<Word> hparts{hf.head};
  hparts.insert(hparts.end(), hf.hooks.begin(), hf.hooks.end());

  std::ostringstream out;
  out << "r = " << r << '\n';
  out << "D* = " << compact(d) << '\n';
  out << "V* = " << compact(v) << '\n';
  out << "U* = " << compact(u) << '\n';
  out << "L* = " << compact(l) << '\n';
  out << "phi_fix = |" << join_compact(lyndon_factorize(w).factors, "|") << "|\n";
  out << "dec = " << dec(w) << '\n';
  out << "Single = " << compact(single.single_word) << '\n';
  out << "single = " << single.single << '\n';
  out << "tot = " << w.total() << '\n';
  out << "psi_fix sigma = " << to_string(fix_trace.sigma) << '\n';
  out << "psi_fix cbar = " << to_string(fix_trace.sorted_letters) << '\n';
  out << "psi_fix z = " << to_string(fix_trace.z) << '\n';
  out << "psi_fix c = " << to_string(fix_trace.c) << '\n';
  out << "exc sigma = " << exc(fix_trace.sigma) << '\n';
  out << "fix sigma = " << fix(fix_trace.sigma) << '\n';
  out << "maj sigma = " << maj(fix_trace.sigma) << '\n';
  out << "tot c = " << fix_trace.c.total() << '\n';
  out << "phi_pix = " << join_compact(hparts, "|") << '\n';
  out << "wlec = " << wlec(h) << '\n';
  out << "wpix = " << wpix(h) << '\n';
  out << "psi_pix w = " << to_string(h) << '\n';
  out << "psi_pix sigma = " << to_string(pix_trace.sigma) << '\n';
  out << "psi_pix z = " << to_string(pix_trace.z) << '\n';
  out << "psi_pix d = " << to_string(pix_trace.d) << '\n';
  out << "psi_pix c = " << to_string(pix_trace.c) << '\n';
  out << "lec sigma = " << lec(pix_trace.sigma) << '\n';
  out << "pix sigma = " << pix(pix_trace.sigma) << '\n';
  out << "Iligne sigma = " << to_string(iligne(pix_trace.sigma)) << '\n';
  return out.str();
}

std::string render_composition_455116() {
  const Composition J = Composition::parse(kComposition);
  const DStarSequence d = parse_dstar(kRunningDStar);
  const Permutation sigma1 = psi_pix(phi_pix(d, kRunningAlphabet), kRunningAlphabet).sigma;
  const Word w1 = composition_class_word(sigma1, J);
  const Word w2 = transform_f_inverse(w1);
  const Permutation sigma2 = lec_pix_to_iexc_fix(sigma1, J);

  std::ostringstream out;
  out << "J = " << kComposition << '\n';
  out << "L(J) = " << to_string(composition_positions(J)) << '\n';
  out << "c(J) = " << compact(composition_word(J)) << '\n';
  out << "w1 = " << to_string(w1) << '\n';
  out << "sigma1 = " << to_string(sigma1) << '\n';
  out << "Iligne sigma1 = " << to_string(iligne(sigma1)) << '\n';
  out << "w2 = " << to_string(w2) << '\n';
  out << "sigma2 inverse = " << to_string(psi_fix(w2, w2.max()).sigma) << '\n';
  out << "sigma2 = " << to_string(sigma2) << '\n';
  out << "Iligne sigma2 = " << to_string(iligne(sigma2)) << '\n';
  out << "lec sigma1 = " << lec(sigma1) << '\n';
  out << "pix sigma1 = " << pix(sigma1) << '\n';
  out << "iexc sigma2 = " << exc(sigma2.inverse()) << '\n';
  out << "fix sigma2 = " << fix(sigma2) << '\n';
  return out.str();
}

std::string render_lac_example() {
  const Permutation sigma = parse_permutation(kLacPermutation);
  std::ostringstream out;
  out << "sigma = " << to_string(sigma) << '\n';
  out << "LAC = " << to_string(lac(sigma)) << '\n';
  out << "Ligne = " << to_string(ligne(sigma)) << '\n';
  return out.str();
}

std::string render_hook_example() {
  const Permutation sigma = parse_permutation(kHookPermutation);
  const HookFactorizationP hf = hook_factorize(sigma);
  std::ostringstream out;
  out << "sigma = " << to_string(sigma) << '\n';
  out << "prefix = " << to_string(hf.prefix) << '\n';
  out << "hooks = " << join_words(hf.hooks) << '\n';
  out << "pix = " << pix(sigma) << '\n';
  out << "lec = " << lec(sigma) << '\n';
  return out.str();
}

std::string render_zstats_example() {
  const Permutation sigma = parse_permutation(kZStatsPermutation);
  Word zeroed, deleted;
  for (std::size_t i = 1; i <= sigma.size(); ++i) {
    zeroed.push_back(sigma(i) == i ? 0 : sigma(i));
    if (sigma(i) != i) deleted.push_back(sigma(i));
  }
  const ZStats z = z_stats(sigma);
  std::ostringstream out;
  out << "sigma = " << to_string(sigma) << '\n';
  out << "Z = " << to_string(zeroed) << '\n';
  out << "D = " << to_string(deleted) << '\n';
  out << "dez = " << z.dez << '\n';
  out << "maz = " << z.maz << '\n';
  out << "maf = " << z.maf << '\n';
  return out.str();
}

const std::map<std::string, std::function<std::string()>, std::less<>>& renderers() {
  static const std::map<std::string, std::function<std::string()>, std::less<>> table = {
      {"s4-table", render_s4_table},
      {"v-decomposition-1223", render_v_decomposition_1223},
      {"running-example", render_running_example},
      {"composition-455116", render_composition_455116},
      {"lac-example", render_lac_example},
      {"hook-example", render_hook_example},
      {"zstats-example", render_zstats_example},
  };
  return table;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = {
      "s4-table",    "v-decomposition-1223", "running-example", "composition-455116",
      "lac-example", "hook-example",         "zstats-example",
  };
  return names;
}

std::string line_diff(std::string_view golden, std::string_view rendered) {
  const std::vector<std::string> a = split_lines(golden);
  const std::vector<std::string> b = split_lines(rendered);
  // Longest common subsequence table over lines.
  std::vector<std::vector<std::size_t>> lcs(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = a.size(); i-- > 0;)
    for (std::size_t j = b.size(); j-- > 0;)
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);

  std::string out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && a[i] == b[j]) {
      ++i;
      ++j;
    } else if (j == b.size() || (i < a.size() && lcs[i + 1][j] >= lcs[i][j + 1])) {
      out += "-" + a[i++] + "\n";
    } else {
      out += "+" + b[j++] + "\n";
    }
  }
  return out;
}

TableReproduction reproduce_table(std::string_view name) {
  const auto& table = renderers();
  const auto it = table.find(name);
  if (it == table.end()) throw PreconditionError("unknown table: " + std::string(name));
  const auto& golden = detail::golden_tables();
  const auto g = golden.find(name);
  if (g == golden.end()) throw InternalError("no fixture for table " + std::string(name));

  TableReproduction result;
  result.name = std::string(name);
  result.rendered = it->second();
  result.golden = g->second;
  result.diff = line_diff(result.golden, result.rendered);
  return result;
}

}  // namespace fixmahon
