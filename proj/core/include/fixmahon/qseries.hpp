#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fixmahon/enumerate.hpp"
#include "fixmahon/polynomial.hpp"
#include "fixmahon/series.hpp"

namespace fixmahon {

/// Gaussian binomial [top over bottom] in q.
Polynomial gauss_binomial(std::size_t top, std::size_t bottom);

/// (a x; q)_k = prod_{j < k} (1 - a q^j x) as a series in x.
TruncatedSeries q_pochhammer(SeriesVar var, std::size_t order, const Polynomial& a, std::size_t k);

enum class ExpansionMethod { direct, geometric };

/// Coefficients C_0(r), ..., C_order(r) of the u-expansion of the generating
/// fraction, polynomials in s, q, Y.
TruncatedSeries expand_c(std::size_t r, std::size_t order, ExpansionMethod method);

/// expand_c for r = 0..r_max, all with the same order.
std::vector<TruncatedSeries> expand_c_bank(std::size_t r_max, std::size_t order,
                                           ExpansionMethod method = ExpansionMethod::geometric);

enum class CnOracle { dec_words, dstar_sequences, wlec_words };
/// dec_words: s^dec q^tot Y^single over W_n(r); dstar_sequences: the sum of
/// s^{i_1+...} q^{i_1+...+tot} Y^{|w_0|} over D*_n(r); wlec_words: s^wlec q^tot Y^wpix over W_n(r).
Polynomial cn_oracle(std::size_t n, std::size_t r, CnOracle which, EnumerationCap cap = {});

/// A_n(s,t,q,Y) recovered from C_n(r) for r = 0..max(n,1) by the unit
/// triangular solve; `bank[r]` must reach order n.
Polynomial extract_an(std::size_t n, const std::vector<TruncatedSeries>& bank);
Polynomial extract_an(std::size_t n);

/// Recombines A_n into C_n(r) = sum_k a_{n,k} [n+r-k over r-k]_q.
Polynomial c_from_a(const Polynomial& an, std::size_t n, std::size_t r);

/// Generating polynomials over S_n; the last two carry no t.
enum class AnOracle { exc_des_maj_fix, lec_ides_imaj_pix, exc_dez_maz_fix, lec_inv_pix, exc_maf_fix };
Polynomial an_oracle(std::size_t n, AnOracle which, EnumerationCap cap = {std::uint64_t{40320}});

enum class Specialization {
  exc_maj_fix,           // t = 1
  des_maj_fix,           // s = 1
  exc_des,               // q = Y = 1
  eulerian,              // A_n(1,t,1,1) / (1-t)^{n+1}
  derangement_symmetry,  // A_n(s,t,1,0) = s^n A_n(1/s,t,1,0)
  complement_reverse,    // pointwise on S_n
};

struct SpecializationReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string first_failure;  // empty when passed
};

struct SpecializationOptions {
  std::size_t n_max = 7;
  std::size_t t_order = 10;  // for the Eulerian check
};

SpecializationReport specialization_check(Specialization which, const SpecializationOptions& options,
                                          const std::vector<Polynomial>& an_table);
SpecializationReport specialization_check(Specialization which, const SpecializationOptions& options);

/// External names: sw18_19, gr113_114, bivariate115_116, eulerian117,
/// derangementSym118, complementReverse119.
std::string to_string(Specialization which);
Specialization parse_specialization(std::string_view name);
std::vector<Specialization> all_specializations();

}  // namespace fixmahon
