#include "fixmahon/qseries.hpp"

#include <algorithm>

#include "fixmahon/error.hpp"
#include "fixmahon/perm_core.hpp"
#include "fixmahon/word_core.hpp"

namespace fixmahon {

namespace {

const Polynomial kS = Polynomial::variable(Var::s);
const Polynomial kT = Polynomial::variable(Var::t);
const Polynomial kQ = Polynomial::variable(Var::q);
const Polynomial kY = Polynomial::variable(Var::Y);

Polynomial mono(std::size_t s, std::size_t t, std::size_t q, std::size_t y) {
  return Polynomial::term(1, monomial(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t),
                                      static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(y)));
}

// Coefficient of v^k, as a polynomial free of v.
Polynomial slice_in(const Polynomial& p, Var v, std::uint32_t k) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (m[v] != k) continue;
    Monomial rest = m;
    rest[v] = 0;
    out.add_term(c, rest);
  }
  return out;
}

}  // namespace

Polynomial gauss_binomial(std::size_t top, std::size_t bottom) {
  if (bottom > top)
    throw PreconditionError("Gaussian binomial needs 0 <= bottom <= top, got [" + std::to_string(top) +
                            " over " + std::to_string(bottom) + "]");
  // row[k] = [n over k]; [n over k] = [n-1 over k-1] + q^k [n-1 over k]
  std::vector<Polynomial> row{Polynomial(1)};
  for (std::size_t n = 1; n <= top; ++n) {
    std::vector<Polynomial> next(std::min(n, bottom) + 1);
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (k > 0) next[k] += row[k - 1];
      if (k < row.size() && k <= n - 1) next[k] += row[k] * Polynomial::variable(Var::q, static_cast<std::uint32_t>(k));
    }
    row = std::move(next);
  }
  return row[bottom];
}

TruncatedSeries q_pochhammer(SeriesVar var, std::size_t order, const Polynomial& a, std::size_t k) {
  TruncatedSeries out = TruncatedSeries::constant(var, order, Polynomial(1));
  for (std::size_t j = 0; j < k; ++j)
    out *= TruncatedSeries::one_minus(var, order, a * Polynomial::variable(Var::q, static_cast<std::uint32_t>(j)));
  return out;
}

namespace {

TruncatedSeries expand_direct(std::size_t r, std::size_t order) {
  const SeriesVar u = SeriesVar::u;
  const Polynomial sq = kS * kQ;
  TruncatedSeries pu = q_pochhammer(u, order, Polynomial(1), r);
  TruncatedSeries psq = q_pochhammer(u, order, sq, r);
  TruncatedSeries pY = q_pochhammer(u, order, kY, r + 1);
  TruncatedSeries numerator = (pu * psq).scaled(Polynomial(1) - sq);
  TruncatedSeries denominator = (pu - psq.scaled(sq)) * pY;
  return numerator.divided_by(denominator);
}

// (1 - sum over D(r) of s^i q^{i + tot w} u^{|w|})^{-1} times sum_n [n+r over n]_q Y^n u^n.
TruncatedSeries expand_geometric(std::size_t r, std::size_t order) {
  const SeriesVar u = SeriesVar::u;
  TruncatedSeries pairs_series = TruncatedSeries::constant(u, order, Polynomial(1));
  if (r >= 1) {
    for (std::size_t n = 2; n <= order; ++n) {
      Polynomial index_sum;
      for (std::size_t i = 1; i < n; ++i) index_sum += mono(i, 0, i, 0);
      pairs_series[n] -= index_sum * gauss_binomial(n + r - 1, n);
    }
  }
  TruncatedSeries heads(u, order);
  for (std::size_t n = 0; n <= order; ++n) heads[n] = gauss_binomial(n + r, n) * mono(0, 0, 0, n);
  return pairs_series.inverse() * heads;
}

}  // namespace

TruncatedSeries expand_c(std::size_t r, std::size_t order, ExpansionMethod method) {
  return method == ExpansionMethod::direct ? expand_direct(r, order) : expand_geometric(r, order);
}

std::vector<TruncatedSeries> expand_c_bank(std::size_t r_max, std::size_t order, ExpansionMethod method) {
  std::vector<TruncatedSeries> bank;
  for (std::size_t r = 0; r <= r_max; ++r) bank.push_back(expand_c(r, order, method));
  return bank;
}

Polynomial cn_oracle(std::size_t n, std::size_t r, CnOracle which, EnumerationCap cap) {
  Polynomial out;
  const auto letter_bound = static_cast<Letter>(r);
  switch (which) {
    case CnOracle::dec_words:
      for_each_word(n, letter_bound, [&](const Word& w) {
        out.add_term(1, monomial(static_cast<std::uint32_t>(dec(w)), 0, static_cast<std::uint32_t>(w.total()),
                                 static_cast<std::uint32_t>(single_stat(w).single)));
      }, cap);
      break;
    case CnOracle::wlec_words:
      for_each_word(n, letter_bound, [&](const Word& w) {
        HFactorization h = h_factorize(w);
        std::size_t lec_sum = 0;
        for (const Word& hook : h.hooks) lec_sum += rinv(hook);
        out.add_term(1, monomial(static_cast<std::uint32_t>(lec_sum), 0, static_cast<std::uint32_t>(w.total()),
                                 static_cast<std::uint32_t>(h.head.size())));
      }, cap);
      break;
    case CnOracle::dstar_sequences:
      for_each_dstar(n, letter_bound, [&](const DStarSequence& d) {
        std::size_t index_sum = 0;
        std::uint64_t tot = d.head.total();
        for (const DPair& p : d.pairs) {
          index_sum += p.index;
          tot += p.word.total();
        }
        out.add_term(1, monomial(static_cast<std::uint32_t>(index_sum), 0,
                                 static_cast<std::uint32_t>(index_sum + tot),
                                 static_cast<std::uint32_t>(d.head.size())));
      }, cap);
      break;
  }
  return out;
}

Polynomial extract_an(std::size_t n, const std::vector<TruncatedSeries>& bank) {
  const std::size_t top_k = n == 0 ? 0 : n - 1;
  const std::size_t check_r = top_k + 1;
  if (bank.size() <= check_r) throw PreconditionError("series bank does not reach r = " + std::to_string(check_r));
  for (std::size_t r = 0; r <= check_r; ++r)
    if (bank[r].order() < n) throw PreconditionError("series bank order is below " + std::to_string(n));

  std::vector<Polynomial> a;
  for (std::size_t r = 0; r <= top_k; ++r) {
    Polynomial value = bank[r][n];
    for (std::size_t k = 0; k < r; ++k) value -= a[k] * gauss_binomial(n + r - k, r - k);
    a.push_back(std::move(value));
  }
  Polynomial residual = bank[check_r][n];
  for (std::size_t k = 0; k <= top_k; ++k) residual -= a[k] * gauss_binomial(n + check_r - k, check_r - k);
  if (!residual.is_zero())
    throw InternalError("A_" + std::to_string(n) + " extraction left a nonzero residual at r = " +
                        std::to_string(check_r));

  Polynomial out;
  for (std::size_t k = 0; k <= top_k; ++k) out += a[k] * Polynomial::variable(Var::t, static_cast<std::uint32_t>(k));
  return out;
}

Polynomial extract_an(std::size_t n) {
  return extract_an(n, expand_c_bank(std::max<std::size_t>(n, 1), n));
}

Polynomial c_from_a(const Polynomial& an, std::size_t n, std::size_t r) {
  Polynomial out;
  for (std::size_t k = 0; k <= r; ++k) {
    Polynomial ak = slice_in(an, Var::t, static_cast<std::uint32_t>(k));
    if (!ak.is_zero()) out += ak * gauss_binomial(n + r - k, r - k);
  }
  return out;
}

Polynomial an_oracle(std::size_t n, AnOracle which, EnumerationCap cap) {
  Polynomial out;
  auto u32 = [](std::size_t x) { return static_cast<std::uint32_t>(x); };
  for_each_permutation(n, [&](const Permutation& sigma) {
    switch (which) {
      case AnOracle::exc_des_maj_fix: {
        PositionSet l = ligne(sigma);
        std::size_t m = 0;
        for (std::size_t i : l) m += i;
        out.add_term(1, monomial(u32(exc(sigma)), u32(l.size()), u32(m), u32(fix(sigma))));
        break;
      }
      case AnOracle::lec_ides_imaj_pix: {
        PositionSet il = iligne(sigma);
        std::size_t m = 0;
        for (std::size_t i : il) m += i;
        HookFactorizationP h = hook_factorize(sigma);
        std::size_t l = 0;
        for (const Word& hook : h.hooks) l += inv(hook);
        out.add_term(1, monomial(u32(l), u32(il.size()), u32(m), u32(h.prefix.size())));
        break;
      }
      case AnOracle::exc_dez_maz_fix: {
        ZStats z = z_stats(sigma);
        out.add_term(1, monomial(u32(exc(sigma)), u32(z.dez), u32(z.maz), u32(fix(sigma))));
        break;
      }
      case AnOracle::lec_inv_pix:
        out.add_term(1, monomial(u32(lec(sigma)), 0, u32(inv(sigma)), u32(pix(sigma))));
        break;
      case AnOracle::exc_maf_fix:
        out.add_term(1, monomial(u32(exc(sigma)), 0, u32(z_stats(sigma).maf), u32(fix(sigma))));
        break;
    }
  }, cap);
  return out;
}

namespace {

class Checker {
 public:
  explicit Checker(std::string name) { report_.name = std::move(name); }

  void expect_equal(const Polynomial& lhs, const Polynomial& rhs, const std::string& where) {
    ++report_.checked;
    if (lhs == rhs || !report_.passed) return;
    report_.passed = false;
    report_.first_failure = where + ": " + first_difference(lhs, rhs);
  }

  void expect(bool ok, const std::string& where) {
    ++report_.checked;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.first_failure = where;
    }
  }

  SpecializationReport take() { return std::move(report_); }

 private:
  SpecializationReport report_;
};

// C(r; u, ...) rebuilt from A_0..A_order, then specialized.
TruncatedSeries c_series_from_table(const std::vector<Polynomial>& an_table, std::size_t r, std::size_t order) {
  TruncatedSeries out(SeriesVar::u, order);
  for (std::size_t n = 0; n <= order; ++n) out[n] = c_from_a(an_table[n], n, r);
  return out;
}

TruncatedSeries specialize(const TruncatedSeries& s, Var v, const Integer& value) {
  TruncatedSeries out = s;
  for (std::size_t k = 0; k <= s.order(); ++k) out[k] = s[k].substitute(v, value);
  return out;
}

// (1 - a x)^k.
TruncatedSeries binomial_power(std::size_t order, const Polynomial& a, std::size_t k,
                               SeriesVar var = SeriesVar::u) {
  TruncatedSeries base = TruncatedSeries::one_minus(var, order, a);
  TruncatedSeries out = TruncatedSeries::constant(var, order, Polynomial(1));
  for (std::size_t j = 0; j < k; ++j) out *= base;
  return out;
}

Polynomial sum_over_permutations(std::size_t n, const std::function<Monomial(const Permutation&)>& stat) {
  Polynomial out;
  for_each_permutation(n, [&](const Permutation& sigma) { out.add_term(1, stat(sigma)); });
  return out;
}

std::string at_n(std::size_t n) { return "n = " + std::to_string(n); }
std::string at_r(std::size_t r) { return "r = " + std::to_string(r); }

}  // namespace

SpecializationReport specialization_check(Specialization which, const SpecializationOptions& options,
                                          const std::vector<Polynomial>& an_table) {
  const std::size_t n_max = options.n_max;
  if (which != Specialization::complement_reverse && an_table.size() <= n_max)
    throw PreconditionError("A_n table does not reach n = " + std::to_string(n_max));
  Checker check(to_string(which));
  const Polynomial sq = kS * kQ;
  auto u32 = [](std::size_t x) { return static_cast<std::uint32_t>(x); };

  switch (which) {
    case Specialization::exc_maj_fix: {
      // coefficientwise form of the q-exponential identity at t = 1
      for (std::size_t n = 0; n <= n_max; ++n) {
        Polynomial lhs;
        for (std::size_t k = 0; k <= n; ++k)
          lhs += gauss_binomial(n, k) * (sq.pow(u32(k)) - sq) * an_table[n - k].substitute(Var::t, Integer(1));
        check.expect_equal(lhs, (Polynomial(1) - sq) * kY.pow(u32(n)), "identity at " + at_n(n));
        Polynomial direct = sum_over_permutations(n, [&](const Permutation& sigma) {
          return monomial(u32(exc(sigma)), 0, u32(maj(sigma)), u32(fix(sigma)));
        });
        check.expect_equal(direct, an_table[n].substitute(Var::t, Integer(1)), "exc, maj, fix at " + at_n(n));
      }
      break;
    }
    case Specialization::des_maj_fix: {
      for (std::size_t r = 0; r <= n_max; ++r) {
        TruncatedSeries c = specialize(c_series_from_table(an_table, r, n_max), Var::s, 1);
        Polynomial qint;
        for (std::size_t i = 0; i <= r; ++i) qint += Polynomial::variable(Var::q, u32(i));
        TruncatedSeries lhs = TruncatedSeries::one_minus(SeriesVar::u, n_max, qint) *
                              q_pochhammer(SeriesVar::u, n_max, kY, r + 1) * c;
        TruncatedSeries rhs = q_pochhammer(SeriesVar::u, n_max, Polynomial(1), r + 1);
        for (std::size_t n = 0; n <= n_max; ++n)
          check.expect_equal(lhs[n], rhs[n], "series at " + at_r(r) + ", u^" + std::to_string(n));
      }
      for (std::size_t n = 0; n <= n_max; ++n) {
        Polynomial direct = sum_over_permutations(n, [&](const Permutation& sigma) {
          return monomial(0, u32(des(sigma)), u32(maj(sigma)), u32(fix(sigma)));
        });
        check.expect_equal(direct, an_table[n].substitute(Var::s, Integer(1)), "des, maj, fix at " + at_n(n));
      }
      break;
    }
    case Specialization::exc_des: {
      for (std::size_t r = 0; r <= n_max; ++r) {
        TruncatedSeries c = specialize(specialize(c_series_from_table(an_table, r, n_max), Var::q, 1), Var::Y, 1);
        TruncatedSeries denominator = binomial_power(n_max, Polynomial(1), r + 1) -
                                      (binomial_power(n_max, Polynomial(1), 1) * binomial_power(n_max, kS, r)).scaled(kS);
        TruncatedSeries lhs = denominator * c;
        TruncatedSeries rhs = binomial_power(n_max, kS, r).scaled(Polynomial(1) - kS);
        for (std::size_t n = 0; n <= n_max; ++n)
          check.expect_equal(lhs[n], rhs[n], "series at " + at_r(r) + ", u^" + std::to_string(n));
      }
      for (std::size_t n = 0; n <= n_max; ++n) {
        Polynomial target = an_table[n].substitute(Var::q, Integer(1)).substitute(Var::Y, Integer(1));
        Polynomial by_exc = sum_over_permutations(n, [&](const Permutation& sigma) {
          return monomial(u32(exc(sigma)), u32(des(sigma)), 0, 0);
        });
        Polynomial by_lec = sum_over_permutations(n, [&](const Permutation& sigma) {
          return monomial(u32(lec(sigma)), u32(iligne(sigma).size()), 0, 0);
        });
        check.expect_equal(by_exc, target, "exc, des at " + at_n(n));
        check.expect_equal(by_lec, target, "lec, ides at " + at_n(n));
      }
      break;
    }
    case Specialization::eulerian: {
      const std::size_t order = options.t_order;
      for (std::size_t n = 0; n <= n_max; ++n) {
        Polynomial by_t = an_table[n].substitute(Var::s, Integer(1)).substitute(Var::q, Integer(1)).substitute(Var::Y, Integer(1));
        Polynomial by_s = an_table[n].substitute(Var::t, Integer(1)).substitute(Var::q, Integer(1)).substitute(Var::Y, Integer(1));
        check.expect_equal(by_s.substitute(Var::s, kT), by_t, "exc and des equidistribution at " + at_n(n));
        TruncatedSeries numerator(SeriesVar::t, order);
        for (std::size_t k = 0; k <= order; ++k) numerator[k] = slice_in(by_t, Var::t, u32(k));
        TruncatedSeries lhs = numerator.divided_by(binomial_power(order, Polynomial(1), n + 1, SeriesVar::t));
        for (std::size_t r = 0; r <= order; ++r) {
          Integer power = boost::multiprecision::pow(Integer(r + 1), u32(n));
          check.expect_equal(lhs[r], Polynomial(power), at_n(n) + ", t^" + std::to_string(r));
        }
      }
      break;
    }
    case Specialization::derangement_symmetry: {
      for (std::size_t n = 0; n <= n_max; ++n) {
        Polynomial d = an_table[n].substitute(Var::q, Integer(1)).substitute(Var::Y, Integer(0));
        check.expect_equal(d, d.reverse_in(Var::s, u32(n)), "symmetry at " + at_n(n));
      }
      for (std::size_t r = 0; r <= n_max; ++r) {
        TruncatedSeries c = specialize(specialize(c_series_from_table(an_table, r, n_max), Var::q, 1), Var::Y, 0);
        TruncatedSeries lhs =
            (binomial_power(n_max, Polynomial(1), r) - binomial_power(n_max, kS, r).scaled(kS)) * c;
        TruncatedSeries rhs = (binomial_power(n_max, kS, r) * binomial_power(n_max, Polynomial(1), r)).scaled(Polynomial(1) - kS);
        for (std::size_t n = 0; n <= n_max; ++n)
          check.expect_equal(lhs[n], rhs[n], "series at " + at_r(r) + ", u^" + std::to_string(n));
      }
      break;
    }
    case Specialization::complement_reverse: {
      for (std::size_t n = 0; n <= n_max; ++n) {
        for_each_permutation(n, [&](const Permutation& sigma) {
          Permutation image = complement(reverse(sigma));
          PermStats a = perm_stats(sigma), b = perm_stats(image);
          bool ok = a.exc == b.iexc && a.fix == b.fix && a.des == b.des && a.ides == b.ides;
          check.expect(ok, "sigma = " + to_string(sigma));
        });
      }
      break;
    }
  }
  return check.take();
}

SpecializationReport specialization_check(Specialization which, const SpecializationOptions& options) {
  std::vector<Polynomial> table;
  if (which != Specialization::complement_reverse) {
    auto bank = expand_c_bank(std::max<std::size_t>(options.n_max, 1), options.n_max);
    for (std::size_t n = 0; n <= options.n_max; ++n) table.push_back(extract_an(n, bank));
  }
  return specialization_check(which, options, table);
}

std::string to_string(Specialization which) {
  switch (which) {
    case Specialization::exc_maj_fix: return "sw18_19";
    case Specialization::des_maj_fix: return "gr113_114";
    case Specialization::exc_des: return "bivariate115_116";
    case Specialization::eulerian: return "eulerian117";
    case Specialization::derangement_symmetry: return "derangementSym118";
    case Specialization::complement_reverse: return "complementReverse119";
  }
  throw InternalError("unknown specialization");
}

Specialization parse_specialization(std::string_view name) {
  for (Specialization s : all_specializations())
    if (to_string(s) == name) return s;
  throw ParseError("bad token '" + std::string(name) + "': unknown specialization");
}

std::vector<Specialization> all_specializations() {
  return {Specialization::exc_maj_fix,  Specialization::des_maj_fix,          Specialization::exc_des,
          Specialization::eulerian,     Specialization::derangement_symmetry, Specialization::complement_reverse};
}

}  // namespace fixmahon
