#include <gtest/gtest.h>

#include "fixmahon/error.hpp"
#include "fixmahon/polynomial.hpp"
#include "fixmahon/qseries.hpp"
#include "fixmahon/series.hpp"
#include "oracle.hpp"

using namespace fixmahon;

namespace {

Polynomial poly(std::string_view s) { return parse_polynomial(s); }

Polynomial q_range(std::size_t r) {
  Polynomial out;
  for (std::uint32_t k = 0; k <= r; ++k) out += Polynomial::variable(Var::q, k);
  return out;
}

}  // namespace

TEST(Polynomial, TextRoundTrip) {
  Polynomial a2 = poly("Y^2 + s*t*q");
  EXPECT_EQ(to_string(a2), "Y^2 + s*t*q");
  EXPECT_EQ(to_string(Polynomial{}), "0");
  EXPECT_EQ(to_string(poly("1 - q")), "1 - q");
  EXPECT_EQ(poly(to_string(poly("3*s^2*Y - 2*q + 7"))), poly("7 - 2*q + 3*s^2*Y"));
  EXPECT_THROW(poly("s +"), ParseError);
  EXPECT_THROW(poly("x"), ParseError);
}

TEST(Polynomial, Examples) {
  Polynomial a2 = poly("Y^2 + s*t*q");
  EXPECT_EQ(a2.substitute(Var::t, Integer(1)), poly("Y^2 + s*q"));
  EXPECT_EQ(a2.coefficient_of(monomial(1, 1, 1, 0)), Integer(1));
  EXPECT_EQ(a2.coefficient_of(monomial(1, 0, 0, 0)), Integer(0));
  EXPECT_EQ(poly("s^2 + s*Y").reverse_in(Var::s, 2), poly("1 + s*Y"));
  EXPECT_THROW(poly("s^3").reverse_in(Var::s, 2), PreconditionError);
}

TEST(Polynomial, RingLaws) {
  Polynomial a = poly("1 + s*q - 2*Y^3"), b = poly("t - q^2 + 5"), c = poly("s*t*q*Y + 1");
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ(a - a, Polynomial{});
  EXPECT_EQ(a.pow(3), a * a * a);
  EXPECT_EQ((a * b).exact_divide(b), a);
  EXPECT_THROW(a.exact_divide(poly("1 + q")), PreconditionError);
  EXPECT_EQ(a.substitute(Var::q, poly("s + 1")).degree_in(Var::q), 0u);
}

TEST(Polynomial, BigCoefficientsStayExact) {
  Polynomial p = poly("1 + s").pow(80);
  Integer expected = 1;
  for (int k = 0; k < 40; ++k) expected = expected * (80 - k) / (k + 1);
  EXPECT_EQ(p.coefficient_of(monomial(40, 0, 0, 0)), expected);
  EXPECT_GT(expected, Integer(std::numeric_limits<std::uint64_t>::max()));
}

TEST(Polynomial, GrlexOrder) {
  GrlexLess less;
  EXPECT_TRUE(less(monomial(0, 0, 0, 1), monomial(0, 0, 0, 2)));
  EXPECT_TRUE(less(monomial(0, 0, 1, 0), monomial(1, 0, 0, 0)));
  EXPECT_FALSE(less(monomial(1, 0, 0, 0), monomial(1, 0, 0, 0)));
}

TEST(Series, InverseAndDivision) {
  TruncatedSeries one_minus_q = TruncatedSeries::one_minus(SeriesVar::u, 8, poly("q"));
  TruncatedSeries inv = one_minus_q.inverse();
  for (std::size_t k = 0; k <= 8; ++k) EXPECT_EQ(inv[k], Polynomial::variable(Var::q, k));
  EXPECT_EQ(one_minus_q * inv, TruncatedSeries::constant(SeriesVar::u, 8, 1));
  EXPECT_THROW(TruncatedSeries(SeriesVar::u, 4).inverse(), PreconditionError);
  EXPECT_THROW(one_minus_q + TruncatedSeries(SeriesVar::u, 3), PreconditionError);
}

TEST(Gaussian, Examples) {
  EXPECT_EQ(gauss_binomial(2, 1), poly("1 + q"));
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(gauss_binomial(n, 0), Polynomial(1));
  EXPECT_THROW(gauss_binomial(2, 3), PreconditionError);
}

TEST(Gaussian, AgreesWithNonincreasingWordSums) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (std::size_t r = 1; r <= 4; ++r)
      EXPECT_EQ(gauss_binomial(r + n - 1, n), oracle::gauss(r + n - 1, n)) << n << " " << r;
}

TEST(ExpandC, LowOrders) {
  for (ExpansionMethod m : {ExpansionMethod::direct, ExpansionMethod::geometric})
    for (std::size_t r = 0; r <= 3; ++r) {
      TruncatedSeries c = expand_c(r, 2, m);
      EXPECT_EQ(c[0], Polynomial(1));
      EXPECT_EQ(c[1], Polynomial::variable(Var::Y) * q_range(r));
    }
  EXPECT_EQ(expand_c(1, 2, ExpansionMethod::direct)[2], poly("Y^2 + q*Y^2 + q^2*Y^2 + s*q"));
}

TEST(ExpandC, MethodsAndOraclesAgree) {
  for (std::size_t r = 0; r <= 3; ++r) {
    TruncatedSeries direct = expand_c(r, 5, ExpansionMethod::direct);
    TruncatedSeries geometric = expand_c(r, 5, ExpansionMethod::geometric);
    EXPECT_EQ(direct, geometric) << r;
    for (std::size_t n = 0; n <= 5; ++n) {
      EXPECT_EQ(direct[n], cn_oracle(n, r, CnOracle::dec_words)) << n << " " << r;
      EXPECT_EQ(direct[n], cn_oracle(n, r, CnOracle::dstar_sequences)) << n << " " << r;
      EXPECT_EQ(direct[n], cn_oracle(n, r, CnOracle::wlec_words)) << n << " " << r;
    }
  }
  EXPECT_EQ(cn_oracle(2, 1, CnOracle::dec_words), poly("Y^2 + q*Y^2 + q^2*Y^2 + s*q"));
  EXPECT_EQ(cn_oracle(2, 1, CnOracle::dstar_sequences), poly("Y^2 + q*Y^2 + q^2*Y^2 + s*q"));
}

TEST(ExtractAn, SmallValues) {
  EXPECT_EQ(extract_an(0), Polynomial(1));
  EXPECT_EQ(extract_an(1), poly("Y"));
  EXPECT_EQ(extract_an(2), poly("Y^2 + s*t*q"));
  EXPECT_EQ(an_oracle(2, AnOracle::exc_des_maj_fix), poly("Y^2 + s*t*q"));
}

TEST(ExtractAn, MatchesDefinitionSumOverSymmetricGroup) {
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(extract_an(n), oracle::a_n(n)) << n;
}

TEST(ExtractAn, RecombinesIntoCn) {
  for (std::size_t n = 0; n <= 5; ++n) {
    Polynomial an = extract_an(n);
    for (std::size_t r = 0; r <= 3; ++r)
      EXPECT_EQ(c_from_a(an, n, r), cn_oracle(n, r, CnOracle::dec_words)) << n << " " << r;
  }
}

TEST(AnOracles, AllInterpretationsAgree) {
  for (std::size_t n = 0; n <= 6; ++n) {
    Polynomial an = extract_an(n);
    Polynomial at1 = an.substitute(Var::t, Integer(1));
    EXPECT_EQ(an_oracle(n, AnOracle::exc_des_maj_fix), an);
    EXPECT_EQ(an_oracle(n, AnOracle::lec_ides_imaj_pix), an);
    EXPECT_EQ(an_oracle(n, AnOracle::exc_dez_maz_fix), an);
    EXPECT_EQ(an_oracle(n, AnOracle::lec_inv_pix), at1);
    EXPECT_EQ(an_oracle(n, AnOracle::exc_maf_fix), at1);
  }
}

TEST(Specializations, AllPass) {
  SpecializationOptions opts;
  opts.n_max = 6;
  for (Specialization s : all_specializations()) {
    SpecializationReport r = specialization_check(s, opts);
    EXPECT_TRUE(r.passed) << r.name << ": " << r.first_failure;
    EXPECT_GT(r.checked, 0u);
    EXPECT_EQ(parse_specialization(to_string(s)), s);
  }
  EXPECT_EQ(all_specializations().size(), 6u);
  EXPECT_THROW(parse_specialization("nope"), ParseError);
}

TEST(Specializations, SmallCasesByHand) {
  Polynomial a2 = extract_an(2);
  // A_2 at s = q = Y = 1 is 1 + t
  Polynomial eul = a2.substitute(Var::s, Integer(1)).substitute(Var::q, Integer(1)).substitute(Var::Y, Integer(1));
  EXPECT_EQ(eul, poly("1 + t"));
  // A_2(s, t, 1, 0) = s t
  Polynomial der = a2.substitute(Var::q, Integer(1)).substitute(Var::Y, Integer(0));
  EXPECT_EQ(der, poly("s*t"));
  EXPECT_EQ(der.reverse_in(Var::s, 2), der);
}

TEST(Specializations, DetectsCorruptedTable) {
  std::vector<Polynomial> table;
  for (std::size_t n = 0; n <= 4; ++n) table.push_back(extract_an(n));
  table[3] += poly("s");
  SpecializationOptions opts;
  opts.n_max = 4;
  SpecializationReport r = specialization_check(Specialization::derangement_symmetry, opts, table);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.first_failure.find("3"), std::string::npos) << r.first_failure;
}
