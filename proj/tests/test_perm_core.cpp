#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fixmahon/enumerate.hpp"
#include "fixmahon/error.hpp"
#include "fixmahon/perm_core.hpp"
#include "fixmahon/word_core.hpp"
#include "oracle.hpp"

using namespace fixmahon;

namespace {

Permutation P(std::string_view s) { return parse_permutation(s); }
Word W(std::string_view s) { return parse_word_lenient(s); }

Word oracle_lac(const Permutation& p) {
  std::vector<Letter> out;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    Letter run = 0;
    for (std::size_t j = i + 1; j <= p.size() && p(j) < p(i); ++j) ++run;
    out.push_back(run);
  }
  return Word(out);
}

ZStats oracle_z(const Permutation& p) {
  std::vector<Letter> z, d;
  std::size_t shifted = 0, seen = 0;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (p(i) == i) {
      z.push_back(0);
      ++seen;
      shifted += i - seen;
    } else {
      z.push_back(p(i));
      d.push_back(p(i));
    }
  }
  return {oracle::word_des(Word(z)), oracle::word_maj(Word(z)), shifted + oracle::word_maj(Word(d))};
}

template <class F>
void small_perms(F f) {
  for (std::size_t n = 0; n <= 6; ++n) oracle::each_permutation(n, f);
}

}  // namespace

TEST(PermutationParse, AcceptsOneLineNotation) {
  EXPECT_EQ(P("2 3 1").size(), 3u);
  EXPECT_EQ(P("e"), Permutation{});
  EXPECT_EQ(to_string(P("3 1 2")), "3 1 2");
  EXPECT_THROW(P("1 1 2"), ParseError);
  EXPECT_THROW(P("1 3"), ParseError);
  EXPECT_THROW(P("0 1"), ParseError);
  EXPECT_THROW(Permutation(std::vector<std::uint32_t>{2, 2}), PreconditionError);
  EXPECT_EQ(to_string(PositionSet{1, 3}), "1,3");
  EXPECT_EQ(to_string(PositionSet{}), "");
}

TEST(PermStats, HookExample) {
  Permutation sigma = P("1 3 4 14 12 2 5 11 15 8 6 7 13 9 10");
  EXPECT_EQ(pix(sigma), 4u);
  EXPECT_EQ(lec(sigma), 7u);
  auto h = hook_factorize(sigma);
  EXPECT_EQ(h.prefix, W("1 3 4 14"));
  std::vector<Word> hooks{W("12 2 5 11 15"), W("8 6 7"), W("13 9 10")};
  EXPECT_EQ(h.hooks, hooks);
}

TEST(PermStats, Identity) {
  for (std::size_t n = 0; n <= 6; ++n) {
    PermStats s = perm_stats(Permutation::identity(n));
    EXPECT_EQ(s.exc + s.des + s.maj + s.lec + s.inv, 0u);
    EXPECT_EQ(s.fix, n);
    EXPECT_EQ(s.pix, n);
    auto h = hook_factorize(Permutation::identity(n));
    EXPECT_EQ(h.prefix.size(), n);
    EXPECT_TRUE(h.hooks.empty());
  }
}

TEST(PermStats, TwoOne) {
  auto h = hook_factorize(P("2 1"));
  EXPECT_TRUE(h.prefix.empty());
  EXPECT_EQ(h.hooks, std::vector<Word>{W("21")});
}

TEST(PermStats, AgreeWithDefinitions) {
  small_perms([](const Permutation& p) {
    PermStats s = perm_stats(p);
    Permutation inv = oracle::inverse(p);
    ASSERT_EQ(p.inverse(), inv);
    ASSERT_EQ(s.exc, oracle::exc(p));
    ASSERT_EQ(s.fix, oracle::fix(p));
    ASSERT_EQ(s.ligne, oracle::descent_set(p));
    ASSERT_EQ(s.des, s.ligne.size());
    ASSERT_EQ(s.maj, oracle::sum(s.ligne));
    ASSERT_EQ(s.inv, oracle::word_inv(p.as_word()));
    ASSERT_EQ(s.iligne, oracle::descent_set(inv));
    ASSERT_EQ(s.ides, s.iligne.size());
    ASSERT_EQ(s.imaj, oracle::sum(s.iligne));
    ASSERT_EQ(s.iexc, oracle::exc(inv));
    auto [px, lc] = oracle::pix_lec(p);
    ASSERT_EQ(s.pix, px) << to_string(p);
    ASSERT_EQ(s.lec, lc) << to_string(p);
  });
}

TEST(PermStats, PixZeroIffDesarrangement) {
  small_perms([](const Permutation& p) {
    ASSERT_EQ(pix(p) == 0, oracle::desarrangement(p.as_word())) << to_string(p);
  });
}

TEST(PermStats, SymmetricGroupFourTable) {
  std::multiset<std::pair<std::size_t, PositionSet>> desarrangements, derangements;
  for (const Permutation& p : all_permutations(4)) {
    if (pix(p) == 0) desarrangements.insert({lec(p), iligne(p)});
    if (fix(p) == 0) derangements.insert({perm_stats(p).iexc, iligne(p)});
  }
  EXPECT_EQ(desarrangements.size(), 9u);
  EXPECT_EQ(desarrangements, derangements);
  EXPECT_EQ(lec(P("2 1 3 4")), 1u);
  EXPECT_EQ(iligne(P("2 1 3 4")), PositionSet{1});
  EXPECT_EQ(perm_stats(P("2 3 4 1")).iexc, 1u);
  EXPECT_EQ(lec(P("4 1 2 3")), 3u);
  EXPECT_EQ(perm_stats(P("4 1 2 3")).iexc, 3u);
  EXPECT_EQ(iligne(P("4 2 3 1")), (PositionSet{1, 3}));
}

TEST(ZStatistics, Examples) {
  ZStats z = z_stats(P("8 2 1 3 5 6 4 9 7"));
  EXPECT_EQ(z.dez, 3u);
  EXPECT_EQ(z.maz, 13u);
  EXPECT_EQ(z.maf, 13u);
  ZStats id = z_stats(Permutation::identity(5));
  EXPECT_EQ(id.dez + id.maz + id.maf, 0u);
}

TEST(ZStatistics, AgreeWithDefinitions) {
  small_perms([](const Permutation& p) {
    ZStats z = z_stats(p), o = oracle_z(p);
    ASSERT_EQ(z.dez, o.dez) << to_string(p);
    ASSERT_EQ(z.maz, o.maz) << to_string(p);
    ASSERT_EQ(z.maf, o.maf) << to_string(p);
    if (oracle::fix(p) == 0) {
      ASSERT_EQ(z.dez, des(p));
      ASSERT_EQ(z.maz, maj(p));
    }
  });
}

TEST(Lac, Examples) {
  Permutation sigma = P("3 4 8 1 9 2 5 10 12 7 6 11");
  EXPECT_EQ(lac(sigma), W("0 0 1 0 2 0 0 0 3 1 0 0"));
  EXPECT_EQ(ligne(sigma), (PositionSet{3, 5, 9, 10}));
  EXPECT_EQ(lac(Permutation::identity(4)), W("0000"));
}

TEST(Lac, AgreesWithRunScanAndRefinesLigne) {
  small_perms([](const Permutation& p) {
    Word l = lac(p);
    ASSERT_EQ(l, oracle_lac(p));
    ASSERT_EQ(ilac(p), oracle_lac(oracle::inverse(p)));
    PositionSet positive;
    for (std::size_t i = 0; i < l.size(); ++i)
      if (l[i] >= 1) positive.push_back(i + 1);
    ASSERT_EQ(positive, ligne(p));
  });
}

TEST(Symmetries, Examples) {
  EXPECT_EQ(complement(P("2 3 4 1")), P("3 2 1 4"));
  EXPECT_EQ(reverse(P("2 3 4 1")), P("1 4 3 2"));
  Word ff = first_fundamental(P("2 1 4 3")).as_word();
  EXPECT_EQ(des(Permutation::from_word(ff)), 2u);
  EXPECT_EQ(single_stat(ff).single, 0u);
  EXPECT_EQ(apply_symmetry(P("2 3 1"), Symmetry::inverse), P("3 1 2"));
}

TEST(Symmetries, FirstFundamentalIsABijectionCarryingExcFix) {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<Permutation> images;
    oracle::each_permutation(n, [&](const Permutation& p) {
      Permutation f = first_fundamental(p);
      images.insert(f);
      ASSERT_EQ(oracle::exc(p), oracle::word_des(f.as_word())) << to_string(p);
      ASSERT_EQ(oracle::fix(p), single_stat(f.as_word()).single) << to_string(p);
    });
    EXPECT_EQ(images.size(), count_permutations(n));
  }
}

TEST(Compositions, Examples) {
  Composition J = Composition::parse("455116");
  EXPECT_EQ(composition_positions(J), (PositionSet{6, 7, 8, 13, 18, 22}));
  EXPECT_EQ(to_compact_string(composition_word(J)), "6666665433333222221111");
  EXPECT_EQ(J.total(), 22u);
  for (std::size_t n = 1; n <= 5; ++n) {
    Composition whole({n});
    EXPECT_EQ(composition_positions(whole), PositionSet{n});
    EXPECT_EQ(composition_word(whole), Word(std::vector<Letter>(n, 1)));
    EXPECT_EQ(composition_class_members(whole), std::vector<Permutation>{Permutation::identity(n)});
    Composition ones(std::vector<std::size_t>(n, 1));
    EXPECT_EQ(composition_class_members(ones).size(), count_permutations(n));
  }
  EXPECT_THROW(Composition({2, 0, 1}), PreconditionError);
}

TEST(Compositions, MembersAreExactlyTheIligneSubsets) {
  for (auto parts : std::vector<std::vector<std::size_t>>{{2, 3}, {1, 2, 2}, {3, 1, 1}, {2, 2, 2}}) {
    Composition J(parts);
    PositionSet L = composition_positions(J);
    std::set<std::size_t> allowed(L.begin(), L.end());
    std::vector<Permutation> expected;
    oracle::each_permutation(J.total(), [&](const Permutation& p) {
      bool inside = true;
      for (std::size_t i : oracle::descent_set(oracle::inverse(p))) inside &= allowed.count(i) > 0;
      if (inside) expected.push_back(p);
    });
    auto got = composition_class_members(J);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected);
  }
}
