#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fixmahon/enumerate.hpp"
#include "fixmahon/error.hpp"
#include "fixmahon/hook_bijections.hpp"
#include "fixmahon/lyndon_bijections.hpp"
#include "oracle.hpp"

using namespace fixmahon;

namespace {

Word W(std::string_view s) { return parse_word_lenient(s); }

std::size_t rinv_sum(const std::vector<Word>& hooks) {
  std::size_t n = 0;
  for (const Word& h : hooks)
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j) n += h[i] < h[j];
  return n;
}

}  // namespace

TEST(DPairToH, Examples) {
  EXPECT_EQ(d_pair_to_h(DPair{W("443221"), 3}), W("255421"));
  EXPECT_EQ(rinv(W("255421")), 3u);
  EXPECT_EQ(d_pair_to_h(DPair{W("00"), 1}), W("01"));
  EXPECT_EQ(h_to_d_pair(W("255421")), (DPair{W("443221"), 3}));
  EXPECT_THROW(h_to_d_pair(W("21")), PreconditionError);
}

TEST(DPairToH, RoundTripOnAllPairs) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (Letter r = 1; r <= 3; ++r) {
      std::set<Word> images;
      for (const DPair& p : all_dpairs(n, r)) {
        Word h = d_pair_to_h(p);
        ASSERT_TRUE(is_h_word(h)) << to_string(h);
        ASSERT_EQ(rinv_sum({h}), p.index);
        ASSERT_EQ(h_to_d_pair(h), p);
        images.insert(h);
      }
      std::size_t h_words = 0;
      oracle::each_word(n, r, [&](const Word& w) { h_words += is_h_word(w); });
      EXPECT_EQ(images.size(), h_words);
    }
}

TEST(PhiPix, RunningExample) {
  DStarSequence d = parse_dstar("6 5 3 2 | 2 1 1 1 : 2 | 5 3 3 : 2 | 1 1 : 1 | 2 2 : 1 | 5 5 2 1 : 3 | 5 5 2 : 2");
  Word w = phi_pix(d, 6);
  EXPECT_EQ(w, W("6 5 3 2 1 3 2 1 3 6 4 1 2 2 3 1 6 6 3 2 6 6"));
  WordStats s = word_stats(w);
  EXPECT_EQ(s.wlec, 11u);
  EXPECT_EQ(s.tot, 74u);
  EXPECT_EQ(s.wpix, 4u);
  EXPECT_EQ(phi_pix_inverse(w, 6), d);
  DStarSequence none{W("4420"), {}};
  EXPECT_EQ(phi_pix(none, 4), W("4420"));
}

TEST(PhiPix, BijectionWithStatisticTransfer) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (Letter r = 0; r <= 3; ++r) {
      std::set<Word> images;
      for (const DStarSequence& d : all_dstar(n, r)) {
        Word w = phi_pix(d, r);
        auto h = h_factorize(w);
        std::size_t index_sum = 0;
        for (const DPair& p : d.pairs) index_sum += p.index;
        ASSERT_EQ(rinv_sum(h.hooks), index_sum) << to_string(d);
        ASSERT_EQ(h.head.size(), d.head.size()) << to_string(d);
        ASSERT_EQ(phi_pix_inverse(w, r), d);
        images.insert(w);
      }
      EXPECT_EQ(images.size(), count_words(n, r));
    }
}

TEST(TransformF, RearrangementsOfOneTwoTwoThree) {
  std::multiset<std::pair<std::size_t, std::size_t>> source, image;
  std::set<Word> images;
  for (const Word& w : all_rearrangements(W("1223"))) {
    Word f = transform_f(w);
    EXPECT_EQ(oracle::sorted_letters(f), oracle::sorted_letters(w));
    source.insert({dec(w), single_stat(w).single});
    image.insert({wlec(f), wpix(f)});
    images.insert(f);
  }
  EXPECT_EQ(source, image);
  EXPECT_EQ(images.size(), 12u);
}

TEST(TransformF, ConstantWordsAreFixed) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (Letter x = 0; x <= 3; ++x) {
      Word w(std::vector<Letter>(n, x));
      EXPECT_EQ(transform_f(w, 3), w);
    }
}

TEST(TransformF, PermutesEachRearrangementClass) {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::map<std::vector<Letter>, std::pair<std::size_t, std::size_t>> class_sizes;
    oracle::each_word(n, 3, [&](const Word& w) {
      Word f = transform_f(w, 3);
      ASSERT_EQ(oracle::sorted_letters(f), oracle::sorted_letters(w)) << to_string(w);
      ASSERT_EQ(dec(w), wlec(f)) << to_string(w);
      ASSERT_EQ(single_stat(w).single, wpix(f)) << to_string(w);
      ASSERT_EQ(transform_f_inverse(f, 3), w);
      ASSERT_EQ(transform_f(transform_f_inverse(w, 3), 3), w);
    });
  }
}
