#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "fixmahon/permutation.hpp"
#include "fixmahon/word.hpp"
#include "fixmahon/word_core.hpp"

namespace fixmahon {

/// Upper bound on the number of elements a single enumeration may produce.
struct EnumerationCap {
  std::uint64_t max_elements = 50'000'000;
};

// Closed-form sizes; saturate at UINT64_MAX.
std::uint64_t count_words(std::size_t n, Letter r);
std::uint64_t count_niw(std::size_t n, Letter r);
std::uint64_t count_dstar(std::size_t n, Letter r);
std::uint64_t count_permutations(std::size_t n);

// Visitors see elements in a fixed deterministic order.
void for_each_word(std::size_t n, Letter r, const std::function<void(const Word&)>& visit,
                   EnumerationCap cap = {});
void for_each_niw(std::size_t n, Letter r, const std::function<void(const Word&)>& visit,
                  EnumerationCap cap = {});
/// D_n(r): pairs (w, i) with w in NIW_n(r-1), n >= 2, 1 <= i < n.
void for_each_dpair(std::size_t n, Letter r, const std::function<void(const DPair&)>& visit,
                    EnumerationCap cap = {});
/// D*_n(r): a head in NIW(r) followed by D(r) pairs, total length n.
void for_each_dstar(std::size_t n, Letter r, const std::function<void(const DStarSequence&)>& visit,
                    EnumerationCap cap = {});
/// Distinct rearrangements of the letters of w.
void for_each_rearrangement(const Word& w, const std::function<void(const Word&)>& visit,
                            EnumerationCap cap = {});
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit,
                          EnumerationCap cap = {});

std::vector<Word> all_words(std::size_t n, Letter r, EnumerationCap cap = {});
std::vector<Word> all_niw(std::size_t n, Letter r, EnumerationCap cap = {});
std::vector<DPair> all_dpairs(std::size_t n, Letter r, EnumerationCap cap = {});
std::vector<DStarSequence> all_dstar(std::size_t n, Letter r, EnumerationCap cap = {});
std::vector<Word> all_rearrangements(const Word& w, EnumerationCap cap = {});
std::vector<Permutation> all_permutations(std::size_t n, EnumerationCap cap = {});

}  // namespace fixmahon
