// Copyright 2026 The trilsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "trilsd/words.hpp"

#include <gtest/gtest.h>

#include <set>

#include "trilsd/errors.hpp"

namespace trilsd {
namespace {

Word W(const char* s) { return Word::parse(s); }

std::size_t double_factorial(std::size_t m) { return m <= 1 ? 1 : m * double_factorial(m - 2); }

std::size_t catalan_number(std::size_t k) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

TEST(Word, CanonicalForm) {
  EXPECT_EQ(W("abba").letters(), (std::vector<int>{1, 2, 2, 1}));
  EXPECT_EQ(W("bbaa"), W("aabb"));
  EXPECT_EQ(W("abba").str(), "abba");
  EXPECT_THROW(Word(std::vector<int>{2, 1}), std::invalid_argument);
  EXPECT_THROW(Word(std::vector<int>{0}), std::invalid_argument);
  const std::vector<int> labels{9, 4, 9, 4};
  EXPECT_EQ(Word::canonical(labels), W("abab"));
  EXPECT_EQ(W("abab").alphabet_size(), 2);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(W("abba")), (WordClassification{true, true, true}));
  EXPECT_EQ(classify(W("abab")), (WordClassification{true, false, false}));
  EXPECT_EQ(classify(W("aab")), (WordClassification{false, false, false}));
  EXPECT_EQ(classify(W("aaaa")), (WordClassification{false, false, false}));
}

TEST(Enumerate, PairMatchedCounts) {
  EXPECT_EQ(enumerate_pair_matched(1), (std::vector<Word>{W("aa")}));
  const auto two = enumerate_pair_matched(2);
  EXPECT_EQ(std::set<Word>(two.begin(), two.end()), (std::set<Word>{W("aabb"), W("abba"), W("abab")}));
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(enumerate_pair_matched(k).size(), double_factorial(2 * k - 1));
  EXPECT_THROW(enumerate_pair_matched(9), ResourceError);
}

TEST(Enumerate, CatalanCounts) {
  const auto two = enumerate_catalan(2);
  EXPECT_EQ(std::set<Word>(two.begin(), two.end()), (std::set<Word>{W("aabb"), W("abba")}));
  EXPECT_EQ(enumerate_catalan(3).size(), 5u);
  EXPECT_EQ(enumerate_catalan(4).size(), 14u);
  for (std::size_t k = 0; k <= 10; ++k) EXPECT_EQ(enumerate_catalan(k).size(), catalan_number(k));
  EXPECT_THROW(enumerate_catalan(11), ResourceError);
}

TEST(Enumerate, CatalanMatchesFilteredMatchings) {
  for (std::size_t k = 1; k <= 6; ++k) {
    std::vector<Word> filtered;
    for (const Word& w : enumerate_pair_matched(k)) {
      if (is_catalan(w)) filtered.push_back(w);
    }
    EXPECT_EQ(filtered, enumerate_catalan(k));
  }
}

TEST(Enumerate, SymmetricCountIsFactorial) {
  std::size_t f = 1;
  for (std::size_t k = 1; k <= 6; ++k) {
    f *= k;
    EXPECT_EQ(enumerate_symmetric(k).size(), f);
  }
}

TEST(Enumerate, AllWordsAreSetPartitions) {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (std::size_t len = 0; len <= 8; ++len) EXPECT_EQ(enumerate_words(len).size(), bell[len]);
  std::size_t pair = 0;
  for (const Word& w : enumerate_words(6)) pair += is_pair_matched(w);
  EXPECT_EQ(pair, 15u);
}

TEST(Enumerate, EveryCatalanWordIsSymmetric) {
  for (std::size_t k = 1; k <= 6; ++k) {
    for (const Word& w : enumerate_catalan(k)) EXPECT_TRUE(is_symmetric(w)) << w.str();
  }
}

TEST(GeneratingVertices, Examples) {
  EXPECT_EQ(generating_vertices(W("abba")), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(generating_vertices(W("aa")), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(generating_vertices(W("aabbcc")), (std::vector<std::size_t>{0, 1, 3, 5}));
}

TEST(PhiMap, Examples) {
  EXPECT_EQ(phi_map(W("abba")).phi, (std::vector<std::size_t>{0, 1, 2, 1, 0}));
  EXPECT_EQ(phi_map(W("aa")).phi, (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_EQ(phi_map(W("aabbcc")).phi, (std::vector<std::size_t>{0, 1, 0, 3, 0, 5, 0}));
  EXPECT_THROW(phi_map(W("abab")), std::domain_error);
}

TEST(PhiMap, TotalOnCatalanWords) {
  for (std::size_t k = 1; k <= 6; ++k) {
    for (const Word& w : enumerate_catalan(k)) {
      const PhiMap m = phi_map(w);
      ASSERT_EQ(m.generating.size(), k + 1);
      ASSERT_EQ(m.phi.size(), 2 * k + 1);
      const std::set<std::size_t> s(m.generating.begin(), m.generating.end());
      for (std::size_t j = 0; j <= 2 * k; ++j) {
        EXPECT_TRUE(s.count(m.phi[j])) << w.str();
        EXPECT_LE(m.phi[j], j);
        if (s.count(j)) EXPECT_EQ(m.phi[j], j);
      }
    }
  }
}

TEST(Rotate, Examples) {
  EXPECT_EQ(rotate(W("abba"), 1), W("aabb"));
  EXPECT_EQ(rotate(W("abbacc"), 1), W("aabccb"));
  EXPECT_EQ(rotate(W("abbacc"), 6), W("abbacc"));
}

TEST(Rotate, PreservesPairMatching) {
  for (const Word& w : enumerate_words(6)) {
    for (std::size_t r = 0; r < w.size(); ++r) EXPECT_EQ(is_pair_matched(rotate(w, r)), is_pair_matched(w));
  }
}

TEST(Builders, ConcatWrapSplit) {
  EXPECT_EQ(concat(W("aa"), W("abba")), W("aabccb"));
  EXPECT_EQ(wrap(W("aa")), W("abba"));
  EXPECT_EQ(wrap(Word()), W("aa"));
  EXPECT_EQ(doubled_word(3), W("aabbcc"));
  const auto [w1, w2] = split_first_block(W("abbacc"));
  EXPECT_EQ(w1, W("aa"));
  EXPECT_EQ(w2, W("aa"));
  EXPECT_THROW(split_first_block(Word()), std::domain_error);
  EXPECT_THROW(split_first_block(W("abab")), std::domain_error);
}

}  // namespace
}  // namespace trilsd
