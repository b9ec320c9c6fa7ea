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

// Words: canonical labels of circuit equivalence classes.
//
// Positions are 1-based (letter w[p] sits between vertices p-1 and p);
// vertex 0 is the start of the circuit.

#ifndef TRILSD_WORDS_HPP_
#define TRILSD_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trilsd {

/// Letter sequence in canonical form: first occurrences appear in the order
/// 1, 2, 3, ...
class Word {
 public:
  Word() = default;

  /// Throws std::invalid_argument if `letters` is not canonical.
  explicit Word(std::vector<int> letters);

  /// Relabels arbitrary positive labels into canonical form.
  static Word canonical(std::span<const int> labels);

  /// Parses "abba" style text (a..z, then A..Z); canonicalizes the result.
  static Word parse(std::string_view text);

  std::string str() const;

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::size_t half_length() const { return letters_.size() / 2; }

  /// Letter at 1-based position p.
  int at(std::size_t p) const { return letters_[p - 1]; }
  const std::vector<int>& letters() const { return letters_; }

  /// Number of distinct letters.
  int alphabet_size() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

struct WordClassification {
  bool pair_matched = false;
  bool catalan = false;
  bool symmetric = false;

  friend bool operator==(const WordClassification&,
                         const WordClassification&) = default;
};

WordClassification classify(const Word& w);
bool is_pair_matched(const Word& w);
bool is_catalan(const Word& w);
bool is_symmetric(const Word& w);

/// Every canonical word of the given length (set partitions of the
/// positions, Bell-many). Throws ResourceError when length > max_length.
std::vector<Word> enumerate_words(std::size_t length, std::size_t max_length = 10);

/// All pair-matched words of length 2k, sorted; (2k-1)!! of them.
/// Throws ResourceError when k > max_k.
std::vector<Word> enumerate_pair_matched(std::size_t k, std::size_t max_k = 8);

/// All Catalan words of length 2k, sorted; C_k of them. Built from the Dyck
/// decomposition w = a w1 a w2 rather than by filtering matchings, so k = 10
/// stays cheap. Throws ResourceError when k > max_k.
std::vector<Word> enumerate_catalan(std::size_t k, std::size_t max_k = 10);

std::vector<Word> enumerate_symmetric(std::size_t k, std::size_t max_k = 8);

/// For pair-matched w: partner[p] is the other position carrying w[p].
/// Index 0 is unused.
std::vector<std::size_t> partner_positions(const Word& w);

/// {0} together with the positions of first occurrences, ascending.
std::vector<std::size_t> generating_vertices(const Word& w);

struct PhiMap {
  Word word;
  std::vector<std::size_t> generating;  ///< S, ascending
  std::vector<std::size_t> phi;         ///< dense, length 2k+1
};

/// phi(j) is the generating vertex whose value vertex j carries on every
/// Wigner-matched circuit. Throws std::domain_error for a non-Catalan word.
PhiMap phi_map(const Word& w);

/// Cyclic left shift by r positions, re-canonicalized.
Word rotate(const Word& w, std::size_t r);

/// Canonical form of the concatenation lhs rhs with disjoint alphabets.
Word concat(const Word& lhs, const Word& rhs);

/// Canonical form of a w a with a fresh letter a.
Word wrap(const Word& inner);

/// For Catalan w = a w1 a w2 returns (w1, w2), both canonical.
/// Throws std::domain_error for an empty or non-Catalan word.
std::pair<Word, Word> split_first_block(const Word& w);

/// a1 a1 a2 a2 ... ak ak.
Word doubled_word(std::size_t k);

}  // namespace trilsd

#endif  // TRILSD_WORDS_HPP_
