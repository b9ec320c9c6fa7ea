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

#include <algorithm>
#include <map>
#include <stdexcept>

#include "trilsd/errors.hpp"

namespace trilsd {
namespace {

constexpr std::string_view kAlphabet =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

bool is_canonical(const std::vector<int>& letters) {
  int seen = 0;
  for (int c : letters) {
    if (c < 1 || c > seen + 1) return false;
    if (c == seen + 1) ++seen;
  }
  return true;
}

std::vector<int> letter_counts(const Word& w) {
  std::vector<int> counts(static_cast<std::size_t>(w.alphabet_size()) + 1, 0);
  for (int c : w.letters()) ++counts[static_cast<std::size_t>(c)];
  return counts;
}

void check_cap(std::size_t k, std::size_t max_k, const char* what) {
  if (k > max_k) {
    throw ResourceError(std::string(what) + ": k=" + std::to_string(k) +
                        " exceeds cap " + std::to_string(max_k));
  }
}

void matchings(std::vector<int>& letters, int next_letter,
               std::vector<Word>& out) {
  const auto first = std::find(letters.begin(), letters.end(), 0);
  if (first == letters.end()) {
    out.emplace_back(letters);
    return;
  }
  *first = next_letter;
  for (auto it = first + 1; it != letters.end(); ++it) {
    if (*it != 0) continue;
    *it = next_letter;
    matchings(letters, next_letter + 1, out);
    *it = 0;
  }
  *first = 0;
}

void growth_strings(std::vector<int>& letters, std::size_t pos, int used,
                    std::vector<Word>& out) {
  if (pos == letters.size()) {
    out.emplace_back(letters);
    return;
  }
  for (int c = 1; c <= used + 1; ++c) {
    letters[pos] = c;
    growth_strings(letters, pos + 1, std::max(used, c), out);
  }
}

}  // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  if (!is_canonical(letters_)) {
    throw std::invalid_argument("word letters are not in canonical form");
  }
}

Word Word::canonical(std::span<const int> labels) {
  std::map<int, int> relabel;
  std::vector<int> out;
  out.reserve(labels.size());
  for (int c : labels) {
    if (c < 1) throw std::invalid_argument("word labels must be positive");
    auto [it, inserted] =
        relabel.try_emplace(c, static_cast<int>(relabel.size()) + 1);
    out.push_back(it->second);
  }
  return Word(std::move(out));
}

Word Word::parse(std::string_view text) {
  std::vector<int> labels;
  labels.reserve(text.size());
  for (char ch : text) {
    const auto pos = kAlphabet.find(ch);
    if (pos == std::string_view::npos) {
      throw std::invalid_argument("word text may only contain letters: '" +
                                  std::string(text) + "'");
    }
    labels.push_back(static_cast<int>(pos) + 1);
  }
  return canonical(labels);
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (int c : letters_) {
    if (static_cast<std::size_t>(c) > kAlphabet.size()) {
      throw std::out_of_range("word has more letters than the text alphabet");
    }
    s.push_back(kAlphabet[static_cast<std::size_t>(c) - 1]);
  }
  return s;
}

int Word::alphabet_size() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

bool is_pair_matched(const Word& w) {
  const auto counts = letter_counts(w);
  return std::all_of(counts.begin() + 1, counts.end(),
                     [](int c) { return c == 2; });
}

bool is_catalan(const Word& w) {
  if (!is_pair_matched(w)) return false;
  // Deleting adjacent double letters until nothing is left is a stack
  // reduction.
  std::vector<int> stack;
  for (int c : w.letters()) {
    if (!stack.empty() && stack.back() == c) {
      stack.pop_back();
    } else {
      stack.push_back(c);
    }
  }
  return stack.empty();
}

bool is_symmetric(const Word& w) {
  if (!is_pair_matched(w)) return false;
  std::vector<int> odd(static_cast<std::size_t>(w.alphabet_size()) + 1, 0);
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (p % 2 == 1) ++odd[static_cast<std::size_t>(w.at(p))];
  }
  return std::all_of(odd.begin() + 1, odd.end(), [](int c) { return c == 1; });
}

WordClassification classify(const Word& w) {
  return {is_pair_matched(w), is_catalan(w), is_symmetric(w)};
}

std::vector<Word> enumerate_pair_matched(std::size_t k, std::size_t max_k) {
  check_cap(k, max_k, "enumerate_pair_matched");
  std::vector<Word> out;
  std::vector<int> letters(2 * k, 0);
  matchings(letters, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> enumerate_words(std::size_t length, std::size_t max_length) {
  check_cap(length, max_length, "enumerate_words");
  std::vector<Word> out;
  std::vector<int> letters(length, 0);
  growth_strings(letters, 0, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> enumerate_catalan(std::size_t k, std::size_t max_k) {
  check_cap(k, max_k, "enumerate_catalan");
  std::vector<std::vector<Word>> by_half(k + 1);
  by_half[0] = {Word()};
  for (std::size_t h = 1; h <= k; ++h) {
    for (std::size_t j = 1; j <= h; ++j) {
      for (const Word& inner : by_half[j - 1]) {
        const Word head = wrap(inner);
        for (const Word& tail : by_half[h - j]) {
          by_half[h].push_back(concat(head, tail));
        }
      }
    }
  }
  std::sort(by_half[k].begin(), by_half[k].end());
  return by_half[k];
}

std::vector<Word> enumerate_symmetric(std::size_t k, std::size_t max_k) {
  auto all = enumerate_pair_matched(k, max_k);
  std::erase_if(all, [](const Word& w) { return !is_symmetric(w); });
  return all;
}

std::vector<std::size_t> partner_positions(const Word& w) {
  std::vector<std::size_t> partner(w.size() + 1, 0);
  std::vector<std::size_t> first(static_cast<std::size_t>(w.alphabet_size()) + 1,
                                 0);
  for (std::size_t p = 1; p <= w.size(); ++p) {
    auto& f = first[static_cast<std::size_t>(w.at(p))];
    if (f == 0) {
      f = p;
    } else {
      partner[p] = f;
      partner[f] = p;
    }
  }
  return partner;
}

std::vector<std::size_t> generating_vertices(const Word& w) {
  std::vector<std::size_t> s{0};
  int seen = 0;
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w.at(p) > seen) {
      s.push_back(p);
      seen = w.at(p);
    }
  }
  return s;
}

PhiMap phi_map(const Word& w) {
  if (!is_catalan(w)) {
    throw std::domain_error("phi_map: word '" + w.str() + "' is not Catalan");
  }
  PhiMap map;
  map.word = w;
  map.generating = generating_vertices(w);
  map.phi.assign(w.size() + 1, 0);
  std::vector<std::size_t> open;
  int seen = 0;
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w.at(p) > seen) {
      seen = w.at(p);
      map.phi[p] = p;
      open.push_back(p);
    } else {
      // A Catalan word always closes the innermost open letter.
      const std::size_t i = open.back();
      open.pop_back();
      map.phi[p] = map.phi[i - 1];
    }
  }
  return map;
}

Word rotate(const Word& w, std::size_t r) {
  if (w.empty()) return w;
  std::vector<int> labels(w.letters());
  std::rotate(labels.begin(),
              labels.begin() + static_cast<std::ptrdiff_t>(r % labels.size()),
              labels.end());
  return Word::canonical(labels);
}

Word concat(const Word& lhs, const Word& rhs) {
  std::vector<int> labels(lhs.letters());
  const int shift = lhs.alphabet_size();
  for (int c : rhs.letters()) labels.push_back(c + shift);
  return Word(std::move(labels));
}

Word wrap(const Word& inner) {
  std::vector<int> labels{1};
  for (int c : inner.letters()) labels.push_back(c + 1);
  labels.push_back(1);
  return Word(std::move(labels));
}

std::pair<Word, Word> split_first_block(const Word& w) {
  if (w.empty() || !is_catalan(w)) {
    throw std::domain_error("split_first_block: needs a nonempty Catalan word");
  }
  const std::size_t close = partner_positions(w)[1];
  const auto& l = w.letters();
  const std::vector<int> inner(l.begin() + 1,
                               l.begin() + static_cast<std::ptrdiff_t>(close) - 1);
  const std::vector<int> tail(l.begin() + static_cast<std::ptrdiff_t>(close),
                              l.end());
  return {Word::canonical(inner), Word::canonical(tail)};
}

Word doubled_word(std::size_t k) {
  std::vector<int> labels;
  labels.reserve(2 * k);
  for (std::size_t i = 1; i <= k; ++i) {
    labels.push_back(static_cast<int>(i));
    labels.push_back(static_cast<int>(i));
  }
  return Word(std::move(labels));
}

}  // namespace trilsd
