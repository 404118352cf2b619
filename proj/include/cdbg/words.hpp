#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cdbg/common.hpp"

namespace cdbg {

// A word over the alphabet [d] = {1, ..., d}; symbols are 1-based.
using Word = std::vector<int>;

// True iff equal symbols in w sit at least t positions apart, i.e.
// w[i] == w[j] with i < j implies j - i >= t.
bool is_t_constrained(const Word& w, int t);

// Throws std::invalid_argument unless d >= 1, n >= 1 and 1 <= t <= min(d, n).
void check_word_params(int d, int t, int n);

// Throws std::invalid_argument unless w has length n, symbols within [1, d]
// and is t-constrained.
void validate_word(const Word& w, int d, int t, int n);

// Number of t-constrained words of length n over [d]:
//   d (d-1) ... (d-t+1) * (d-t+1)^(n-t).
// Exact at any size.
mpz_class count_words(int d, int t, int n);

// Visits every t-constrained word of length n over [d] in lexicographic
// order. No budget: the caller decides how far this is allowed to run.
void for_each_word(int d, int t, int n, const std::function<void(const Word&)>& visit);

// Materializes the lexicographic enumeration; throws BudgetError when the
// count exceeds max_words.
std::vector<Word> enumerate_words(int d, int t, int n, std::uint64_t max_words = vertex_budget());

// Lexicographic-rank helper with the per-position completion table cached,
// for callers ranking many words of one parameter set. Skips validation.
class Ranker {
 public:
  Ranker(int d, int t, int n);
  std::uint64_t operator()(const Word& w) const;

 private:
  int d_;
  int t_;
  std::vector<std::uint64_t> completions_;
};

// Position of w in the lexicographic enumeration. Runs in O(n t) without
// materializing anything; parameter sets whose word count does not fit in
// 63 bits are refused with BudgetError (count_words still covers those).
std::uint64_t rank(const Word& w, int d, int t);

// Inverse of rank; index must be below count_words(d, t, n).
Word unrank(std::uint64_t index, int d, int t, int n);

// "2,3,1,2"
std::string to_string(const Word& w);

// Inverse of to_string; throws std::invalid_argument on malformed input.
Word word_from_string(std::string_view text);

}  // namespace cdbg
