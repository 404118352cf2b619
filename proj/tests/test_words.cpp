#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cdbg/common.hpp"
#include "cdbg/words.hpp"

using namespace cdbg;

TEST_CASE("constraint predicate keeps equal symbols t apart") {
  CHECK(is_t_constrained({1, 2, 1}, 2));
  CHECK_FALSE(is_t_constrained({1, 2, 2}, 2));
  CHECK(is_t_constrained({1, 1}, 1));
  CHECK(is_t_constrained({1, 2, 3, 1}, 3));
  CHECK_FALSE(is_t_constrained({1, 2, 1, 3}, 3));
  CHECK(is_t_constrained({2, 3, 1, 2}, 3));
  CHECK(is_t_constrained({}, 1));
}

TEST_CASE("parameter validation rejects out-of-range d, t, n") {
  CHECK_NOTHROW(check_word_params(1, 1, 1));
  CHECK_NOTHROW(check_word_params(4, 4, 4));
  CHECK_THROWS_AS(check_word_params(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_word_params(2, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_word_params(2, 3, 3), std::invalid_argument);  // t > d
  CHECK_THROWS_AS(check_word_params(3, 3, 2), std::invalid_argument);  // t > n
  CHECK_THROWS_AS(check_word_params(2, 1, 0), std::invalid_argument);
}

TEST_CASE("word validation checks length, alphabet and constraint") {
  CHECK_NOTHROW(validate_word({1, 2, 1}, 2, 2, 3));
  CHECK_THROWS_AS(validate_word({1, 2}, 2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_word({1, 3, 1}, 2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_word({0, 1, 2}, 2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_word({1, 1, 2}, 2, 2, 3), std::invalid_argument);
}

TEST_CASE("count matches the falling-factorial times power formula") {
  CHECK(count_words(3, 2, 2) == 6);
  CHECK(count_words(4, 3, 4) == 48);
  CHECK(count_words(2, 1, 3) == 8);
  CHECK(count_words(5, 5, 5) == 120);       // permutations
  CHECK(count_words(1, 1, 4) == 1);
  CHECK(count_words(6, 2, 3) == mpz_class(6) * 5 * 5);
  // far beyond 64 bits, still exact
  const mpz_class big = count_words(12, 5, 40);
  mpz_class expect = 12 * 11 * 10 * 9 * 8;
  for (int i = 0; i < 35; ++i) expect *= 8;
  CHECK(big == expect);
}

TEST_CASE("enumeration is lexicographic, complete and budget-guarded") {
  const std::vector<Word> small = enumerate_words(2, 2, 2);
  REQUIRE(small.size() == 2);
  CHECK(small[0] == Word{1, 2});
  CHECK(small[1] == Word{2, 1});

  std::uint64_t seen = 0;
  Word prev;
  for_each_word(3, 2, 4, [&](const Word& w) {
    REQUIRE(w.size() == 4);
    CHECK(is_t_constrained(w, 2));
    if (seen > 0) CHECK(prev < w);
    prev = w;
    ++seen;
  });
  CHECK(seen == count_words(3, 2, 4).get_ui());

  CHECK_THROWS_AS(enumerate_words(2, 1, 10, 100), BudgetError);
}

TEST_CASE("rank and unrank are mutually inverse over whole spaces") {
  for (const auto& [d, t, n] : {std::array{3, 1, 3}, std::array{4, 2, 4},
                                std::array{4, 4, 4}, std::array{5, 3, 4}}) {
    const std::uint64_t total = count_words(d, t, n).get_ui();
    std::uint64_t i = 0;
    const Ranker rk(d, t, n);
    for_each_word(d, t, n, [&](const Word& w) {
      CHECK(rank(w, d, t) == i);
      CHECK(rk(w) == i);
      CHECK(unrank(i, d, t, n) == w);
      ++i;
    });
    CHECK(i == total);
  }
}

TEST_CASE("rank refuses index spaces beyond 63 bits") {
  // 40!/(40-20)! alone is about 2^102
  Word w(30);
  std::iota(w.begin(), w.end(), 1);
  CHECK_THROWS_AS(rank(w, 40, 20), BudgetError);
  CHECK_THROWS_AS(unrank(0, 40, 20, 30), BudgetError);
  CHECK(count_words(40, 20, 30) > 0);  // counting still works
}

TEST_CASE("word strings round-trip") {
  CHECK(to_string(Word{2, 3, 1, 2}) == "2,3,1,2");
  CHECK(word_from_string("2,3,1,2") == Word{2, 3, 1, 2});
  CHECK(word_from_string("7") == Word{7});
  CHECK_THROWS_AS(word_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(word_from_string("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(word_from_string("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(word_from_string("1,2,"), std::invalid_argument);
}
