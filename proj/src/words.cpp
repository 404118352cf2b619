#include "cdbg/words.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace cdbg {

namespace {

// Admissible symbols at position pos are those absent from the previous
// t-1 positions. The window always holds min(pos, t-1) pairwise distinct
// symbols, so how many symbols are admissible never depends on which
// prefix was chosen; that is what makes mixed-radix ranking work.
bool in_window(const Word& w, int pos, int t, int symbol) {
  for (int j = std::max(0, pos - t + 1); j < pos; ++j)
    if (w[j] == symbol) return true;
  return false;
}

// completions[j] = number of ways to extend a valid length-j prefix,
// i.e. the product of d - min(k, t-1) over positions k = j..n-1.
std::vector<std::uint64_t> completion_table(int d, int t, int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1);
  c[n] = 1;
  const auto cap = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  for (int j = n - 1; j >= 0; --j) {
    const auto factor = static_cast<std::uint64_t>(d - std::min(j, t - 1));
    if (c[j + 1] > cap / factor)
      throw BudgetError("word index space exceeds 63 bits; rank/unrank refuse this size");
    c[j] = c[j + 1] * factor;
  }
  return c;
}

}  // namespace

bool is_t_constrained(const Word& w, int t) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    const int stop = std::min(n, i + t);
    for (int j = i + 1; j < stop; ++j)
      if (w[i] == w[j]) return false;
  }
  return true;
}

void check_word_params(int d, int t, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("word parameters need d >= 1 and n >= 1");
  if (t < 1 || t > std::min(d, n))
    throw std::invalid_argument("word parameters need 1 <= t <= min(d, n)");
}

void validate_word(const Word& w, int d, int t, int n) {
  check_word_params(d, t, n);
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("word has length " + std::to_string(w.size()) +
                                ", expected " + std::to_string(n));
  for (const int s : w)
    if (s < 1 || s > d) throw std::invalid_argument("symbol " + std::to_string(s) + " outside [1, d]");
  if (!is_t_constrained(w, t))
    throw std::invalid_argument("word " + to_string(w) + " is not " + std::to_string(t) + "-constrained");
}

mpz_class count_words(int d, int t, int n) {
  check_word_params(d, t, n);
  mpz_class head = 1;
  for (int i = 0; i < t; ++i) head *= d - i;
  mpz_class tail;
  mpz_ui_pow_ui(tail.get_mpz_t(), static_cast<unsigned long>(d - t + 1),
                static_cast<unsigned long>(n - t));
  return head * tail;
}

void for_each_word(int d, int t, int n, const std::function<void(const Word&)>& visit) {
  check_word_params(d, t, n);
  Word cur(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      visit(cur);
      return;
    }
    for (int y = 1; y <= d; ++y) {
      if (in_window(cur, pos, t, y)) continue;
      cur[pos] = y;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

std::vector<Word> enumerate_words(int d, int t, int n, std::uint64_t max_words) {
  const mpz_class total = count_words(d, t, n);
  if (total > max_words)
    throw BudgetError("enumerating " + total.get_str() + " words exceeds the budget of " +
                      std::to_string(max_words));
  std::vector<Word> out;
  out.reserve(total.get_ui());
  for_each_word(d, t, n, [&](const Word& w) { out.push_back(w); });
  return out;
}

Ranker::Ranker(int d, int t, int n) : d_(d), t_(t), completions_(completion_table(d, t, n)) {}

std::uint64_t Ranker::operator()(const Word& w) const {
  std::uint64_t r = 0;
  const int n = static_cast<int>(w.size());
  for (int j = 0; j < n; ++j) {
    // admissible symbols strictly below w[j]: all of [1, w[j]) minus the
    // window entries that are smaller than w[j]
    int below = w[j] - 1;
    for (int k = std::max(0, j - t_ + 1); k < j; ++k)
      if (w[k] < w[j]) --below;
    r += static_cast<std::uint64_t>(below) * completions_[j + 1];
  }
  return r;
}

std::uint64_t rank(const Word& w, int d, int t) {
  const int n = static_cast<int>(w.size());
  validate_word(w, d, t, n);
  return Ranker(d, t, n)(w);
}

Word unrank(std::uint64_t index, int d, int t, int n) {
  check_word_params(d, t, n);
  const auto completions = completion_table(d, t, n);
  if (index >= completions[0])
    throw std::out_of_range("word index " + std::to_string(index) + " out of range");
  Word w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int y = 1; y <= d; ++y) {
      if (in_window(w, j, t, y)) continue;
      if (index < completions[j + 1]) {
        w[j] = y;
        break;
      }
      index -= completions[j + 1];
    }
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

Word word_from_string(std::string_view text) {
  Word w;
  const char* p = text.data();
  const char* const end = p + text.size();
  while (p != end) {
    int value = 0;
    const auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || value < 1)
      throw std::invalid_argument("malformed word literal: " + std::string(text));
    w.push_back(value);
    if (next == end) {
      p = next;
      break;
    }
    if (*next != ',') throw std::invalid_argument("malformed word literal: " + std::string(text));
    p = next + 1;
    if (p == end) throw std::invalid_argument("malformed word literal: " + std::string(text));
  }
  if (w.empty()) throw std::invalid_argument("empty word literal");
  return w;
}

}  // namespace cdbg
