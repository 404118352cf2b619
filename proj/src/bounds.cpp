#include "cdbg/bounds.hpp"

#include <algorithm>

namespace cdbg {

namespace {

mpz_class fac(long v) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

mpz_class upow(long base, long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

mpz_class cdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// (n+c-1)!/(c+1)!: words of one part A_i divided by the block size c+1.
mpz_class part_over_blocks(int n, int c) {
  mpz_class r = fac(n + c - 1);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), fac(c + 1).get_mpz_t());
  return r;
}

struct Candidate {
  mpz_class value;
  FormulaSource source;
};

void keep_max(std::vector<Candidate>& lows, mpz_class v, FormulaSource s) {
  lows.push_back({std::move(v), std::move(s)});
}

}  // namespace

mpz_class generic_lower(const mpz_class& vertices, const mpz_class& max_degree) {
  if (vertices < 1 || max_degree < 0)
    throw std::invalid_argument("generic_lower needs vertices >= 1 and max_degree >= 0");
  return cdiv(vertices, max_degree + 1);
}

mpz_class lower_bound(const GraphSpec& spec) { return exact_or_upper(spec).lower; }

mpz_class thm16_recurrence(int n, int c) {
  if (n < 3 || c < 0) throw std::invalid_argument("thm16_recurrence needs n >= 3 and c >= 0");
  mpz_class total = mpz_class((n + 2) / 3) * fac(n - 1);
  const mpz_class per_level = 2 * ((n + 3) / 4);
  for (int j = 1; j <= c; ++j) total += per_level * part_over_blocks(n, j);
  return total;
}

mpz_class thm16_closed_form(int n, int c) {
  if (n < 3 || c < 0) throw std::invalid_argument("thm16_closed_form needs n >= 3 and c >= 0");
  mpz_class sum = 0;
  for (int j = 1; j <= c; ++j) sum += part_over_blocks(n, j);
  return mpz_class((n + 2) / 3) * fac(n - 1) + fdiv((n + 4) * sum, 2);
}

mpz_class level_sum(int n, int h) {
  if (n < 2 || h < 0) throw std::invalid_argument("level_sum needs n >= 2 and h >= 0");
  mpz_class sum = 0;
  for (int i = 0; i <= h; ++i) {
    mpz_class term = fac(n + i - 1);
    mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), fac(i + 1).get_mpz_t());
    sum += term;
  }
  return sum;
}

mpz_class level_sum_closed(int n, int h) {
  if (n < 2 || h < 0) throw std::invalid_argument("level_sum_closed needs n >= 2 and h >= 0");
  mpz_class r = fac(h + n);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), fac(h + 1).get_mpz_t());
  r -= fac(n - 1);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), mpz_class(n - 1).get_mpz_t());
  return r;
}

BoundReport exact_or_upper(const GraphSpec& spec) {
  spec.validate();
  const int d = spec.d, t = spec.t, n = spec.n;
  const mpz_class vertices = count_words(d, t, n);
  const bool directed = spec.orientation == Orientation::directed;

  std::vector<Candidate> lows, highs;
  std::optional<mpz_class> exact;
  std::vector<FormulaSource> exact_sources;
  auto set_exact = [&](mpz_class v, FormulaSource s) {
    if (exact && *exact != v)
      throw std::logic_error("conflicting exact formulas for one spec");
    exact = std::move(v);
    exact_sources.push_back(std::move(s));
  };

  if (directed) {
    keep_max(lows, generic_lower(vertices, d - t + 1),
             {"eq3", "gamma >= ceil(|V| / (d-t+2)), out-degree d-t+1"});
    if (t == 1) set_exact(cdiv(upow(d, n), d + 1), {"thm1", "gamma(cDB+(d,1,n)) = ceil(d^n/(d+1))"});
    if (t == 2) set_exact(upow(d - 1, n - 1), {"thm5", "gamma(cDB+(d,2,n)) = (d-1)^(n-1)"});
    if (t == 3 && t < n) {
      const mpz_class base = d * upow(d - 2, n - 2);
      if (d % 2 == 0) {
        set_exact(base, {"thm9", "gamma(cDB+(d,3,n)) = d (d-2)^(n-2) for even d"});
      } else {
        keep_max(lows, base, {"thm9", "d (d-2)^(n-2) <= gamma(cDB+(d,3,n)) for odd d"});
        highs.push_back({mpz_class(d - 1) * (d - 1) * upow(d - 2, n - 3),
                         {"thm9", "gamma(cDB+(d,3,n)) <= (d-1)^2 (d-2)^(n-3) for odd d"}});
      }
    }
    if (t >= 2 && t < n) {
      mpz_class s1 = d - 1;
      for (int i = 1; i < t - 1; ++i) s1 *= d - 1 - i;
      highs.push_back({(d - 1) * s1 * upow(d - t + 1, n - t - 1),
                       {"thm11", "gamma(cDB+(d,t,n)) <= (d-1)(d-1)!/(d-t)! (d-t+1)^(n-t-1)"}});
    }
    if (t == n && t == d)
      set_exact(mpz_class((n + 1) / 2) * fac(n - 1),
                {"thm13", "gamma(cDB+(n,n,n)) = ceil(n/2) (n-1)!"});
    if (t == n && t < d) {
      const int c = d - n;
      highs.push_back({(d - 1) * part_over_blocks(n, c),
                       {"thm15", "gamma(cDB+(n+c,n,n)) <= (n+c-1)(n+c-1)!/(c+1)!"}});
    }
  } else {
    keep_max(lows, generic_lower(vertices, 2 * (d - t + 1)),
             {"eq4", "gamma >= ceil(|V| / (2(d-t)+3)), degree at most 2(d-t+1)"});
    if (t == 1 && n == 2) set_exact(d - 1, {"thm2", "gamma(cDB(d,1,2)) = d-1"});
    if (t == 1 && n == 3)
      set_exact(mpz_class(d) * ((d + 1) / 2), {"thm3", "gamma(cDB(d,1,3)) = d ceil(d/2)"});
    if (t == 1 && n >= 4)
      highs.push_back({(d - 1) * upow(d, n - 2), {"thm4", "gamma(cDB(d,1,n)) <= (d-1) d^(n-2)"}});
    if (t == 2 && n == 2) set_exact(d - 1, {"thm6", "gamma(cDB(d,2,2)) = d-1"});
    if (t == 2 && n == 3) {
      keep_max(lows, mpz_class(d) * (d - 1) / 2, {"thm7", "gamma(cDB(d,2,3)) >= d(d-1)/2"});
      highs.push_back({mpz_class(d) * d / 2, {"thm7", "gamma(cDB(d,2,3)) <= floor(d^2/2)"}});
    }
    if (t == 2 && n >= 4)
      highs.push_back({upow(d - 1, n - 1) - (d - 2) * upow(d - 1, n - 4),
                       {"thm8", "gamma(cDB(d,2,n)) <= (d-1)^(n-1) - (d-2)(d-1)^(n-4)"}});
    if (t == 3 && t < n)
      highs.push_back({(d - 1) * upow(d - 2, n - 2),
                       {"thm10", "gamma(cDB(d,3,n)) <= (d-1)(d-2)^(n-2)"}});
    if (t >= 3 && t < n) {
      mpz_class s1 = d - 1;
      for (int i = 1; i < t - 1; ++i) s1 *= d - 1 - i;
      highs.push_back({(d - 1) * s1 * upow(d - t + 1, n - t - 1),
                       {"cor12", "the directed bound (d-1)(d-1)!/(d-t)! (d-t+1)^(n-t-1) carries over"}});
    }
    if (t == n && t == d)
      set_exact(mpz_class((n + 2) / 3) * fac(n - 1),
                {"thm14", "gamma(cDB(n,n,n)) = ceil(n/3) (n-1)!"});
    if (t == n && t < d && n >= 3) {
      const int c = d - n;
      highs.push_back({thm16_recurrence(n, c),
                       {"thm16", "gamma(cDB(n+c,n,n)) <= ceil(n/3)(n-1)! + 2 ceil(n/4) sum_j (n+j-1)!/(j+1)!"}});
      highs.push_back({(d - 1) * part_over_blocks(n, c),
                       {"thm15", "the directed bound (n+c-1)(n+c-1)!/(c+1)! carries over"}});
    }
  }

  BoundReport report;
  report.spec = spec;
  if (exact) {
    report.exact = *exact;
    report.lower = *exact;
    report.upper = *exact;
    report.sources = std::move(exact_sources);
    return report;
  }
  const auto* best_low = &lows.front();
  for (const auto& c : lows)
    if (c.value > best_low->value) best_low = &c;
  report.lower = best_low->value;
  report.sources.push_back(best_low->source);
  if (!highs.empty()) {
    const auto* best_high = &highs.front();
    for (const auto& c : highs)
      if (c.value < best_high->value) best_high = &c;
    report.upper = best_high->value;
    report.sources.push_back(best_high->source);
  }
  return report;
}

}  // namespace cdbg
