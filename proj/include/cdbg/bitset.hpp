#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cdbg {

// Fixed-size bitset over 64-bit words. The solver's hot loops need fused
// and-count / and-not without temporaries, which std::bitset (compile-time
// size) and vector<bool> cannot give.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t bits, bool value = false)
      : bits_(bits), w_((bits + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const { return bits_; }

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (const auto w : w_)
      if (w) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (const auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t count_and(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    return c;
  }

  void or_assign(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  }

  void and_not_assign(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  }

  // *this = a & ~b; all three must have equal size.
  void assign_and_not(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] = a.w_[i] & ~b.w_[i];
  }

  std::size_t find_first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return npos;
  }

 private:
  void trim() {
    if (bits_ & 63) w_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace cdbg
