#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nonevade {

// Square boolean matrix packed into 64-bit words, one row per element.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_per_row_((n + kWordBits - 1) / kWordBits), bits_(n * words_per_row_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  bool test(std::size_t row, std::size_t col) const noexcept {
    return (bits_[row * words_per_row_ + col / kWordBits] >> (col % kWordBits)) & 1U;
  }

  void set(std::size_t row, std::size_t col, bool value = true) noexcept {
    Word& w = bits_[row * words_per_row_ + col / kWordBits];
    const Word mask = Word{1} << (col % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const Word> row(std::size_t r) const noexcept {
    return {bits_.data() + r * words_per_row_, words_per_row_};
  }
  std::span<Word> row(std::size_t r) noexcept {
    return {bits_.data() + r * words_per_row_, words_per_row_};
  }

  std::size_t row_count(std::size_t r) const noexcept {
    std::size_t c = 0;
    for (Word w : row(r)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  BitMatrix transposed() const {
    BitMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (test(i, j)) t.set(j, i);
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> bits_;
};

}  // namespace nonevade
