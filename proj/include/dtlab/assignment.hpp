#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dtlab/rng.hpp"

namespace dtlab {

/// Variable index, 0-based internally (x_{i+1} externally).
using Var = std::uint32_t;

/// Thrown when a function refers to variables outside the point's range or a
/// file describes an ill-formed function.
class MalformedFunction : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A point of {0,1}^n stored as packed 64-bit words.
class Assignment {
public:
  Assignment() = default;
  explicit Assignment(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static Assignment uniform(std::size_t n, Rng& rng) {
    Assignment a(n);
    for (std::size_t w = 0; w < a.words_.size(); ++w) a.words_[w] = rng.next();
    a.clear_tail();
    return a;
  }

  /// Parses "0110..." where the first character is x_1.
  static Assignment from_string(std::string_view bits) {
    Assignment a(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1')
        a.set(i, true);
      else if (bits[i] != '0')
        throw MalformedFunction("assignment string must contain only '0'/'1'");
    }
    return a;
  }

  /// Point whose bit i is bit i of `index` (n <= 64).
  static Assignment from_index(std::size_t n, std::uint64_t index) {
    Assignment a(n);
    if (n > 0) a.words_[0] = n >= 64 ? index : (index & ((std::uint64_t{1} << n) - 1));
    return a;
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  [[nodiscard]] bool get(std::size_t i) const noexcept {
    return ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
  }
  [[nodiscard]] bool operator[](std::size_t i) const noexcept { return get(i); }

  void set(std::size_t i, bool v) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  Assignment& operator^=(const Assignment& o) {
    if (o.n_ != n_) throw std::invalid_argument("xor of assignments of different length");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend Assignment operator^(Assignment a, const Assignment& b) { return a ^= b; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

  [[nodiscard]] std::size_t popcount() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  /// Low 64 bits as an integer (bit i = x_{i+1}).
  [[nodiscard]] std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

  [[nodiscard]] std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  /// Copy with the listed variables forced to zero.
  [[nodiscard]] Assignment with_zeroed(std::span<const Var> vars) const {
    Assignment a = *this;
    for (Var v : vars) a.set(v, false);
    return a;
  }

private:
  void clear_tail() noexcept {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dtlab

template <>
struct std::hash<dtlab::Assignment> {
  std::size_t operator()(const dtlab::Assignment& a) const noexcept {
    std::uint64_t h = a.size();
    for (auto w : a.words()) h = dtlab::splitmix64(h ^ w);
    return static_cast<std::size_t>(h);
  }
};
