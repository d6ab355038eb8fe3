#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dtlab/assignment.hpp"
#include "dtlab/polynomial.hpp"

namespace dtlab {

/// Full table of a function on n <= 30 variables. Bit `idx` holds f at the
/// point whose x_{i+1} is bit i of idx.
class TruthTable {
public:
  static constexpr std::size_t kMaxVars = 30;

  TruthTable() : TruthTable(0) {}
  explicit TruthTable(std::size_t n) : n_(n) {
    if (n > kMaxVars) throw std::length_error("truth table too large");
    words_.assign(((std::size_t{1} << n) + 63) / 64, 0);
  }

  template <class Fn>
  static TruthTable from_function(std::size_t n, Fn&& fn) {
    TruthTable t(n);
    Assignment x(n);
    for (std::uint64_t idx = 0; idx < t.num_points(); ++idx) {
      for (std::size_t i = 0; i < n; ++i) x.set(i, (idx >> i) & 1U);
      if (fn(x)) t.set(idx, true);
    }
    return t;
  }

  static TruthTable from_poly(const F2Polynomial& p, std::size_t n) {
    if (p.min_arity() > n) throw MalformedFunction("polynomial variable out of range");
    TruthTable t(n);
    for (const auto& m : p.monomials()) {
      std::uint64_t idx = 0;
      for (Var v : m) idx |= std::uint64_t{1} << v;
      t.set(idx, true);
    }
    t.mobius();
    return t;
  }

  /// Parses a hex number whose least significant bit is f(0...0).
  static TruthTable from_hex(std::size_t n, std::string_view hex) {
    TruthTable t(n);
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    const std::uint64_t points = t.num_points();
    for (std::size_t k = 0; k < hex.size(); ++k) {
      const char c = hex[hex.size() - 1 - k];
      int v = 0;
      if (c >= '0' && c <= '9')
        v = c - '0';
      else if (c >= 'a' && c <= 'f')
        v = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F')
        v = c - 'A' + 10;
      else
        throw MalformedFunction("truth table hex contains a non-hex character");
      for (int b = 0; b < 4; ++b) {
        if (((v >> b) & 1) == 0) continue;
        const std::uint64_t idx = 4 * k + static_cast<std::uint64_t>(b);
        if (idx >= points) throw MalformedFunction("truth table hex longer than 2^n bits");
        t.set(idx, true);
      }
    }
    return t;
  }

  [[nodiscard]] std::string to_hex() const {
    const std::uint64_t digits = (num_points() + 3) / 4;
    std::string s(digits, '0');
    for (std::uint64_t k = 0; k < digits; ++k) {
      int v = 0;
      for (int b = 0; b < 4; ++b) {
        const std::uint64_t idx = 4 * k + static_cast<std::uint64_t>(b);
        if (idx < num_points() && get(idx)) v |= 1 << b;
      }
      s[digits - 1 - k] = "0123456789abcdef"[v];
    }
    return s;
  }

  [[nodiscard]] std::size_t num_vars() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t num_points() const noexcept { return std::uint64_t{1} << n_; }

  [[nodiscard]] bool get(std::uint64_t idx) const noexcept { return (words_[idx >> 6] >> (idx & 63)) & 1U; }
  void set(std::uint64_t idx, bool v) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (idx & 63);
    if (v)
      words_[idx >> 6] |= m;
    else
      words_[idx >> 6] &= ~m;
  }

  [[nodiscard]] bool eval(const Assignment& x) const {
    if (x.size() < n_) throw MalformedFunction("assignment shorter than truth table arity");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (x.get(i)) idx |= std::uint64_t{1} << i;
    return get(idx);
  }

  [[nodiscard]] std::uint64_t count_ones() const noexcept {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(__builtin_popcountll(w));
    return c;
  }

  /// Exact multilinear representation (the transform is an involution).
  [[nodiscard]] F2Polynomial to_poly() const {
    TruthTable t = *this;
    t.mobius();
    std::vector<Monomial> ms;
    for (std::uint64_t idx = 0; idx < num_points(); ++idx) {
      if (!t.get(idx)) continue;
      std::vector<Var> vars;
      for (std::size_t i = 0; i < n_; ++i)
        if ((idx >> i) & 1U) vars.push_back(static_cast<Var>(i));
      ms.emplace_back(std::move(vars));
    }
    return F2Polynomial(std::move(ms));
  }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
  // Subset-sum over GF(2), applied word-parallel for the low 6 variables.
  void mobius() noexcept {
    static constexpr std::uint64_t kMask[6] = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
    for (std::size_t i = 0; i < n_ && i < 6; ++i)
      for (auto& w : words_) w ^= (w << (1U << i)) & kMask[i];
    for (std::size_t i = 6; i < n_; ++i) {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t w = 0; w < words_.size(); ++w)
        if (w & stride) words_[w] ^= words_[w ^ stride];
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace dtlab
