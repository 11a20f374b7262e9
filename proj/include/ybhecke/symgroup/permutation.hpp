#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "ybhecke/errors.hpp"
#include "ybhecke/exactalg/monomial.hpp"

namespace ybhecke {

using Word = std::vector<int>;

// Element of S_n in one-line notation mu(1) ... mu(n), 1 <= n <= 9.
class Permutation {
 public:
  Permutation() : Permutation(identity(1)) {}

  explicit Permutation(const std::vector<int>& window) : n_(static_cast<int>(window.size())) {
    if (n_ < 1 || n_ > kMaxRank) throw RankOutOfRange("permutation rank must be in 1..9");
    unsigned seen = 0;
    w_.fill(0);
    for (int i = 0; i < n_; ++i) {
      int v = window[i];
      if (v < 1 || v > n_ || (seen >> v & 1u)) throw InvalidPermutation("window is not a bijection of 1..n");
      seen |= 1u << v;
      w_[i] = static_cast<std::uint8_t>(v);
    }
    int l = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) l += w_[i] > w_[j];
    len_ = static_cast<std::uint8_t>(l);
  }

  // Digit string such as "35142".
  static Permutation parse(std::string_view s) {
    std::vector<int> w;
    for (char c : s) {
      if (c < '1' || c > '9') throw InvalidPermutation("bad permutation string '" + std::string(s) + "'");
      w.push_back(c - '0');
    }
    if (w.empty()) throw InvalidPermutation("empty permutation string");
    return Permutation(w);
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(w);
  }

  // The longest element omega = (n, ..., 2, 1).
  static Permutation longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(w);
  }

  static Permutation simple(int n, int j) { return identity(n).times_simple(j); }

  static Permutation from_word(int n, const Word& word) {
    Permutation p = identity(n);
    for (int j : word) p = p.times_simple(j);
    return p;
  }

  int rank() const { return n_; }
  int operator()(int i) const { return w_[i - 1]; }

  std::vector<int> window() const { return {w_.begin(), w_.begin() + n_}; }

  // mu * sigma_j: swaps window positions j and j+1.
  Permutation times_simple(int j) const {
    check_index(j);
    Permutation r = *this;
    r.len_ = static_cast<std::uint8_t>(w_[j - 1] < w_[j] ? len_ + 1 : len_ - 1);
    std::swap(r.w_[j - 1], r.w_[j]);
    return r;
  }

  // sigma_j * mu: swaps the values j and j+1.
  Permutation simple_times(int j) const {
    check_index(j);
    Permutation r = *this;
    r.len_ = static_cast<std::uint8_t>(inverse().times_simple(j).length());
    for (int i = 0; i < n_; ++i) {
      if (r.w_[i] == j) r.w_[i] = static_cast<std::uint8_t>(j + 1);
      else if (r.w_[i] == j + 1) r.w_[i] = static_cast<std::uint8_t>(j);
    }
    return r;
  }

  // mu(j) > mu(j+1), i.e. length(mu * sigma_j) < length(mu).
  bool has_descent(int j) const {
    check_index(j);
    return w_[j - 1] > w_[j];
  }

  Permutation inverse() const {
    Permutation r = *this;
    for (int i = 0; i < n_; ++i) r.w_[w_[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return r;
  }

  int length() const { return len_; }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      if (w_[i] != i + 1) return false;
    return true;
  }

  // Canonical reduced word (i_1, ..., i_r) with mu = sigma_{i_1} ... sigma_{i_r}.
  // Sorts the window by moving n, n-1, ... to their places with adjacent swaps
  // and reverses the list of swap positions.
  Word reduced_word() const {
    Word swaps;
    Permutation p = *this;
    for (int v = n_; v >= 1; --v) {
      int pos = 1;
      while (p(pos) != v) ++pos;
      for (; pos < v; ++pos) {
        p = p.times_simple(pos);
        swaps.push_back(pos);
      }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
  }

  // Every reduced word, in lexicographic order.
  std::vector<Word> all_reduced_words() const {
    std::vector<Word> out;
    if (is_identity()) return {Word{}};
    for (int j = 1; j < n_; ++j) {
      if (!has_descent(j)) continue;
      for (Word w : times_simple(j).all_reduced_words()) {
        w.push_back(j);
        out.push_back(std::move(w));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < n_; ++i) s += static_cast<char>('0' + w_[i]);
    return s;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

  // (length, lexicographic window) order used for all listings.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.len_ != b.len_) return a.len_ < b.len_;
    return a.w_ < b.w_;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    for (int i = 0; i < n_; ++i) h = h * 11 + w_[i];
    return h;
  }

 private:
  void check_index(int j) const {
    if (j < 1 || j >= n_) throw IndexOutOfRange("generator index " + std::to_string(j) + " out of range for n=" + std::to_string(n_));
  }

  int n_ = 1;
  std::array<std::uint8_t, kMaxRank> w_{};
  std::uint8_t len_ = 0;
};

// (mu o nu)(i) = mu(nu(i)).
inline Permutation compose(const Permutation& mu, const Permutation& nu) {
  if (mu.rank() != nu.rank()) throw RankMismatch("compose: ranks differ");
  std::vector<int> w(mu.rank());
  for (int i = 1; i <= mu.rank(); ++i) w[i - 1] = mu(nu(i));
  return Permutation(w);
}

inline constexpr int kDefaultMaxRank = 6;

// All n! permutations sorted by (length, lexicographic window).
inline std::vector<Permutation> enumerate(int n, int max_rank = kDefaultMaxRank) {
  if (n < 1 || n > std::min(max_rank, kMaxRank))
    throw RankOutOfRange("rank " + std::to_string(n) + " outside 1.." + std::to_string(std::min(max_rank, kMaxRank)));
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w); while (std::next_permutation(w.begin(), w.end()));
  std::stable_sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
  return out;
}

}  // namespace ybhecke

template <>
struct std::hash<ybhecke::Permutation> {
  std::size_t operator()(const ybhecke::Permutation& p) const { return p.hash(); }
};
