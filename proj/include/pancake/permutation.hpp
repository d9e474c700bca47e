#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pancake/common.hpp"

namespace pancake {

/// An element of S_n in one-line notation: image(k) is the image of k,
/// with 1-based values stored at 0-based positions.
///
/// Composition convention (inherited by every module built on top):
/// (g * s)(k) = g(s(k)), i.e. the right factor acts first. Under this
/// convention g * prefix_reversal(n, j) reverses the first j entries of
/// g's one-line form, so Cayley edges of the pancake graph are exactly
/// "flip a prefix of the label".
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::uint8_t> one_line)
      : entries_(std::move(one_line)) {
    validate();
  }

  explicit Permutation(const std::vector<int>& one_line) {
    entries_.reserve(one_line.size());
    for (int v : one_line) {
      if (v < 1 || v > 255) throw std::invalid_argument("entry out of range");
      entries_.push_back(static_cast<std::uint8_t>(v));
    }
    validate();
  }

  static Permutation identity(int n) {
    if (n < 1) throw std::domain_error("identity: n must be positive");
    std::vector<std::uint8_t> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), std::uint8_t{1});
    Permutation p;
    p.entries_ = std::move(e);
    return p;
  }

  int size() const { return static_cast<int>(entries_.size()); }

  /// Image of k under the permutation, 1-based.
  int image(int k) const {
    if (k < 1 || k > size()) throw std::domain_error("image: k out of range");
    return entries_[static_cast<std::size_t>(k - 1)];
  }

  const std::vector<std::uint8_t>& one_line() const { return entries_; }

  std::vector<int> as_ints() const {
    return std::vector<int>(entries_.begin(), entries_.end());
  }

  bool is_identity() const {
    for (int k = 0; k < size(); ++k)
      if (entries_[static_cast<std::size_t>(k)] != k + 1) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.entries_ < b.entries_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries_[static_cast<std::size_t>(i)]);
    }
    return s + "]";
  }

 private:
  void validate() const {
    const std::size_t n = entries_.size();
    if (n == 0) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(n + 1, false);
    for (std::uint8_t v : entries_) {
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("not a permutation of {1..n}");
      seen[v] = true;
    }
  }

  // for operations whose result is a permutation by construction
  static Permutation unchecked(std::vector<std::uint8_t> e) {
    Permutation p;
    p.entries_ = std::move(e);
    return p;
  }
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<std::uint8_t> entries_;
};

/// The prefix reversal r_{1j}: maps k to j+1-k for k <= j and fixes k > j.
/// Requires 2 <= j <= n.
inline Permutation prefix_reversal(int n, int j) {
  if (n < 2) throw std::domain_error("prefix_reversal: n must be >= 2");
  if (j < 2 || j > n)
    throw std::domain_error("prefix_reversal: j must satisfy 2 <= j <= n");
  std::vector<std::uint8_t> e(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    e[static_cast<std::size_t>(k - 1)] =
        static_cast<std::uint8_t>(k <= j ? j + 1 - k : k);
  return Permutation(std::move(e));
}

/// (g*s)(k) = g(s(k)); the right factor acts first.
inline Permutation compose(const Permutation& g, const Permutation& s) {
  if (g.size() != s.size())
    throw std::domain_error("compose: mismatched degrees");
  const auto& ge = g.one_line();
  const auto& se = s.one_line();
  std::vector<std::uint8_t> e(ge.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = ge[se[k] - 1];
  return Permutation::unchecked(std::move(e));
}

inline Permutation operator*(const Permutation& g, const Permutation& s) {
  return compose(g, s);
}

inline Permutation inverse(const Permutation& p) {
  const auto& e = p.one_line();
  std::vector<std::uint8_t> inv(e.size());
  for (std::size_t k = 0; k < e.size(); ++k)
    inv[e[k] - 1] = static_cast<std::uint8_t>(k + 1);
  return Permutation::unchecked(std::move(inv));
}

/// Largest n for which ranks are representable in 64 bits.
inline constexpr int kMaxRankDegree = 20;

/// Lexicographic (Lehmer-code) rank of the one-line form, in [0, n!-1].
inline std::uint64_t perm_rank(const Permutation& p) {
  const int n = p.size();
  if (n > kMaxRankDegree) throw std::domain_error("perm_rank: n too large");
  const auto& e = p.one_line();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    unsigned smaller_after = 0;
    for (int j = i + 1; j < n; ++j)
      if (e[static_cast<std::size_t>(j)] < e[static_cast<std::size_t>(i)])
        ++smaller_after;
    r += smaller_after * factorial(static_cast<unsigned>(n - 1 - i));
  }
  return r;
}

/// Inverse of perm_rank: the one-line form of lexicographic rank r in S_n.
inline Permutation perm_unrank(std::uint64_t r, int n) {
  if (n < 1 || n > kMaxRankDegree) throw std::domain_error("perm_unrank: bad n");
  if (r >= factorial(static_cast<unsigned>(n)))
    throw std::domain_error("perm_unrank: rank out of range");
  std::vector<std::uint8_t> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), std::uint8_t{1});
  std::vector<std::uint8_t> e;
  e.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(static_cast<unsigned>(n - 1 - i));
    const std::size_t d = static_cast<std::size_t>(r / f);
    r %= f;
    e.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  Permutation p(std::move(e));
  return p;
}

/// The connection set PR_n = {r_{1j} : 2 <= j <= n} of the pancake graph.
struct GeneratorSet {
  int n;
  std::vector<Permutation> reversals;  // reversals[j-2] == r_{1j}
};

inline GeneratorSet generator_set(int n) {
  if (n < 2) throw std::domain_error("generator_set: n must be >= 2");
  GeneratorSet gs{n, {}};
  gs.reversals.reserve(static_cast<std::size_t>(n - 1));
  for (int j = 2; j <= n; ++j) gs.reversals.push_back(prefix_reversal(n, j));
  return gs;
}

}  // namespace pancake
