#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pancake {

/// Vertex identifier: the lexicographic rank of the vertex's one-line form.
using vertex_t = std::uint32_t;

/// Thrown when a request exceeds an operation's combinatorial budget.
/// The message names the bound that was exceeded; callers are expected to
/// surface it verbatim rather than retry.
class scale_error : public std::runtime_error {
 public:
  explicit scale_error(const std::string& what) : std::runtime_error(what) {}
};

constexpr std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Cooperative wall-clock cap. Long-running searches poll check() at
/// coarse intervals and abort with scale_error once the deadline passes.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after_seconds(double secs) {
    Deadline d;
    d.armed_ = true;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(secs));
    return d;
  }

  void check(const char* where) const {
    if (armed_ && std::chrono::steady_clock::now() > at_) {
      throw scale_error(std::string(where) + ": wall-clock budget exceeded");
    }
  }

 private:
  bool armed_ = false;
  std::chrono::steady_clock::time_point at_{};
};

}  // namespace pancake
