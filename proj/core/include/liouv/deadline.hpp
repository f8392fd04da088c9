#pragma once

#include <chrono>
#include <optional>

#include "liouv/errors.hpp"

namespace liouv {

/// Wall-clock limit polled by the long-running searches. A default
/// constructed Deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(Clock::duration budget) : end_(Clock::now() + budget) {}

  bool expired() const { return end_ && Clock::now() >= *end_; }

  /// Throws Timeout once the limit has passed.
  void check() const {
    if (expired()) throw Timeout();
  }

 private:
  std::optional<Clock::time_point> end_;
};

}  // namespace liouv
