#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fles {

/// Work caps for the exponential parts of the library. Exceeding one raises
/// ResourceLimitExceeded, which is never confused with a verdict.
struct Limits {
  std::size_t max_configurations = std::size_t{1} << 20;
  std::size_t max_words = std::size_t{1} << 22;
  std::size_t max_traces = std::size_t{1} << 25;
  std::size_t max_nfa_states = std::size_t{1} << 15;
  std::size_t max_subset_states = std::size_t{1} << 16;
  std::size_t max_splits = std::size_t{1} << 22;

  /// Defaults, with FLES_MAX_CONFIGS applied when set.
  static Limits from_environment();
};

class ResourceLimitExceeded : public std::runtime_error {
 public:
  ResourceLimitExceeded(std::string what_cap, std::size_t cap)
      : std::runtime_error("resource limit exceeded: " + what_cap + " > " + std::to_string(cap)),
        cap_name_(std::move(what_cap)) {}

  const std::string& cap_name() const { return cap_name_; }

 private:
  std::string cap_name_;
};

}  // namespace fles
