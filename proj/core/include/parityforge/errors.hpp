#pragma once

#include <stdexcept>
#include <string>

namespace parityforge {

// A precondition on the mathematical domain was violated (n = 0 where the
// degree of parity is undefined, odd input to an evens-only table, ...).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A configured bound was exceeded (perfect-number exponent cap, ...).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A decision strategy declined the input rather than risk an unsound
// verdict (composite base handed to the prime-base criterion).
struct StrategyRefused : std::runtime_error {
  explicit StrategyRefused(const std::string& what) : std::runtime_error(what) {}
};

// Rendering was asked for a trace the kernel does not accept.
struct RenderRefused : std::runtime_error {
  explicit RenderRefused(const std::string& what) : std::runtime_error(what) {}
};

// A serialized trace could not be decoded.
struct TraceParseError : std::runtime_error {
  explicit TraceParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace parityforge
