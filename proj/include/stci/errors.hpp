#ifndef STCI_ERRORS_HPP_
#define STCI_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace stci {

// Mixing values from different rings (variable sets, orders or fields).
class context_error : public std::invalid_argument {
public:
  explicit context_error(const std::string& what) : std::invalid_argument(what) {}
};

// Exponent arithmetic left the supported range.
class overflow_error : public std::overflow_error {
public:
  explicit overflow_error(const std::string& what) : std::overflow_error(what) {}
};

// Argument outside an operation's stated domain.
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct ComputationStats {
  std::size_t spairs = 0;
  std::uint32_t max_degree = 0;
  std::int64_t millis = 0;
};

// A resource cap was hit.  Carries progress so the caller can report it;
// never used to smuggle out a wrong answer.
class cap_error : public std::runtime_error {
public:
  cap_error(const std::string& what, ComputationStats stats)
      : std::runtime_error(what), stats(stats) {}
  ComputationStats stats;
};

}  // namespace stci

#endif
