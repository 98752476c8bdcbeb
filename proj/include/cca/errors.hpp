#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cca {

/// Raised when a construction or search would exceed its configured size cap.
/// Callers that treat the cap as a resource limit translate this into an
/// `unknown-cap` verdict; it is never swallowed silently.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : std::runtime_error(what + " exceeds cap " + std::to_string(cap)),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Two routes that must agree disagreed, or a stage produced a result that
/// contradicts an earlier verified stage.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cca
