#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qdg {

  // Every failure surfaced by the library carries a short machine-readable
  // code ("label_mismatch", "stale_site", ...) next to the message.
  class Error : public std::runtime_error {
   public:
    Error(std::string code, std::string const& message, std::string location = {})
        : std::runtime_error(message),
          _code(std::move(code)),
          _location(std::move(location)) {}

    std::string const& code() const noexcept {
      return _code;
    }
    std::string const& location() const noexcept {
      return _location;
    }

   private:
    std::string _code;
    std::string _location;
  };

  // A single invariant violation found by one of the validate_* functions.
  struct Violation {
    std::string code;
    std::string message;
  };

}  // namespace qdg
