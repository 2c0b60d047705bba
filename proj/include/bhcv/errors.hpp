#pragma once

#include <stdexcept>
#include <string>

namespace bhcv {

// Malformed circuit document; message names the offending gate index.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Requested Fock-space dimension exceeds the desk-scale budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bhcv
