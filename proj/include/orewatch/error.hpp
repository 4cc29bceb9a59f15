#pragma once

#include <stdexcept>
#include <string>

namespace orewatch {

// Single exception type for all contract violations; messages carry the
// specifics (band index, layer shapes, missing artifact, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

}  // namespace orewatch
