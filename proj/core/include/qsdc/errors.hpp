#pragma once

#include <stdexcept>
#include <string>

namespace qsdc {

// Rejected user input: unknown key, malformed value, or a parameter outside
// its documented range (e.g. a check fraction that would leave an empty set).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal contract: registry corruption, an attack hook touching a
// legitimate photon, mismatched check domains. Aborts the whole experiment.
class HarnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qsdc
