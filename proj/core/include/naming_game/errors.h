#pragma once

#include <stdexcept>
#include <string>

namespace naming_game {

// Invalid experiment or world configuration. Surfaced before any game runs.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A capability was called out of order (double speak, hear on an empty
// channel, pointing at an object outside the scene).
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Internal bookkeeping violated: unknown category, duplicate construction...
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace naming_game
