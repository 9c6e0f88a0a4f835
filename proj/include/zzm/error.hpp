#pragma once

#include <stdexcept>
#include <string>

namespace zzm {

enum class ErrorKind {
  Syntax,
  Domain,
  Precondition,
  PatchTooSmall,
  NotInLattice,
  Limit,
  Invariant,
  Io,
};

const char* to_string(ErrorKind kind);

/// Module error. `position` is set for syntax errors (0-based byte offset).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, long position = -1)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  ErrorKind kind() const { return kind_; }
  long position() const { return position_; }

 private:
  ErrorKind kind_;
  long position_;
};

}  // namespace zzm
