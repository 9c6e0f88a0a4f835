#include "zzm/rational.hpp"

#include <ostream>

#include "zzm/error.hpp"

namespace zzm {

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::PatchTooSmall: return "patch_too_small";
    case ErrorKind::NotInLattice: return "not_in_lattice";
    case ErrorKind::Limit: return "limit";
    case ErrorKind::Invariant: return "invariant";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace zzm
