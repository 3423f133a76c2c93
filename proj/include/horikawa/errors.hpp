#pragma once

#include <stdexcept>
#include <string>

namespace horikawa {

// Violated input constraint. The message quotes the inequality that failed,
// e.g. "requires a > 2m+2".
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// An internal consistency check tripped; a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw domain_error(what);
}

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) throw internal_error("internal consistency failure: " + what);
}

}  // namespace horikawa
