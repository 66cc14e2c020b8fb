#ifndef WENODG_ERRORS_HPP
#define WENODG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wenodg {

/// Raised when a nonphysical state (negative density, pressure, ...) is
/// encountered. Runs abort instead of clipping.
class invalid_state_error : public std::runtime_error {
public:
  explicit invalid_state_error(const std::string& what, int cell = -1)
      : std::runtime_error(what), cell_id(cell) {}
  int cell_id; // -1 if not attributable to a cell
};

/// Bad user input: malformed config file, unknown keys, incompatible options.
class config_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace wenodg

#endif
