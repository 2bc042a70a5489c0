#pragma once

/*
 * Error taxonomy shared by the whole library.
 *
 *   InputError              malformed or out-of-domain user input (CLI exit 2)
 *   InternalInvariantError  two independent computations of the same fact
 *                           disagreed; always a bug, never a data problem
 *                           (CLI exit 3)
 */

#include <stdexcept>
#include <string>

namespace arcstrip {

struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct InternalInvariantError : std::logic_error {
  explicit InternalInvariantError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace arcstrip
