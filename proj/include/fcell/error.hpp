#pragma once

#include <stdexcept>
#include <string>

namespace fcell {

// Malformed input: unknown generators, bad file contents, inconsistent data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input is well formed but the requested quantity is not defined for it
// (e.g. a mu-bar residue with nonzero indeterminacy where an integer is needed).
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition or enforced postcondition of an operation did not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fcell
