#pragma once

#include <stdexcept>
#include <string>

namespace shimfol {

/// Malformed or out-of-contract input (bad prime, reducible modulus, invalid signature, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or search would exceed its configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace shimfol
