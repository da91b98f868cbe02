#pragma once

#include <stdexcept>
#include <string>

namespace linshap {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A game parameter violates a family invariant. The message names the field.
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// The family has no representation as f(sum of weights); use the
// generalized engine instead.
class NotLinearError : public Error {
public:
    using Error::Error;
};

// A polynomial with nonzero coefficient sum was handed to the (1-x)
// division. During row reversion this means the row never absorbed a
// player of the requested weight.
class NotDivisibleError : public Error {
public:
    using Error::Error;
};

// The instance would exceed the configured coefficient-cell budget.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Brute-force enumeration was requested for an instance it cannot handle.
class TooLargeError : public Error {
public:
    using Error::Error;
};

}  // namespace linshap
