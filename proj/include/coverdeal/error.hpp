#pragma once

#include <stdexcept>
#include <string>

namespace coverdeal {

// Base of every error the library throws on bad input or exhausted resources.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed graph / spec / ideal input.
class ValidationError : public Error {
public:
  using Error::Error;
};

// A configurable cap (antichain size, generator count) was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

// Input is well formed but outside what a closed formula covers.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

} // namespace coverdeal
