#ifndef POLARDIM_ERROR_HPP
#define POLARDIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace polardim {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument or configuration (maps to CLI exit code 2).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error(what) {}
};

/// Unreadable or unparseable input data (maps to CLI exit code 3).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A time window selected no interactions at all.
class EmptyWindowError : public InputError {
 public:
  explicit EmptyWindowError(const std::string& what) : InputError(what) {}
};

/// Results that cannot be compared (e.g. different spectrum truncations).
class ComparabilityError : public Error {
 public:
  explicit ComparabilityError(const std::string& what) : Error(what) {}
};

/// Entropy requested for a spectrum where it is undefined (all-zero values).
class UndefinedEntropyError : public Error {
 public:
  explicit UndefinedEntropyError(const std::string& what) : Error(what) {}
};

/// Numerical failure with no fallback (maps to CLI exit code 4).
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(what) {}
};

}  // namespace polardim

#endif  // POLARDIM_ERROR_HPP
