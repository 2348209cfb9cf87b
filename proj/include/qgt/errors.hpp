#pragma once

#include <stdexcept>

namespace qgt {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parameters violate a builder precondition (admissibility, cap, n not a power of 2).
class ConfigError : public Error {
   public:
    using Error::Error;
};

/// An exhaustive oracle refused an instance larger than its enumeration budget.
class BudgetError : public Error {
   public:
    using Error::Error;
};

/// Feedback could not be explained by any hidden multiset the code can decode.
class DecodeError : public Error {
   public:
    using Error::Error;
};

/// Malformed serialized input. Messages name the offending line.
class FormatError : public Error {
   public:
    using Error::Error;
};

}  // namespace qgt
