#pragma once

#include <stdexcept>
#include <string>

namespace boxideal {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable tables, an index is out of
/// range, or a precondition on shapes is violated.
class StructuralError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// A configured resource guard (S-pairs, term count, degree samples) was
/// exceeded. Results are never silently truncated.
class BudgetExhausted : public Error {
public:
  using Error::Error;
};

/// An input is larger than a configured position gate.
class GateExceeded : public Error {
public:
  using Error::Error;
};

/// Generated or supplied data is not in the required general position.
class GenericityError : public Error {
public:
  using Error::Error;
};

/// An identity that must hold exactly was found to fail.
class VerificationError : public Error {
public:
  using Error::Error;
};

} // namespace boxideal
