#pragma once

#include <stdexcept>
#include <string>

namespace qkz {

/// Operands built over different variable contexts.
class ContextError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An operation whose precondition does not hold for its input.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity that should hold exactly did not. These are never
/// swallowed: they signal a convention or construction bug.
class ConsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Text or JSON input that does not parse.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace qkz
