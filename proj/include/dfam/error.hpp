#pragma once

#include <stdexcept>
#include <string>

namespace dfam {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A cyclic order was zero or negative.
class InvalidOrderError : public Error {
public:
    using Error::Error;
};

/// An element or matrix has the wrong number of coordinates / wrong dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A value lies outside the group (or outside the allowed range).
class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidSubgroupError : public Error {
public:
    using Error::Error;
};

/// Operands were built over different groups.
class GroupMismatchError : public Error {
public:
    using Error::Error;
};

/// A construction's algebraic precondition failed (Gram identity, symmetry, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Input functions are not complementary, or their constants are inconsistent.
class NotComplementaryError : public Error {
public:
    using Error::Error;
};

/// A search exceeded its candidate or time budget.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// Malformed literal or file contents.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace dfam
