#pragma once

#include <stdexcept>
#include <string>

namespace chibound {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad user input: malformed codecs, out-of-range vertices, invalid sizes.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Graph larger than what an exact solver or the enumerator accepts.
class CapExceeded : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// An operation that is only defined on {3K1, K1+C4}-free graphs got a non-member.
class NotAMember : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// The matching-based colouring engine was handed a graph with alpha >= 3.
class ContainsThreeK1 : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Two independent computations disagreed. Always a bug, never a user error.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace chibound
