#pragma once

#include <stdexcept>

namespace farch {

/// Base class of all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates an operation's precondition (n < 2, prefix length out
/// of range, malformed permutation, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Two sequences cannot be combined: different alphabet size or period.
class IncompatiblePair : public Error {
public:
    using Error::Error;
};

/// A metric was requested for a pair on which it does not exist, e.g.
/// MCTTR of a pair without maximal rendezvous diversity.
class MetricUndefined : public Error {
public:
    using Error::Error;
};

/// Malformed input file (sequence files, sweep configs).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure: unreadable input, unwritable output.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace farch
