#pragma once

#include <stdexcept>
#include <string>

namespace kst {

/// A graph or parameter would exceed the fixed 64-vertex capacity.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// An operation was called with arguments that violate its precondition
/// (adding an existing edge, contracting a non-edge, ...).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside the range an operation supports.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Malformed textual input (graph6, pattern specs).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace kst
