// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qmul {

/// Argument outside the mathematical domain of an operation (n = 0, value >= 2^m, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed circuit, gate, layout or plan (index out of range, overlapping registers, ...).
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A dense state vector would exceed the configured qubit cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qmul
