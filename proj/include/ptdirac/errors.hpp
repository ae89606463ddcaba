#pragma once

#include <stdexcept>
#include <string>

namespace ptdirac {

// Invalid inputs: out-of-window energies, bad quantum numbers, malformed grids.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A computation that is mathematically defined but failed numerically
// (nonconvergent quadrature, catastrophic cancellation in a series).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ptdirac
