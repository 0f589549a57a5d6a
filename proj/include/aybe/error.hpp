#pragma once

#include <stdexcept>
#include <string>

namespace aybe {

// Single exception type for every failure mode the library reports.
// The kind is part of the contract; tests match on it.
class Error : public std::runtime_error {
public:
    enum class Kind {
        ParseError,        // malformed rational / CLI literal
        DuplicateNode,     // repeated abscissa in interpolation
        ExhaustedSampling, // 1000 consecutive forbidden draws
        InvalidPair,       // (n,d) not coprime or d outside (0,n)
        UndefinedStep,     // epsilon applied to (1,1)
        CoincidingPoints,  // ev at y2 == y1
        SingularResidue,   // res on Sol not invertible (includes v == 0)
        DimensionDrop,     // Sol dimension != n^2 at the given parameters
        PoleHit,           // closed form evaluated on its pole locus
        DegreeCapExceeded, // interpolation target is not polynomial of capped degree
        SingularGauge,     // gauge matrix not invertible at a requested point
        SizeMismatch,      // incompatible tensor/matrix sizes or block shapes
        ExponentMismatch,  // exp-twist exponent forms disagree
    };

    Error(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace aybe
