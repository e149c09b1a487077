#pragma once

#include <stdexcept>
#include <string>

namespace sandlat {

/// Error codes for every failure mode the library can report.
enum class Err {
    SumMismatch,        // parts do not sum to n
    NegativePart,       // a part is < 0
    TooLong,            // non-zero part beyond position n
    InvalidN,           // n < 1
    NotAPartition,      // operation requires a weakly decreasing composition
    MismatchedN,        // operands live on different n
    PositionOutOfRange, // fired position outside the legal range
    CapacityExceeded,   // node/word bound hit during generation
    NodeNotInGraph,     // query composition is not a node of the graph
    NonIntegral,        // shot-vector entry not divisible by m
    NegativeShot,       // shot-vector entry < 0
    NegativeHeight,     // reconstruction produced a negative column
    TriangularCase,     // closed form undefined for triangular n
    ThetaOneDegenerate, // theta = 1 has no decomposition
    InvalidRule,        // rule parameters out of range for this n
    ParseError,         // malformed text/JSON input
};

const char* to_string(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, std::string message, int index = -1)
        : std::runtime_error(std::move(message)), code_(code), index_(index) {}

    Err code() const { return code_; }
    /// 1-based position for NonIntegral/NegativeShot/NegativeHeight, -1 otherwise.
    int index() const { return index_; }

private:
    Err code_;
    int index_;
};

[[noreturn]] inline void fail(Err code, std::string message, int index = -1) {
    throw Error(code, std::move(message), index);
}

} // namespace sandlat
