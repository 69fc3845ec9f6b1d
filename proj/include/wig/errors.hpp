#pragma once

#include <stdexcept>
#include <string>

namespace wig {

// Base for all library errors so callers can catch the whole family.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wiener index is undefined on a disconnected graph.
struct DisconnectedGraphError : Error {
    DisconnectedGraphError() : Error("disconnected graph: Wiener index undefined") {}
    explicit DisconnectedGraphError(const std::string& what) : Error(what) {}
};

// The 63-bit accumulator (or a distance sum) would wrap.
struct OverflowError : Error {
    OverflowError() : Error("overflow: value exceeds 63-bit accumulator") {}
    explicit OverflowError(const std::string& what) : Error(what) {}
};

struct NotConnectedError : Error {
    NotConnectedError() : Error("graph is not connected") {}
    explicit NotConnectedError(const std::string& what) : Error(what) {}
};

// Some block is neither a single edge nor a simple cycle.
struct NotCactusError : Error {
    explicit NotCactusError(const std::string& what) : Error(what) {}
};

struct BadWeightError : Error {
    explicit BadWeightError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& reason)
        : Error("parse error at line " + std::to_string(line_) + ": " + reason), line(line_) {}
};

struct GenerationFailedError : Error {
    explicit GenerationFailedError(const std::string& what) : Error(what) {}
};

} // namespace wig
