#pragma once

#include <stdexcept>
#include <string>

namespace mhg {

enum class ErrorCode {
    Malformed,            // structurally invalid input (parity, negative values, bad JSON shapes)
    NotAdmissible,        // operation requires admissible parameters of a suitable kind
    OutOfRange,           // a distance or argument outside its permitted range
    IncompleteGraph,      // operation requires a complete distance matrix
    NoCompletion,         // thrown by operations that cannot report failure in-band
    NotSymmetric,         // antipodal operation on a graph that is not antipodally symmetric
    TooLarge,             // instance exceeds a configured search bound
    EmptyBaseUnsupported, // amalgamation over the empty base where only a local relation exists
    Unsupported,          // requested operation has no meaning for this parameter kind
    Disconnected,         // operation requires a connected graph
    Io,                   // file or stream failure
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace mhg
