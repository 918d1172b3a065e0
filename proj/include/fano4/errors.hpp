#pragma once

#include <stdexcept>
#include <string>

namespace fano4 {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two classes from different lattices were combined, or a class touched a
/// basis symbol the requested operation has no data for.
struct lattice_error : error {
    using error::error;
};

/// An operation's precondition failed (range, parity, positivity, ...).
struct precondition_error : error {
    using error::error;
};

/// The requested construction is a known open case; deliberately not modeled.
struct unsupported_error : error {
    using error::error;
};

/// Tower config text rejected; carries the 1-based source position.
struct parse_error : error {
    parse_error(int line, int column, const std::string& message);
    int line;
    int column;
};

/// A tower step's precondition failed; carries the 1-based step index.
struct tower_error : precondition_error {
    tower_error(int step, const std::string& message);
    int step;
};

}  // namespace fano4
