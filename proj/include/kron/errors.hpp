#pragma once

#include <stdexcept>
#include <string>

namespace kron {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Chain/cochain operation applied at an unsupported degree.
struct DegreeError : Error {
    using Error::Error;
};

/// Complex construction violated an invariant (self-loop, dangling id,
/// non-closed face cycle, ...).
struct TopologyError : Error {
    using Error::Error;
};

/// A current source was attached to a closing edge instead of a tree edge.
struct SourcePlacementError : Error {
    using Error::Error;
};

/// Impedance evaluation requested at a frequency where the operator is
/// undefined (elastance or line/delay terms at omega = 0).
struct SingularFrequencyError : Error {
    using Error::Error;
};

/// Metric assembly failed (dimension mismatch, chord referencing a missing
/// mesh, mutual coupling on meshes without inductance).
struct AssemblyError : Error {
    using Error::Error;
};

/// Coupling parameter outside its mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

/// The mesh-block metric D' is numerically singular at a frequency.
struct SingularMetricError : Error {
    using Error::Error;
};

/// Every point of a frequency sweep failed, or the problem is empty.
struct SweepError : Error {
    using Error::Error;
};

/// A named observable is missing from a sweep solution.
struct ObservableError : Error {
    using Error::Error;
};

/// The nodal reference system is singular.
struct OracleSingularError : Error {
    using Error::Error;
};

/// Netlist text error, carries the 1-based line number.
struct ParseError : Error {
    ParseError(int line_number, const std::string& message)
        : Error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
    int line;
};

/// File I/O failure, carries the path in the message.
struct IoError : Error {
    using Error::Error;
};

}  // namespace kron
