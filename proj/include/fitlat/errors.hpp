#ifndef FITLAT_ERRORS_HPP
#define FITLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fitlat {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lexical or syntactic problem in a program, hypothesis, or value literal.
/// Carries a 1-based source position.
struct ParseError : Error {
    int line = 0;
    int column = 0;

    ParseError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

/// Structural misuse: mixed bilattices, mismatched Herbrand bases,
/// values outside the configured carrier.
struct StructureError : Error {
    using Error::Error;
};

/// Bad configuration: unknown bilattice selector, negation or conflation
/// requested on a carrier that has none.
struct ConfigError : Error {
    using Error::Error;
};

/// Problem while grounding: quantifier over an empty universe.
struct GroundError : Error {
    using Error::Error;
};

/// Evaluation of a formula that is not closed.
struct EvalError : Error {
    using Error::Error;
};

/// A program outside the Datalog-with-negation fragment was handed to the
/// classical reference semantics.
struct FragmentError : Error {
    using Error::Error;
};

/// A fixpoint computation exceeded the configured iteration cap.
/// The last two stages are kept so callers can report the oscillation.
struct IterationLimitError : Error {
    std::string previous_stage;
    std::string last_stage;

    IterationLimitError(const std::string& what, std::string previous,
                        std::string last)
        : Error(what),
          previous_stage(std::move(previous)),
          last_stage(std::move(last)) {}
};

}  // namespace fitlat

#endif
