#ifndef PLONKA_ERRORS_HPP
#define PLONKA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plonka {

/** Base class of every exception thrown by the library.
 *
 * Contract violations (out-of-range elements, incomposable homs, exceeded
 * caps) are exceptions; expected negative outcomes of validation (an algebra
 * failing an axiom, a table failing the state conditions) are ordinary
 * return values carrying a witness.
 */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ElementOutOfRange : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct MalformedElement : Error {
  using Error::Error;
};
/// Composition or application of homomorphisms with mismatched endpoints.
struct HomMismatch : Error {
  using Error::Error;
};
/// An element-level map that fails the homomorphism laws.
struct NotAHomomorphism : Error {
  using Error::Error;
};
struct InvalidMeasure : Error {
  using Error::Error;
};
struct CapacityExceeded : Error {
  using Error::Error;
};
struct NotIBSL : Error {
  using Error::Error;
};
/// No measure/state exists because a component is the one-element algebra.
struct TrivialComponent : Error {
  using Error::Error;
};
struct BadChooser : Error {
  using Error::Error;
};
struct HypothesesUnmet : Error {
  using Error::Error;
};
struct OracleCapExceeded : Error {
  using Error::Error;
};
struct BadRange : Error {
  using Error::Error;
};

/** Trap for conditions that cannot occur for genuinely validated input.
 * Reaching one of these means a validation bug, not bad user data. */
struct InternalInconsistency : Error {
  using Error::Error;
};

/// Document errors carry a 1-based position and a category.
struct ParseError : Error {
  enum class Kind { Syntax, UnresolvedReference, DuplicateName };

  ParseError(Kind kind, int line, int column, const std::string& message)
      : Error(message), kind(kind), line(line), column(column) {}

  Kind kind;
  int line;
  int column;
};

}  // namespace plonka

#endif
