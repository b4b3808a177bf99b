#ifndef PLONKA_RATIONAL_HPP
#define PLONKA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "plonka/errors.hpp"

namespace plonka {

// Every quantity in the library is exact: arbitrary-precision integers for
// counting, arbitrary-precision rationals for weights and distances.  No
// floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" (q > 0 after normalisation).  Throws BadRange on
/// malformed input instead of the boost conversion exception.
Rat parse_rational(std::string_view text);

/// Canonical "p/q" or "p" rendering.
std::string to_string(const Rat& value);
std::string to_string(const Int& value);

Int binomial(const Int& n, const Int& k);

}  // namespace plonka

#endif
