#ifndef DCA_RATIONAL_HPP
#define DCA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace dca {

/// Exact rational scalar. All algebraic identity checks run over this type;
/// floating point only enters through the numeric coset map and the
/// finite-difference validator.
using Rational = mpq_class;

/// Builds num/den in canonical form.
Rational rat(long num, long den = 1);

/// Parses "p", "p/q" or a plain decimal such as "-0.25" (decimals convert
/// exactly). Throws std::invalid_argument on malformed input.
Rational rat_parse(const std::string& text);

/// Canonical "p" or "p/q" rendering.
std::string rat_str(const Rational& q);

/// Exact conversion: every finite double is a binary fraction.
Rational rat_from_double(double x);

inline double rat_to_double(const Rational& q) { return q.get_d(); }

}  // namespace dca

#endif
