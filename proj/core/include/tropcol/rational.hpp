#ifndef TROPCOL_RATIONAL_HPP
#define TROPCOL_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropcol {

// Exact rational scalar. GMP keeps the canonical form we rely on everywhere:
// reduced fraction, positive denominator. There is no floating point and no
// tolerance anywhere in this library; every tie is decided exactly.
using Rat = mpq_class;
using Int = mpz_class;

struct parse_error : std::runtime_error {
	int line;    // 1-based, 0 if unknown
	int column;  // 1-based, 0 if unknown
	parse_error(const std::string& msg, int line_ = 0, int column_ = 0)
	    : std::runtime_error(msg), line(line_), column(column_) {}
};

// Parses "p", "p/q" or a plain decimal such as "-1.25" into an exact
// rational. Rejects empty input, zero denominators and trailing garbage.
Rat parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& q);

} // namespace tropcol

#endif
