#ifndef TROPCOL_ERRORS_HPP
#define TROPCOL_ERRORS_HPP

#include <stdexcept>

namespace tropcol {

// Thrown when an instance would exceed a configured size guard; the message
// carries the offending counts.
struct resource_cap_exceeded : std::runtime_error {
	using std::runtime_error::runtime_error;
};

} // namespace tropcol

#endif
