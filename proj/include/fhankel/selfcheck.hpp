#pragma once

#include <iosfwd>

namespace fhankel {

// Runs the library's invariant suite at the given precision, printing one
// line per check. Returns true iff every check passed.
bool run_selfcheck(std::ostream& os, long precision_bits = 256);

}  // namespace fhankel
