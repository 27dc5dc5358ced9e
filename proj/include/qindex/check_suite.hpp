#pragma once

#include <iosfwd>

namespace qindex {

// regression battery against the published closed forms and identities;
// prints one line per check, returns true when all of them hold
bool run_reference_checks(std::ostream& os);

} // namespace qindex
