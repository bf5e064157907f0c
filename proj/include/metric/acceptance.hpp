#pragma once

#include <iosfwd>

namespace metric::acceptance {

// Runs every acceptance criterion and prints one PASS/FAIL line each
// (criterion 10 is a soft scaling check and can only WARN). Returns the
// number of failed criteria.
int run_all(std::ostream& out);

}  // namespace metric::acceptance
