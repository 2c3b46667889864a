#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homcat {

// Runs one command line (without the program name). The report goes to `out`
// as JSON, a one-line summary and any error message to `err`.
// Returns 0 when every axiom passes, 1 when one fails, 2 on input or
// precondition errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homcat
