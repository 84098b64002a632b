#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace circode {

/// Runs the command-line front end. One structured JSON document (or, under
/// --stream, line-delimited set records) goes to `out`; diagnostics go to
/// `err`. Exit status: 0 on success, 1 when the answer to the query is
/// negative (no code exists, verification failed, counts disagree), 2 on
/// invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circode
