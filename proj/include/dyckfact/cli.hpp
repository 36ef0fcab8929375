#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyckfact {

/// Runs one CLI invocation. Results go to out, diagnostics to err.
/// Exit code 0 on success, 1 on usage errors, 2 on domain errors.
/// Identical invocations produce byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes the bundled worked-example fixtures into a directory.
void write_example_fixtures(const std::string& dir);

} // namespace dyckfact
