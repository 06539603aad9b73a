#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lzero {

enum ExitCode { ok = 0, usage_error = 2, rejected_input = 3, accuracy_failure = 4 };

/// "0.5+14.1i", "2", "-3i", "1-2.5e-3i".
std::complex<double> parse_complex(std::string_view text);

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. The cache path defaults to $LZERO_CACHE.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lzero
