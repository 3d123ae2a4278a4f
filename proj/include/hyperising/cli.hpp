#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace hyperising::cli {

// Exit codes: 0 success, 1 input or runtime error, 2 refusal (|lambda| = 1,
// a cap exceeded, parameter outside its admissible range).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitRefusal = 2;

// Runs the command line; the JSON report goes to out, diagnostics to err.
// Nothing is written to out unless the command succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "re,im" or "re"; throws InvalidInput.
std::complex<double> parse_lambda(const std::string& text);

}  // namespace hyperising::cli
