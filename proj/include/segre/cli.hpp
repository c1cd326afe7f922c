#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segre::cli {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;        // success
inline constexpr int kExitNegative = 1;  // Unknown verdict / failed check / empty result
inline constexpr int kExitInvalid = 2;   // invalid input
inline constexpr int kExitOverflow = 3;  // exact arithmetic overflow

// Maps a thrown error to the exit-code contract above.
int exit_code_for(const std::exception& e);

// Runs one invocation. `in` backs the batch command when no --in file is
// given; `out` and `err` receive the program streams. Output is
// byte-stable for fixed arguments.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace segre::cli
