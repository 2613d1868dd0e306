#pragma once

namespace dimlaw {

/// Entry point of the `dimlaw` command-line tool. Exit codes: 0 success,
/// 1 input/usage error, 2 dimensionally unattainable target, 3 a
/// check/verification failed.
int run_cli(int argc, const char* const* argv);

}  // namespace dimlaw
