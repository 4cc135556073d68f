#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end.
 *
 * Subcommands: steady, eigs, sweep, crossing, scan, boundary, simulate,
 * reproduce. Exit codes: 0 success, 1 usage/config error, 2 numerical
 * failure, 3 I/O error.
 */

namespace mayer {

inline constexpr const char* kVersion = "0.1.0";

int run_cli(int argc, const char* const* argv);

}  // namespace mayer
