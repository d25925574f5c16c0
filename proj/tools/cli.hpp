#pragma once

namespace swcol {

/// Parses argv and runs one subcommand. Exit codes: 0 success (and
/// `solve` on a colourable instance), 2 uncolourable, 3 budget exhausted,
/// 64 usage error, 65 data error.
int run_cli(int argc, const char* const* argv);

} // namespace swcol
