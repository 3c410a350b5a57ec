#pragma once

namespace polarga {

// Entry point behind the polarsim binary; re-entrant for testing.
// Exit codes: 0 ok, 1 user error, 2 internal error.
int cli_main(int argc, const char* const* argv);

}  // namespace polarga
