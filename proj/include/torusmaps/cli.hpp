#pragma once

namespace torusmaps {

// Entry point of the command-line tool.  Returns 0 on success, 1 when a
// checked property fails or a certificate is refused, 2 on usage or input
// errors.
int run_cli(int argc, char** argv);

}  // namespace torusmaps
