#ifndef HPD_CLI_HPP
#define HPD_CLI_HPP

namespace hpd {

// Parses argv and runs the mapped library operation, writing a JSON report
// (--output PATH, "-" for standard output). Exit status: 0 success; 1 for an
// unknown or missing subcommand (usage printed) or a failed verify suite;
// 2 for precondition violations and malformed input files; 3 when an exact
// evaluation would exceed its work cap.
int run_cli(int argc, const char* const* argv);

}  // namespace hpd

#endif
