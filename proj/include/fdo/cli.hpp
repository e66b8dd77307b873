#ifndef FDO_CLI_HPP
#define FDO_CLI_HPP

#include <ostream>

namespace fdo {

inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 1;
inline constexpr int exit_io_error = 2;

/// Entry point of the fdo_bench command line. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fdo

#endif  // FDO_CLI_HPP
