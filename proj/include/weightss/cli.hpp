#ifndef WEIGHTSS_CLI_HPP
#define WEIGHTSS_CLI_HPP

namespace weightss::cli {

// exit codes: 0 ok, 1 domain failure, 2 usage or schema error
int run(int argc, const char* const* argv);

}  // namespace weightss::cli

#endif
