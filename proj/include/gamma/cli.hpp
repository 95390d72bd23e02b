#ifndef GAMMA_CLI_HPP
#define GAMMA_CLI_HPP

#include <iosfwd>

namespace cli {

// Exit codes: 0 success, 1 domain error, 2 usage error. Streams are injected
// so invocations are testable in-process and byte-for-byte reproducible.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cli

#endif
