#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricnp {

inline constexpr const char* kEngineVersion = "0.1.0";

// Full command-line surface (subcommands classify / betti / verify / poly),
// driven by the argument list without the program name.  Returns the process
// exit code: 0 success, 2 input error, 3 resource guard tripped, 4 verify
// found a classifier/homology disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricnp
