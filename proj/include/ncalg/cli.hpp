#ifndef NCALG_CLI_HPP
#define NCALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ncalg::cli {

/// Exit codes: 0 success, 1 domain error (JSON error document), 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ncalg::cli

#endif
