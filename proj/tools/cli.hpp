#pragma once

#include <ostream>

namespace zforce::cli {

/// Exit codes: 0 success, 1 predicate false or violations found, 2 usage or
/// parse error, 3 resource bound exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zforce::cli
