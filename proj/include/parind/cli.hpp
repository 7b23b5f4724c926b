#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parind::cli {

// Command line entry point; `args` excludes the program name. Returns the
// process exit code: 0 success, 1 failed verification, 2 malformed input,
// 3 semantic error, 4 resource guard. Nothing is written to `out` unless the
// whole report was produced.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace parind::cli
