#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radarbeat::cli {

/// Entry point of the `radarbeat` command-line tool. Returns the process exit
/// code; failures print {"error":{"kind":...,"message":...}} on `err`.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radarbeat::cli
