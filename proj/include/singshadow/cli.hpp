#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singshadow {

// Exit codes: 0 success, 1 failed verification or a reported difference, 2 usage or input error.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace singshadow
