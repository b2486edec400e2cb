#ifndef LRLAT_LOG_HPP
#define LRLAT_LOG_HPP

#include <string>

namespace lrlat::log {

enum class Level { error = 0, info = 1, debug = 2 };

// Verbosity comes from the LRLAT_LOG environment variable: error|info|debug.
Level level();

void error(const std::string& msg);
void info(const std::string& msg);
void debug(const std::string& msg);

} // namespace lrlat::log

#endif
