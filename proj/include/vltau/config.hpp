#pragma once

#include <cstdlib>
#include <string>

namespace vltau {

/// Directory holding the data files (appendix expansions, module cards,
/// quadruplet roster, fusion tables). Override with VLTAU_CONFIG_DIR.
inline std::string default_config_dir() {
    if (const char* env = std::getenv("VLTAU_CONFIG_DIR")) return env;
#ifdef VLTAU_SOURCE_CONFIG_DIR
    return VLTAU_SOURCE_CONFIG_DIR;
#else
    return "config";
#endif
}

}  // namespace vltau
