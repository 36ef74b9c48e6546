#pragma once

#include <spdlog/spdlog.h>

namespace gznt {

/// Library logger on stderr. Level from GZNT_LOG (trace, debug, info, warn, error, off);
/// default warn.
spdlog::logger& log();

}  // namespace gznt
