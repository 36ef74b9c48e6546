#include "gznt/errors.hpp"

#include <cstring>

namespace gznt {

void rethrow_with_context(const Error& e, const std::string& ctx) {
  const std::string msg = ctx + ": " + e.what();
#define GZNT_RETHROW(Name, Kind) \
  if (std::strcmp(e.name(), #Name) == 0) throw Name(msg);
  GZNT_ERROR_LIST(GZNT_RETHROW)
#undef GZNT_RETHROW
  throw Error(e.name(), e.kind(), msg);
}

}  // namespace gznt
