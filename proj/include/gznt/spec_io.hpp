#pragma once

#include <string>

#include "gznt/n1.hpp"

namespace gznt {

/// JSON function spec -> validated N1Function. ParseError carries a JSON pointer.
N1Function parse_spec_text(const std::string& text, const std::string& origin = "<string>");
N1Function parse_spec_file(const std::string& path);

/// "1+2i", "-1.5i", "3", "inf"; nullopt for inf.
std::optional<cplx> parse_complex(const std::string& s);

}  // namespace gznt
