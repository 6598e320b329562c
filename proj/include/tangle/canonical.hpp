#pragma once

#include <cstdint>
#include <string>

#include "tangle/diagram.hpp"

namespace tangle {

/// Byte string naming a colored diagram up to arc relabeling, node
/// reordering, and bijections of color classes. Equal strings always mean
/// isomorphic diagrams; highly symmetric inputs past an internal enumeration
/// cap may get distinct strings for isomorphic diagrams (a memo miss, never
/// a wrong hit). Mirror images are not identified.
std::string canonical_form(const ColoredDiagram& d);

/// Short stable digest of canonical_form for logs (FNV-1a, 16 hex digits).
std::string canonical_digest(const ColoredDiagram& d);
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace tangle
