#pragma once

namespace cgt {

// bumped when any computed artifact (tables, reports, catalogs) can change
inline constexpr char kLibraryVersion[] = "1.0.0";

} // namespace cgt
