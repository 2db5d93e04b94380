#pragma once

namespace chigen {

// Bumped whenever a change could alter any computed coefficient; cached
// intermediates from other versions are ignored.
inline constexpr const char* kEngineVersion = "1.0.0";

}  // namespace chigen
