#pragma once

namespace crossnum {

// Bump whenever search semantics or serialized payloads change; cached
// results from other versions are ignored.
inline constexpr const char* kEngineVersion = "crossnum/0.1.0";

} // namespace crossnum
