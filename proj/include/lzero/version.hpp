#pragma once

namespace lzero {

/// Embedded in every report and cache record; a change invalidates caches.
inline constexpr const char* kCodeVersion = "0.3.0";

}  // namespace lzero
