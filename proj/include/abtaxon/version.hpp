#pragma once

namespace abtaxon {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace abtaxon
