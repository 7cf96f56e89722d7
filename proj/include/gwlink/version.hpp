#pragma once

namespace gwlink {

/// Version string stamped into every report's provenance block.
inline constexpr const char* artifact_version = "1.0.0";

/// Identifier of the constants release embedded in constants.hpp. The test
/// suite freezes expected values against this exact release; bumping it
/// requires regenerating every frozen oracle.
inline constexpr const char* constants_release = "CODATA-2018";

} // namespace gwlink
