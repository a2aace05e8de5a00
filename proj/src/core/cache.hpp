#pragma once

#include <string>

#include "complex.hpp"

namespace fillprobe {

// Builds the complex of the given radius, or loads it from
// <cache_dir>/<hash>-r<radius>.json when present. Empty cache_dir disables
// the cache. Unreadable cache entries are rebuilt and overwritten.
TwoComplex load_or_build_complex(const GroupPresentation& p, const RewritingSystem& rws, unsigned radius,
                                 BallLimits limits, const std::string& cache_dir);

// Hex FNV-1a hash of the presentation's canonical text.
std::string presentation_id(const GroupPresentation& p);

// Directory named by FILLPROBE_CACHE_DIR, or empty.
std::string cache_dir_from_env();

}  // namespace fillprobe
