#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lcsk {

/// Suffix array by induced sorting (SA-IS). Symbols must lie in [0, upper].
/// Linear time; no terminal sentinel is required.
std::vector<std::int32_t> build_suffix_array(std::span<const std::int32_t> text, std::int32_t upper);

/// Kasai et al. rank-array method. lcp[t] = LCP(sa[t-1], sa[t]); lcp[0] = 0.
std::vector<std::int32_t> build_lcp(std::span<const std::int32_t> text, std::span<const std::int32_t> sa);

} // namespace lcsk
