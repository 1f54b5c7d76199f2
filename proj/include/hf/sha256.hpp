#pragma once

#include <string>
#include <string_view>

namespace hf {

/// SHA-256 digest as lowercase hex; used for content-addressed case ids so
/// corpus file renames never invalidate the cache.
std::string sha256_hex(std::string_view data);

}  // namespace hf
