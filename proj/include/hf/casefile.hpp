#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hf/errors.hpp"
#include "hf/hilbert.hpp"

namespace hf {

/// Parse failure with file/line/column context baked into the message.
struct parse_error : malformed_input {
    using malformed_input::malformed_input;
};

/// One parsed case: the filtration, an optional label, optional engine
/// overrides, and optional pinned expectations for regression checks.
struct CaseFile {
    FiltrationSpec spec;
    std::string label;
    std::optional<std::uint32_t> prime0;
    std::optional<std::uint32_t> prime1;
    std::optional<std::uint64_t> seed;
    std::map<std::string, long long> expect;  // e0.., reg, depth, dim, h0, B, r, postulation
};

CaseFile parse_case_text(std::string_view text, const std::string& origin);
CaseFile parse_case_file(const std::string& path);

/// Canonical emission; parse(emit(c)) reproduces the case.
std::string emit_case_text(const CaseFile& c);

}  // namespace hf
