#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "distcol/instance.hpp"

namespace distcol {

// Instance file:
//   {"d":3,"size_a":N,"size_b":M,"edges":[{"a":i,"b":j,"perm":[...]} | {"a":i,"b":j,"delay":k}, ...]}
// Colouring file:
//   {"colours":[c0,c1,...]}   (indexed by edge order in the instance file)
//
// Encoders always emit "perm"; "delay" is accepted on input only. Dummy flags
// are not serialized.

/// `colours_override` replaces d+1 from the file; "delay" edges are reduced
/// modulo the overridden count, "perm" edges must match it.
DistortionInstance decode_instance(std::string_view json_text,
                                   std::optional<int> colours_override = std::nullopt);
std::string encode_instance(const DistortionInstance& inst);

EdgeColouring decode_colouring(std::string_view json_text);
std::string encode_colouring(const EdgeColouring& f);

/// Instance plus partial colouring, used for theorem-sentinel dumps.
std::string encode_diagnostic(const DistortionInstance& inst, const EdgeColouring& f,
                              std::string_view message);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace distcol
