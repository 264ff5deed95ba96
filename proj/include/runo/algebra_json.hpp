#pragma once

#include <filesystem>
#include <string>

#include "runo/algebra.hpp"

namespace runo {

/// Canonical interchange text:
///   {"name": str, "labels": [str], "join": [[int]], "meet": [[int]],
///    "imp": [[int]], "neg": [int], "zero": int, "one": int}
/// Tables are row-major, table[x][y] = op(x, y). One table row per line, so
/// write(read(text)) == text for any text this function produced.
std::string algebra_to_json(const FiniteAlgebra& a);

/// Parse and validate. Malformed JSON or missing keys raise ShapeError.
FiniteAlgebra algebra_from_json(std::string_view text);

/// Builtin name ("A1".."A5") or a path to an interchange file.
FiniteAlgebra load_algebra(const std::string& name_or_path);

void save_algebra(const FiniteAlgebra& a, const std::filesystem::path& path);

}  // namespace runo
