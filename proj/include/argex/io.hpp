#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "argex/framework.hpp"

namespace argex {

enum class InputFormat { apx, tgf };
enum class OutputFormat { apx, tgf, dot, json };

// APX: `arg(NAME).` and `att(NAME,NAME).` statements, whitespace-insensitive,
// `#` comment lines. TGF: node lines, a `#` separator line, `FROM TO` edges.
// Throws ParseError or UndeclaredArgument.
Framework parse_framework(std::istream& in, InputFormat format);
Framework parse_framework(std::string_view text, InputFormat format);

// Lines are sorted by argument name. parse_framework inverts this for apx/tgf.
std::string serialize_framework(const Framework& fw, OutputFormat format);

std::optional<InputFormat> input_format_from_name(std::string_view name);
std::optional<OutputFormat> output_format_from_name(std::string_view name);
// Guesses from a file extension (.apx / .tgf).
std::optional<InputFormat> input_format_from_path(std::string_view path);

}  // namespace argex
