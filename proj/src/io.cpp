#include "argex/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "argex/errors.hpp"

namespace argex {
namespace {

std::string strip_all_space(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct PendingAttack {
  std::string from, to;
  std::size_t line;
};

Framework build(std::vector<std::string> args, const std::vector<PendingAttack>& pending) {
  std::vector<std::string> sorted = args;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Attack> attacks;
  attacks.reserve(pending.size());
  for (const auto& p : pending) {
    for (const auto* end : {&p.from, &p.to})
      if (!std::binary_search(sorted.begin(), sorted.end(), *end))
        throw UndeclaredArgument(p.line, *end);
    attacks.emplace_back(p.from, p.to);
  }
  return Framework(std::move(args), attacks);
}

void require_name(std::string_view name, std::size_t line) {
  if (!is_valid_name(name))
    throw ParseError(line, "invalid argument name '" + std::string(name) + "'");
}

Framework parse_apx(std::istream& in) {
  std::vector<std::string> args;
  std::vector<PendingAttack> pending;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_all_space(raw);
    if (line.empty() || line.front() == '#') continue;
    // Several statements may share a line; each ends with ").".
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto end = line.find(").", pos);
      if (end == std::string::npos) throw ParseError(line_no, "statement must end with ').'");
      const std::string stmt = line.substr(pos, end + 2 - pos);
      pos = end + 2;
      const bool is_arg = stmt.rfind("arg(", 0) == 0;
      const bool is_att = stmt.rfind("att(", 0) == 0;
      if (!is_arg && !is_att) throw ParseError(line_no, "expected arg(NAME). or att(NAME,NAME).");
      const std::string body = stmt.substr(4, stmt.size() - 6);
      if (is_arg) {
        require_name(body, line_no);
        args.push_back(body);
        continue;
      }
      const auto comma = body.find(',');
      if (comma == std::string::npos) throw ParseError(line_no, "att() needs two arguments");
      std::string from = body.substr(0, comma), to = body.substr(comma + 1);
      require_name(from, line_no);
      require_name(to, line_no);
      pending.push_back({std::move(from), std::move(to), line_no});
    }
  }
  return build(std::move(args), pending);
}

Framework parse_tgf(std::istream& in) {
  std::vector<std::string> args;
  std::vector<PendingAttack> pending;
  std::string raw;
  std::size_t line_no = 0;
  bool in_edges = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (!in_edges) {
      if (line == "#") {
        in_edges = true;
        continue;
      }
      require_name(line, line_no);
      args.emplace_back(line);
    } else {
      std::istringstream fields{std::string(line)};
      std::string from, to, extra;
      if (!(fields >> from >> to) || (fields >> extra))
        throw ParseError(line_no, "expected FROM TO");
      require_name(from, line_no);
      require_name(to, line_no);
      pending.push_back({std::move(from), std::move(to), line_no});
    }
  }
  return build(std::move(args), pending);
}

std::string quoted(const std::string& name) { return "\"" + name + "\""; }

}  // namespace

Framework parse_framework(std::istream& in, InputFormat format) {
  return format == InputFormat::apx ? parse_apx(in) : parse_tgf(in);
}

Framework parse_framework(std::string_view text, InputFormat format) {
  std::istringstream in{std::string(text)};
  return parse_framework(in, format);
}

std::string serialize_framework(const Framework& fw, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::apx:
      for (const auto& n : fw.names()) out << "arg(" << n << ").\n";
      for (const auto& [from, to] : fw.edges())
        out << "att(" << fw.name(from) << "," << fw.name(to) << ").\n";
      break;
    case OutputFormat::tgf:
      for (const auto& n : fw.names()) out << n << "\n";
      out << "#\n";
      for (const auto& [from, to] : fw.edges()) out << fw.name(from) << " " << fw.name(to) << "\n";
      break;
    case OutputFormat::dot:
      out << "digraph af {\n";
      for (const auto& n : fw.names()) out << "  " << quoted(n) << ";\n";
      for (const auto& [from, to] : fw.edges())
        out << "  " << quoted(fw.name(from)) << " -> " << quoted(fw.name(to)) << ";\n";
      out << "}\n";
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["arguments"] = fw.names();
      j["attacks"] = nlohmann::ordered_json::array();
      for (const auto& [from, to] : fw.edges()) j["attacks"].push_back({fw.name(from), fw.name(to)});
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::optional<InputFormat> input_format_from_name(std::string_view name) {
  if (name == "apx") return InputFormat::apx;
  if (name == "tgf") return InputFormat::tgf;
  return std::nullopt;
}

std::optional<OutputFormat> output_format_from_name(std::string_view name) {
  if (name == "apx") return OutputFormat::apx;
  if (name == "tgf") return OutputFormat::tgf;
  if (name == "dot") return OutputFormat::dot;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::optional<InputFormat> input_format_from_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  return input_format_from_name(path.substr(dot + 1));
}

}  // namespace argex
