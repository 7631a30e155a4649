#include "report.hpp"

#include <array>
#include <charconv>

namespace bellbox::cli {

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // canonical zero, drops the -0 sign
  std::array<char, 64> buffer;
  const auto [ptr, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                    std::chars_format::general, 10);
  if (ec != std::errc()) return "null";
  return std::string(buffer.data(), ptr);
}

std::string format_scalar(const nlohmann::json& value) {
  switch (value.type()) {
    case nlohmann::json::value_t::number_float:
      return format_double(value.get<double>());
    case nlohmann::json::value_t::number_integer:
      return std::to_string(value.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return std::to_string(value.get<std::uint64_t>());
    case nlohmann::json::value_t::boolean:
      return value.get<bool>() ? "true" : "false";
    case nlohmann::json::value_t::string:
      return value.get<std::string>();
    default:
      return "null";
  }
}

namespace {

void write_json(const nlohmann::json& node, std::string& out) {
  switch (node.type()) {
    case nlohmann::json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : node.items()) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(key).dump();
        out += ':';
        write_json(value, out);
      }
      out += '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : node) {
        if (!first) out += ',';
        first = false;
        write_json(value, out);
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::string:
      out += node.dump();
      break;
    case nlohmann::json::value_t::number_float:
    case nlohmann::json::value_t::number_integer:
    case nlohmann::json::value_t::number_unsigned:
    case nlohmann::json::value_t::boolean:
      out += format_scalar(node);
      break;
    default:
      out += "null";
      break;
  }
}

void flatten_into(const nlohmann::json& node, const std::string& path,
                  std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten_into(value, path.empty() ? key : path + "." + key, out);
    }
  } else if (node.is_array()) {
    std::size_t index = 0;
    for (const auto& value : node) {
      flatten_into(value, path + "." + std::to_string(index), out);
      ++index;
    }
  } else {
    out.emplace_back(path, format_scalar(node));
  }
}

}  // namespace

std::string to_json(const nlohmann::json& report) {
  std::string out;
  write_json(report, out);
  out += '\n';
  return out;
}

std::vector<std::pair<std::string, std::string>> flatten(
    const nlohmann::json& report) {
  std::vector<std::pair<std::string, std::string>> out;
  flatten_into(report, "", out);
  return out;
}

std::string to_csv(const nlohmann::json& report) {
  const auto rows = flatten(report);
  std::string header;
  std::string values;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) {
      header += ',';
      values += ',';
    }
    header += rows[i].first;
    values += rows[i].second;
  }
  return header + "\n" + values + "\n";
}

std::string to_table(const nlohmann::json& report) {
  const auto rows = flatten(report);
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  std::string out;
  for (const auto& [key, value] : rows) {
    out += key;
    out.append(width - key.size() + 2, ' ');
    out += value;
    out += '\n';
  }
  return out;
}

std::string render(const nlohmann::json& report, Format format) {
  switch (format) {
    case Format::Json: return to_json(report);
    case Format::Csv: return to_csv(report);
    case Format::Table: return to_table(report);
  }
  return {};
}

}  // namespace bellbox::cli
