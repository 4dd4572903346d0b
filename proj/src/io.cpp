#include "antiflex/io.hpp"

#include <fstream>
#include <sstream>

namespace antiflex {

json field_to_json(const FieldSpec& field) {
  json out;
  if (field.is_prime_field()) {
    out["kind"] = "Fp";
    out["p"] = field.p;
  } else {
    out["kind"] = "Q";
  }
  return out;
}

FieldSpec field_from_json(const json& j, bool allow_small_char) {
  const json& kind = detail::member(j, "kind");
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") {
    const json& p = detail::member(j, "p");
    if (!p.is_number_unsigned()) throw Error(ErrorKind::Format, "field p must be a positive integer");
    const auto value = p.get<std::uint64_t>();
    if (value > UINT32_MAX) throw Error(ErrorKind::Format, "field p is too large");
    return FieldSpec::prime(static_cast<std::uint32_t>(value), allow_small_char);
  }
  throw Error(ErrorKind::Format, "unknown field kind " + kind.dump());
}

namespace {

// Objects are expanded one key per line; arrays and scalars stay inline.
void print_expanded(const json& j, int depth, std::string& out) {
  if (!j.is_object() || j.empty()) {
    out += j.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  out += "{\n";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    if (!first) out += ",\n";
    first = false;
    out += pad + json(key).dump() + ": ";
    print_expanded(value, depth + 1, out);
  }
  out += "\n" + std::string(static_cast<std::size_t>(2 * depth), ' ') + "}";
}

}  // namespace

std::string canonical_string(const json& j) {
  std::string out;
  print_expanded(j, 0, out);
  return out + "\n";
}

std::string compact_string(const json& j) { return j.dump(); }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Format, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Format, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Format, "cannot write " + path.string());
  out << text;
}

}  // namespace antiflex
