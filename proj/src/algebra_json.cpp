#include "runo/algebra_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "runo/builtin.hpp"

namespace runo {

using nlohmann::json;

namespace {

void write_row(std::ostringstream& os, std::span<const Element> row) {
  os << '[';
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ", ";
    os << row[i];
  }
  os << ']';
}

void write_table(std::ostringstream& os, const char* key, std::span<const Element> flat,
                 std::size_t n, bool last = false) {
  os << "  \"" << key << "\": [";
  for (std::size_t x = 0; x < n; ++x) {
    os << (x ? ",\n    " : "\n    ");
    write_row(os, flat.subspan(x * n, n));
  }
  os << "\n  ]" << (last ? "\n" : ",\n");
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ShapeError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ShapeError(std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

std::string algebra_to_json(const FiniteAlgebra& a) {
  std::ostringstream os;
  const std::size_t n = a.size();
  os << "{\n";
  os << "  \"name\": " << json(a.name()).dump() << ",\n";
  os << "  \"labels\": [";
  for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << json(a.labels()[i]).dump();
  os << "],\n";
  write_table(os, "join", a.join_table(), n);
  write_table(os, "meet", a.meet_table(), n);
  write_table(os, "imp", a.imp_table(), n);
  os << "  \"neg\": ";
  write_row(os, a.neg_table());
  os << ",\n";
  os << "  \"zero\": " << a.zero() << ",\n";
  os << "  \"one\": " << a.one() << "\n";
  os << "}\n";
  return os.str();
}

FiniteAlgebra algebra_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ShapeError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ShapeError("algebra document must be a JSON object");
  RawTables raw;
  raw.name = j.contains("name") ? field<std::string>(j, "name") : std::string("unnamed");
  if (j.contains("labels")) raw.labels = field<std::vector<std::string>>(j, "labels");
  raw.join = field<std::vector<std::vector<int>>>(j, "join");
  raw.meet = field<std::vector<std::vector<int>>>(j, "meet");
  raw.imp = field<std::vector<std::vector<int>>>(j, "imp");
  raw.neg = field<std::vector<int>>(j, "neg");
  raw.zero = field<int>(j, "zero");
  raw.one = field<int>(j, "one");
  return validate(raw);
}

FiniteAlgebra load_algebra(const std::string& name_or_path) {
  try {
    return builtin(name_or_path);
  } catch (const UnknownName&) {
  }
  std::ifstream in(name_or_path);
  if (!in) throw std::runtime_error("cannot open '" + name_or_path + "' (not a builtin name either)");
  std::stringstream ss;
  ss << in.rdbuf();
  return algebra_from_json(ss.str());
}

void save_algebra(const FiniteAlgebra& a, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << algebra_to_json(a);
}

}  // namespace runo
