#include "shear_io.hpp"

#include "errors.hpp"

#include "json.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace zs {

namespace {

long line_at(const std::string& text, size_t offset) {
  long line = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// Byte offsets of the elements of the top-level "edges" array.
std::vector<size_t> edge_offsets(const std::string& text) {
  std::vector<size_t> out;
  int depth = 0, edges_depth = -1;
  bool in_string = false, expect = false;
  size_t key_start = 0;
  std::string last_key;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
        if (depth == 1) last_key = text.substr(key_start, i - key_start);
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (expect && c != ']') {
      out.push_back(i);
      expect = false;
    }
    if (c == '"') {
      in_string = true;
      key_start = i + 1;
    } else if (c == '{' || c == '[') {
      ++depth;
      if (c == '[' && depth == 2 && edges_depth == -1 && last_key == "edges") {
        edges_depth = depth;
        expect = true;
      }
    } else if (c == '}' || c == ']') {
      if (depth == edges_depth) edges_depth = -2;
      --depth;
    } else if (c == ',' && depth == edges_depth) {
      expect = true;
    }
  }
  return out;
}

ExtRational read_point(const nlohmann::json& v, const std::string& path, long line) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    throw Error(Errc::parse, "expected [num, den] with integer entries", path, line);
  long long num = v[0].get<long long>(), den = v[1].get<long long>();
  if (num == 0 && den == 0) throw Error(Errc::parse, "0/0 is not a point", path, line);
  if (den == 0 && num != 1 && num != -1)
    throw Error(Errc::parse, "infinity must be written [1, 0]", path, line);
  return ExtRational(BigInt(num), BigInt(den));
}

}  // namespace

ShearFunction parse_shear_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    size_t off = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(Errc::parse, std::string("malformed JSON: ") + e.what(), "", line_at(text, off));
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
    throw Error(Errc::parse, "expected an object with an \"edges\" array", "/edges", 1);
  const auto offsets = edge_offsets(text);
  ShearFunction s;
  const auto& edges = doc["edges"];
  for (size_t k = 0; k < edges.size(); ++k) {
    const std::string path = "/edges/" + std::to_string(k);
    const long line = k < offsets.size() ? line_at(text, offsets[k]) : 0;
    const auto& e = edges[k];
    if (!e.is_object()) throw Error(Errc::parse, "edge must be an object", path, line);
    for (const char* key : {"p", "q", "value"})
      if (!e.contains(key))
        throw Error(Errc::parse, std::string("missing \"") + key + "\"", path + "/" + key, line);
    ExtRational p = read_point(e["p"], path + "/p", line);
    ExtRational q = read_point(e["q"], path + "/q", line);
    if (!e["value"].is_number() || !std::isfinite(e["value"].get<double>()))
      throw Error(Errc::parse, "value must be a finite number", path + "/value", line);
    if (p == q || !farey_adjacent(p, q))
      throw Error(Errc::not_farey, "endpoints " + p.str() + " and " + q.str() + " are not Farey neighbours",
                  path, line);
    if (s.contains(p, q))
      throw Error(Errc::duplicate, "edge (" + p.str() + ", " + q.str() + ") listed twice", path, line);
    s.set(p, q, e["value"].get<double>());
  }
  return s;
}

}  // namespace zs
