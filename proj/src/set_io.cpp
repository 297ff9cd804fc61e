#include "banachproj/set_io.hpp"

#include <fstream>

namespace banachproj {

using nlohmann::json;

namespace {

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key))
    throw SetFormatError("set: missing field '" + path + key + "'");
  return j.at(key);
}

Point read_point(const json& j, const std::string& name) {
  if (!j.is_array() || j.empty())
    throw SetFormatError("set: field '" + name + "' must be a nonempty array of numbers");
  Point p = Point::zeros(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number())
      throw SetFormatError("set: field '" + name + "' has a non-numeric entry at index " +
                           std::to_string(i));
    p[i] = j[i].get<double>();
  }
  return p;
}

ConvexSet parse(const json& j, const std::string& path) {
  if (!j.is_object()) throw SetFormatError("set: '" + (path.empty() ? "<root>" : path) + "' must be an object");
  const json& kind_field = field(j, path, "kind");
  if (!kind_field.is_string()) throw SetFormatError("set: field '" + path + "kind' must be a string");
  const std::string kind = kind_field.get<std::string>();
  try {
    if (kind == "box") {
      return ConvexSet::box(read_point(field(j, path, "lower"), path + "lower"),
                            read_point(field(j, path, "upper"), path + "upper"));
    }
    if (kind == "ball") {
      const json& r = field(j, path, "radius");
      if (!r.is_number()) throw SetFormatError("set: field '" + path + "radius' must be a number");
      return ConvexSet::ball(read_point(field(j, path, "center"), path + "center"),
                             r.get<double>());
    }
    if (kind == "vpolytope") {
      const json& v = field(j, path, "vertices");
      if (!v.is_array() || v.empty())
        throw SetFormatError("set: field '" + path + "vertices' must be a nonempty array");
      std::vector<Point> verts;
      for (std::size_t k = 0; k < v.size(); ++k)
        verts.push_back(read_point(v[k], path + "vertices[" + std::to_string(k) + "]"));
      return ConvexSet::polytope(std::move(verts));
    }
    if (kind == "translate") {
      ConvexSet inner = parse(field(j, path, "inner"), path + "inner.");
      return ConvexSet::translated(std::move(inner),
                                   read_point(field(j, path, "shift"), path + "shift"));
    }
  } catch (const SetFormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SetFormatError("set: invalid '" + kind + "' at '" +
                         (path.empty() ? "<root>" : path) + "': " + e.what());
  }
  throw SetFormatError("set: field '" + path + "kind' has unknown value '" + kind + "'");
}

}  // namespace

ConvexSet set_from_json(const json& j) { return parse(j, ""); }

json to_json(const ConvexSet& set) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Box>)
          return {{"kind", "box"}, {"lower", s.lower.coords}, {"upper", s.upper.coords}};
        else if constexpr (std::is_same_v<T, Ball>)
          return {{"kind", "ball"}, {"center", s.center.coords}, {"radius", s.radius}};
        else if constexpr (std::is_same_v<T, VPolytope>) {
          json v = json::array();
          for (const auto& p : s.vertices) v.push_back(p.coords);
          return {{"kind", "vpolytope"}, {"vertices", v}};
        } else
          return {{"kind", "translate"}, {"inner", to_json(*s.inner)}, {"shift", s.shift.coords}};
      },
      set.variant());
}

ConvexSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SetFormatError("set: cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SetFormatError("set: '" + path + "' is not valid JSON: " + e.what());
  }
  return set_from_json(j);
}

}  // namespace banachproj
