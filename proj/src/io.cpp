#include "setexp/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <set>
#include <sstream>

#include "setexp/errors.hpp"

namespace setexp {

using nlohmann::json;

namespace {

std::string num(double v, const char* fmt = "%.17g") {
  if (is_inf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "." + key, "missing");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "+inf")) return kInf;
  if (!j.is_number()) throw ParseError(path, "expected a number");
  return j.get<double>();
}

Vec2 point(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ParseError(path, "expected [x, y]");
  const double x = number(j[0], path + "[0]"), y = number(j[1], path + "[1]");
  if (!std::isfinite(x) || !std::isfinite(y)) throw ParseError(path, "coordinates must be finite");
  return {x, y};
}

std::vector<Vec2> points(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected a list of points");
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<double> numbers(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected a list of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

template <class F>
auto at_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
}

Cone2 cone_from(const json& j, const std::string& path) {
  if (j.is_string()) return cone_from(json{{"kind", j}}, path);
  const std::string kind = field(j, "kind", path).is_string() ? j["kind"].get<std::string>() : "";
  auto dirs = [&](std::size_t n) {
    const auto d = points(field(j, "dirs", path), path + ".dirs");
    if (d.size() != n) throw ParseError(path + ".dirs", "expected " + std::to_string(n) + " directions");
    return d;
  };
  return at_path(path, [&]() -> Cone2 {
    if (kind == "zero") return Cone2::zero();
    if (kind == "lower_quadrant") return Cone2::lower_quadrant();
    if (kind == "upper_quadrant") return Cone2::upper_quadrant();
    if (kind == "ray") return Cone2::ray(dirs(1)[0]);
    if (kind == "line") return Cone2::line(dirs(1)[0]);
    if (kind == "wedge") {
      const auto d = dirs(2);
      return Cone2::wedge(d[0], d[1]);
    }
    if (kind == "halfplane") {
      if (j.contains("normal")) return Cone2::halfplane(point(j["normal"], path + ".normal"));
      return Cone2::halfplane(rot_cw(dirs(1)[0]));
    }
    if (kind == "full") return Cone2::full();
    throw ParseError(path + ".kind", "unknown cone kind '" + kind + "'");
  });
}

ConvexSet2 set_from(const json& j, const std::string& path, const Cone2& default_cone = Cone2::zero()) {
  if (!j.is_object()) throw ParseError(path, "expected a set object");
  if (j.contains("empty") && j["empty"].is_boolean() && j["empty"].get<bool>()) return ConvexSet2::empty_set();
  if (j.contains("box")) {
    const auto b = points(j["box"], path + ".box");
    if (b.size() != 2) throw ParseError(path + ".box", "expected [[x0, y0], [x1, y1]]");
    return at_path(path, [&] { return ConvexSet2::box(b[0], b[1]); });
  }
  auto v = points(field(j, "vertices", path), path + ".vertices");
  if (v.empty()) throw ParseError(path + ".vertices", "needs at least one vertex");
  const Cone2 c = j.contains("cone") ? cone_from(j["cone"], path + ".cone") : default_cone;
  return at_path(path, [&] { return ConvexSet2::from_points(std::move(v), c); });
}

RepresentingFamily family_from(const json& j, const ScenarioSpace& space, const std::string& path) {
  const json& k = field(j, "kind", path);
  if (!k.is_string()) throw ParseError(path + ".kind", "expected a string");
  const std::string kind = k.get<std::string>();
  return at_path(path, [&]() -> RepresentingFamily {
    if (kind == "expectation") return RepresentingFamily::expectation();
    if (kind == "avar") return RepresentingFamily::avar(number(field(j, "alpha", path), path + ".alpha"));
    if (kind == "max_of_n") {
      const json& n = field(j, "n", path);
      if (!n.is_number_integer()) throw ParseError(path + ".n", "expected an integer");
      return RepresentingFamily::max_of_n(n.get<int>());
    }
    if (kind == "density_band") {
      RandomScalar lo(space, numbers(field(j, "lower", path), path + ".lower"));
      RandomScalar hi(space, numbers(field(j, "upper", path), path + ".upper"));
      return RepresentingFamily::density_band(std::move(lo), std::move(hi));
    }
    throw ParseError(path + ".kind", "unknown family kind '" + kind + "'");
  });
}

json cone_json(const Cone2& c) {
  json j;
  j["kind"] = to_string(c.kind());
  auto pt = [](Vec2 v) { return json::array({v.x + 0.0, v.y + 0.0}); };  // no negative zeros
  switch (c.kind()) {
    case Cone2::Kind::ray:
    case Cone2::Kind::line:
      j["dirs"] = json::array({pt(c.d0())});
      break;
    case Cone2::Kind::wedge:
      j["dirs"] = json::array({pt(c.d0()), pt(c.d1())});
      break;
    case Cone2::Kind::halfplane:
      j["dirs"] = json::array({pt(c.d0())});
      j["normal"] = pt(rot_cw(c.d0()));
      break;
    default:
      break;
  }
  return j;
}

json set_json(const ConvexSet2& s) {
  if (s.empty()) return json{{"empty", true}};
  json v = json::array();
  for (Vec2 p : s.vertices()) v.push_back(json::array({p.x + 0.0, p.y + 0.0}));
  return json{{"empty", false}, {"vertices", v}, {"cone", cone_json(s.recession())}};
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("$", "expected an object");
  static const std::set<std::string> known{"probs",  "family",  "sets",      "vectors", "scalars",
                                           "shapes", "samples", "grid_size", "seed"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known.count(it.key())) throw ParseError("$." + it.key(), "unknown key");

  Instance inst;
  inst.space = ScenarioSpace(numbers(field(doc, "probs", "$"), "$.probs"));
  if (doc.contains("family")) inst.family = family_from(doc["family"], inst.space, "$.family");
  if (doc.contains("grid_size")) {
    const json& g = doc["grid_size"];
    if (!g.is_number_integer() || g.get<long long>() < 3) throw ParseError("$.grid_size", "expected an integer >= 3");
    inst.grid_size = g.get<std::size_t>();
  }
  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (!s.is_number_integer() || s.get<long long>() < 0) throw ParseError("$.seed", "expected a non-negative integer");
    inst.seed = s.get<std::uint64_t>();
  }

  std::set<std::string> names;
  auto claim = [&](const std::string& name, const std::string& path) {
    if (!names.insert(name).second) throw ParseError(path, "duplicate name '" + name + "'");
  };
  auto section = [&](const char* key) -> const json* {
    if (!doc.contains(key)) return nullptr;
    if (!doc[key].is_object()) throw ParseError(std::string("$.") + key, "expected an object");
    return &doc[key];
  };

  if (const json* sec = section("vectors")) {
    for (auto it = sec->begin(); it != sec->end(); ++it) {
      const std::string path = "$.vectors." + it.key();
      claim(it.key(), path);
      inst.vectors.emplace(it.key(), at_path(path, [&] { return RandomVector2(inst.space, points(*it, path)); }));
    }
  }
  if (const json* sec = section("scalars")) {
    for (auto it = sec->begin(); it != sec->end(); ++it) {
      const std::string path = "$.scalars." + it.key();
      claim(it.key(), path);
      inst.scalars.emplace(it.key(), at_path(path, [&] { return RandomScalar(inst.space, numbers(*it, path)); }));
    }
  }
  if (const json* sec = section("shapes")) {
    for (auto it = sec->begin(); it != sec->end(); ++it) {
      const std::string path = "$.shapes." + it.key();
      claim(it.key(), path);
      ConvexSet2 s = set_from(*it, path);
      if (s.empty()) throw ParseError(path, "shape must not be empty");
      inst.shapes.emplace(it.key(), std::move(s));
    }
  }
  if (const json* sec = section("samples")) {
    for (auto it = sec->begin(); it != sec->end(); ++it) {
      const std::string path = "$.samples." + it.key();
      claim(it.key(), path);
      if (!it->is_array() || it->empty()) throw ParseError(path, "expected a non-empty list of sets");
      std::vector<ConvexSet2> obs;
      for (std::size_t i = 0; i < it->size(); ++i)
        obs.push_back(set_from((*it)[i], path + "[" + std::to_string(i) + "]"));
      inst.samples.emplace(it.key(), std::move(obs));
    }
  }

  auto vector_ref = [&](const json& j, const std::string& path) -> RandomVector2 {
    if (j.is_string()) {
      auto f = inst.vectors.find(j.get<std::string>());
      if (f == inst.vectors.end()) throw ParseError(path, "unknown vector '" + j.get<std::string>() + "'");
      return f->second;
    }
    return at_path(path, [&] { return RandomVector2(inst.space, points(j, path)); });
  };
  auto scalar_ref = [&](const json& j, const std::string& path) -> RandomScalar {
    if (j.is_string()) {
      auto f = inst.scalars.find(j.get<std::string>());
      if (f == inst.scalars.end()) throw ParseError(path, "unknown scalar '" + j.get<std::string>() + "'");
      return f->second;
    }
    return at_path(path, [&] { return RandomScalar(inst.space, numbers(j, path)); });
  };

  if (const json* sec = section("sets")) {
    for (auto it = sec->begin(); it != sec->end(); ++it) {
      const std::string path = "$.sets." + it.key();
      claim(it.key(), path);
      const json& d = *it;
      if (!d.is_object()) throw ParseError(path, "expected a set definition");
      if (d.contains("halfspace")) {
        const json& h = d["halfspace"];
        const auto eta = vector_ref(field(h, "normals", path + ".halfspace"), path + ".halfspace.normals");
        const auto beta = scalar_ref(field(h, "offsets", path + ".halfspace"), path + ".halfspace.offsets");
        inst.sets.emplace(it.key(), at_path(path, [&] { return RandomConvexSet::halfspace(eta, beta); }));
        continue;
      }
      const Cone2 c = cone_from(field(d, "cone", path), path + ".cone");
      if (d.contains("values")) {
        const json& vals = d["values"];
        if (!vals.is_array()) throw ParseError(path + ".values", "expected a list of sets");
        std::vector<ConvexSet2> v;
        for (std::size_t i = 0; i < vals.size(); ++i)
          v.push_back(set_from(vals[i], path + ".values[" + std::to_string(i) + "]", c));
        inst.sets.emplace(it.key(), at_path(path, [&] { return RandomConvexSet(inst.space, std::move(v), c); }));
      } else if (d.contains("vector")) {
        const auto xi = vector_ref(d["vector"], path + ".vector");
        const ConvexSet2 base = d.contains("base") ? set_from(d["base"], path + ".base", c) : ConvexSet2::point({}, c);
        inst.sets.emplace(it.key(), at_path(path, [&] { return RandomConvexSet::translate(xi, base, c); }));
      } else if (d.contains("scaled")) {
        const auto beta = scalar_ref(d["scaled"], path + ".scaled");
        const ConvexSet2 base = set_from(field(d, "base", path), path + ".base", c);
        inst.sets.emplace(it.key(), at_path(path, [&] { return RandomConvexSet::scaled_by(beta, base); }));
      } else {
        throw ParseError(path, "needs one of 'values', 'vector', 'scaled' or 'halfspace'");
      }
    }
  }
  return inst;
}

Cone2 parse_cone(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("$", std::string("invalid JSON: ") + e.what());
  }
  return cone_from(j, "$");
}

ConvexSet2 parse_set(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("$", std::string("invalid JSON: ") + e.what());
  }
  return set_from(j, "$");
}

std::string render_json(const ConvexSet2& s) { return set_json(s).dump(); }
std::string render_json(const Cone2& c) { return cone_json(c).dump(); }

std::string render_csv(const ConvexSet2& s, std::span<const Vec2> dirs) {
  std::ostringstream os;
  os << "ux,uy,support\n";
  for (Vec2 u : dirs) {
    os << num(u.x) << ',' << num(u.y) << ',';
    if (s.empty())
      os << "-inf";
    else
      os << num(support(s, u));
    os << '\n';
  }
  return os.str();
}

Bbox parse_bbox(std::string_view text) {
  std::vector<double> v;
  std::string cur;
  auto flush = [&] {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::exception&) {
      throw DomainError("bounding box must be x0,y0,x1,y1");
    }
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  if (v.size() != 4 || !(v[0] < v[2]) || !(v[1] < v[3]))
    throw DomainError("bounding box must be x0,y0,x1,y1 with x0<x1, y0<y1");
  return {v[0], v[1], v[2], v[3]};
}

std::string render_svg(std::span<const SvgLayer> layers, const Bbox& box) {
  const double w = box.x1 - box.x0, h = box.y1 - box.y0;
  const double px = 400.0;
  const double sx = px / std::max(w, h);
  auto X = [&](double x) { return num((x - box.x0) * sx, "%.4f"); };
  auto Y = [&](double y) { return num((box.y1 - y) * sx, "%.4f"); };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w * sx, "%.0f") << "\" height=\""
     << num(h * sx, "%.0f") << "\" viewBox=\"0 0 " << num(w * sx, "%.4f") << ' ' << num(h * sx, "%.4f") << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << num(w * sx, "%.4f") << "\" height=\"" << num(h * sx, "%.4f")
     << "\" fill=\"white\" stroke=\"none\"/>\n";
  if (box.x0 < 0 && box.x1 > 0)
    os << "<line x1=\"" << X(0) << "\" y1=\"0\" x2=\"" << X(0) << "\" y2=\"" << num(h * sx, "%.4f")
       << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
  if (box.y0 < 0 && box.y1 > 0)
    os << "<line x1=\"0\" y1=\"" << Y(0) << "\" x2=\"" << num(w * sx, "%.4f") << "\" y2=\"" << Y(0)
       << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
  const ConvexSet2 frame = ConvexSet2::box({box.x0, box.y0}, {box.x1, box.y1});
  for (const SvgLayer& l : layers) {
    if (!l.label.empty()) os << "<!-- " << l.label << " -->\n";
    if (l.set.empty()) continue;
    const ConvexSet2 c = intersect(l.set, frame);
    if (c.empty()) continue;
    const auto& v = c.vertices();
    if (v.size() == 1) {
      os << "<circle cx=\"" << X(v[0].x) << "\" cy=\"" << Y(v[0].y) << "\" r=\"3\" fill=\"" << l.stroke << "\"/>\n";
    } else if (v.size() == 2) {
      os << "<line x1=\"" << X(v[0].x) << "\" y1=\"" << Y(v[0].y) << "\" x2=\"" << X(v[1].x) << "\" y2=\"" << Y(v[1].y)
         << "\" stroke=\"" << l.stroke << "\" stroke-width=\"2\"/>\n";
    } else {
      os << "<polygon points=\"";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << X(v[i].x) << ',' << Y(v[i].y);
      os << "\" fill=\"" << l.fill << "\" fill-opacity=\"" << num(l.opacity, "%.3g") << "\" stroke=\"" << l.stroke
         << "\" stroke-width=\"1.5\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace setexp
