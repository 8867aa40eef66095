#include <doctest.h>

#include <string>

#include "setexp/errors.hpp"
#include "setexp/io.hpp"
#include "setexp/set_expectation.hpp"

using namespace setexp;

namespace {

std::string parse_error_path(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("instance defaults") {
  const auto inst = parse_instance(R"({"probs": [1]})");
  CHECK(inst.space.size() == 1);
  CHECK(inst.grid_size == 3600);
  CHECK(inst.seed == 0);
  CHECK(inst.family.kind() == RepresentingFamily::Kind::expectation);
  CHECK(inst.sets.empty());
}

TEST_CASE("instance validation") {
  try {
    parse_instance(R"({"probs": [0.5, 0.6]})");
    FAIL("accepted probabilities summing to 1.1");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("probs sum 1.1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_instance(R"({"probs": [1], "family": {"kind": "median"}})"), ParseError);
  CHECK(parse_error_path(R"({"probs": [1], "family": {"kind": "median"}})") == "$.family.kind");
  CHECK(parse_error_path(R"({"probs": [1], "colour": 3})") == "$.colour");
  CHECK(parse_error_path(R"({"probs": [1], "grid_size": 2})") == "$.grid_size");
  CHECK(parse_error_path(R"({"probs": [1], "seed": -1})") == "$.seed");
  CHECK(parse_error_path(R"({"probs": [0.5, 0.5], "vectors": {"xi": [[0, 0], [1, "a"]]}})") == "$.vectors.xi[1][1]");
  CHECK(parse_error_path(R"({"probs": [1], "sets": {"x": {"cone": "banana", "values": []}}})") == "$.sets.x.cone.kind");
  CHECK(parse_error_path(R"({"probs": [1], "sets": {"x": {"cone": "zero", "vector": "nope"}}})") == "$.sets.x.vector");
  CHECK(parse_error_path(R"({"probs": [1], "vectors": {"a": [[0, 0]]}, "scalars": {"a": [1]}})") == "$.scalars.a");
  CHECK(parse_error_path("{\"probs\": [1],") == "$");
  CHECK(
      parse_error_path(
          R"({"probs": [1], "sets": {"x": {"cone": "zero", "values": [{"vertices": [[0, 0]]}, {"vertices": [[1, 1]]}]}}})") ==
      "$.sets.x");
}

TEST_CASE("instance sections") {
  const auto inst = parse_instance(R"({
    "probs": [0.5, 0.5],
    "family": {"kind": "avar", "alpha": 0.7},
    "grid_size": 720,
    "seed": 9,
    "vectors": {"xi": [[0, 0], [1, -1]]},
    "scalars": {"beta": [0, "inf"], "b2": [1, 3]},
    "shapes": {"f": {"box": [[0, 0], [1, 1]]}},
    "samples": {"obs": [{"vertices": [[0, 0]]}, {"vertices": [[1, 0], [0, 1]]}]},
    "sets": {
      "x": {"cone": "lower_quadrant", "vector": "xi"},
      "k": {"cone": {"kind": "wedge", "dirs": [[-2, 1], [1, -2]]}, "vector": "xi"},
      "sq": {"cone": "zero", "scaled": "b2", "base": {"box": [[0, 0], [1, 1]]}},
      "h": {"halfspace": {"normals": [[1, 0], [0, 1]], "offsets": [1, -1]}},
      "v": {"cone": "zero", "values": [{"vertices": [[0, 0], [1, 0]]}, {"empty": false, "vertices": [[2, 2]]}]}
    }
  })");
  CHECK(inst.family.kind() == RepresentingFamily::Kind::avar);
  CHECK(inst.family.alpha() == 0.7);
  CHECK(inst.grid_size == 720);
  CHECK(inst.seed == 9);
  CHECK(is_inf(inst.scalars.at("beta")[1]));
  CHECK(approx_equal(inst.shapes.at("f"), ConvexSet2::box({0, 0}, {1, 1})));
  CHECK(inst.samples.at("obs").size() == 2);
  CHECK(approx_equal(inst.sets.at("x")[1], ConvexSet2::point({1, -1}, Cone2::lower_quadrant())));
  CHECK(approx_equal(inst.sets.at("k").cone(), example62_cone(2, 2)));
  CHECK(approx_equal(inst.sets.at("sq")[1], ConvexSet2::box({0, 0}, {3, 3})));
  CHECK(approx_equal(inst.sets.at("h").cone(), Cone2::lower_quadrant()));
  CHECK(approx_equal(inst.sets.at("v")[1], ConvexSet2::point({2, 2})));
}

TEST_CASE("cone encodings") {
  for (const auto& c : {Cone2::zero(), Cone2::ray({1, 2}), Cone2::line({-1, 1}), Cone2::wedge({1, 0}, {-1, 3}),
                        Cone2::halfplane({1, 1}), Cone2::full(), Cone2::lower_quadrant()})
    CHECK(approx_equal(parse_cone(render_json(c)), c, 1e-15));
  CHECK(approx_equal(parse_cone(R"("upper_quadrant")"), Cone2::upper_quadrant()));
  CHECK(approx_equal(parse_cone(R"({"kind": "halfplane", "normal": [0, 1]})"), Cone2::halfplane({0, 1})));
  CHECK_THROWS_AS(parse_cone(R"({"kind": "wedge", "dirs": [[1, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse_cone(R"({"kind": "ray", "dirs": [[0, 0]]})"), ParseError);
}

TEST_CASE("json rendering round trips") {
  const auto sq = ConvexSet2::box({0, 0}, {1, 1});
  const auto txt = render_json(sq);
  CHECK(count(txt, "],[") == 3);
  CHECK(approx_equal(parse_set(txt), sq, 0.0));
  CHECK(render_json(ConvexSet2::empty_set()) == R"({"empty":true})");
  CHECK(parse_set(R"({"empty": true})").empty());

  const auto odd = ConvexSet2::from_points({{0.1, 1.0 / 3}, {std::sqrt(2.0), -0.7}}, example62_cone(2, 3));
  CHECK(approx_equal(parse_set(render_json(odd)), odd, 0.0));
  CHECK(parse_set(render_json(ConvexSet2::whole_plane())).is_whole_plane());

  const auto inst = parse_instance(R"({"probs": [1], "sets": {"x": {"cone": "zero", "values": [)" + txt + "]}}}");
  CHECK(approx_equal(inst.sets.at("x")[0], sq, 0.0));
}

TEST_CASE("csv rendering") {
  const auto sq = ConvexSet2::box({0, 0}, {1, 1});
  const std::vector<Vec2> dirs{{1, 0}, {0, -1}};
  CHECK(render_csv(sq, dirs) == "ux,uy,support\n1,0,1\n0,-1,0\n");
  CHECK(render_csv(ConvexSet2::point({}, Cone2::lower_quadrant()), std::vector<Vec2>{{-1, 0}}) ==
        "ux,uy,support\n-1,0,inf\n");
}

TEST_CASE("svg rendering") {
  const auto r = example62({1, -1}, 2, 2, 0.7, 100);
  const std::vector<SvgLayer> layers{{r.reduced_max, "#9ecae1", "#3182bd", 0.4, "reduced maximal"},
                                     {r.minimal, "#fc9272", "#de2d26", 0.7, "minimal"}};
  const auto svg = render_svg(layers, parse_bbox("-2,-3,2,1"));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(count(svg, "<polygon") == 2);
  CHECK(svg.find("reduced maximal") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(render_svg(layers, parse_bbox("-2,-3,2,1")) == svg);

  const std::vector<SvgLayer> pts{{ConvexSet2::point({0.5, 0.5}), "#000", "#000", 1.0, ""},
                                  {ConvexSet2::from_points({{0, 0}, {1, 1}}), "none", "#000", 1.0, ""},
                                  {ConvexSet2::empty_set(), "none", "#000", 1.0, ""}};
  const auto s2 = render_svg(pts, Bbox{});
  CHECK(count(s2, "<circle") == 1);
  CHECK(count(s2, "<polygon") == 0);

  CHECK_THROWS_AS(parse_bbox("1,2,3"), DomainError);
  CHECK_THROWS_AS(parse_bbox("1,2,0,4"), DomainError);
  CHECK_THROWS_AS(parse_bbox("a,b,c,d"), DomainError);
}
