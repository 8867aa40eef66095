// setexp: command-line front end for the set-valued expectation library.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "setexp/errors.hpp"
#include "setexp/io.hpp"
#include "setexp/risk_depth.hpp"
#include "setexp/set_expectation.hpp"

using namespace setexp;
using nlohmann::json;

namespace {

struct Common {
  std::string input;
  long grid = 0;
  long long seed = -1;
  double tol = 1e-9;
  std::string format = "json";
  std::string bbox;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Loaded {
  Instance inst;
  std::size_t grid;
  std::uint64_t seed;
};

Loaded load(const Common& c) {
  Loaded l{parse_instance(slurp(c.input)), 0, 0};
  l.grid = c.grid > 0 ? static_cast<std::size_t>(c.grid) : l.inst.grid_size;
  l.seed = c.seed >= 0 ? static_cast<std::uint64_t>(c.seed) : l.inst.seed;
  return l;
}

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw DomainError(std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

void emit(const ConvexSet2& s, const Common& c, const DirectionGrid& grid) {
  if (c.format == "json") {
    std::cout << render_json(s) << '\n';
  } else if (c.format == "csv") {
    if (s.empty()) throw EmptyResultError("support function of an empty result");
    std::cout << render_csv(s, grid.directions());
  } else {
    const Bbox box = c.bbox.empty() ? Bbox{} : parse_bbox(c.bbox);
    const SvgLayer layer{s, "#4a7bd0", "#1d3f7a", 0.45, "result"};
    std::cout << render_svg(std::span(&layer, 1), box);
  }
}

void add_common(CLI::App* sub, Common& c, bool needs_input = true) {
  if (needs_input) sub->add_option("instance", c.input, "instance JSON file, - for stdin")->required();
  sub->add_option("--grid", c.grid, "direction grid size (overrides the instance)");
  sub->add_option("--seed", c.seed, "random seed (overrides the instance)");
  sub->add_option("--tol", c.tol, "containment tolerance");
  sub->add_option("--format", c.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  sub->add_option("--bbox", c.bbox, "SVG viewport x0,y0,x1,y1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-valued expectations of random convex sets in the plane"};
  app.require_subcommand(1);
  Common c;
  std::string set_name, vector_name, scalar_name, shape_name, sample_name, mode = "consumption";
  double alpha = 0.5, threshold = 0.1, lambda_tol = 1e-3, pi = 2.0, pi_prime = 2.0;
  int resolution = 400;
  std::vector<double> a{1.0, -1.0};

  auto* expect = app.add_subcommand("expect", "selection expectation E X");
  add_common(expect, c);
  expect->add_option("--set", set_name, "random set name")->required();

  auto* sub = app.add_subcommand("sublinear", "minimal sublinear expectation");
  add_common(sub, c);
  sub->add_option("--set", set_name, "random set name")->required();

  auto* sup = app.add_subcommand("superlinear", "reduced maximal superlinear expectation");
  add_common(sup, c);
  sup->add_option("--set", set_name, "random set name")->required();

  auto* supmin = app.add_subcommand("superlinear-min", "minimal superlinear extension by selection search");
  add_common(supmin, c);
  supmin->add_option("--set", set_name, "random set name")->required();
  supmin->add_option("--resolution", resolution, "boundary samples per edge or ray");

  auto* zon = app.add_subcommand("zonoid", "zonoid-trimmed region");
  add_common(zon, c);
  zon->add_option("--vector", vector_name, "random vector name")->required();
  zon->add_option("--alpha", alpha, "trimming level in (0,1]");

  auto* lift = app.add_subcommand("lift", "lift expectation of a random scalar");
  add_common(lift, c);
  lift->add_option("--scalar", scalar_name, "random scalar name")->required();
  auto* slice_opt = lift->add_option("--alpha", alpha, "also report the slice at this level");

  auto* dep = app.add_subcommand("depth", "depth of a set with respect to a random set");
  add_common(dep, c);
  dep->add_option("--shape", shape_name, "shape name")->required();
  dep->add_option("--set", set_name, "random set name")->required();
  dep->add_option("--lambda-tol", lambda_tol, "bisection tolerance");

  auto* risk = app.add_subcommand("risk", "acceptance and risk set of a portfolio");
  add_common(risk, c);
  risk->add_option("--vector", vector_name, "terminal position")->required();
  risk->add_option("--mode", mode, "consumption, exchange or cone")
      ->check(CLI::IsMember({"consumption", "exchange", "cone"}));
  std::string cone_text;
  risk->add_option("--cone", cone_text, "exchange cone as JSON, for --mode cone");

  auto* ex = app.add_subcommand("example62", "two-point example with a wedge cone");
  add_common(ex, c, false);
  ex->add_option("--a", a, "second value of xi")->expected(2)->delimiter(',');
  ex->add_option("--pi", pi, "slope parameter > 1");
  ex->add_option("--pi-prime", pi_prime, "slope parameter > 1");
  ex->add_option("--alpha", alpha, "AVaR level in (0,1)");
  ex->add_option("--resolution", resolution, "boundary samples per ray");

  auto* flag = app.add_subcommand("flag-outliers", "leave-one-out depth outliers");
  add_common(flag, c);
  flag->add_option("--sample", sample_name, "sample name")->required();
  flag->add_option("--threshold", threshold, "depth threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ex->parsed()) {
      const auto r = example62({a[0], a[1]}, pi, pi_prime, alpha, resolution);
      if (c.format == "svg") {
        const Bbox box = c.bbox.empty() ? Bbox{-2.0, -3.0, 2.0, 1.0} : parse_bbox(c.bbox);
        const SvgLayer layers[] = {{r.reduced_max, "#d0d0d0", "#404040", 0.6, "reduced maximal extension"},
                                   {r.minimal, "#3060c0", "#102a60", 0.7, "minimal extension"}};
        std::cout << render_svg(layers, box);
      } else if (c.format == "csv") {
        const auto grid = DirectionGrid::uniform(c.grid > 0 ? c.grid : 360, polar_cone(r.k));
        std::cout << render_csv(r.reduced_max, grid.directions());
      } else {
        json out;
        out["x"] = {r.x.x, r.x.y};
        out["reduced_max"] = json::parse(render_json(r.reduced_max));
        out["minimal"] = json::parse(render_json(r.minimal));
        std::cout << out.dump() << '\n';
      }
      return 0;
    }

    const Loaded l = load(c);
    const Instance& in = l.inst;
    if (expect->parsed() || sub->parsed() || sup->parsed() || supmin->parsed()) {
      const RandomConvexSet& x = lookup(in.sets, set_name, "set");
      const auto spec = NonlinearSpec::make(in.family, x.cone(), l.grid);
      ConvexSet2 r;
      if (expect->parsed())
        r = selection_expectation(x);
      else if (sub->parsed())
        r = sublinear(x, spec);
      else if (sup->parsed())
        r = superlinear_reduced_max(x, spec);
      else
        r = superlinear_min_lower(x, spec, resolution);
      emit(r, c, spec.grid);
    } else if (zon->parsed()) {
      const RandomVector2& xi = lookup(in.vectors, vector_name, "vector");
      emit(zonoid_region(xi, alpha, l.grid), c, DirectionGrid::uniform(l.grid));
    } else if (lift->parsed()) {
      const RandomScalar& beta = lookup(in.scalars, scalar_name, "scalar");
      const ConvexSet2 z = lift_expectation(beta);
      if (c.format == "json" && slice_opt->count() > 0) {
        const auto [lo, hi] = lift_slice(z, alpha);
        json out;
        out["lift"] = json::parse(render_json(z));
        out["slice"] = {{"alpha", alpha}, {"interval", {lo, hi}}};
        std::cout << out.dump() << '\n';
      } else {
        emit(z, c, DirectionGrid::uniform(l.grid));
      }
    } else if (dep->parsed()) {
      DepthOptions opt;
      opt.family = in.family;
      opt.lambda_tol = lambda_tol;
      opt.containment_tol = std::max(c.tol, 1e-6);
      opt.grid_size = l.grid;
      opt.seed = l.seed;
      const double d = depth(lookup(in.shapes, shape_name, "shape"), lookup(in.sets, set_name, "set"), opt);
      std::cout << json{{"depth", d}}.dump() << '\n';
    } else if (risk->parsed()) {
      const RandomVector2& xi = lookup(in.vectors, vector_name, "vector");
      const Provenance p = mode == "consumption" ? Provenance::consumption_only
                           : mode == "exchange"  ? Provenance::full_exchange
                                                 : Provenance::cone_exchange;
      const Cone2 k = cone_text.empty() ? Cone2::lower_quadrant() : parse_cone(cone_text);
      const Portfolio pf = make_portfolio(xi, p, k);
      const auto spec = NonlinearSpec::make(in.family, pf.set.cone(), l.grid);
      const ConvexSet2 u = superlinear_reduced_max(pf.set, spec);
      if (c.format == "json") {
        json out;
        out["acceptable"] = !u.empty() && contains_point(u, {}, c.tol);
        out["superlinear"] = json::parse(render_json(u));
        out["risk"] = json::parse(render_json(u.reflected()));
        std::cout << out.dump() << '\n';
      } else {
        emit(u.reflected(), c, spec.grid);
      }
    } else if (flag->parsed()) {
      const SampleOfSets sample(lookup(in.samples, sample_name, "sample"));
      DepthOptions opt;
      opt.containment_tol = std::max(c.tol, 1e-6);
      opt.grid_size = l.grid;
      opt.seed = l.seed;
      const auto spec = NonlinearSpec::make(in.family, sample.cone(), l.grid);
      const auto idx = flag_outliers(sample, spec, threshold, opt);
      std::cout << json{{"outliers", idx}}.dump() << '\n';
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return 3;
  } catch (const EmptyResultError& e) {
    std::cerr << "empty result: " << e.what() << '\n';
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
