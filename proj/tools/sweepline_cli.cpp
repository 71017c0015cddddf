// Command line front end: generate, build, route, verify, bench, render.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sweepline/analysis.hpp"
#include "sweepline/bench.hpp"
#include "sweepline/error.hpp"
#include "sweepline/generator.hpp"
#include "sweepline/instance.hpp"
#include "sweepline/routing.hpp"
#include "sweepline/serialize.hpp"
#include "sweepline/spanner.hpp"
#include "sweepline/svg.hpp"
#include "sweepline/visibility.hpp"

namespace sl = sweepline;

namespace {

struct Common {
  std::optional<int> k;
  std::optional<double> gamma;
  std::optional<double> gamma_frac;
  std::string input = "-";
  std::string output = "-";
  std::uint64_t seed = 0;
  std::string format = "json";
  std::optional<double> perturb;
};

void add_common(CLI::App* app, Common& c, bool with_input = true) {
  app->add_option("--k", c.k, "Number of cones (>= 7)");
  auto* g = app->add_option("--gamma", c.gamma, "Sweep line tilt in radians");
  auto* f = app->add_option("--gamma-frac", c.gamma_frac, "Tilt as a fraction of the admissible limit");
  g->excludes(f);
  if (with_input) {
    app->add_option("--input,-i", c.input, "Instance JSON path, - for stdin");
    app->add_option("--perturb", c.perturb, "Jitter points by at most this amount before validating");
  }
  app->add_option("--output,-o", c.output, "Output path, - for stdout");
  app->add_option("--seed", c.seed, "Random seed");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_all(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::optional<sl::SweepConfig> flag_config(const Common& c, std::optional<int> k_fallback,
                                           std::optional<double> gamma_fallback) {
  const int k = c.k.value_or(k_fallback.value_or(7));
  double gamma = gamma_fallback.value_or(0.0);
  if (c.gamma) gamma = *c.gamma;
  if (c.gamma_frac) gamma = *c.gamma_frac * sl::SweepConfig::gamma_limit(k);
  return sl::validate_config(k, gamma);
}

struct Loaded {
  sl::Instance instance;
  sl::SweepConfig config;
};

Loaded load(const Common& c) {
  const std::string text = read_all(c.input);
  sl::Instance raw = sl::parse_instance_raw(text);
  const sl::SweepConfig config = *flag_config(c, raw.k, raw.gamma);
  sl::Instance inst = c.perturb ? sl::perturb(raw, *c.perturb, c.seed, config)
                                : sl::parse_instance(text, config);
  return {std::move(inst), config};
}

sl::ObstacleKind parse_kind(const std::string& s) {
  if (s == "none") return sl::ObstacleKind::None;
  if (s == "segments") return sl::ObstacleKind::Segments;
  return sl::ObstacleKind::Polygons;
}

int run_verify(const Common& c) {
  const Loaded in = load(c);
  const sl::Scene scene = in.instance.scene();
  const sl::SpannerGraph g = sl::build(scene, in.config);
  sl::StretchReport report;
  if (scene.obstacles().kind == sl::ObstacleKind::None) {
    report = sl::stretch_report(g, scene, in.config, sl::Baseline::Euclidean);
  } else {
    report = sl::stretch_report(g, sl::visibility_graph(scene), scene, in.config);
  }
  write_all(c.output, sl::report_to_json(report));
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sweeping line spanner graphs"};
  app.require_subcommand(1);

  Common gen_c, build_c, route_c, verify_c, bench_c, render_c;

  auto* gen = app.add_subcommand("generate", "Generate a random instance");
  add_common(gen, gen_c, false);
  std::size_t n = 50;
  std::string kind = "none";
  double density = 0.0;
  gen->add_option("--n", n, "Number of points");
  gen->add_option("--kind", kind)->check(CLI::IsMember({"none", "segments", "polygons"}));
  gen->add_option("--density", density, "Constraints per point, or corner fraction for polygons");

  auto* bld = app.add_subcommand("build", "Build the spanner of an instance");
  add_common(bld, build_c);

  auto* rt = app.add_subcommand("route", "Route between two vertices");
  add_common(rt, route_c);
  sl::VertexId source = 0, target = 1;
  rt->add_option("--source,-s", source)->required();
  rt->add_option("--target,-t", target)->required();

  auto* ver = app.add_subcommand("verify", "Measure stretch against the proven bound");
  add_common(ver, verify_c);

  auto* bn = app.add_subcommand("bench", "Sweep a (k, gamma, n, seed) grid and emit CSV");
  add_common(bn, bench_c, false);
  sl::BenchGrid grid;
  std::size_t seed_count = 5;
  std::string bench_kind = "none";
  bn->add_option("--ks", grid.ks, "Cone counts");
  bn->add_option("--gamma-fracs", grid.gamma_fractions, "Tilt fractions of the limit");
  bn->add_option("--ns", grid.ns, "Point counts");
  bn->add_option("--seeds", seed_count, "Seeds per cell, starting at --seed");
  bn->add_option("--kind", bench_kind)->check(CLI::IsMember({"none", "segments", "polygons"}));
  bn->add_option("--density", grid.density);
  bn->add_option("--jobs,-j", grid.jobs, "Worker threads");

  auto* rd = app.add_subcommand("render", "Render an instance and its spanner as SVG");
  add_common(rd, render_c);
  std::optional<sl::VertexId> r_source, r_target, overlay;
  rd->add_option("--source,-s", r_source);
  rd->add_option("--target,-t", r_target);
  rd->add_option("--overlay", overlay, "Draw cones and sweep lines for this vertex");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      sl::GeneratorOptions opt;
      opt.n = n;
      opt.seed = gen_c.seed;
      opt.kind = parse_kind(kind);
      opt.density = density;
      opt.config = flag_config(gen_c, std::nullopt, std::nullopt);
      sl::Instance inst = sl::generate_instance(opt);
      inst.k = opt.config->k();
      inst.gamma = opt.config->gamma();
      write_all(gen_c.output, sl::serialize_instance(inst));
      return 0;
    }
    if (*bld) {
      const Loaded in = load(build_c);
      const sl::Scene scene = in.instance.scene();
      const sl::SpannerGraph g = sl::build(scene, in.config);
      if (build_c.format == "csv") {
        write_all(build_c.output, sl::graph_to_csv(g));
      } else if (build_c.format == "svg") {
        write_all(build_c.output, sl::render_svg(scene, g));
      } else {
        write_all(build_c.output, sl::graph_to_json(g));
      }
      return 0;
    }
    if (*rt) {
      const Loaded in = load(route_c);
      const sl::Scene scene = in.instance.scene();
      const sl::SpannerGraph g = sl::build(scene, in.config);
      const sl::RoutePath path = sl::sweeping_route(g, in.instance.points, in.config, source, target);
      if (route_c.format == "svg") {
        sl::SvgOptions opt;
        opt.route = path;
        write_all(route_c.output, sl::render_svg(scene, g, opt));
      } else {
        write_all(route_c.output, sl::route_to_json(path));
      }
      return 0;
    }
    if (*ver) return run_verify(verify_c);
    if (*bn) {
      grid.kind = parse_kind(bench_kind);
      grid.seeds.clear();
      for (std::size_t i = 0; i < seed_count; ++i) grid.seeds.push_back(bench_c.seed + i);
      if (bench_c.k) grid.ks = {*bench_c.k};
      for (int k : grid.ks) sl::validate_config(k, 0.0);
      write_all(bench_c.output, sl::bench_csv(sl::run_bench(grid)));
      return 0;
    }
    if (*rd) {
      const Loaded in = load(render_c);
      const sl::Scene scene = in.instance.scene();
      const sl::SpannerGraph g = sl::build(scene, in.config);
      sl::SvgOptions opt;
      if (r_source && r_target) {
        opt.route = sl::sweeping_route(g, in.instance.points, in.config, *r_source, *r_target);
      }
      if (overlay) {
        scene.check_index(*overlay);
        opt.overlay_vertex = overlay;
        opt.overlay_config = in.config;
      }
      write_all(render_c.output, sl::render_svg(scene, g, opt));
      return 0;
    }
  } catch (const sl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
