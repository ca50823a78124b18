#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "prelam/completion.hpp"
#include "prelam/conditions.hpp"
#include "prelam/generate.hpp"
#include "prelam/io.hpp"
#include "prelam/plane.hpp"
#include "prelam/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitMalformed = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw prelam::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw prelam::Error("cannot write " + path);
  out << content;
}

// Loads and validates an instance document; prints errors and exits with
// code 2 on failure.
prelam::LamInstance load_instance(const std::string& path, const std::string& mode_override) {
  prelam::ParseResult parsed = prelam::parse_instance(read_file(path));
  if (!parsed.ok()) {
    for (const auto& e : parsed.errors) {
      std::cerr << "error [" << e.code << "]";
      if (e.chord_index >= 0) std::cerr << " chord " << e.chord_index;
      std::cerr << ": " << e.message << "\n";
    }
    std::exit(kExitMalformed);
  }
  prelam::LamInstance instance = *parsed.instance;
  if (mode_override == "strict") instance.mode = prelam::Mode::strict;
  if (mode_override == "frontier") instance.mode = prelam::Mode::frontier;
  return instance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prelam: finite prelamination pairs of the circle, their completability, and the combinatorics of the completed bifoliated plane"};
  app.require_subcommand(1);

  std::string in_path, out_path, mode_override, map_path;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "validate an instance and decide the completability conditions");
  check->add_option("file", in_path)->required();
  check->add_option("--mode", mode_override)->check(CLI::IsMember({"strict", "frontier"}));
  check->add_flag("--json", as_json, "emit the machine-readable report only");

  auto* complete = app.add_subcommand("complete", "compute the completion of a completable instance");
  complete->add_option("file", in_path)->required();
  complete->add_option("-o,--output", out_path)->required();
  complete->add_option("--mode", mode_override)->check(CLI::IsMember({"strict", "frontier"}));

  auto* plane = app.add_subcommand("plane", "crossing space and singular points of the instance");
  bool plane_report = false;
  plane->add_option("file", in_path)->required();
  plane->add_flag("--report", plane_report, "print the full class listing");
  plane->add_flag("--json", as_json);

  auto* realization = app.add_subcommand("realization", "check the induced-prelamination conditions");
  realization->add_option("file", in_path)->required();
  realization->add_flag("--json", as_json);

  auto* render = app.add_subcommand("render", "draw the instance as SVG");
  std::string linkage_region, geometry = "euclidean-chords";
  std::vector<std::string> highlight;
  bool show_crossings = false, show_singular = false;
  render->add_option("file", in_path)->required();
  render->add_option("-o,--output", out_path)->required();
  render->add_option("--linkage", linkage_region, "overlay the linkage graph of a region (e.g. p0)");
  render->add_option("--geometry", geometry)
      ->check(CLI::IsMember({"euclidean-chords", "poincare-geodesics"}));
  render->add_option("--highlight", highlight, "region ids to shade");
  render->add_flag("--crossings", show_crossings);
  render->add_flag("--singular", show_singular);

  auto* gen = app.add_subcommand("gen", "generate an instance from a named family");
  std::string family;
  int gm = 3, gn = 3, gk = 3, gwidth = 2, gradius = 1, gmax = 12;
  std::uint64_t gseed = 1;
  std::string gmu = "7/5", gnu = "13/8";
  gen->add_option("family", family)->required()->check(
      CLI::IsMember({"grid", "prong", "path", "strip", "lattice", "random"}));
  gen->add_option("-o,--output", out_path)->required();
  gen->add_option("--m", gm);
  gen->add_option("--n", gn);
  gen->add_option("--k", gk);
  gen->add_option("--width", gwidth);
  gen->add_option("--radius", gradius);
  gen->add_option("--mu", gmu);
  gen->add_option("--nu", gnu);
  gen->add_option("--seed", gseed);
  gen->add_option("--max-chords", gmax);

  auto* transport_cmd = app.add_subcommand("transport", "relabel endpoints through a monotone table");
  bool report_invariance = false;
  transport_cmd->add_option("file", in_path)->required();
  transport_cmd->add_option("--map", map_path)->required();
  transport_cmd->add_option("-o,--output", out_path);
  transport_cmd->add_flag("--invariance", report_invariance,
                          "report whether the instance is setwise invariant");

  auto* extend = app.add_subcommand("extend", "insert an alternative nested extension in an ideal segment");
  std::string segment_id, pivot_text;
  int ek = 1;
  extend->add_option("file", in_path)->required();
  extend->add_option("--segment", segment_id, "segment id <region>/<index>, e.g. p0/1")->required();
  extend->add_option("--pivot", pivot_text)->required();
  extend->add_option("-k", ek);
  extend->add_option("-o,--output", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      prelam::LamInstance instance = load_instance(in_path, mode_override);
      prelam::ConditionReport report = prelam::check_completable(instance);
      if (as_json) {
        std::cout << prelam::report_json(report, instance);
      } else {
        std::cout << prelam::report_text(report, instance);
        std::cout << "machine-readable:\n" << prelam::report_json(report, instance);
      }
      return report.overall ? kExitOk : kExitViolations;
    }

    if (complete->parsed()) {
      prelam::LamInstance instance = load_instance(in_path, mode_override);
      prelam::ConditionReport pre = prelam::check_completable(instance);
      if (!pre.overall) {
        std::cout << prelam::report_text(pre, instance);
        return kExitViolations;
      }
      prelam::CompletionResult result = prelam::complete(instance);
      std::cout << prelam::completion_log_text(result);
      write_file(out_path, prelam::serialize_instance(result.instance));
      return kExitOk;
    }

    if (plane->parsed()) {
      prelam::LamInstance instance = load_instance(in_path, "");
      prelam::CrossingSpace space = prelam::crossing_space(instance);
      if (as_json) {
        std::cout << prelam::plane_report_json(instance, space);
      } else {
        std::cout << prelam::plane_report_text(instance, space);
        if (plane_report) std::cout << prelam::plane_report_json(instance, space);
      }
      return kExitOk;
    }

    if (realization->parsed()) {
      prelam::LamInstance instance = load_instance(in_path, "");
      prelam::RealizationReport report = prelam::check_realization(instance);
      if (as_json) {
        std::cout << prelam::report_json(report);
      } else {
        std::cout << prelam::report_text(report);
      }
      return report.pass ? kExitOk : kExitViolations;
    }

    if (render->parsed()) {
      prelam::LamInstance instance = load_instance(in_path, "");
      prelam::RenderSpec spec;
      spec.poincare = geometry == "poincare-geodesics";
      spec.linkage_region = linkage_region;
      spec.highlight_regions = highlight;
      spec.show_crossings = show_crossings;
      spec.show_singular = show_singular;
      write_file(out_path, prelam::render_svg(instance, spec));
      return kExitOk;
    }

    if (gen->parsed()) {
      prelam::LamInstance instance;
      if (family == "grid") {
        instance = prelam::generate_grid(gm, gn);
      } else if (family == "prong") {
        instance = prelam::generate_prong(gk);
      } else if (family == "path") {
        instance = prelam::generate_path(gn);
      } else if (family == "strip") {
        instance = prelam::generate_strip(gwidth);
      } else if (family == "lattice") {
        instance = prelam::generate_lattice(prelam::Rational::parse(gmu),
                                            prelam::Rational::parse(gnu), gradius);
      } else {
        instance = prelam::generate_random(gseed, gmax);
      }
      prelam::require_valid(instance);
      write_file(out_path, prelam::serialize_instance(instance));
      return kExitOk;
    }

    if (transport_cmd->parsed()) {
      prelam::LamInstance instance = load_instance(in_path, "");
      prelam::MapTable table = prelam::parse_map_table(read_file(map_path));
      if (report_invariance) {
        prelam::InvarianceResult inv = prelam::check_invariance(instance, table);
        std::cout << "invariant: " << (inv.invariant ? "yes" : "no")
                  << (inv.sign_swapped ? " (global sign swap)" : "") << "\n";
        if (!out_path.empty()) {
          write_file(out_path, prelam::serialize_instance(prelam::transport(instance, table)));
        }
        return inv.invariant ? kExitOk : kExitViolations;
      }
      if (out_path.empty()) throw prelam::Error("transport: -o required unless --invariance");
      write_file(out_path, prelam::serialize_instance(prelam::transport(instance, table)));
      return kExitOk;
    }

    if (extend->parsed()) {
      prelam::LamInstance instance = load_instance(in_path, "");
      auto slash = segment_id.find('/');
      if (slash == std::string::npos) throw prelam::Error("segment id must be <region>/<index>");
      std::string region_id = segment_id.substr(0, slash);
      int seg_index = std::atoi(segment_id.c_str() + slash + 1);
      prelam::Sign sign = region_id.at(0) == 'p' ? prelam::Sign::plus : prelam::Sign::minus;
      int region_index = std::atoi(region_id.c_str() + 1);
      prelam::RegionSet set = prelam::complementary_regions(instance, sign);
      if (region_index < 0 || region_index >= static_cast<int>(set.regions.size())) {
        throw prelam::Error("unknown region " + region_id);
      }
      const prelam::Region& region = set.regions[static_cast<std::size_t>(region_index)];
      auto segs = prelam::ideal_segments(region, instance);
      if (seg_index < 0 || seg_index >= static_cast<int>(segs.segments.size())) {
        throw prelam::Error("region " + region_id + " has no segment " + std::to_string(seg_index));
      }
      prelam::CirclePoint pivot(prelam::Rational::parse_strict(pivot_text));
      prelam::LamInstance out = prelam::alternative_extension(
          instance, region, segs.segments[static_cast<std::size_t>(seg_index)], pivot, ek);
      write_file(out_path, prelam::serialize_instance(out));
      return kExitOk;
    }
  } catch (const prelam::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitOk;
}
