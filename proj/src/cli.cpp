#include "platen/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "platen/builders.hpp"
#include "platen/error.hpp"
#include "platen/numfmt.hpp"
#include "platen/orient.hpp"
#include "platen/scad.hpp"
#include "platen/stl.hpp"
#include "platen/validate.hpp"

namespace platen::cli {

namespace {

// shared stages: build, optionally lay a face on the plate, scale to size
struct PipelineFlags {
  std::string shape = "octahedron";
  int base_sides = 4;
  double side = 1.0;
  int lay_flat_face = -1;  // -1: keep the built pose
  double scale = 1.0;
};

struct GenFlags : PipelineFlags {
  std::string emit = "scad";
  std::string scad_keyword = "faces";
  int decimals = 3;
  double tol = kDefaultPlateTol;
  std::string out_path;
  bool force = false;
};

struct InfoFlags : PipelineFlags {
  int decimals = 3;
};

struct ValidateFlags {
  std::string path;
  double tol = kDefaultPlateTol;
  double weld_tol = 1e-6;
  bool force = false;
};

struct ConvertFlags {
  std::string in_path;
  std::string out_path;
  std::string emit;  // empty: infer from the output extension
  int decimals = 6;
  double weld_tol = 1e-6;
  bool force = false;
};

void add_pipeline_options(CLI::App& cmd, PipelineFlags& flags) {
  cmd.add_option("--side", flags.side, "edge length, mm")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--base-sides", flags.base_sides, "base corner count (3, 4 or 5)")
      ->check(CLI::IsMember({3, 4, 5}));
  cmd.add_option("--lay-flat-face", flags.lay_flat_face,
                 "face index to rest on the build plate")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--scale", flags.scale, "uniform scale applied after lay-flat")
      ->check(CLI::PositiveNumber);
}

Mesh run_pipeline(const PipelineFlags& flags) {
  Mesh mesh = equilateral_bipyramid({flags.base_sides, flags.side});
  if (flags.lay_flat_face >= 0) {
    mesh = apply_transform(
        mesh, lay_flat(mesh, static_cast<std::size_t>(flags.lay_flat_face)));
  }
  if (flags.scale != 1.0) {
    mesh = scale_uniform(mesh, flags.scale);
  }
  return mesh;
}

void render_report(const ValidationReport& report, std::ostream& os) {
  for (const Finding& f : report.findings) {
    os << (f.severity == Severity::Error ? "error " : "warning ") << f.code << ": "
       << f.message << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view payload) {
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) throw Error("cannot write " + path);
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out.good()) throw Error("short write to " + path);
}

std::string render_emission(const Mesh& mesh, const std::string& emit,
                            const std::string& scad_keyword, int decimals) {
  if (emit == "scad") {
    const ScadKeyword keyword =
        scad_keyword == "triangles" ? ScadKeyword::Triangles : ScadKeyword::Faces;
    return emit_openscad(mesh, {keyword, decimals});
  }
  if (emit == "stl-ascii") {
    return emit_stl_ascii(mesh, "platen");
  }
  const std::vector<std::uint8_t> bytes = emit_stl_binary(mesh);
  return {reinterpret_cast<const char*>(bytes.data()), bytes.size()};
}

void deliver(const std::string& payload, const std::string& out_path,
             std::ostream& out) {
  if (out_path.empty()) {
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  } else {
    write_file(out_path, payload);
  }
}

int run_gen(const GenFlags& flags, std::ostream& out, std::ostream& err) {
  const Mesh mesh = run_pipeline(flags);

  ValidationReport report;
  report.merge(check_watertight(mesh));
  report.merge(check_winding_consistent(mesh));
  if (report.passed()) {
    if (signed_volume(mesh) <= 0.0) {
      report.add("inside_out", Severity::Error, "faces wind inward");
    }
    report.merge(check_regular(mesh, flags.side * flags.scale, flags.tol));
  }
  if (flags.lay_flat_face >= 0) {
    report.merge(check_on_build_plate(mesh, flags.tol));
  }

  render_report(report, err);
  if (!report.passed() && !flags.force) {
    err << "validation failed; nothing emitted\n";
    return 1;
  }

  deliver(render_emission(mesh, flags.emit, flags.scad_keyword, flags.decimals),
          flags.out_path, out);
  return 0;
}

int run_info(const InfoFlags& flags, std::ostream& out) {
  const Mesh mesh = run_pipeline(flags);
  const std::size_t v = mesh.vertices.size();
  const std::size_t f = mesh.faces.size();
  const auto e = static_cast<std::size_t>(static_cast<std::int64_t>(v) +
                                          static_cast<std::int64_t>(f) -
                                          euler_characteristic(mesh));
  out << "vertices: " << v << "  edges: " << e << "  faces: " << f << '\n';
  out << "volume: " << format_decimal(signed_volume(mesh), flags.decimals) << '\n';
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const Vec3& p = mesh.vertices[i];
    out << 'p' << i << " = (" << format_decimal(p.x, flags.decimals) << ", "
        << format_decimal(p.y, flags.decimals) << ", "
        << format_decimal(p.z, flags.decimals) << ")\n";
  }
  return 0;
}

int run_validate(const ValidateFlags& flags, std::ostream& out) {
  const TriangleSoup soup = parse_stl(read_file(flags.path));

  ValidationReport report = check_facet_normals(soup);
  const WeldResult weld = weld_vertices(soup, flags.weld_tol);
  if (weld.dropped_degenerate > 0) {
    report.add("degenerate_facets", Severity::Warning,
               std::to_string(weld.dropped_degenerate) +
                   " degenerate facet(s) dropped while welding");
  }
  report.merge(check_watertight(weld.mesh));
  report.merge(check_winding_consistent(weld.mesh));
  if (is_closed(weld.mesh) && signed_volume(weld.mesh) <= 0.0) {
    report.add("inside_out", Severity::Error, "faces wind inward");
  }
  report.merge(check_on_build_plate(weld.mesh, flags.tol));

  render_report(report, out);
  if (report.passed() || flags.force) {
    out << "OK\n";
    return 0;
  }
  out << "FAILED\n";
  return 1;
}

int run_convert(const ConvertFlags& flags, std::ostream& err) {
  std::string emit = flags.emit;
  if (emit.empty()) {
    const std::string ext = std::filesystem::path(flags.out_path).extension().string();
    if (ext == ".scad") {
      emit = "scad";
    } else if (ext == ".stl") {
      emit = "stl-binary";
    } else {
      throw Error("cannot infer a format from '" + flags.out_path +
                  "'; pass --emit");
    }
  }

  const TriangleSoup soup = parse_stl(read_file(flags.in_path));
  const WeldResult weld = weld_vertices(soup, flags.weld_tol);

  ValidationReport report = check_facet_normals(soup);
  report.merge(check_watertight(weld.mesh));
  report.merge(check_winding_consistent(weld.mesh));

  render_report(report, err);
  if (!report.passed() && !flags.force) {
    err << "validation failed; nothing written\n";
    return 1;
  }

  write_file(flags.out_path, render_emission(weld.mesh, emit, "faces", flags.decimals));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"builds equilateral bipyramids and lays them flat for printing"};
  app.require_subcommand(1);

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "construct a solid and emit it");
  gen_cmd->add_option("shape", gen.shape, "octahedron or bipyramid")
      ->required()
      ->check(CLI::IsMember({"octahedron", "bipyramid"}));
  add_pipeline_options(*gen_cmd, gen);
  gen_cmd->add_option("--emit", gen.emit, "output format")
      ->check(CLI::IsMember({"scad", "stl-ascii", "stl-binary"}));
  gen_cmd->add_option("--scad-keyword", gen.scad_keyword, "polyhedron face keyword")
      ->check(CLI::IsMember({"triangles", "faces"}));
  gen_cmd->add_option("--decimals", gen.decimals, "scad coordinate precision")
      ->check(CLI::Range(1, 17));
  gen_cmd->add_option("--tol", gen.tol, "validation tolerance, mm")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--output", gen.out_path, "write here instead of stdout");
  gen_cmd->add_flag("--force", gen.force, "emit even when validation fails");

  InfoFlags info;
  CLI::App* info_cmd =
      app.add_subcommand("info", "print the vertex table after each stage");
  add_pipeline_options(*info_cmd, info);
  info_cmd->add_option("--decimals", info.decimals, "table precision")
      ->check(CLI::Range(1, 17));

  ValidateFlags validate;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check an STL file for print readiness");
  validate_cmd->add_option("file", validate.path, "STL file")->required();
  validate_cmd->add_option("--tol", validate.tol, "build-plate tolerance, mm")
      ->check(CLI::PositiveNumber);
  validate_cmd->add_option("--weld-tol", validate.weld_tol, "vertex weld tolerance, mm")
      ->check(CLI::PositiveNumber);
  validate_cmd->add_flag("--force", validate.force, "report findings but exit 0");

  ConvertFlags convert;
  CLI::App* convert_cmd =
      app.add_subcommand("convert", "re-emit an STL file in another format");
  convert_cmd->add_option("input", convert.in_path, "STL file to read")->required();
  convert_cmd->add_option("output", convert.out_path, "file to write")->required();
  convert_cmd->add_option("--emit", convert.emit, "output format")
      ->check(CLI::IsMember({"scad", "stl-ascii", "stl-binary"}));
  convert_cmd->add_option("--decimals", convert.decimals, "scad coordinate precision")
      ->check(CLI::Range(1, 17));
  convert_cmd->add_option("--weld-tol", convert.weld_tol, "vertex weld tolerance, mm")
      ->check(CLI::PositiveNumber);
  convert_cmd->add_flag("--force", convert.force, "convert even when validation fails");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("platen");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (gen_cmd->parsed()) {
      if (gen.shape == "octahedron" && gen.base_sides != 4) {
        err << "an octahedron always has a 4-sided base; use 'gen bipyramid'\n";
        return 2;
      }
      return run_gen(gen, out, err);
    }
    if (info_cmd->parsed()) return run_info(info, out);
    if (validate_cmd->parsed()) return run_validate(validate, out);
    return run_convert(convert, err);
  } catch (const NotClosedMesh& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace platen::cli
