#include "cubeloop/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "cubeloop/error.hpp"
#include "cubeloop/geom.hpp"
#include "cubeloop/reflection.hpp"
#include "cubeloop/report_json.hpp"

namespace cubeloop {

namespace {

constexpr int kClosureVerifyMax = 6;
constexpr int kGeometricVerifyMax = 5;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) s += (s.empty() ? "" : " ") + t;
  return s;
}

VerifyOptions verify_options(int dim, const std::string& mode, bool force, std::ostream& err) {
  if (mode != "verify") return {};
  VerifyOptions v{dim <= kClosureVerifyMax || force, dim <= kGeometricVerifyMax || force};
  if (!v.closure) err << "closure oracle skipped for n > " << kClosureVerifyMax << " (use --force)\n";
  if (!v.geometric) err << "geometric oracle skipped for n > " << kGeometricVerifyMax << " (use --force)\n";
  return v;
}

void print_report(std::ostream& out, const SurfaceReport& r, bool json,
                  const std::optional<FamilySpec>& family = std::nullopt) {
  if (json) out << report_json(r, family).dump(2) << '\n';
  else out << render_text(r, family);
}

struct CheckArgs {
  int dim = 0;
  std::vector<std::string> word;
  bool json = false;
  std::string mode = "fast";
  bool force = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const JordanPath path = validate(DirectionWord::parse(join(a.word), a.dim));
  print_report(out, report(path, {verify_options(a.dim, a.mode, a.force, err)}), a.json);
  return kExitOk;
}

struct EnumerateArgs {
  EnumerationQuery query;
  int length = 0;
  unsigned jobs = 1;
  bool json = false;
};

int cmd_enumerate(EnumerateArgs a, std::ostream& out) {
  if (a.length != 0) a.query.min_length = a.query.max_length = a.length;
  const auto classes = enumerate_paths(a.query, std::max(1U, a.jobs));

  std::map<std::size_t, int> per_length;
  int embedded = 0;
  nlohmann::json listing = nlohmann::json::array();
  for (const auto& c : classes) {
    const SurfaceReport r = report(validate(c.word()));
    ++per_length[c.length()];
    embedded += r.embedded;
    if (a.json) {
      listing.push_back(report_json(r));
      continue;
    }
    out << r.length << "  " << c.word().to_string() << "  " << (r.embedded ? "embedded" : "not-embedded");
    if (r.genus) out << "  genus " << *r.genus;
    else if (r.euler) out << "  euler " << *r.euler;
    out << '\n';
  }

  std::string by_length;
  for (const auto& [m, k] : per_length) {
    by_length += (by_length.empty() ? "" : ", ") + std::to_string(m) + ":" + std::to_string(k);
  }
  const std::string summary = std::to_string(classes.size()) + " classes (" + std::to_string(embedded) +
                              " embedded) in dimension " + std::to_string(a.query.dim) +
                              (by_length.empty() ? "" : "; by length " + by_length);
  if (a.json) {
    out << nlohmann::json{{"schema", kReportSchema},
                          {"dim", a.query.dim},
                          {"classes", listing},
                          {"count", classes.size()},
                          {"embedded_count", embedded},
                          {"summary", summary}}
               .dump(2)
        << '\n';
  } else {
    out << summary << '\n';
  }
  return kExitOk;
}

struct FamilyArgs {
  std::string name;
  FamilySpec spec;
  bool json = false;
  std::string mode = "fast";
  bool force = false;
};

int cmd_family(FamilyArgs a, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(a.name);
  if (!family) throw Error(ErrorCode::BadParameters, "unknown family '" + a.name + "'");
  a.spec.family = *family;
  const DirectionWord w = family_word(a.spec);
  const SurfaceReport r = report(validate(w), {verify_options(a.spec.dim, a.mode, a.force, err)});
  print_report(out, r, a.json, a.spec);
  return kExitOk;
}

struct ExportArgs {
  int dim = 0;
  std::vector<std::string> word;
  std::string format = "obj";
  std::string output;
  std::optional<int> project;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
  const auto format = parse_mesh_format(a.format);
  if (!format) throw Error(ErrorCode::UnsupportedFormat, "format '" + a.format + "'");
  const JordanPath path = validate(DirectionWord::parse(join(a.word), a.dim));
  const ClosureSet group = closure(generators(path));
  const PatchSet patches = expand_patches(path, group);

  ExportOptions options{*format, a.project, std::nullopt};
  if (!decide_embedded(path).embedded) options.warning = "surface is not embedded";
  const std::string mesh = export_mesh(patches, options);

  if (a.output.empty() || a.output == "-") {
    out << mesh;
    return kExitOk;
  }
  std::ofstream file(a.output, std::ios::binary);
  if (!file) throw IoError("cannot open " + a.output);
  file << mesh;
  file.close();
  if (!file) throw IoError("failed writing " + a.output);
  out << "wrote " << a.output << ": " << patches.patches.size() << " patches, " << patches.triangle_count()
      << " triangles" << (options.warning ? " (" + *options.warning + ")" : "") << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jordan paths on the n-cube and the periodic surfaces they generate"};
  app.name("cubeloop");
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "validate a word and report on its surface");
  c->add_option("--dim", check.dim, "dimension n")->required();
  c->add_option("--word", check.word, "direction word")->required()->expected(1, -1);
  c->add_flag("--json", check.json);
  c->add_option("--mode", check.mode)->check(CLI::IsMember({"fast", "verify"}));
  c->add_flag("--force", check.force, "run oracles beyond their default dimension bounds");

  EnumerateArgs en;
  en.jobs = 1;
  auto* e = app.add_subcommand("enumerate", "list symmetry classes of Jordan paths");
  e->add_option("--dim", en.query.dim)->required();
  e->add_option("--length", en.length, "exact length m");
  e->add_option("--min-length", en.query.min_length);
  e->add_option("--max-length", en.query.max_length);
  e->add_flag("--embedded-only", en.query.embedded_only);
  e->add_option("--limit", en.query.limit);
  e->add_option("--first-direction", en.query.first_direction);
  e->add_option("--prefix-depth", en.query.prefix_depth);
  e->add_option("--jobs", en.jobs, "worker threads (0: hardware concurrency)");
  e->add_flag("--json", en.json);

  FamilyArgs fam;
  auto* f = app.add_subcommand("family", "expand a named family and report on it");
  f->add_option("--name", fam.name, "gamma-a | gamma-b | gamma-c | d-series | sharp")->required();
  f->add_option("--dim", fam.spec.dim)->required();
  f->add_option("--alpha", fam.spec.alpha);
  f->add_option("--beta", fam.spec.beta);
  f->add_flag("--json", fam.json);
  f->add_option("--mode", fam.mode)->check(CLI::IsMember({"fast", "verify"}));
  f->add_flag("--force", fam.force);

  ExportArgs ex;
  auto* x = app.add_subcommand("export", "write the surface patches as a mesh");
  x->add_option("--dim", ex.dim)->required();
  x->add_option("--word", ex.word)->required()->expected(1, -1);
  x->add_option("--format", ex.format)->check(CLI::IsMember({"obj", "json"}));
  x->add_option("-o,--output", ex.output);
  x->add_option("--project", ex.project, "axis dropped for OBJ output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& pe) {
    const int code = app.exit(pe, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*c) return cmd_check(check, out, err);
    if (*e) {
      if (en.jobs == 0) en.jobs = std::max(1U, std::thread::hardware_concurrency());
      return cmd_enumerate(en, out);
    }
    if (*f) return cmd_family(fam, out, err);
    if (*x) return cmd_export(ex, out);
  } catch (const Error& ex_) {
    err << "error: " << ex_.what() << '\n';
    return kExitInput;
  } catch (const IoError& io) {
    err << "error: " << io.what() << '\n';
    return kExitIo;
  } catch (const InvariantViolation& iv) {
    err << "internal error: " << iv.what() << '\n';
    return kExitInvariant;
  }
  return kExitInput;
}

}  // namespace cubeloop
