#include "pds/cli.hpp"

#include "pds/code_io.hpp"
#include "pds/defining_sets.hpp"
#include "pds/enumerator.hpp"
#include "pds/errors.hpp"
#include "pds/linear_codes.hpp"
#include "pds/spectral.hpp"
#include "pds/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <ostream>
#include <sstream>

namespace pds::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Options {
  std::string format;
  int threads = 0;

  // construct
  int p = 0;
  int n = 0;
  std::string eps;
  bool eps_given = false;
  int k = 0;
  std::string normal;
  std::string out_path;

  // file inputs
  std::string input;

  // spectrum
  bool list = false;
  VertexIndex rank_guard = kDefaultRankGuard;

  // enumerate / defining
  bool no_prune = false;
  std::string cache_dir = "pds-cache";
  VertexIndex enum_guard = kDefaultEnumerationGuard;
  std::string mode = "greedy";
  int cap = kDefaultMinDefiningCap;
};

json point_json(const TorusPoint& pt) { return pt.coords; }

json points_json(std::span<const TorusPoint> pts) {
  json arr = json::array();
  for (const auto& pt : pts) arr.push_back(point_json(pt));
  return arr;
}

std::string render_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Text mode prints the same document as "key: value" lines.
void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : report.items()) out << key << ": " << render_value(value) << '\n';
}

TorusParams params_from(int p, int n) {
  if (n != 0) return TorusParams(p, n);
  return TorusParams(p);
}

std::vector<int> parse_normal(const std::string& text) {
  std::vector<int> normal;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      normal.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInputError("bad normal entry '" + item + "'");
    }
  }
  return normal;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const TorusParams params = params_from(o.p, o.n);
  CodeSet code(params);
  std::string description;
  if (!o.normal.empty()) {
    if (o.eps_given) throw InvalidInputError("give either --eps or --a, not both");
    HyperplaneSpec spec{parse_normal(o.normal), mod(o.k, params.p())};
    code = build_hyperplane(spec, params);
    description = to_string(spec);
  } else {
    if (!o.eps_given && params.n() > 1) throw InvalidInputError("--eps is required for n > 1");
    Eq1Spec spec{parse_signs(o.eps), mod(o.k, params.p())};
    code = build_eq1(spec, params);
    description = to_string(spec);
  }
  if (!o.out_path.empty()) write_code_file(o.out_path, code);

  if (o.format == "json") {
    json report{{"p", params.p()}, {"n", params.n()}, {"spec", description}, {"size", code.size()}};
    if (!o.out_path.empty()) {
      report["path"] = o.out_path;
    } else {
      report["codewords"] = points_json(code.points());
    }
    emit(report, "json", out);
  } else if (o.out_path.empty()) {
    write_code(out, code);
  } else {
    emit(json{{"spec", description}, {"size", code.size()}, {"path", o.out_path}}, "text", out);
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const CodeSet code = read_code_file(o.input);
  const auto report = is_perfect(code);
  json doc{{"p", code.params().p()}, {"n", code.params().n()}, {"size", code.size()},
           {"perfect", report.perfect}};
  if (report.witness) {
    doc["witness"] = json{{"vertex", point_json(report.witness->vertex)}, {"count", report.witness->count}};
  }
  if (o.format == "json") {
    emit(doc, "json", out);
  } else {
    out << (report.perfect ? "perfect" : "not perfect") << '\n';
    emit(doc, "text", out);
  }
  return report.perfect ? kOk : kPropertyViolated;
}

int cmd_lines(const Options& o, std::ostream& out) {
  const CodeSet code = read_code_file(o.input);
  const auto report = check_line_property(code);
  json doc{{"p", code.params().p()}, {"n", code.params().n()}, {"line_property", report.holds}};
  if (report.witness) {
    doc["witness"] = json{{"axis", report.witness->axis},
                          {"base", point_json(report.witness->base)},
                          {"count", report.witness->count}};
  }
  emit(doc, o.format, out);
  return report.holds ? kOk : kPropertyViolated;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const TorusParams params = params_from(o.p, o.n);
  params.require_prime("spectrum");
  const KernelSet kernel = enumerate_kernel(params);
  json doc{{"p", params.p()},
           {"n", params.n()},
           {"vertices", params.num_vertices()},
           {"kernel_size", kernel.members.size()},
           {"kernel_size_formula", kernel_size_formula(params.n())}};
  if (params.num_vertices() <= o.rank_guard) {
    const std::size_t rank = rank_A_plus_I(params, o.rank_guard);
    doc["rank"] = rank;
    doc["rank_plus_kernel"] = rank + kernel.members.size();
  } else {
    doc["rank"] = nullptr;
  }
  if (o.list) {
    json arr = json::array();
    for (const auto& y : kernel.members) arr.push_back(y.y);
    doc["kernel"] = arr;
  }
  emit(doc, o.format, out);
  return kOk;
}

EnumerateOptions enumerate_options(const Options& o, const TorusParams& params) {
  EnumerateOptions opts;
  opts.prune_lines = !o.no_prune;
  opts.guard = o.enum_guard;
  if (opts.prune_lines && !params.prime()) {
    throw UnsupportedParametersError("line pruning needs prime p; pass --no-prune");
  }
  return opts;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const TorusParams params = params_from(o.p, o.n);
  const auto cached = load_or_enumerate(o.cache_dir, params, enumerate_options(o, params));
  const OrbitReport orbits = orbit_decomposition(cached.family);
  json doc{{"p", params.p()},
           {"n", params.n()},
           {"count", cached.family.codes.size()},
           {"path", cached.path.string()},
           {"cache_hit", cached.cache_hit},
           {"orbits", orbits.orbit_sizes.size()},
           {"orbit_sizes", orbits.orbit_sizes},
           {"translation_orbits", orbits.translation_orbit_sizes.size()}};
  emit(doc, o.format, out);
  return kOk;
}

json classify_one(const CodeSet& code) {
  json doc;
  const auto h = classify(code);
  doc["hyperplane"] = h ? json(to_string(*h)) : json("not hyperplane");
  const auto e = match_eq1(code);
  doc["eq1"] = e ? json(to_string(*e)) : json(nullptr);
  return doc;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const std::string text = read_text_file(o.input);
  if (text.rfind("pds-family", 0) == 0) {
    const CodeFamily family = from_family_file(parse_family(text));
    std::size_t hyperplane = 0;
    std::size_t eq1 = 0;
    json others = json::array();
    for (std::size_t i = 0; i < family.codes.size(); ++i) {
      const auto& code = family.codes[i];
      if (!is_perfect(code).perfect) throw InvalidInputError("family member " + std::to_string(i) + " is not perfect");
      if (classify(code)) {
        ++hyperplane;
      } else {
        others.push_back(i);
      }
      if (match_eq1(code)) ++eq1;
    }
    json doc{{"p", family.params.p()},
             {"n", family.params.n()},
             {"codes", family.codes.size()},
             {"hyperplane", hyperplane},
             {"eq1", eq1},
             {"not_hyperplane", others}};
    emit(doc, o.format, out);
    return kOk;
  }
  const CodeSet code = parse_code(text);
  const auto report = is_perfect(code);
  if (!report.perfect) {
    json doc{{"perfect", false},
             {"witness", json{{"vertex", point_json(report.witness->vertex)}, {"count", report.witness->count}}}};
    emit(doc, o.format, out);
    return kPropertyViolated;
  }
  json doc{{"p", code.params().p()}, {"n", code.params().n()}};
  doc.update(classify_one(code));
  emit(doc, o.format, out);
  return kOk;
}

int cmd_defining(const Options& o, std::ostream& out) {
  const CodeSet code = read_code_file(o.input);
  const TorusParams& params = code.params();
  params.require_prime("defining");
  const auto perfect = is_perfect(code);
  if (!perfect.perfect) {
    emit(json{{"perfect", false}}, o.format, out);
    return kPropertyViolated;
  }

  json doc{{"p", params.p()}, {"n", params.n()}, {"mode", o.mode}};
  if (o.mode == "proposition") {
    const auto spec = match_eq1(code);
    if (!spec) {
      doc["error"] = "code is not in the signed linear family";
      emit(doc, o.format, out);
      return kPropertyViolated;
    }
    const DefiningSet d = proposition_defining(*spec, params);
    const CodeFamily linear = linear_family(params);
    const bool valid = is_defining(d.points, code, linear);
    const Eq1Spec recovered = recover_eq1(d.points, params);
    doc["spec"] = to_string(*spec);
    doc["family"] = "linear";
    doc["family_size"] = linear.codes.size();
    doc["size"] = d.points.size();
    doc["expected_size"] = proposition_size(params);
    doc["points"] = points_json(d.points);
    doc["defining"] = valid;
    doc["recovered"] = to_string(recovered);
    doc["recovery_ok"] = recovered == *spec;
    if (params.num_vertices() <= o.enum_guard) {
      const auto full = load_or_enumerate(o.cache_dir, params, enumerate_options(o, params));
      doc["defining_in_full_family"] = is_defining(d.points, code, full.family);
    }
    emit(doc, o.format, out);
    return valid && recovered == *spec ? kOk : kPropertyViolated;
  }

  const auto cached = load_or_enumerate(o.cache_dir, params, enumerate_options(o, params));
  const CodeFamily& family = cached.family;
  doc["family"] = "full";
  doc["family_size"] = family.codes.size();
  doc["family_path"] = cached.path.string();
  std::optional<DefiningSet> d;
  if (o.mode == "greedy") {
    d = greedy_defining(code, family);
    doc["bound"] = kernel_size_formula(params.n());
  } else if (o.mode == "min") {
    d = min_defining(code, family, o.cap);
    doc["cap"] = o.cap;
  } else {
    throw InvalidInputError("unknown mode '" + o.mode + "'");
  }
  if (!d) {
    doc["size"] = nullptr;
    doc["exceeds_cap"] = true;
    emit(doc, o.format, out);
    return kPropertyViolated;
  }
  const bool valid = is_defining(d->points, code, family);
  doc["size"] = d->points.size();
  doc["points"] = points_json(d->points);
  doc["defining"] = valid;
  emit(doc, o.format, out);
  return valid ? kOk : kPropertyViolated;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect dominating sets of the torus Z_p^n, p = 2n+1"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", o.threads, "OpenMP thread count (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);
  app.fallthrough();

  auto* construct = app.add_subcommand("construct", "Build a signed-family or hyperplane code");
  construct->add_option("--p", o.p, "Cycle length p = 2n+1")->required();
  construct->add_option("--n", o.n, "Dimension (derived from p when omitted)");
  construct->add_option("--eps", o.eps, "Sign pattern, e.g. +-+ (n-1 characters)");
  construct->add_option("--k", o.k, "Offset");
  construct->add_option("--a", o.normal, "Hyperplane normal, e.g. 1,3,2");
  construct->add_option("-o,--out", o.out_path, "Write the code file here");

  auto* verify = app.add_subcommand("verify", "Check perfect domination");
  verify->add_option("file", o.input, "Code file")->required();

  auto* lines = app.add_subcommand("lines", "Check that every axis line holds one codeword");
  lines->add_option("file", o.input, "Code file")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Kernel frequencies and exact rank of A+I");
  spectrum->add_option("--p", o.p, "Cycle length")->required();
  spectrum->add_option("--n", o.n, "Dimension");
  spectrum->add_flag("--list", o.list, "Include the kernel frequency list");
  spectrum->add_option("--rank-guard", o.rank_guard, "Largest p^n for exact rank");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all perfect codes");
  enumerate->add_option("--p", o.p, "Cycle length")->required();
  enumerate->add_option("--n", o.n, "Dimension");
  enumerate->add_flag("--no-prune", o.no_prune, "Disable axis-line pruning");
  enumerate->add_option("--cache-dir", o.cache_dir, "Family cache directory");
  enumerate->add_option("--guard", o.enum_guard, "Largest p^n to enumerate");

  auto* classify_cmd = app.add_subcommand("classify", "Identify hyperplane / signed-family codes");
  classify_cmd->add_option("file", o.input, "Code file or family file")->required();

  auto* defining = app.add_subcommand("defining", "Compute a defining set");
  defining->add_option("file", o.input, "Code file")->required();
  defining->add_option("--mode", o.mode, "greedy | min | proposition")
      ->check(CLI::IsMember({"greedy", "min", "proposition"}));
  defining->add_option("--cache-dir", o.cache_dir, "Family cache directory");
  defining->add_option("--cap", o.cap, "Size cap for --mode min")->check(CLI::NonNegativeNumber);
  defining->add_flag("--no-prune", o.no_prune, "Disable axis-line pruning when enumerating");
  defining->add_option("--guard", o.enum_guard, "Largest p^n to enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  o.eps_given = construct->count("--eps") > 0;
  set_thread_count(o.threads);

  const std::string name = app.get_subcommands().front()->get_name();
  if (o.format.empty()) o.format = (name == "spectrum" || name == "defining") ? "json" : "text";

  try {
    if (name == "construct") return cmd_construct(o, out);
    if (name == "verify") return cmd_verify(o, out);
    if (name == "lines") return cmd_lines(o, out);
    if (name == "spectrum") return cmd_spectrum(o, out);
    if (name == "enumerate") return cmd_enumerate(o, out);
    if (name == "classify") return cmd_classify(o, out);
    if (name == "defining") return cmd_defining(o, out);
  } catch (const FormatError& e) {
    err << "error: " << o.input << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace pds::cli
