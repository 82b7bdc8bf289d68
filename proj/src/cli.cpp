#include "modcone/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "modcone/render.hpp"

namespace modcone::cli {

namespace {

complex parse_complex(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw Error(ErrorCode::InvalidInput, "complex numbers are [re, im] pairs, got " + v.dump());
}

std::vector<complex> parse_coeffs(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array() || doc[key].empty()) {
    throw Error(ErrorCode::InvalidInput, std::string("missing or empty coefficient list \"") + key + "\"");
  }
  std::vector<complex> out;
  for (const auto& c : doc[key]) out.push_back(parse_complex(c));
  return out;
}

ComplexFunction parse_form(const nlohmann::json& doc, int depth) {
  if (!doc.is_object() || !doc.contains("form") || !doc["form"].is_string()) {
    throw Error(ErrorCode::InvalidInput, "spec needs a string \"form\"");
  }
  const std::string form = doc["form"].get<std::string>();
  if (form == "polynomial") return ComplexFunction::polynomial(make_polynomial(parse_coeffs(doc, "coeffs")));
  if (form == "rational") {
    return ComplexFunction::rational(make_polynomial(parse_coeffs(doc, "numer")),
                                     make_polynomial(parse_coeffs(doc, "denom")));
  }
  if (form == "exp") {
    if (depth > 0) throw Error(ErrorCode::InvalidInput, "exp nesting depth is limited to one");
    if (!doc.contains("inner")) throw Error(ErrorCode::InvalidInput, "exp spec needs \"inner\"");
    return ComplexFunction::exp_of(parse_form(doc["inner"], depth + 1));
  }
  throw Error(ErrorCode::InvalidInput, "unknown form \"" + form + "\"");
}

ordered_json complex_json(complex z) { return ordered_json::array({round15(z.real()), round15(z.imag())}); }

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string complex_text(complex z) {
  return num(z.real()) + (std::signbit(z.imag()) && z.imag() != 0.0 ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

std::string witness_text(const RayClassification& r) {
  std::string s = to_string(r.verdict);
  if (r.witness_order) s += " (m=" + std::to_string(*r.witness_order) + ")";
  if (!r.diagnostic.empty()) s += " [" + r.diagnostic + "]";
  return s;
}

struct Common {
  std::string spec_path;
  bool harmonic = false;
  bool json = false;
  bool text = false;
};

ConeDecomposition decompose(const PowerSeries& s, bool harmonic) {
  return harmonic ? harmonic_cone(s) : holomorphic_cone(s);
}

std::vector<double> parse_list(const std::string& text, std::size_t count, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidInput, std::string("malformed ") + what + ": " + text);
    }
    out.push_back(v);
  }
  if (out.size() != count) {
    throw Error(ErrorCode::InvalidInput,
                std::string(what) + " needs " + std::to_string(count) + " comma-separated numbers");
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  f << content;
}

}  // namespace

double round15(double v) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

FunctionSpec parse_function_spec(const nlohmann::json& doc) {
  ComplexFunction f = parse_form(doc, 0);
  const complex center = doc.contains("center") ? parse_complex(doc["center"]) : complex{};
  int order = 2 * f.degree() + 1;
  if (doc.contains("order")) {
    if (!doc["order"].is_number_integer() || doc["order"].get<int>() < 1) {
      throw Error(ErrorCode::InvalidInput, "\"order\" must be a positive integer");
    }
    order = doc["order"].get<int>();
  }
  FunctionSpec spec{std::move(f), center, order};
  if (spec.function.form() == ComplexFunction::Form::Rational) {
    const complex v = spec.function(center);
    if (std::isinf(v.real())) throw Error(ErrorCode::DivisionBySingularSeries, "denominator vanishes at the center");
  }
  return spec;
}

FunctionSpec load_function_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open spec file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
  return parse_function_spec(doc);
}

ordered_json to_json(const RayClassification& r) {
  ordered_json j;
  j["angle"] = round15(r.angle);
  j["verdict"] = to_string(r.verdict);
  j["witness_order"] = r.witness_order ? ordered_json(*r.witness_order) : ordered_json(nullptr);
  j["witness_value"] = r.witness_value ? ordered_json(round15(*r.witness_value)) : ordered_json(nullptr);
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

ordered_json to_json(const ConeDecomposition& d) {
  ordered_json j;
  j["kind"] = to_string(d.kind);
  j["center"] = complex_json(d.center);
  j["k"] = d.k;
  j["all_ascent"] = d.all_ascent;
  j["pivot_phase"] = round15(d.pivot_phase);
  j["pivot_magnitude"] = round15(d.pivot_magnitude);
  ordered_json arcs = ordered_json::array();
  for (const Arc& a : d.arcs) {
    arcs.push_back({{"start", round15(a.start)}, {"end", round15(a.end)}, {"label", to_string(a.label)}});
  }
  j["arcs"] = std::move(arcs);
  ordered_json rays = ordered_json::array();
  for (const auto& r : d.boundary_rays) rays.push_back(to_json(r));
  j["boundary_rays"] = std::move(rays);
  return j;
}

ordered_json to_json(const AgreementReport& r) {
  ordered_json j;
  j["angles_tested"] = r.angles_tested;
  j["matches"] = r.matches;
  j["skipped_near_boundary"] = r.skipped_near_boundary;
  ordered_json mm = ordered_json::array();
  for (const auto& m : r.mismatches) {
    mm.push_back({{"angle", round15(m.angle)},
                  {"predicted", to_string(m.predicted)},
                  {"empirical", to_string(m.empirical)}});
  }
  j["mismatches"] = std::move(mm);
  return j;
}

ordered_json to_json(const SolverResult& r) {
  ordered_json j;
  j["root"] = complex_json(r.root);
  j["residual"] = round15(r.residual);
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["status"] = to_string(r.status);
  ordered_json trace = ordered_json::array();
  for (const auto& t : r.trace) {
    trace.push_back({{"z", complex_json(t.z)},
                     {"modulus", round15(t.modulus)},
                     {"k", t.k},
                     {"theta", round15(t.theta)},
                     {"step", round15(t.step)}});
  }
  j["trace"] = std::move(trace);
  return j;
}

std::string to_text(const ConeDecomposition& d) {
  const bool holo = d.kind == ConeKind::HolomorphicModulus;
  std::string s;
  s += "kind=" + std::string(to_string(d.kind)) + "\n";
  s += "center=" + complex_text(d.center) + "\n";
  s += "k=" + std::to_string(d.k) + "\n";
  if (d.all_ascent) {
    s += "all_ascent=true\n";
    s += "ascent arcs: full circle [0, 6.28318530717959)\n";
    return s;
  }
  s += std::string(holo ? "alpha=" : "beta=") + num(d.pivot_phase) + "\n";
  s += std::string(holo ? "r=" : "s=") + num(d.pivot_magnitude) + "\n";
  s += "all_ascent=false\n";
  for (ArcLabel want : {ArcLabel::Ascent, ArcLabel::Descent}) {
    s += std::string(to_string(want)) + " arcs:";
    for (const Arc& a : d.arcs) {
      if (a.label == want) s += " (" + num(a.start) + ", " + num(a.end) + ")";
    }
    s += "\n";
  }
  s += "boundary rays:\n";
  for (const auto& r : d.boundary_rays) s += "  " + num(r.angle) + " " + witness_text(r) + "\n";
  return s;
}

std::string to_text(const RayClassification& r) { return witness_text(r) + "\n"; }

std::string to_text(const AgreementReport& r) {
  std::string s = "angles_tested=" + std::to_string(r.angles_tested) + " matches=" + std::to_string(r.matches) +
                  " skipped_near_boundary=" + std::to_string(r.skipped_near_boundary) +
                  " mismatches=" + std::to_string(r.mismatches.size()) + "\n";
  for (const auto& m : r.mismatches) {
    s += "  mismatch at " + num(m.angle) + ": predicted " + to_string(m.predicted) + ", sampled " +
         to_string(m.empirical) + "\n";
  }
  return s;
}

std::string to_text(const SolverResult& r) {
  std::string s = "status=" + std::string(to_string(r.status)) + "\n";
  s += "root=" + complex_text(r.root) + "\n";
  s += "residual=" + num(r.residual) + "\n";
  s += "iterations=" + std::to_string(r.iterations) + "\n";
  s += "trace:\n";
  for (const auto& t : r.trace) {
    s += "  z=" + complex_text(t.z) + " |p|=" + num(t.modulus) + " k=" + std::to_string(t.k) +
         " theta=" + num(t.theta) + " step=" + num(t.step) + "\n";
  }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local ascent/descent cone analysis for holomorphic and harmonic functions", "modcone"};
  app.require_subcommand(1);

  auto add_common = [](CLI::App* sub, Common& c, bool harmonic_flag) {
    sub->add_option("spec", c.spec_path, "JSON function spec")->required();
    if (harmonic_flag) sub->add_flag("--harmonic", c.harmonic, "analyse u = Re f instead of |f|");
    auto* j = sub->add_flag("--json", c.json, "JSON output");
    auto* t = sub->add_flag("--text", c.text, "text output (default)");
    j->excludes(t);
  };

  Common analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "print the cone decomposition at the spec center");
  add_common(analyze, analyze_opts, true);

  Common classify_opts;
  double theta = 0.0;
  auto* classify = app.add_subcommand("classify", "classify one ray through the center");
  add_common(classify, classify_opts, true);
  classify->add_option("--theta", theta, "ray angle in radians")->required();

  Common verify_opts;
  CompareOptions cmp;
  std::optional<double> tmax;
  auto* verify = app.add_subcommand("verify", "check the predicted cones by ray sampling");
  add_common(verify, verify_opts, true);
  verify->add_option("--angles", cmp.angle_count, "number of evenly spaced angles")->check(CLI::PositiveNumber);
  verify->add_option("--tmax", tmax, "largest sampling radius")->check(CLI::PositiveNumber);
  verify->add_option("--margin", cmp.boundary_margin, "skip angles this close to a boundary ray")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", cmp.samples, "radii per ray")->check(CLI::Range(8, 64));

  Common solve_opts;
  SolverOptions sopts;
  std::string start_text;
  auto* solve = app.add_subcommand("solve", "find a root by modulus descent");
  add_common(solve, solve_opts, false);
  solve->add_option("--start", start_text, "starting point re,im")->required();
  solve->add_option("--tol", sopts.tol_residual, "residual tolerance")->check(CLI::PositiveNumber);
  solve->add_option("--max-iters", sopts.max_iters, "iteration budget")->check(CLI::PositiveNumber);
  solve->add_option("--initial-step", sopts.initial_step, "first trial step")->check(CLI::PositiveNumber);
  solve->add_option("--shrink", sopts.step_shrink, "step shrink factor in (0,1)")
      ->check(CLI::Range(1e-6, 1.0 - 1e-9));
  solve->add_option("--max-shrinks", sopts.max_shrinks_per_iter, "shrinks allowed per iteration")
      ->check(CLI::NonNegativeNumber);

  Common render_opts;
  std::string window_text;
  std::string px_text = "600,600";
  std::string out_base;
  int ray_length = 0;
  auto* render = app.add_subcommand("render", "write <out>.pgm and <out>.svg of the super-level region");
  render->add_option("spec", render_opts.spec_path, "JSON function spec")->required();
  render->add_flag("--harmonic", render_opts.harmonic, "render {Re f > Re f(z0)}");
  render->add_option("--window", window_text, "cx,cy,half_width,half_height (default: center, 1.2, 1.2)");
  render->add_option("--px", px_text, "pixel size w,h");
  render->add_option("--out", out_base, "output base path")->required();
  render->add_option("--ray-length", ray_length, "boundary ray length in pixels (default: min(w,h)/2)");

  std::vector<std::string> argv_store{"modcone"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      const FunctionSpec spec = load_function_spec(analyze_opts.spec_path);
      const ConeDecomposition d = decompose(spec.series(), analyze_opts.harmonic);
      out << (analyze_opts.json ? to_json(d).dump(2) + "\n" : to_text(d));
      return 0;
    }
    if (classify->parsed()) {
      const FunctionSpec spec = load_function_spec(classify_opts.spec_path);
      const PowerSeries s = spec.series();
      const RayClassification r =
          classify_opts.harmonic ? classify_harmonic_ray(s, theta) : classify_ray(s, theta);
      out << (classify_opts.json ? to_json(r).dump(2) + "\n" : to_text(r));
      return 0;
    }
    if (verify->parsed()) {
      const FunctionSpec spec = load_function_spec(verify_opts.spec_path);
      const PowerSeries s = spec.series();
      const ConeDecomposition d = decompose(s, verify_opts.harmonic);
      cmp.t_max = tmax.value_or(default_t_max(s));
      const AgreementReport r = compare(d, s, cmp);
      out << (verify_opts.json ? to_json(r).dump(2) + "\n" : to_text(r));
      return r.mismatches.empty() ? 0 : 1;
    }
    if (solve->parsed()) {
      const FunctionSpec spec = load_function_spec(solve_opts.spec_path);
      if (spec.function.form() != ComplexFunction::Form::Polynomial) {
        throw Error(ErrorCode::InvalidInput, "solve needs a polynomial spec");
      }
      const auto start = parse_list(start_text, 2, "--start");
      const SolverResult r = descend(spec.series(), {start[0], start[1]}, sopts);
      out << (solve_opts.json ? to_json(r).dump(2) + "\n" : to_text(r));
      return r.converged ? 0 : 1;
    }
    if (render->parsed()) {
      const FunctionSpec spec = load_function_spec(render_opts.spec_path);
      RasterWindow w;
      w.center = spec.center;
      w.half_width = 1.2;
      w.half_height = 1.2;
      if (!window_text.empty()) {
        const auto v = parse_list(window_text, 4, "--window");
        w.center = {v[0], v[1]};
        w.half_width = v[2];
        w.half_height = v[3];
      }
      const auto px = parse_list(px_text, 2, "--px");
      if (px[0] != std::floor(px[0]) || px[1] != std::floor(px[1])) {
        throw Error(ErrorCode::InvalidInput, "--px needs integers");
      }
      w.px_width = static_cast<int>(px[0]);
      w.px_height = static_cast<int>(px[1]);
      w.validate();
      const SampleMode mode = render_opts.harmonic ? SampleMode::RealPart : SampleMode::Modulus;
      const ConeDecomposition d = decompose(spec.series(), render_opts.harmonic);
      const RasterImage img = rasterize_level_region(spec.function, w, mode, spec.center);
      const int len = ray_length > 0 ? ray_length : std::min(w.px_width, w.px_height) / 2;
      const std::string svg = overlay_svg(d, img, len);
      write_file(out_base + ".pgm", write_pgm(img));
      write_file(out_base + ".svg", svg);
      out << "wrote " << out_base << ".pgm and " << out_base << ".svg\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace modcone::cli
