// Command-line front end. Talks to the solver library exclusively through
// the C interface in c0ip.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "c0ip.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct MeshDeleter {
  void operator()(c0ip_mesh* m) const { c0ip_mesh_destroy(m); }
};
struct RunDeleter {
  void operator()(c0ip_run* r) const { c0ip_run_destroy(r); }
};
using MeshPtr = std::unique_ptr<c0ip_mesh, MeshDeleter>;
using RunPtr = std::unique_ptr<c0ip_run, RunDeleter>;

[[noreturn]] void die(c0ip_status status) {
  std::cerr << "error (" << c0ip_status_name(status) << "): " << c0ip_last_error() << "\n";
  std::exit(status == C0IP_ERR_INVALID_ARGUMENT ? kExitUsage : kExitNumeric);
}

void require_ok(c0ip_status status) {
  if (status != C0IP_OK) die(status);
}

std::string fmt(double value) {
  if (std::isnan(value)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) {
    std::cerr << "error: cannot open output file " << path << "\n";
    std::exit(kExitUsage);
  }
  return file;
}

struct RunFlags {
  std::string benchmark = "lshape";
  std::string mode = "adaptive";
  double theta = 0.5;
  double a = 2.0;
  std::size_t max_ndof = 10000;
  bool lambda1 = false;
  bool cond1 = false;
  std::string g_variant = "symmetric";
  std::string config_path;
  std::string output;
};

/// JSON config supplies defaults; explicitly passed flags override it.
void merge_config(const CLI::App& app, RunFlags& flags) {
  if (flags.config_path.empty()) return;
  std::ifstream in(flags.config_path);
  if (!in) {
    std::cerr << "error: cannot open config file " << flags.config_path << "\n";
    std::exit(kExitUsage);
  }
  nlohmann::json config;
  try {
    in >> config;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: bad JSON config: " << e.what() << "\n";
    std::exit(kExitUsage);
  }
  auto overridden = [&](const std::string& flag) { return app.count(flag) > 0; };
  if (config.contains("benchmark") && !overridden("--benchmark"))
    flags.benchmark = config["benchmark"].get<std::string>();
  if (config.contains("mode") && !overridden("--mode"))
    flags.mode = config["mode"].get<std::string>();
  if (config.contains("theta") && !overridden("--theta"))
    flags.theta = config["theta"].get<double>();
  if (config.contains("a") && !overridden("--a")) flags.a = config["a"].get<double>();
  if (config.contains("max_ndof") && !overridden("--max-ndof"))
    flags.max_ndof = config["max_ndof"].get<std::size_t>();
  if (config.contains("lambda1") && !overridden("--lambda1"))
    flags.lambda1 = config["lambda1"].get<bool>();
  if (config.contains("cond1") && !overridden("--cond1"))
    flags.cond1 = config["cond1"].get<bool>();
  if (config.contains("g_variant") && !overridden("--g-variant"))
    flags.g_variant = config["g_variant"].get<std::string>();
}

int cmd_run(const CLI::App& app, const RunFlags& flags_in) {
  RunFlags flags = flags_in;
  merge_config(app, flags);
  if (flags.a < 1.0) {
    std::cerr << "error: penalty prefactor a = " << flags.a
              << " rejected; stability requires a > 1 (a = 1 runs unguaranteed)\n";
    return kExitUsage;
  }
  if (flags.a == 1.0)
    std::cerr << "warning: a = 1 has no stability guarantee; proceeding\n";

  c0ip_run_options options;
  c0ip_run_options_init(&options);
  options.benchmark = flags.benchmark.c_str();
  options.mode = flags.mode == "uniform" ? C0IP_REFINE_UNIFORM : C0IP_REFINE_ADAPTIVE;
  options.theta = flags.theta;
  options.a = flags.a;
  options.max_ndof = flags.max_ndof;
  options.compute_lambda1 = flags.lambda1 ? 1 : 0;
  options.compute_cond1 = flags.cond1 ? 1 : 0;
  options.g_variant = flags.g_variant == "published" ? C0IP_G_PUBLISHED : C0IP_G_SYMMETRIC;

  c0ip_run* raw = nullptr;
  require_ok(c0ip_run_execute(&options, &raw));
  RunPtr run(raw);

  std::ofstream file;
  std::ostream& out = open_output(flags.output, file);
  out << "level,ndof,triangles,eta,error,lambda1,cond1\n";
  for (std::size_t i = 0; i < c0ip_run_level_count(run.get()); ++i) {
    c0ip_run_record rec;
    require_ok(c0ip_run_record_at(run.get(), i, &rec));
    out << rec.level << ',' << rec.ndof << ',' << rec.triangles << ',' << fmt(rec.eta) << ','
        << fmt(rec.error) << ',' << fmt(rec.lambda1) << ',' << fmt(rec.cond1) << '\n';
  }
  return kExitOk;
}

int cmd_sweep(const std::string& benchmark, int rounds, int max_pow, int grid) {
  std::vector<double> a_values;
  for (int p = 0; p <= max_pow; ++p) a_values.push_back(std::ldexp(1.0, p));
  std::vector<c0ip_sweep_row> rows(a_values.size());
  if (grid > 0) {
    require_ok(c0ip_sweep_a_grid(grid, a_values.data(), a_values.size(), rows.data()));
  } else {
    require_ok(c0ip_sweep_a(benchmark.c_str(), rounds, a_values.data(), a_values.size(),
                            rows.data()));
  }
  std::cout << "a,ndof,lambda1,cond1\n";
  for (const auto& row : rows)
    std::cout << fmt(row.a) << ',' << row.ndof << ',' << fmt(row.lambda1) << ','
              << fmt(row.cond1) << '\n';
  return kExitOk;
}

MeshPtr load_mesh(const std::string& mesh_path, const std::string& benchmark, int rounds) {
  c0ip_mesh* raw = nullptr;
  if (!mesh_path.empty()) {
    require_ok(c0ip_mesh_read(mesh_path.c_str(), &raw));
  } else {
    require_ok(c0ip_mesh_benchmark(benchmark.c_str(), &raw));
  }
  MeshPtr mesh(raw);
  if (rounds > 0) {
    c0ip_mesh* refined = nullptr;
    require_ok(c0ip_mesh_refine_uniform(mesh.get(), rounds, &refined));
    mesh.reset(refined);
  }
  return mesh;
}

int cmd_export_sigma(const std::string& mesh_path, const std::string& benchmark, int rounds,
                     int k, double a, const std::string& variant,
                     const std::string& degrees_csv, const std::string& rect_data,
                     const std::string& output) {
  std::ofstream file;
  std::ostream& out = open_output(output, file);

  if (variant == "rectangle") {
    if (rect_data.empty()) {
      std::cerr << "error: --variant rectangle needs --rect-data (rows \"h,area_plus[,area_minus]\")\n";
      return kExitUsage;
    }
    std::ifstream in(rect_data);
    if (!in) {
      std::cerr << "error: cannot open " << rect_data << "\n";
      return kExitUsage;
    }
    std::vector<double> h, ap, am;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream row(line);
      double hv = 0.0, apv = 0.0, amv = -1.0;
      if (!(row >> hv >> apv)) {
        std::cerr << "error: malformed rectangle row: " << line << "\n";
        return kExitUsage;
      }
      row >> amv;
      h.push_back(hv);
      ap.push_back(apv);
      am.push_back(amv);
    }
    std::vector<double> sigma(h.size());
    require_ok(c0ip_sigma_rectangle(k, a, h.data(), ap.data(), am.data(), h.size(),
                                    sigma.data()));
    out << "edge,v0,v1,interior,sigma\n";
    for (std::size_t e = 0; e < sigma.size(); ++e)
      out << e << ",-1,-1," << (am[e] > 0.0 ? 1 : 0) << ',' << fmt(sigma[e]) << '\n';
    return kExitOk;
  }

  MeshPtr mesh = load_mesh(mesh_path, benchmark, rounds);
  std::size_t n_edges = 0;
  require_ok(c0ip_mesh_edge_count(mesh.get(), &n_edges));
  std::vector<c0ip_sigma_row> rows(n_edges);

  if (variant == "variable") {
    if (degrees_csv.empty()) {
      std::cerr << "error: --variant variable needs --degrees (comma list, one per triangle)\n";
      return kExitUsage;
    }
    std::vector<int> degrees;
    std::stringstream ss(degrees_csv);
    std::string token;
    while (std::getline(ss, token, ',')) degrees.push_back(std::stoi(token));
    require_ok(c0ip_sigma_table_variable(mesh.get(), degrees.data(), a, rows.data()));
  } else {
    require_ok(c0ip_sigma_table(mesh.get(), k, a, rows.data()));
  }

  out << "edge,v0,v1,interior,sigma\n";
  for (const auto& row : rows)
    out << row.edge << ',' << row.v0 << ',' << row.v1 << ',' << row.interior << ','
        << fmt(row.sigma) << '\n';
  return kExitOk;
}

int cmd_export_mesh(const std::string& benchmark, int rounds, const std::string& output) {
  MeshPtr mesh = load_mesh("", benchmark, rounds);
  require_ok(c0ip_mesh_write(mesh.get(), output.c_str()));
  return kExitOk;
}

int cmd_export_matrix(const std::string& mesh_path, const std::string& benchmark, int rounds,
                      double a, const std::string& which, const std::string& output) {
  MeshPtr mesh = load_mesh(mesh_path, benchmark, rounds);
  require_ok(c0ip_mesh_matrix_export(mesh.get(), a, which.c_str(), output.c_str()));
  return kExitOk;
}

int cmd_export_eta(const std::string& benchmark, int rounds, double a,
                   const std::string& g_variant, const std::string& output) {
  const c0ip_g_variant variant =
      g_variant == "published" ? C0IP_G_PUBLISHED : C0IP_G_SYMMETRIC;
  size_t count = 0;
  require_ok(c0ip_benchmark_eta(benchmark.c_str(), rounds, a, variant, nullptr, 0, &count,
                                nullptr));
  std::vector<double> eta2(count);
  double total = 0.0;
  require_ok(c0ip_benchmark_eta(benchmark.c_str(), rounds, a, variant, eta2.data(), count,
                                &count, &total));
  std::ofstream file;
  std::ostream& out = open_output(output, file);
  out << "triangle,eta2\n";
  for (size_t t = 0; t < count; ++t) out << t << ',' << fmt(eta2[t]) << '\n';
  return kExitOk;
}

int cmd_check(const std::string& mesh_path) {
  MeshPtr mesh = load_mesh(mesh_path, "", 0);
  c0ip_mesh_report report;
  require_ok(c0ip_mesh_stats(mesh.get(), &report));
  std::cout << "vertices:       " << report.vertices << "\n"
            << "triangles:      " << report.triangles << "\n"
            << "edges:          " << report.edges << "\n"
            << "interior edges: " << report.interior_edges << "\n"
            << "boundary edges: " << report.boundary_edges << "\n"
            << "interior dofs:  " << report.interior_dofs << "\n"
            << "total area:     " << fmt(report.total_area) << "\n"
            << "min angle:      " << fmt(report.min_angle * 180.0 / 3.14159265358979323846)
            << " deg\n"
            << "euler (V-E+T):  "
            << static_cast<long long>(report.vertices) - static_cast<long long>(report.edges) +
                   static_cast<long long>(report.triangles)
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biharmonic C0 interior penalty solver with automatic edge-local penalties"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "Adaptive or uniform refinement run; emits CSV");
  run->add_option("--benchmark", run_flags.benchmark,
                  "lshape|cusp|dumbbell|fourslit|square_smooth");
  run->add_option("--mode", run_flags.mode, "adaptive|uniform")
      ->check(CLI::IsMember({"adaptive", "uniform"}));
  run->add_option("--theta", run_flags.theta, "bulk marking parameter in (0,1]");
  run->add_option("--a", run_flags.a, "penalty prefactor (> 1 for guaranteed stability)");
  run->add_option("--max-ndof", run_flags.max_ndof, "stop once ndof exceeds this");
  run->add_flag("--lambda1", run_flags.lambda1, "record the stability eigenvalue per level");
  run->add_flag("--cond1", run_flags.cond1, "record the 1-norm condition estimate per level");
  run->add_option("--g-variant", run_flags.g_variant,
                  "angular factor of the singular solutions: symmetric|published")
      ->check(CLI::IsMember({"symmetric", "published"}));
  run->add_option("--config", run_flags.config_path, "JSON config file; flags override it");
  run->add_option("--output", run_flags.output, "CSV output path (default stdout)");

  std::string sweep_benchmark = "lshape";
  int sweep_rounds = 10;
  int sweep_max_pow = 17;
  int sweep_grid = 0;
  auto* sweep = app.add_subcommand("sweep-a",
                                   "Stability eigenvalue and conditioning over a = 1,2,4,...");
  sweep->add_option("--benchmark", sweep_benchmark, "benchmark mesh to refine uniformly");
  sweep->add_option("--rounds", sweep_rounds, "uniform refinement rounds before the sweep");
  sweep->add_option("--a-max-pow", sweep_max_pow, "largest exponent p in a = 2^p");
  sweep->add_option("--grid", sweep_grid,
                    "use the structured uniform L-shape grid with this many cells per unit "
                    "side instead of --benchmark/--rounds (32 reproduces the reference study)");

  std::string sigma_mesh, sigma_benchmark = "lshape", sigma_variant = "triangle";
  std::string sigma_degrees, sigma_rect_data, sigma_output;
  int sigma_rounds = 0, sigma_k = 2;
  double sigma_a = 2.0;
  auto* sig = app.add_subcommand("export-sigma", "Per-edge penalty parameters as CSV");
  sig->add_option("--mesh", sigma_mesh, "mesh file (alternative to --benchmark)");
  sig->add_option("--benchmark", sigma_benchmark, "benchmark mesh");
  sig->add_option("--rounds", sigma_rounds, "uniform refinement rounds first");
  sig->add_option("--k", sigma_k, "polynomial degree (>= 2)");
  sig->add_option("--a", sigma_a, "penalty prefactor");
  sig->add_option("--variant", sigma_variant, "triangle|variable|rectangle")
      ->check(CLI::IsMember({"triangle", "variable", "rectangle"}));
  sig->add_option("--degrees", sigma_degrees, "per-triangle degrees for --variant variable");
  sig->add_option("--rect-data", sigma_rect_data,
                  "CSV of rectangle edges \"h,area_plus[,area_minus]\"");
  sig->add_option("--output", sigma_output, "CSV output path (default stdout)");

  std::string em_benchmark = "lshape", em_output = "mesh.txt";
  int em_rounds = 0;
  auto* em = app.add_subcommand("export-mesh", "Write a benchmark mesh in the text format");
  em->add_option("--benchmark", em_benchmark, "benchmark name");
  em->add_option("--rounds", em_rounds, "uniform refinement rounds first");
  em->add_option("--output", em_output, "destination path")->required();

  std::string mx_mesh, mx_benchmark = "lshape", mx_which = "system", mx_output;
  int mx_rounds = 0;
  double mx_a = 2.0;
  auto* mx = app.add_subcommand("export-matrix",
                                "Assembled operator in 0-based coordinate text format");
  mx->add_option("--mesh", mx_mesh, "mesh file (alternative to --benchmark)");
  mx->add_option("--benchmark", mx_benchmark, "benchmark mesh");
  mx->add_option("--rounds", mx_rounds, "uniform refinement rounds first");
  mx->add_option("--a", mx_a, "penalty prefactor");
  mx->add_option("--which", mx_which, "system|stiffness|jump|penalty|norm")
      ->check(CLI::IsMember({"system", "stiffness", "jump", "penalty", "norm"}));
  mx->add_option("--output", mx_output, "destination path")->required();

  std::string eta_benchmark = "lshape", eta_g = "symmetric", eta_output;
  int eta_rounds = 2;
  double eta_a = 2.0;
  auto* eta = app.add_subcommand("export-eta",
                                 "Per-triangle squared error indicators of one solve");
  eta->add_option("--benchmark", eta_benchmark, "benchmark name");
  eta->add_option("--rounds", eta_rounds, "uniform refinement rounds first");
  eta->add_option("--a", eta_a, "penalty prefactor");
  eta->add_option("--g-variant", eta_g, "symmetric|published")
      ->check(CLI::IsMember({"symmetric", "published"}));
  eta->add_option("--output", eta_output, "CSV output path (default stdout)");

  std::string check_mesh;
  auto* check = app.add_subcommand("check", "Validate a mesh file and print its statistics");
  check->add_option("--mesh", check_mesh, "mesh file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  if (run->parsed()) return cmd_run(*run, run_flags);
  if (sweep->parsed()) return cmd_sweep(sweep_benchmark, sweep_rounds, sweep_max_pow, sweep_grid);
  if (sig->parsed())
    return cmd_export_sigma(sigma_mesh, sigma_benchmark, sigma_rounds, sigma_k, sigma_a,
                            sigma_variant, sigma_degrees, sigma_rect_data, sigma_output);
  if (em->parsed()) return cmd_export_mesh(em_benchmark, em_rounds, em_output);
  if (mx->parsed())
    return cmd_export_matrix(mx_mesh, mx_benchmark, mx_rounds, mx_a, mx_which, mx_output);
  if (eta->parsed()) return cmd_export_eta(eta_benchmark, eta_rounds, eta_a, eta_g, eta_output);
  if (check->parsed()) return cmd_check(check_mesh);
  return kExitUsage;
}
