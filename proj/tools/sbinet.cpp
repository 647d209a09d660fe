// sbinet: annotated network datasets in, dashboard bundle out.

#include <csignal>
#include <ctime>
#include <iostream>

#include <CLI11.hpp>

#include "sbinet/error.hpp"
#include "sbinet/pipeline.hpp"
#include "sbinet/server.hpp"

namespace {

enum Exit { kOk = 0, kInput = 2, kEmpty = 3, kEnvironment = 4 };

struct Config {
  std::string nodes;
  std::string edges;
  std::string out;
  std::string manifest;
  std::size_t k = 10;
  std::string criterion = "hops";
  bool reproducible = false;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string viewer;
  std::string coord_scale = "auto";
  unsigned threads = 0;
};

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

sbinet::BuildOptions build_options(const Config& cfg) {
  using Mode = sbinet::CoordinateScaling::Mode;
  sbinet::BuildOptions opts;
  if (cfg.coord_scale == "auto") {
    opts.scaling.mode = Mode::Auto;
  } else if (cfg.coord_scale == "none") {
    opts.scaling.mode = Mode::None;
  } else {
    opts.scaling.mode = Mode::Divisor;
    try {
      opts.scaling.divisor = std::stod(cfg.coord_scale);
    } catch (const std::exception&) {
      throw sbinet::Error(sbinet::ErrorKind::InvalidCoordinate,
                          "--coord-scale takes auto, none or a positive divisor");
    }
    if (!(opts.scaling.divisor > 0)) {
      throw sbinet::Error(sbinet::ErrorKind::InvalidCoordinate,
                          "--coord-scale divisor must be positive");
    }
  }
  return opts;
}

sbinet::AnnotatedDataset load(const std::string& path) {
  try {
    return sbinet::load_annotated_dataset(path);
  } catch (const sbinet::Error& e) {
    throw sbinet::Error(e.kind(), path + ": " + e.what());
  }
}

sbinet::Inspection inspect(const Config& cfg) {
  return sbinet::inspect(load(cfg.nodes), load(cfg.edges), build_options(cfg));
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_inspect(const Config& cfg) {
  auto in = inspect(cfg);
  print_warnings(in.network.warnings());
  std::cout << sbinet::inspection_report(in).dump(2) << "\n";
  return kOk;
}

int cmd_discover(const Config& cfg) {
  auto in = inspect(cfg);
  print_warnings(in.network.warnings());
  auto d = sbinet::discover(in);
  std::cout << sbinet::discovery_report(in, d).dump(2) << "\n";
  return kOk;
}

int cmd_build(const Config& cfg) {
  auto criterion = sbinet::parse_criterion(cfg.criterion);
  if (!criterion) {
    throw sbinet::Error(sbinet::ErrorKind::UnsupportedCriterion,
                        "--criterion takes hops, weight or time");
  }
  std::optional<sbinet::CustomizationManifest> manifest;
  if (!cfg.manifest.empty()) manifest = sbinet::load_manifest(cfg.manifest);

  auto in = inspect(cfg);
  auto d = sbinet::discover(in);
  sbinet::PipelineOptions opts;
  opts.k = cfg.k;
  opts.criterion = *criterion;
  opts.threads = cfg.threads;
  auto built = sbinet::build_dashboard(in, d, opts, manifest);
  print_warnings(built.results.warnings);

  sbinet::EmitOptions emit{cfg.reproducible, utc_now()};
  try {
    sbinet::emit_bundle(built.model, built.tables, cfg.out, emit);
  } catch (const sbinet::Error& e) {
    if (e.kind() != sbinet::ErrorKind::IoError) throw;
    std::cerr << "error: " << e.what() << "\n";
    return kEnvironment;
  }

  nlohmann::json objects = nlohmann::json::array();
  std::cerr << "domain " << sbinet::to_string(in.domain) << ", " << in.network.node_count()
            << " nodes, " << in.network.edge_count() << " edges\n";
  for (const auto& o : built.model.objects) {
    std::cerr << "  " << o.id << "  " << sbinet::to_string(o.viz) << "  " << o.title << "\n";
    objects.push_back({{"id", o.id}, {"title", o.title}, {"viz", std::string(sbinet::to_string(o.viz))}});
  }
  std::cout << nlohmann::json{{"out", cfg.out},
                              {"domain", std::string(sbinet::to_string(in.domain))},
                              {"objects", std::move(objects)},
                              {"files", {"dashboard.json", "edges.csv", "metrics.json", "nodes.csv"}}}
                   .dump(2)
            << "\n";
  return kOk;
}

sbinet::BundleServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int cmd_serve(const Config& cfg) {
  if (!std::filesystem::is_regular_file(std::filesystem::path(cfg.out) / "dashboard.json")) {
    std::cerr << "error: no dashboard.json in " << cfg.out << "\n";
    return kInput;
  }
  sbinet::ServeOptions opts{cfg.out, std::nullopt, cfg.host, cfg.port};
  if (!cfg.viewer.empty()) opts.viewer_dir = cfg.viewer;
  sbinet::BundleServer server(opts);
  if (!server.bind()) {
    std::cerr << "error: cannot bind " << cfg.host << ":" << cfg.port << " (port in use?)\n";
    return kEnvironment;
  }
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cout << nlohmann::json{{"url", "http://" + cfg.host + ":" + std::to_string(server.port()) + "/"}}.dump()
            << std::endl;
  server.listen();
  g_server = nullptr;
  return kOk;
}

int exit_code_for(sbinet::ErrorKind kind) {
  switch (kind) {
    case sbinet::ErrorKind::EmptyDashboard: return kEmpty;
    default: return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build interactive dashboards from semantically annotated network datasets."};
  app.require_subcommand(1);
  Config cfg;

  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--nodes", cfg.nodes, "Annotated node dataset (NodeSet)")->required()->check(CLI::ExistingFile);
    sub->add_option("--edges", cfg.edges, "Annotated edge dataset (EdgeSet)")->required()->check(CLI::ExistingFile);
    sub->add_option("--coord-scale", cfg.coord_scale,
                    "Coordinate scaling: auto (values above 1000 are micro-degrees), none, or a divisor")
        ->capture_default_str();
  };

  auto* inspect_cmd = app.add_subcommand("inspect", "Report domain, roles, bindings and capabilities as JSON");
  add_inputs(inspect_cmd);
  auto* discover_cmd = app.add_subcommand("discover", "List every indicator and metric with its applicability");
  add_inputs(discover_cmd);
  auto* build_cmd = app.add_subcommand("build", "Compute metrics and write the dashboard bundle");
  add_inputs(build_cmd);
  build_cmd->add_option("--out", cfg.out, "Bundle output directory")->required();
  build_cmd->add_option("--manifest", cfg.manifest, "JSON customization manifest")->check(CLI::ExistingFile);
  build_cmd->add_option("--k", cfg.k, "Entries in top-k / bottom-k charts")->capture_default_str();
  build_cmd->add_option("--criterion", cfg.criterion, "Shortest-path criterion: hops or weight")
      ->capture_default_str();
  build_cmd->add_flag("--reproducible", cfg.reproducible, "Omit the generation timestamp");
  build_cmd->add_option("--threads", cfg.threads, "Worker threads for path metrics (0 = all cores)")
      ->capture_default_str();
  auto* serve_cmd = app.add_subcommand("serve", "Serve a bundle and the viewer over HTTP");
  serve_cmd->add_option("--out", cfg.out, "Bundle directory")->required()->check(CLI::ExistingDirectory);
  serve_cmd->add_option("--port", cfg.port, "TCP port")->capture_default_str();
  serve_cmd->add_option("--host", cfg.host, "Interface to listen on")->capture_default_str();
  serve_cmd->add_option("--viewer", cfg.viewer, "Directory with viewer assets (index.html)")
      ->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*inspect_cmd) return cmd_inspect(cfg);
    if (*discover_cmd) return cmd_discover(cfg);
    if (*build_cmd) return cmd_build(cfg);
    if (*serve_cmd) return cmd_serve(cfg);
  } catch (const sbinet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEnvironment;
  }
  return kInput;
}
