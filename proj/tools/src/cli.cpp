#include "cli.hpp"

#include "render.hpp"
#include "schottky/certificate.hpp"
#include "schottky/explorer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace schottky::cli {
namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string schedule_path;  // empty: closed-form schedule
  unsigned count = 6;
  unsigned k = 2;
  unsigned m = 6;
  unsigned n_max = 4;
  std::string alpha;  // empty: 1/(2k)
  std::string backend = "exact";
  std::string out;
  unsigned jobs = 1;
  // estimate
  unsigned box_depth = 4;
  long scale_min = 1;
  long scale_max = 64;
  unsigned fine_scales = 3;
  double tolerance = 1e-9;
  // render
  int width = 1200;
  unsigned depth = 2;
  unsigned max_depth = 5;
  bool color_by_level = true;
  // explore
  std::string word;
  bool periodic = false;
  bool escalate = false;
  unsigned ball = 4;
  std::string horizon = "50";
  std::string step = "1/4";
  std::string basepoint = "0,1";
  unsigned limit_depth = 16;
  std::string summary;
};

// One flag that may also come from the config file.
struct Field {
  std::string key;
  CLI::Option* option;
  std::function<void(const nlohmann::json&)> assign;
};

class Binder {
 public:
  explicit Binder(CLI::App* app) : app_(app) {}

  template <class T>
  CLI::Option* option(const std::string& flag, const std::string& key, T& target, const std::string& help) {
    CLI::Option* opt = app_->add_option(flag, target, help)->capture_default_str();
    fields_.push_back({key, opt, [&target](const nlohmann::json& v) { target = v.get<T>(); }});
    return opt;
  }

  CLI::Option* flag(const std::string& flag, const std::string& key, bool& target, const std::string& help) {
    CLI::Option* opt = app_->add_flag(flag, target, help);
    fields_.push_back({key, opt, [&target](const nlohmann::json& v) { target = v.get<bool>(); }});
    return opt;
  }

  // Fills every field that was not given on the command line from the
  // config file, which uses the same keys.
  void apply_config(const std::string& path) const {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
      throw ConfigError(std::string("config file is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
    for (const auto& [key, value] : doc.items()) {
      if (key == "subcommand") {
        if (!value.is_string() || value.get<std::string>() != app_->get_name()) {
          throw ConfigError("config file is for subcommand '" + value.dump() + "'");
        }
        continue;
      }
      const auto it = std::find_if(fields_.begin(), fields_.end(), [&](const Field& f) { return f.key == key; });
      if (it == fields_.end()) throw ConfigError("unknown config key '" + key + "'");
      if (it->option->count() > 0) continue;
      try {
        it->assign(value);
      } catch (const nlohmann::json::exception& ex) {
        throw ConfigError("config key '" + key + "' has the wrong type: " + ex.what());
      }
    }
  }

 private:
  CLI::App* app_;
  std::vector<Field> fields_;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.close();
  if (!out) throw IoError("failed to write '" + path + "'");
}

Rational parse_config_rational(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(std::string(what) + ": " + ex.what());
  }
}

Backend parse_backend(const std::string& text) {
  try {
    return Backend::parse(text);
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(ex.what());
  }
}

GeneratorSchedule load_or_paper(const RunConfig& cfg, Letter needed) {
  if (cfg.schedule_path.empty()) return paper_schedule(needed);
  if (!std::ifstream(cfg.schedule_path)) throw IoError("cannot open schedule file '" + cfg.schedule_path + "'");
  try {
    return load_schedule(cfg.schedule_path);
  } catch (const ScheduleError& ex) {
    throw ConfigError(ex.what());
  }
}

void require_window(const GeneratorSchedule& schedule, WordWindow window) {
  for (Letter i = window.first(); i <= window.last(); ++i) {
    if (!schedule.contains(i)) throw ConfigError("schedule has no generator " + std::to_string(i));
  }
}

int cmd_schedule(const RunConfig& cfg) {
  if (cfg.count < 1) throw ConfigError("--count must be at least 1");
  const GeneratorSchedule schedule = cfg.schedule_path.empty() ? paper_schedule(cfg.count) : load_or_paper(cfg, 0);
  write_output(cfg.out, schedule_to_json(schedule));
  return kOk;
}

int cmd_certify(const RunConfig& cfg) {
  if (cfg.k < 1) throw ConfigError("--k must be at least 1");
  if (cfg.m < 2) throw ConfigError("--m must be at least 2");
  if (cfg.n_max < 1) throw ConfigError("--n must be at least 1");
  if (cfg.jobs < 1) throw ConfigError("--jobs must be at least 1");
  CertifyOptions options;
  options.k = cfg.k;
  options.m = cfg.m;
  options.n_max = cfg.n_max;
  options.alpha = cfg.alpha.empty() ? Rational(1, 2 * cfg.k) : parse_config_rational(cfg.alpha, "--alpha");
  if (options.alpha <= 0 || options.alpha > 1) throw ConfigError("--alpha must lie in (0, 1]");
  options.sums.backend = parse_backend(cfg.backend);
  options.sums.jobs = cfg.jobs;

  const GeneratorSchedule schedule = load_or_paper(cfg, cfg.k + cfg.m);
  require_window(schedule, WordWindow{options.k, options.m});
  const Certificate cert = certify_dimension_upper(schedule, options);
  if (!cfg.out.empty()) write_output(cfg.out, certificate_to_json(cert));

  std::cout << "dim <= " << to_string(cert.alpha) << " for k=" << cert.k << ", window m=" << cert.m
            << ", n_max=" << cert.n_max << ", backend " << cert.backend.to_string() << "\n";
  for (const auto& c : cert.checks) {
    std::cout << "  [" << (c.holds ? "ok" : "FAIL") << "] " << c.name << ": " << to_decimal(c.lhs, 8)
              << " <= " << to_decimal(c.rhs, 8) << "\n";
  }
  std::cout << "verdict: " << to_string(cert.verdict) << "\n";
  if (cert.verdict == Verdict::certified) return kOk;
  const auto failing = cert.failing_checks();
  if (!failing.empty()) {
    std::cerr << "failing checks:";
    for (const auto& name : failing) std::cerr << ' ' << name;
    std::cerr << "\n";
  }
  return kCheckFailed;
}

int cmd_estimate(const RunConfig& cfg) {
  if (cfg.m < 2) throw ConfigError("--m must be at least 2");
  if (cfg.scale_min > cfg.scale_max) throw ConfigError("--scale-min exceeds --scale-max");
  if (cfg.fine_scales < 2) throw ConfigError("--fine must be at least 2");
  const WordWindow window{cfg.k, cfg.m};
  const GeneratorSchedule schedule = load_or_paper(cfg, cfg.k + cfg.m);
  require_window(schedule, window);
  SumOptions sums;
  sums.backend = parse_backend(cfg.backend);
  sums.jobs = cfg.jobs;

  std::ostringstream csv;
  csv << "n,alpha_n,residual\n";
  char buf[64];
  for (unsigned n = 1; n <= cfg.n_max; ++n) {
    try {
      const BisectionResult r = level_dimension_bisect(schedule, window, n, cfg.tolerance, sums);
      std::snprintf(buf, sizeof buf, "%.12g,%.3e", r.alpha, r.residual);
      csv << n << ',' << buf << '\n';
    } catch (const BracketError& ex) {
      csv << n << ",error," << '"' << ex.what() << '"' << '\n';
    }
  }
  const auto points = limit_set_sample(schedule, window, cfg.box_depth);
  const auto scales = dyadic_scales(std::max(cfg.scale_max - static_cast<long>(cfg.fine_scales) + 1, cfg.scale_min),
                                    cfg.scale_max);
  try {
    const BoxCount box = box_count(points, scales);
    std::snprintf(buf, sizeof buf, "%.6f", box.slope);
    csv << "box_slope," << buf << ",\n";
  } catch (const std::invalid_argument& ex) {
    csv << "box_slope,error," << '"' << ex.what() << '"' << '\n';
  }
  write_output(cfg.out, csv.str());
  return kOk;
}

int cmd_render(const RunConfig& cfg) {
  if (cfg.m < 1) throw ConfigError("--m must be at least 1");
  if (cfg.depth < 1) throw ConfigError("--depth must be at least 1");
  if (cfg.depth > cfg.max_depth) {
    throw ConfigError("--depth " + std::to_string(cfg.depth) + " exceeds the maximum " +
                      std::to_string(cfg.max_depth));
  }
  if (cfg.width < 16) throw ConfigError("--width must be at least 16 px");
  RenderOptions options;
  options.window = {cfg.k, cfg.m};
  options.depth = cfg.depth;
  options.width = cfg.width;
  options.color_by_level = cfg.color_by_level;
  options.backend = parse_backend(cfg.backend);
  const GeneratorSchedule schedule = load_or_paper(cfg, cfg.k + cfg.m);
  require_window(schedule, options.window);
  write_output(cfg.out, render_svg(schedule, options));
  return kOk;
}

HPoint<Rational> parse_basepoint(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError("--basepoint expects x,y");
  const Rational x = parse_config_rational(text.substr(0, comma), "--basepoint");
  const Rational y = parse_config_rational(text.substr(comma + 1), "--basepoint");
  if (y <= 0) throw ConfigError("--basepoint needs y > 0");
  return HPoint<Rational>(x, y);
}

int cmd_explore(const RunConfig& cfg) {
  if (cfg.word.empty()) throw ConfigError("--word is required");
  if (cfg.periodic && cfg.escalate) throw ConfigError("--periodic and --escalate exclude each other");
  if (cfg.limit_depth < 1) throw ConfigError("--depth must be at least 1");
  std::optional<WordPath> path;
  try {
    const ReducedWord word = parse_word(cfg.word);
    path = cfg.periodic ? WordPath::periodic(word) : cfg.escalate ? WordPath::escalating(word) : WordPath::finite(word);
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(std::string("--word: ") + ex.what());
  }
  const std::size_t depth = path->length() ? std::min<std::size_t>(*path->length(), cfg.limit_depth) : cfg.limit_depth;
  const WordWindow window{cfg.k, cfg.m};
  const GeneratorSchedule schedule = load_or_paper(cfg, std::max<Letter>(cfg.k + cfg.m, path->max_letter(depth)));
  require_window(schedule, window);
  for (std::size_t j = 0; j < depth; ++j) {
    if (!schedule.contains(path->letter(j))) {
      throw ConfigError("schedule has no generator " + std::to_string(path->letter(j)));
    }
  }
  const Rational horizon = parse_config_rational(cfg.horizon, "--horizon");
  const Rational step = parse_config_rational(cfg.step, "--step");
  if (horizon < 0) throw ConfigError("--horizon must be nonnegative");
  if (step <= 0) throw ConfigError("--step must be positive");
  const Backend backend = parse_backend(cfg.backend);

  OrbitBall ball = [&] {
    try {
      return OrbitBall(schedule, window, parse_basepoint(cfg.basepoint), cfg.ball, backend.bits);
    } catch (const GeometryError& ex) {
      throw ConfigError(ex.what());
    }
  }();
  const LimitEstimate lp = limit_point(schedule, *path, depth);
  const auto lambda = BoundaryPoint<Interval>::finite(Interval(lp.center, backend.bits));
  const RayProfile profile = conicality_profile(ball, lambda, horizon, step);
  const RaySummary summary = summarize_profile(profile);
  const std::string lambda_text = to_decimal(lp.center, 20) + " +/- " + to_decimal(lp.radius, 3);
  const std::string word_text = to_string(path->kind()) + ":" + path->seed().to_string();

  if (!cfg.out.empty()) write_output(cfg.out, profile_to_csv(profile));
  if (!cfg.summary.empty()) write_output(cfg.summary, summary_to_json(summary, profile, word_text, lambda_text));
  std::cout << word_text << " -> lambda = " << lambda_text << "\n";
  std::cout << "classification: " << to_string(summary.classification) << " (heuristic; T=" << to_string(horizon)
            << ", step=" << to_string(step) << ", ball=" << cfg.ball << ")\n";
  if (!profile.samples.empty()) std::cout << "beta proxy: " << summary.beta << "\n";
  return kOk;
}

void add_common(Binder& b, RunConfig& cfg, std::string& config_path, CLI::App* app) {
  b.option("--backend", "backend", cfg.backend, "exact or hiprec:<bits>");
  b.option("--out", "out", cfg.out, "output path (- for standard output)");
  b.option("--jobs", "jobs", cfg.jobs, "worker threads for level sums");
  b.option("--schedule", "schedule", cfg.schedule_path, "schedule JSON instead of the closed-form schedule");
  app->add_option("--config", config_path, "JSON file with defaults for any of these flags");
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Circle-inversion group toolkit: schedules, dimension certificates, estimators, rendering"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string config_path;

  CLI::App* schedule = app.add_subcommand("schedule", "write the generator schedule as JSON");
  Binder schedule_b(schedule);
  add_common(schedule_b, cfg, config_path, schedule);
  bool paper = true;
  schedule_b.flag("--paper", "paper", paper, "closed-form schedule (default)");
  schedule_b.option("--count", "count", cfg.count, "number of generators");

  CLI::App* certify = app.add_subcommand("certify", "certify dim <= alpha for the window (k, k+m]");
  Binder certify_b(certify);
  add_common(certify_b, cfg, config_path, certify);
  certify_b.option("--k", "k", cfg.k, "alphabet threshold");
  certify_b.option("--alpha", "alpha", cfg.alpha, "exponent as p/q (default 1/(2k))");
  certify_b.option("--m", "m", cfg.m, "window size");
  certify_b.option("--n", "n_max", cfg.n_max, "deepest word length checked");

  CLI::App* estimate = app.add_subcommand("estimate", "bisection dimension estimates and box counting");
  Binder estimate_b(estimate);
  add_common(estimate_b, cfg, config_path, estimate);
  estimate_b.option("--k", "k", cfg.k, "alphabet threshold");
  estimate_b.option("--m", "m", cfg.m, "window size");
  estimate_b.option("--n", "n_max", cfg.n_max, "levels to bisect");
  estimate_b.option("--box-depth", "box_depth", cfg.box_depth, "disk depth of the box-count sample");
  estimate_b.option("--scale-min", "scale_min", cfg.scale_min, "coarsest scale exponent j in 2^-j");
  estimate_b.option("--scale-max", "scale_max", cfg.scale_max, "finest scale exponent j in 2^-j");
  estimate_b.option("--fine", "fine_scales", cfg.fine_scales, "number of finest scales in the slope fit");
  estimate_b.option("--tolerance", "tolerance", cfg.tolerance, "bisection tolerance on alpha");

  CLI::App* render = app.add_subcommand("render", "draw the nested disks as SVG");
  Binder render_b(render);
  add_common(render_b, cfg, config_path, render);
  render_b.option("--k", "k", cfg.k, "alphabet threshold");
  render_b.option("--m", "m", cfg.m, "window size");
  render_b.option("--depth", "depth", cfg.depth, "deepest level drawn");
  render_b.option("--max-depth", "max_depth", cfg.max_depth, "refuse deeper renders");
  render_b.option("--width", "width", cfg.width, "image width in px");
  render_b.option("--color-by-level", "color_by_level", cfg.color_by_level, "colour disks by level");

  CLI::App* explore = app.add_subcommand("explore", "limit point and ray diagnostics for a word");
  Binder explore_b(explore);
  add_common(explore_b, cfg, config_path, explore);
  explore_b.option("--word", "word", cfg.word, "comma-separated reduced word, e.g. 1,2");
  explore_b.flag("--periodic", "periodic", cfg.periodic, "repeat the word forever");
  explore_b.flag("--escalate", "escalate", cfg.escalate, "continue with last+1, last+2, ...");
  explore_b.option("--k", "k", cfg.k, "orbit-ball alphabet threshold");
  explore_b.option("--m", "m", cfg.m, "orbit-ball alphabet size");
  explore_b.option("--ball", "ball", cfg.ball, "orbit-ball word radius");
  explore_b.option("--horizon", "horizon", cfg.horizon, "ray length T");
  explore_b.option("--step", "step", cfg.step, "sampling step along the ray");
  explore_b.option("--basepoint", "basepoint", cfg.basepoint, "basepoint x,y in the half-plane");
  explore_b.option("--depth", "depth", cfg.limit_depth, "disk depth of the limit point estimate");
  explore_b.option("--summary", "summary", cfg.summary, "classification JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadConfig;
  }

  try {
    if (*schedule) {
      schedule_b.apply_config(config_path);
      return cmd_schedule(cfg);
    }
    if (*certify) {
      certify_b.apply_config(config_path);
      return cmd_certify(cfg);
    }
    // Defaults that differ from the shared ones are set before the config
    // file is read, so both flags and config values still take precedence.
    if (*estimate) {
      if (estimate->count("--m") == 0) cfg.m = 4;
      if (estimate->count("--n") == 0) cfg.n_max = 3;
      estimate_b.apply_config(config_path);
      return cmd_estimate(cfg);
    }
    if (*render) {
      if (render->count("--m") == 0) cfg.m = 3;
      render_b.apply_config(config_path);
      return cmd_render(cfg);
    }
    if (*explore) {
      if (explore->count("--k") == 0) cfg.k = 0;
      explore_b.apply_config(config_path);
      return cmd_explore(cfg);
    }
  } catch (const ConfigError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kBadConfig;
  } catch (const IoError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kIoError;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kBadConfig;
  }
  return kBadConfig;
}

}  // namespace schottky::cli
