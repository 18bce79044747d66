#include "pipeline.hpp"

#include <fstream>
#include <sstream>

#include "nagata/covers.hpp"
#include "nagata/errors.hpp"
#include "nagata/geometry.hpp"
#include "nagata/nagata_space.hpp"
#include "nagata/nesting.hpp"
#include "nagata/serialization.hpp"

namespace nagata::cli {
namespace {

using nlohmann::json;

const std::set<std::string> kAllChecks = {"n1", "n2", "ultra", "nesting", "coarse"};
const std::set<std::string> kRawChecks = {"n1", "n2", "ultra"};

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ArtifactWriter {
 public:
  explicit ArtifactWriter(std::filesystem::path dir) : dir_(std::move(dir)) {}

  void prepare() {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw OutputError("cannot create " + dir_.string() + ": " + ec.message());
  }

  void write(const std::string& name, const std::string& contents) {
    const auto path = dir_ / name;
    try {
      std::filesystem::create_directories(path.parent_path());
      write_file_atomic(path, contents);
    } catch (const std::exception& e) {
      throw OutputError(std::string("cannot write ") + path.string() + ": " + e.what());
    }
  }

  void json_file(const std::string& name, const json& j) { write(name, dump(j)); }

 private:
  std::filesystem::path dir_;
};

std::string level_name(std::size_t k) {
  std::ostringstream os;
  os << "covers/level_";
  os.width(3);
  os.fill('0');
  os << k << ".json";
  return os.str();
}

std::vector<Distance> default_radii(const DistanceMatrix& d) {
  Distance diam = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (Distance v : d.row(i)) diam = std::max(diam, v);
  std::vector<Distance> out;
  for (Distance r = 1; r <= std::max<Distance>(diam, 1); r *= 2) out.push_back(r);
  return out;
}

json mode_json(const CheckMode& mode) {
  if (const auto* s = std::get_if<Sampled>(&mode))
    return {{"kind", "sampled"}, {"count", s->count}, {"seed", s->seed}};
  return {{"kind", "exhaustive"}};
}

json config_json(const PipelineConfig& c) {
  json j;
  if (c.space_file) {
    j["space_file"] = c.space_file->filename().string();
  } else {
    j["generator"] = c.generator;
    j["params"] = c.params;
    j["seed"] = c.seed;
  }
  j["dimension"] = c.dimension;
  j["d1"] = c.d1;
  j["levels"] = c.levels == 0 ? json("saturate") : json(c.levels);
  j["provider"] = c.provider;
  j["retries"] = c.retries;
  j["target"] = c.target;
  j["checks"] = c.checks;
  j["mode"] = mode_json(c.mode);
  return j;
}

CoverProvider choose_provider(const PipelineConfig& c, const FiniteMetricSpace& space,
                              std::string& chosen) {
  const std::size_t colors = c.dimension + 1;
  chosen = c.provider;
  if (chosen == "auto") chosen = (colors >= 2 && is_line_metric(space)) ? "interval" : "greedy";
  if (chosen == "interval") return interval_provider(space, colors);
  if (chosen == "greedy") return greedy_provider(space, colors);
  throw InputError("unknown provider '" + c.provider + "' (expected auto, interval, greedy)");
}

CheckReport nesting_report(const FiniteMetricSpace& space, const NestedCoverSequence& seq) {
  auto report = verify_nesting(space, seq);
  if (!report.ok()) return report;
  auto recurrence = check_mesh_recurrence(seq);
  if (!recurrence.ok()) return recurrence;
  report.checked += recurrence.checked;
  report.note += "; mesh recurrence m_{t+1} <= 2 m_t + mesh(V_{t+1})";
  return report;
}

}  // namespace

std::set<std::string> parse_checks(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      out.insert(kAllChecks.begin(), kAllChecks.end());
    } else if (kAllChecks.count(item)) {
      out.insert(item);
    } else {
      throw InputError("unknown check '" + item + "' (expected n1, n2, ultra, nesting, coarse, all)");
    }
  }
  if (out.empty()) throw InputError("no checks selected");
  return out;
}

CheckMode parse_mode(const std::string& text, std::uint64_t seed) {
  if (text == "exhaustive") return Exhaustive{};
  const std::string prefix = "sampled:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string count = text.substr(prefix.size());
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(count, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != count.size() || v == 0)
      throw InputError("sampled mode needs a positive count: '" + text + "'");
    return Sampled{v, seed};
  }
  throw InputError("unknown mode '" + text + "' (expected exhaustive or sampled:COUNT)");
}

GeneratorParams parse_params(const std::vector<std::string>& pairs) {
  GeneratorParams out;
  for (const auto& p : pairs) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InputError("generator parameter '" + p + "' is not of the form K=V");
    out[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return out;
}

FiniteMetricSpace load_space(const std::filesystem::path& path) {
  if (path.extension() == ".csv") {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    return space_from_csv(in);
  }
  return space_from_json(read_json_file(path));
}

PipelineResult run_pipeline(const PipelineConfig& config, std::ostream& log) {
  PipelineResult result;
  json& summary = result.summary;
  summary["config"] = config_json(config);
  summary["checks"] = json::object();
  std::string stage = "config";
  ArtifactWriter out(config.out_dir);

  auto fail = [&](int code, const std::string& kind, const std::string& message,
                  const json& payload) {
    result.exit_code = code;
    summary["exit_code"] = code;
    summary["error"] = {{"kind", kind}, {"stage", stage}, {"message", message}, {"payload", payload}};
    log << "error [" << kind << "] in stage '" << stage << "': " << message << "\n";
    if (code == kOutputError) return;
    try {
      out.json_file("error.json", summary["error"]);
      out.json_file("summary.json", summary);
    } catch (const OutputError& e) {
      log << "error: " << e.what() << "\n";
      result.exit_code = kOutputError;
    }
  };

  try {
    if (config.target != "nagata" && config.target != "raw")
      throw InputError("unknown target '" + config.target + "' (expected nagata or raw)");
    if (config.d1 < 1) throw InputError("--d1 must be at least 1");
    if (config.checks.empty()) throw InputError("no checks selected");
    for (const auto& c : config.checks) {
      if (!kAllChecks.count(c)) throw InputError("unknown check '" + c + "'");
    }
    std::set<std::string> checks = config.checks;
    if (config.target == "raw") {
      for (const auto& c : checks)
        if (!kRawChecks.count(c) && checks != kAllChecks)
          throw InputError("check '" + c + "' needs the nagata target");
      std::set<std::string> kept;
      for (const auto& c : checks)
        if (kRawChecks.count(c)) kept.insert(c);
      checks = kept;
    }

    stage = "output";
    out.prepare();

    stage = "ingest";
    if (config.space_file.has_value() == !config.generator.empty())
      throw InputError("give exactly one of --space FILE or --generate NAME");
    const FiniteMetricSpace space = config.space_file
                                        ? load_space(*config.space_file)
                                        : generate_space(config.generator, config.params, config.seed);
    summary["space"] = {{"points", space.size()}, {"diameter", space.diameter()}};
    out.json_file("space.json", space_to_json(space));
    out.write("space.csv", matrix_csv(space.names(), space.matrix()));
    log << "space: " << space.size() << " points, diameter " << space.diameter() << "\n";

    const CheckOptions options{config.mode, config.workers};
    bool all_ok = true;
    auto record = [&](const std::string& name, const json& report, bool ok) {
      out.json_file("report_" + name + ".json", report);
      summary["checks"][name] = report.at("verdict");
      all_ok &= ok;
      log << "check " << name << ": " << report.at("verdict").get<std::string>() << "\n";
    };
    auto run_metric_checks = [&](const DistanceMatrix& m) {
      if (checks.count("n2")) {
        stage = "check:n2";
        auto r = check_n2(m, config.dimension, options);
        record("n2", report_to_json(r), r.ok());
      }
      if (checks.count("n1")) {
        stage = "check:n1";
        auto radii = config.radii.empty() ? default_radii(m) : config.radii;
        auto r = check_n1(m, config.dimension, radii, options);
        auto j = report_to_json(r);
        j["radii"] = radii;
        record("n1", j, r.ok());
      }
      if (checks.count("ultra")) {
        stage = "check:ultra";
        auto r = check_quasi_ultrametric(m, config.workers);
        record("ultra", report_to_json(r), r.ok());
      }
    };

    if (config.target == "raw") {
      run_metric_checks(space.matrix());
    } else {
      stage = "covers";
      std::string provider_name;
      const CoverProvider provider = choose_provider(config, space, provider_name);
      summary["provider"] = provider_name;

      stage = "nesting";
      NestingOptions nopts;
      nopts.saturate = config.levels == 0;
      nopts.num_levels = config.levels;
      nopts.max_levels = config.max_levels;
      nopts.d_1 = config.d1;
      nopts.max_retries = config.retries;
      const NestedCoverSequence seq = build_nested_sequence(space, provider, nopts);

      json table = json::array();
      for (std::size_t k = 0; k < seq.levels.size(); ++k) {
        const auto& l = seq.levels[k];
        out.json_file(level_name(k + 1), cover_to_json(l.cover));
        table.push_back({{"level", k + 1},
                         {"d_k", l.d_k},
                         {"m_k", l.m_k},
                         {"provider_scale", l.provider_scale},
                         {"provider_mesh", l.provider_mesh},
                         {"members", l.cover.member_count()},
                         {"achieved_lebesgue", max_lebesgue(space, l.cover.members())}});
      }
      summary["levels"] = table;
      summary["saturated"] = seq.saturated;
      out.json_file("sequence.json", sequence_to_json(seq));
      log << "sequence: " << seq.levels.size() << " levels"
          << (seq.saturated ? " (saturated)" : "") << "\n";

      stage = "nagata";
      const NagataSpace ns = build_nagata_space(space, seq);
      out.json_file("nagata.json", nagata_to_json(ns));
      out.write("nagata.csv", matrix_csv(space.names(), ns.matrix()));

      if (checks.count("nesting")) {
        stage = "check:nesting";
        auto r = nesting_report(space, seq);
        record("nesting", report_to_json(r), r.ok());
      }
      if (checks.count("coarse")) {
        stage = "check:coarse";
        auto control = coarse_control(space, ns, seq);
        record("coarse", control_to_json(control), control.summary.ok());
      }
      run_metric_checks(ns.matrix());
    }

    stage = "summary";
    result.exit_code = all_ok ? kOk : kVerificationFailure;
    summary["exit_code"] = result.exit_code;
    out.json_file("summary.json", summary);
    if (!all_ok) log << "verification failed; see report_*.json for witnesses\n";
  } catch (const InputError& e) {
    fail(kInputError, "input", e.what(), e.payload());
  } catch (const ConstructionError& e) {
    fail(kConstructionError, "construction", e.what(), e.payload());
  } catch (const OutputError& e) {
    fail(kOutputError, "output", e.what(), nullptr);
  } catch (const std::exception& e) {
    fail(kInternalError, "internal", e.what(), nullptr);
  }
  return result;
}

}  // namespace nagata::cli
