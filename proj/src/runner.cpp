#include "froglab/runner.hpp"

#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "froglab/csvfmt.hpp"
#include "froglab/parallel.hpp"
#include "froglab/pathsearch.hpp"

namespace froglab {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

Site parse_direction(const Config& cfg, const std::string& section, int d) {
    Site dir;
    dir.c[0] = 1;
    if (!cfg.has(section, "direction")) return dir;
    const auto parts = cfg.get_int_list(section, "direction");
    if (static_cast<int>(parts.size()) != d)
        throw ConfigError("direction must have exactly d components");
    Site out;
    for (int i = 0; i < d; ++i)
        out.c[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(parts[static_cast<std::size_t>(i)]);
    if (l1_norm(out) < 1) throw ConfigError("direction must be nonzero");
    return out;
}

int checked_dim(std::int64_t d) {
    if (d < 1 || d > kMaxDim) throw ConfigError("d must be in [1, 4]");
    return static_cast<int>(d);
}

std::string timestamp_utc() {
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct TaskResult {
    bool censored = false;
    std::string line;  // final CSV line (empty when censored)
};

void write_part(const fs::path& dir, std::int64_t index, const TaskResult& r) {
    const fs::path tmp = dir / (std::to_string(index) + ".tmp");
    const fs::path part = dir / (std::to_string(index) + ".part");
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << (r.censored ? "censored" : r.line) << '\n';
    }
    fs::rename(tmp, part);
}

bool read_part(const fs::path& dir, std::int64_t index, TaskResult& r) {
    const fs::path part = dir / (std::to_string(index) + ".part");
    std::ifstream in(part);
    if (!in) return false;
    std::string line;
    std::getline(in, line);
    r.censored = line == "censored";
    r.line = r.censored ? "" : line;
    return true;
}

}  // namespace

ExperimentSpec load_experiment(const std::string& config_path) {
    const Config cfg = Config::parse_file(config_path);
    ExperimentSpec spec;
    spec.raw = cfg;
    spec.kind = cfg.get_string("experiment", "kind");
    spec.master_seed = cfg.get_uint("experiment", "master_seed", 1);
    spec.output_dir = cfg.get_string("experiment", "output");
    const int d = checked_dim(cfg.get_int("experiment", "d", 2));
    spec.workers = par::effective_workers(
        static_cast<int>(cfg.get_int("experiment", "workers", 1)));

    if (spec.kind == "sim") {
        spec.sim.d = d;
        spec.sim.master_seed = spec.master_seed;
        spec.sim.n = cfg.get_int("sim", "n");
        if (spec.sim.n < 1) throw ConfigError("[sim] n must be >= 1");
        spec.sim.replicas = static_cast<int>(cfg.get_int("sim", "replicas"));
        if (spec.sim.replicas < 1) throw ConfigError("[sim] replicas must be >= 1");
        spec.sim.direction = parse_direction(cfg, "sim", d);
        spec.sim.horizon_cap =
            cfg.get_int("sim", "horizon_cap", PassageEngine::kDefaultHorizonCap);
        spec.sim.workers = spec.workers;
    } else if (spec.kind == "scaling") {
        spec.scaling.d = d;
        spec.scaling.master_seed = spec.master_seed;
        spec.scaling.n_grid = cfg.get_int_list("scaling", "n_grid");
        for (auto n : spec.scaling.n_grid)
            if (n < 1) throw ConfigError("[scaling] n_grid entries must be >= 1");
        spec.scaling.replicas = static_cast<int>(cfg.get_int("scaling", "replicas"));
        if (spec.scaling.replicas < 2)
            throw ConfigError("[scaling] replicas must be >= 2");
        spec.scaling.direction = parse_direction(cfg, "scaling", d);
        spec.scaling.horizon_cap =
            cfg.get_int("scaling", "horizon_cap", PassageEngine::kDefaultHorizonCap);
        spec.scaling.workers = spec.workers;
        if (cfg.has("scaling", "d_list")) {
            for (auto v : cfg.get_int_list("scaling", "d_list"))
                spec.scaling_dims.push_back(checked_dim(v));
        } else {
            spec.scaling_dims = {d};
        }
    } else if (spec.kind == "perc") {
        spec.perc.d = d;
        spec.perc.master_seed = spec.master_seed;
        spec.perc.field_kind = cfg.get_string("perc", "field", "independent");
        if (spec.perc.field_kind != "independent" && spec.perc.field_kind != "windowed" &&
            spec.perc.field_kind != "frog")
            throw ConfigError("[perc] field must be independent, windowed or frog");
        spec.perc.L = static_cast<int>(cfg.get_int("perc", "L"));
        spec.perc.M = static_cast<int>(cfg.get_int("perc", "M", 1));
        if (spec.perc.L < 1 || spec.perc.L > kPathSearchCap2d)
            throw ConfigError("[perc] L outside the exactness cap");
        if (spec.perc.M < 1) throw ConfigError("[perc] M must be >= 1");
        spec.perc.p = cfg.get_real("perc", "p", 0.4);
        if (spec.perc.p < 0.0 || spec.perc.p > 1.0)
            throw ConfigError("[perc] p must be in [0, 1]");
        spec.perc.instances = static_cast<int>(cfg.get_int("perc", "instances"));
        if (spec.perc.instances < 1) throw ConfigError("[perc] instances must be >= 1");
        spec.perc.workers = spec.workers;
    } else {
        throw ConfigError("unknown experiment kind: " + spec.kind);
    }
    return spec;
}

VerifyOptions load_verify_options(const std::string& config_path) {
    const Config cfg = Config::parse_file(config_path);
    VerifyOptions opts;
    opts.master_seed = cfg.get_uint("experiment", "master_seed", 1);
    opts.workers = par::effective_workers(
        static_cast<int>(cfg.get_int("experiment", "workers", 1)));
    opts.corrupt_stream_hook = cfg.get_int("verify", "corrupt_stream_hook", 0) != 0;

    const std::string scale = cfg.get_string("verify", "scale", "full");
    if (scale == "quick")
        opts.sizes = VerifySizes().scaled(20);
    else if (scale != "full")
        throw ConfigError("[verify] scale must be quick or full");

    std::vector<std::string> battery;
    if (cfg.has("verify", "battery"))
        battery = cfg.get_word_list("verify", "battery");
    else
        battery = {"all"};
    if (battery.empty()) throw ConfigError("[verify] battery selection is empty");
    for (const auto& name : battery) {
        if (name == "all") {
            opts.battery = all_check_names();
            return opts;
        }
        if (!is_known_check(name)) throw ConfigError("[verify] unknown check: " + name);
        opts.battery.push_back(name);
    }
    if (opts.battery.empty()) throw ConfigError("[verify] battery selection is empty");
    return opts;
}

ScalingRow aggregate_scaling_row(int d, std::int64_t n, std::uint64_t master_seed,
                                 const std::vector<double>& values, int censored) {
    ScalingRow out;
    out.d = d;
    out.n = n;
    out.censored = censored;
    out.replicas = static_cast<int>(values.size());
    if (values.size() < 2) return out;
    const std::uint64_t boot_seed =
        absorb(absorb(master_seed, static_cast<std::uint64_t>(n)),
               static_cast<std::uint64_t>(d));
    const Moments m = moments(values, boot_seed);
    out.mean = m.mean;
    out.var = m.variance;
    out.var_over_n = m.variance / static_cast<double>(n);
    out.var_logn_over_n =
        m.variance * std::log(static_cast<double>(n)) / static_cast<double>(n);
    out.kappa_hat = m.mean / static_cast<double>(n);
    out.ci_mean = m.ci_mean_half;
    out.ci_var = m.ci_var_half;
    return out;
}

namespace {

std::string sim_row_line(const SimSampleRow& r, int d) {
    std::ostringstream os;
    os << r.task << ',' << r.replica << ',' << r.n;
    for (int i = 0; i < d; ++i)
        os << ',' << r.x.c[static_cast<std::size_t>(i)];
    os << ',' << r.value << ',' << r.path_len << ',' << r.max_jump << ',' << r.frontier;
    return os.str();
}

std::string perc_row_line(const PercRow& r) {
    std::ostringstream os;
    os << r.instance << ',' << r.L << ',' << r.M << ',' << format_real(r.p_or_qm) << ','
       << r.x_l << ',' << r.n_bound << ',' << r.tess_bound << ','
       << (r.violation ? 1 : 0);
    return os.str();
}

std::string scaling_row_line(const ScalingRow& r) {
    std::ostringstream os;
    os << r.d << ',' << r.n << ',' << r.replicas << ',' << format_real(r.mean) << ','
       << format_real(r.var) << ',' << format_real(r.var_over_n) << ','
       << format_real(r.var_logn_over_n) << ',' << format_real(r.kappa_hat) << ','
       << format_real(r.ci_mean) << ',' << format_real(r.ci_var);
    return os.str();
}

std::string samples_header(int d) {
    std::string h = "task,replica,n";
    for (int i = 1; i <= d; ++i) h += ",dx" + std::to_string(i);
    h += ",T,path_len,max_jump,frontier_radius";
    return h;
}

/// Scaling task identity: one passage sample per (d, n, replica).
struct ScalingTask {
    int d;
    std::int64_t n;
    std::uint64_t replica;
};

}  // namespace

RunStatus run_experiment(const ExperimentSpec& spec) {
    try {
        const fs::path out_dir(spec.output_dir);
        const fs::path parts_dir = out_dir / "parts";
        fs::create_directories(parts_dir);

        const std::string started = timestamp_utc();
        std::int64_t task_count = 0;
        json task_meta = json::array();

        if (spec.kind == "sim") {
            task_count = spec.sim.replicas;
            for (std::int64_t t = 0; t < task_count; ++t)
                task_meta.push_back({{"task", t}, {"replica", t}, {"n", spec.sim.n}});
            par::for_index(task_count, spec.workers, [&](std::int64_t t) {
                TaskResult r;
                if (read_part(parts_dir, t, r)) return;
                static thread_local PassageEngine engine;
                SimSampleRow row = sample_passage(
                    spec.sim.d, spec.sim.master_seed, static_cast<std::uint64_t>(t),
                    spec.sim.n, spec.sim.direction, spec.sim.horizon_cap, engine);
                row.task = t;
                r.censored = row.censored;
                if (!row.censored) r.line = sim_row_line(row, spec.sim.d);
                write_part(parts_dir, t, r);
            });
        } else if (spec.kind == "scaling") {
            std::vector<ScalingTask> tasks;
            for (int d : spec.scaling_dims)
                for (std::int64_t n : spec.scaling.n_grid)
                    for (int rep = 0; rep < spec.scaling.replicas; ++rep)
                        tasks.push_back({d, n, static_cast<std::uint64_t>(rep)});
            task_count = static_cast<std::int64_t>(tasks.size());
            for (std::int64_t t = 0; t < task_count; ++t)
                task_meta.push_back({{"task", t},
                                     {"d", tasks[static_cast<std::size_t>(t)].d},
                                     {"n", tasks[static_cast<std::size_t>(t)].n},
                                     {"replica", tasks[static_cast<std::size_t>(t)].replica}});
            par::for_index(task_count, spec.workers, [&](std::int64_t t) {
                TaskResult r;
                if (read_part(parts_dir, t, r)) return;
                const auto& task = tasks[static_cast<std::size_t>(t)];
                static thread_local PassageEngine engine;
                const SimSampleRow row = sample_passage(
                    task.d, spec.scaling.master_seed, task.replica, task.n,
                    spec.scaling.direction, spec.scaling.horizon_cap, engine);
                r.censored = row.censored;
                if (!row.censored) {
                    std::ostringstream os;
                    os << task.d << ',' << task.n << ',' << task.replica << ','
                       << row.value << ',' << row.path_len << ',' << row.max_jump << ','
                       << row.frontier;
                    r.line = os.str();
                }
                write_part(parts_dir, t, r);
            });
        } else if (spec.kind == "perc") {
            task_count = spec.perc.instances;
            for (std::int64_t t = 0; t < task_count; ++t)
                task_meta.push_back({{"task", t},
                                     {"instance", t},
                                     {"L", spec.perc.L},
                                     {"M", spec.perc.M}});
            const int radius = perc_field_radius(spec.perc);
            par::for_index(task_count, spec.workers, [&](std::int64_t t) {
                TaskResult r;
                if (read_part(parts_dir, t, r)) return;
                r.line = perc_row_line(perc_instance_row(spec.perc, t, radius));
                write_part(parts_dir, t, r);
            });
        }

        // Barrier: assemble final outputs strictly in task order.
        std::int64_t censored = 0;
        json censored_tasks = json::array();
        std::vector<TaskResult> results(static_cast<std::size_t>(task_count));
        for (std::int64_t t = 0; t < task_count; ++t) {
            if (!read_part(parts_dir, t, results[static_cast<std::size_t>(t)]))
                throw std::runtime_error("missing task part " + std::to_string(t));
            if (results[static_cast<std::size_t>(t)].censored) {
                ++censored;
                censored_tasks.push_back(t);
            }
        }

        if (spec.kind == "sim") {
            std::ofstream csv(out_dir / "samples.csv");
            if (!csv) throw std::runtime_error("cannot write samples.csv");
            csv << samples_header(spec.sim.d) << '\n';
            for (const auto& r : results)
                if (!r.censored) csv << r.line << '\n';
        } else if (spec.kind == "scaling") {
            // Group raw samples back into (d, n) rows.
            std::map<std::pair<int, std::int64_t>, std::pair<std::vector<double>, int>>
                groups;
            for (const auto& r : results) {
                if (r.censored) continue;
                std::istringstream is(r.line);
                std::string tok;
                std::getline(is, tok, ',');
                const int d = std::stoi(tok);
                std::getline(is, tok, ',');
                const std::int64_t n = std::stoll(tok);
                std::getline(is, tok, ',');  // replica
                std::getline(is, tok, ',');
                groups[{d, n}].first.push_back(static_cast<double>(std::stoll(tok)));
            }
            for (std::size_t t = 0; t < results.size(); ++t) {
                if (!results[t].censored) continue;
                // censored samples count against their group
                const auto& meta = task_meta[t];
                groups[{meta["d"].get<int>(), meta["n"].get<std::int64_t>()}].second++;
            }
            std::ofstream csv(out_dir / "scaling.csv");
            if (!csv) throw std::runtime_error("cannot write scaling.csv");
            csv << "d,n,replicas,mean,var,var_over_n,var_logn_over_n,kappa_hat,ci_mean,"
                   "ci_var\n";
            for (int d : spec.scaling_dims)
                for (std::int64_t n : spec.scaling.n_grid) {
                    const auto& g = groups[{d, n}];
                    csv << scaling_row_line(aggregate_scaling_row(
                               d, n, spec.scaling.master_seed, g.first, g.second))
                        << '\n';
                }
        } else if (spec.kind == "perc") {
            std::ofstream csv(out_dir / "perc.csv");
            if (!csv) throw std::runtime_error("cannot write perc.csv");
            csv << "instance,L,M,p_or_qM,X_L,N_bound,tess_bound,violation\n";
            for (const auto& r : results) csv << r.line << '\n';
        }

        json manifest;
        manifest["tool"] = kToolVersion;
        manifest["kind"] = spec.kind;
        manifest["started"] = started;
        manifest["finished"] = timestamp_utc();
        manifest["tasks"] = task_count;
        manifest["censored"] = censored;
        manifest["censored_tasks"] = censored_tasks;
        manifest["task_seeds"] = task_meta;
        json config_echo;
        for (const auto& [k, v] : spec.raw.entries()) config_echo[k] = v;
        manifest["config"] = config_echo;
        std::ofstream mf(out_dir / "manifest.json");
        if (!mf) throw std::runtime_error("cannot write manifest.json");
        mf << manifest.dump(2) << '\n';

        return censored > 0 ? RunStatus::horizon_exhausted : RunStatus::ok;
    } catch (const std::exception& e) {
        std::cerr << "froglab run: " << e.what() << '\n';
        return RunStatus::io_error;
    }
}

int run_verify_to_stream(const VerifyOptions& opts, std::ostream& out) {
    const auto outcomes = run_verify_battery(opts);
    bool all_pass = true;
    for (const auto& c : outcomes) {
        out << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " ("
            << c.cases << " cases";
        if (!c.pass) out << ", " << c.violations << " violations";
        out << ")\n";
        if (!c.pass) {
            out << "witness " << c.witness << '\n';
            all_pass = false;
        }
    }
    out << "verify: " << (all_pass ? "PASS" : "FAIL") << '\n';
    return all_pass ? 0 : 1;
}

int show_results(const std::string& results_dir, std::ostream& out) {
    const fs::path dir(results_dir);
    const fs::path manifest_path = dir / "manifest.json";
    std::ifstream mf(manifest_path);
    if (!mf) {
        std::cerr << "froglab show: no manifest in " << results_dir << '\n';
        return 4;
    }
    json manifest;
    try {
        mf >> manifest;
    } catch (const std::exception& e) {
        std::cerr << "froglab show: bad manifest: " << e.what() << '\n';
        return 4;
    }
    out << manifest.value("tool", "?") << " results: kind="
        << manifest.value("kind", "?") << " tasks=" << manifest.value("tasks", 0)
        << " censored=" << manifest.value("censored", 0) << '\n';
    out << "started " << manifest.value("started", "?") << ", finished "
        << manifest.value("finished", "?") << '\n';

    for (const char* name : {"samples.csv", "scaling.csv", "perc.csv"}) {
        std::ifstream csv(dir / name);
        if (!csv) continue;
        out << '\n' << name << ":\n";
        std::string line;
        std::int64_t shown = 0;
        std::int64_t total = 0;
        while (std::getline(csv, line)) {
            ++total;
            if (shown < 40) {
                out << "  " << line << '\n';
                ++shown;
            }
        }
        if (total > shown) out << "  ... (" << (total - shown) << " more rows)\n";
    }
    return 0;
}

}  // namespace froglab
