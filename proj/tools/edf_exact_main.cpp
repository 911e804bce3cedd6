#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "edf/analysis.hpp"
#include "edf/engine.hpp"
#include "edf/fixtures.hpp"
#include "edf/gantt.hpp"
#include "edf/generator.hpp"
#include "edf/model.hpp"
#include "edf/oracle.hpp"
#include "edf/task_io.hpp"

namespace {

using namespace edf;

constexpr int kExitSchedulable = 0;
constexpr int kExitMiss = 1;
constexpr int kExitError = 2;

bool color_enabled() {
    const char* env = std::getenv("EDF_EXACT_COLOR");
    return env && std::string(env) == "1";
}

std::string paint(const std::string& text, const char* code) {
    if (!color_enabled())
        return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

TaskSystem load_validated(const std::string& path) {
    TaskSystem system = load_task_system(path);
    const ValidationReport report = validate(system);
    if (!report.ok())
        throw std::invalid_argument(path + ": invalid task system\n" + report.to_string());
    return system;
}

std::string verdict_text(const AnalysisReport& report, std::size_t task_count) {
    std::ostringstream out;
    out << "tasks: " << task_count << "\n"
        << "hyperperiod: " << report.hyperperiod << "  o_max: " << report.max_offset
        << "  c_tau: " << report.total_wcet << "  t_up: " << report.feasibility_bound
        << "\n";
    if (const auto* ok = std::get_if<Schedulable>(&report.verdict)) {
        out << "verdict: " << paint("schedulable", "32") << "\n";
        if (ok->steady) {
            out << "steady phase: configurations at t=" << ok->steady->periodic_from
                << " and t=" << (ok->steady->periodic_from + report.hyperperiod)
                << " match (k=" << ok->steady->steady_k << "); schedule repeats from t="
                << ok->steady->periodic_from << "\n";
        }
    } else {
        const Miss& miss = std::get<Miss>(report.verdict);
        out << "verdict: " << paint("deadline miss", "31") << "  task "
            << (miss.job.task + 1) << " job " << miss.job.number << " misses at t="
            << miss.at << "\n";
    }
    return out.str();
}

int cmd_analyze(const std::string& input, bool no_early_exit, bool use_oracle,
                const std::string& format) {
    const TaskSystem system = load_validated(input);
    const AnalysisReport report =
        use_oracle ? oracle_exact_report(system)
                   : exact_test_report(system, ExactTestOptions{!no_early_exit});
    if (format == "json")
        std::cout << report_json(report);
    else
        std::cout << verdict_text(report, system.tasks.size());
    return is_schedulable(report.verdict) ? kExitSchedulable : kExitMiss;
}

std::string leung_text(const LeungVerdict& verdict) {
    std::ostringstream out;
    if (std::holds_alternative<LeungAccept>(verdict)) {
        out << "two-hyperperiod verdict: accept\n";
    } else if (const auto* miss = std::get_if<LeungRejectByMiss>(&verdict)) {
        out << "two-hyperperiod verdict: reject (deadline miss)  task "
            << (miss->miss.job.task + 1) << " job " << miss->miss.job.number
            << " at t=" << miss->miss.at << "\n";
    } else {
        const auto& mm = std::get<LeungRejectByConfigMismatch>(verdict);
        auto list = [&](const std::vector<ticks>& v) {
            std::ostringstream s;
            for (std::size_t i = 0; i < v.size(); ++i)
                s << (i ? ", " : "") << v[i];
            return s.str();
        };
        out << "two-hyperperiod verdict: reject (configuration mismatch)\n"
            << "  at t=" << mm.first.sampled_at << ": [" << list(mm.first.executed)
            << "]\n"
            << "  at t=" << mm.second.sampled_at << ": [" << list(mm.second.executed)
            << "]\n"
            << "  delta: [" << list(mm.delta) << "]\n";
    }
    return out.str();
}

int cmd_counterexample(const std::string& name, const std::string& action,
                       const std::string& out_path) {
    const auto system = fixtures::by_name(name);
    if (!system) {
        std::cerr << "unknown counterexample \"" << name << "\" (known: ce1, ce2)\n";
        return kExitError;
    }
    if (action == "emit") {
        emit(canonical_task_system_json(*system), out_path);
        return kExitSchedulable;
    }
    if (action != "run") {
        std::cerr << "unknown action \"" << action << "\" (known: emit, run)\n";
        return kExitError;
    }

    const AnalysisReport report = exact_test_report(*system);
    std::cout << "== exact test ==\n" << verdict_text(report, system->tasks.size());
    std::cout << "== leung test (two hyperperiods; known-incorrect, demo only) ==\n"
              << leung_text(leung_test(*system));
    const bool exact_ok = is_schedulable(report.verdict);
    const bool leung_ok = std::holds_alternative<LeungAccept>(leung_test(*system));
    if (exact_ok && !leung_ok)
        std::cout << "divergence: the exact test accepts, the two-hyperperiod test "
                     "rejects; the schedule was still changing at o_max + 2P.\n";
    return exact_ok ? kExitSchedulable : kExitMiss;
}

int cmd_simulate(const std::string& input, std::optional<ticks> horizon,
                 bool to_steady, const std::string& policy_name,
                 const std::string& trace_path) {
    const TaskSystem system = load_validated(input);
    const PriorityPolicy policy =
        policy_name == "llf" ? PriorityPolicy::Llf : PriorityPolicy::Edf;

    SimulationResult result =
        to_steady ? simulate_to_steady(system, policy, ExecutionModel::worst_case())
                  : simulate(system, policy, ExecutionModel::worst_case(), *horizon, true);

    TraceMeta meta{max_offset(system), hyperperiod(system), system.tasks};
    emit(trace_json(result.trace, meta), trace_path);
    return result.miss ? kExitMiss : kExitSchedulable;
}

int cmd_gantt(const std::string& trace_path, const std::string& format,
              std::optional<ticks> from, std::optional<ticks> to,
              const std::string& out_path) {
    const TraceDocument doc = load_trace(trace_path);
    GanttWindow window{from.value_or(0), to.value_or(doc.trace.horizon)};
    const std::string rendered = format == "svg"
                                     ? render_svg(doc.trace, doc.meta, window)
                                     : render_ascii(doc.trace, window);
    emit(rendered, out_path);
    return kExitSchedulable;
}

int cmd_generate(const GeneratorSpec& spec, const std::string& out_path) {
    emit(canonical_task_system_json(generate_task_system(spec)), out_path);
    return kExitSchedulable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact global-EDF schedulability toolkit for periodic task systems"};
    app.require_subcommand(1);

    // analyze
    std::string an_input, an_format = "text";
    bool an_no_early = false, an_oracle = false;
    auto* analyze = app.add_subcommand("analyze", "Run the exact schedulability test");
    analyze->add_option("input", an_input, "task-set JSON file")->required();
    analyze->add_flag("--no-early-exit", an_no_early,
                      "simulate the full horizon instead of stopping at the first "
                      "repeated configuration");
    analyze->add_flag("--use-oracle", an_oracle)->group("");  // hidden: slow reference path
    analyze->add_option("--report", an_format, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    // counterexample
    std::string ce_name, ce_action, ce_out;
    auto* counterex = app.add_subcommand("counterexample", "Built-in demonstration systems");
    counterex->add_option("name", ce_name, "ce1 or ce2")->required();
    counterex->add_option("action", ce_action, "emit or run")->required();
    counterex->add_option("--out", ce_out, "write to file instead of stdout");

    // simulate
    std::string sim_input, sim_policy = "edf", sim_trace;
    std::optional<ticks> sim_horizon;
    bool sim_steady = false;
    auto* simulate_cmd = app.add_subcommand("simulate", "Run the scheduler and export a trace");
    simulate_cmd->add_option("input", sim_input, "task-set JSON file")->required();
    auto* horizon_opt = simulate_cmd->add_option("--horizon", sim_horizon, "ticks to simulate");
    auto* steady_opt = simulate_cmd->add_flag("--to-steady", sim_steady,
                                              "simulate until the schedule repeats");
    horizon_opt->excludes(steady_opt);
    simulate_cmd->add_option("--policy", sim_policy, "priority policy")
        ->check(CLI::IsMember({"edf", "llf"}));
    simulate_cmd->add_option("--trace", sim_trace, "trace output file (default stdout)");

    // gantt
    std::string g_trace, g_format = "ascii", g_out;
    std::optional<ticks> g_from, g_to;
    auto* gantt = app.add_subcommand("gantt", "Render a trace");
    gantt->add_option("trace", g_trace, "trace JSON file")->required();
    gantt->add_option("--format", g_format, "output format")
        ->check(CLI::IsMember({"ascii", "svg"}));
    gantt->add_option("--from", g_from, "window start tick");
    gantt->add_option("--to", g_to, "window end tick");
    gantt->add_option("--out", g_out, "write to file instead of stdout");

    // generate
    GeneratorSpec spec;
    std::string gen_out, gen_mode = "implicit";
    auto* generate = app.add_subcommand("generate", "Generate a random task set");
    generate->add_option("--seed", spec.seed, "rng seed");
    generate->add_option("--tasks", spec.task_count, "number of tasks")->required();
    generate->add_option("--cpus", spec.cpu_count, "number of CPUs")->required();
    generate->add_option("--periods", spec.period_pool, "allowed periods")
        ->required()
        ->delimiter(',');
    generate->add_option("--max-offset", spec.max_offset, "offsets drawn from [0, this]");
    generate->add_option("--utilization", spec.utilization_target,
                         "target total utilization in (0, cpus]")
        ->required();
    generate->add_option("--deadline-mode", gen_mode, "implicit (D=T) or constrained")
        ->check(CLI::IsMember({"implicit", "constrained"}));
    generate->add_option("--out", gen_out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*analyze)
            return cmd_analyze(an_input, an_no_early, an_oracle, an_format);
        if (*counterex)
            return cmd_counterexample(ce_name, ce_action, ce_out);
        if (*simulate_cmd) {
            if (!sim_horizon && !sim_steady) {
                std::cerr << "simulate: need --horizon or --to-steady\n";
                return kExitError;
            }
            return cmd_simulate(sim_input, sim_horizon, sim_steady, sim_policy, sim_trace);
        }
        if (*gantt)
            return cmd_gantt(g_trace, g_format, g_from, g_to, g_out);
        if (*generate) {
            spec.deadline_mode = gen_mode == "constrained" ? DeadlineMode::Constrained
                                                           : DeadlineMode::Implicit;
            return cmd_generate(spec, gen_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
