#include "edf/task_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace edf {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());  // message carries byte/line position
    }
}

ticks require_int(const json& node, const std::string& where) {
    if (!node.is_number_integer() && !node.is_number_unsigned())
        throw ParseError(where + ": expected an integer");
    if (node.is_number_unsigned() &&
        node.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
        throw ParseError(where + ": integer out of range");
    return node.get<ticks>();
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k)
                ok = true;
        if (!ok)
            throw ParseError(where + ": unknown key \"" + key + "\"");
    }
}

std::string finalize(const json& doc) {
    return doc.dump() + "\n";
}

json task_to_json(const PeriodicTask& t) {
    return json{{"deadline", t.deadline},
                {"offset", t.offset},
                {"period", t.period},
                {"wcet", t.wcet}};
}

PeriodicTask task_from_json(const json& node, const std::string& where) {
    if (!node.is_object())
        throw ParseError(where + ": expected an object");
    reject_unknown_keys(node, {"offset", "wcet", "deadline", "period"}, where);
    PeriodicTask task;
    for (const char* key : {"offset", "wcet", "deadline", "period"})
        if (!node.contains(key))
            throw ParseError(where + ": missing key \"" + std::string(key) + "\"");
    task.offset = require_int(node["offset"], where + ".offset");
    task.wcet = require_int(node["wcet"], where + ".wcet");
    task.deadline = require_int(node["deadline"], where + ".deadline");
    task.period = require_int(node["period"], where + ".period");
    return task;
}

}  // namespace

TaskSystem parse_task_system(const std::string& text) {
    const json doc = parse_or_throw(text);
    if (!doc.is_object())
        throw ParseError("top level: expected an object");
    reject_unknown_keys(doc, {"cpus", "tasks"}, "top level");
    if (!doc.contains("cpus"))
        throw ParseError("top level: missing key \"cpus\"");
    if (!doc.contains("tasks") || !doc["tasks"].is_array())
        throw ParseError("top level: missing array \"tasks\"");

    TaskSystem system;
    const ticks cpus = require_int(doc["cpus"], "cpus");
    if (cpus > INT32_MAX)
        throw ParseError("cpus: integer out of range");
    system.cpus = static_cast<int>(cpus);
    std::size_t index = 0;
    for (const json& node : doc["tasks"]) {
        system.tasks.push_back(task_from_json(node, "tasks[" + std::to_string(index) + "]"));
        ++index;
    }
    return system;
}

TaskSystem load_task_system(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_task_system(buffer.str());
}

std::string canonical_task_system_json(const TaskSystem& system) {
    json tasks = json::array();
    for (const PeriodicTask& t : system.tasks)
        tasks.push_back(task_to_json(t));
    return finalize(json{{"cpus", system.cpus}, {"tasks", tasks}});
}

namespace {

const char* kind_name(EventKind kind) {
    switch (kind) {
        case EventKind::Release: return "release";
        case EventKind::Complete: return "complete";
        case EventKind::Miss: return "miss";
    }
    return "?";
}

std::optional<EventKind> kind_from_name(const std::string& name) {
    if (name == "release") return EventKind::Release;
    if (name == "complete") return EventKind::Complete;
    if (name == "miss") return EventKind::Miss;
    return std::nullopt;
}

}  // namespace

std::string trace_json(const ScheduleTrace& trace, const std::optional<TraceMeta>& meta) {
    json segments = json::array();
    for (int cpu = 0; cpu < trace.cpus; ++cpu) {
        for (const Segment& seg : trace.lanes[static_cast<std::size_t>(cpu)]) {
            json node{{"cpu", cpu + 1}, {"end", seg.end}, {"start", seg.start}};
            node["task"] = seg.job ? json(seg.job->task + 1) : json(nullptr);
            node["job"] = seg.job ? json(seg.job->number) : json(nullptr);
            segments.push_back(std::move(node));
        }
    }
    json events = json::array();
    for (const TraceEvent& e : trace.events)
        events.push_back(json{{"at", e.at},
                              {"job", e.job.number},
                              {"kind", kind_name(e.kind)},
                              {"task", e.job.task + 1}});
    json doc{{"cpus", trace.cpus}, {"events", events},
             {"horizon", trace.horizon}, {"segments", segments}};
    if (meta) {
        json tasks = json::array();
        for (const PeriodicTask& t : meta->tasks)
            tasks.push_back(task_to_json(t));
        doc["meta"] = json{{"hyperperiod", meta->hyperperiod},
                           {"o_max", meta->max_offset},
                           {"tasks", tasks}};
    }
    return finalize(doc);
}

TraceDocument parse_trace_json(const std::string& text) try {
    const json doc = parse_or_throw(text);
    if (!doc.is_object())
        throw ParseError("top level: expected an object");
    reject_unknown_keys(doc, {"cpus", "events", "horizon", "segments", "meta"}, "top level");

    TraceDocument out;
    out.trace.cpus = static_cast<int>(require_int(doc.at("cpus"), "cpus"));
    out.trace.horizon = require_int(doc.at("horizon"), "horizon");
    if (out.trace.cpus < 0)
        throw ParseError("cpus: must be >= 0");
    out.trace.lanes.resize(static_cast<std::size_t>(out.trace.cpus));

    std::size_t index = 0;
    for (const json& node : doc.at("segments")) {
        const std::string where = "segments[" + std::to_string(index++) + "]";
        const ticks cpu = require_int(node.at("cpu"), where + ".cpu") - 1;
        if (cpu < 0 || cpu >= out.trace.cpus)
            throw ParseError(where + ".cpu: out of range");
        Segment seg;
        seg.start = require_int(node.at("start"), where + ".start");
        seg.end = require_int(node.at("end"), where + ".end");
        if (!node.at("task").is_null()) {
            const ticks task = require_int(node.at("task"), where + ".task") - 1;
            const ticks number = require_int(node.at("job"), where + ".job");
            if (task < 0)
                throw ParseError(where + ".task: out of range");
            seg.job = JobId{static_cast<std::size_t>(task), number};
        }
        out.trace.lanes[static_cast<std::size_t>(cpu)].push_back(seg);
    }
    index = 0;
    for (const json& node : doc.at("events")) {
        const std::string where = "events[" + std::to_string(index++) + "]";
        TraceEvent event;
        event.at = require_int(node.at("at"), where + ".at");
        const auto kind = kind_from_name(node.at("kind").get<std::string>());
        if (!kind)
            throw ParseError(where + ".kind: unknown event kind");
        event.kind = *kind;
        const ticks task = require_int(node.at("task"), where + ".task") - 1;
        if (task < 0)
            throw ParseError(where + ".task: out of range");
        event.job = JobId{static_cast<std::size_t>(task),
                          require_int(node.at("job"), where + ".job")};
        out.trace.events.push_back(event);
    }
    if (doc.contains("meta")) {
        const json& meta = doc["meta"];
        TraceMeta m;
        m.hyperperiod = require_int(meta.at("hyperperiod"), "meta.hyperperiod");
        m.max_offset = require_int(meta.at("o_max"), "meta.o_max");
        std::size_t i = 0;
        for (const json& node : meta.at("tasks"))
            m.tasks.push_back(task_from_json(node, "meta.tasks[" + std::to_string(i++) + "]"));
        out.meta = std::move(m);
    }
    return out;
} catch (const json::exception& e) {
    throw ParseError(e.what());
}

TraceDocument load_trace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_trace_json(buffer.str());
}

std::string report_json(const AnalysisReport& report) {
    json configs = json::array();
    for (const Configuration& c : report.configurations)
        configs.push_back(json{{"e", c.executed}, {"t", c.sampled_at}});

    json doc{{"c_tau", report.total_wcet},
             {"configurations", configs},
             {"hyperperiod", report.hyperperiod},
             {"o_max", report.max_offset},
             {"t_up", report.feasibility_bound}};
    if (const auto* ok = std::get_if<Schedulable>(&report.verdict)) {
        doc["verdict"] = "schedulable";
        doc["miss"] = nullptr;
        doc["steady_k"] = ok->steady ? json(ok->steady->steady_k) : json(nullptr);
    } else {
        const Miss& miss = std::get<Miss>(report.verdict);
        doc["verdict"] = "miss";
        doc["steady_k"] = nullptr;
        doc["miss"] = json{{"at", miss.at},
                           {"job", miss.job.number},
                           {"task", miss.job.task + 1}};
    }
    return finalize(doc);
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << contents;
}

}  // namespace edf
