#include "edf/gantt.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace edf {

namespace {

void check_window(const ScheduleTrace& trace, GanttWindow w) {
    if (w.from < 0 || w.to > trace.horizon || w.from > w.to)
        throw std::out_of_range("window [" + std::to_string(w.from) + ", " +
                                std::to_string(w.to) + ") outside trace horizon " +
                                std::to_string(trace.horizon));
}

char task_glyph(std::size_t task) {
    if (task < 9)
        return static_cast<char>('1' + task);
    if (task < 9 + 26)
        return static_cast<char>('A' + (task - 9));
    return '?';
}

constexpr std::array<const char*, 12> kPalette = {
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
};

}  // namespace

std::string render_ascii(const ScheduleTrace& trace, GanttWindow window) {
    check_window(trace, window);
    std::ostringstream out;
    if (window.from == window.to || trace.cpus == 0)
        return out.str();

    out << "t:      ";
    for (ticks t = window.from; t < window.to; ++t) {
        if (t % 5 == 0) {
            const std::string label = std::to_string(t);
            out << label;
            // Skip the columns the label consumed beyond its own.
            for (std::size_t skip = 1; skip < label.size() && t + 1 < window.to; ++skip)
                ++t;
        } else {
            out << '-';
        }
    }
    out << '\n';
    for (int cpu = 0; cpu < trace.cpus; ++cpu) {
        out << "cpu" << (cpu + 1) << ":   ";
        for (ticks t = window.from; t < window.to; ++t) {
            const auto occ = trace.occupant(cpu, t);
            out << (occ ? task_glyph(occ->task) : '.');
        }
        out << '\n';
    }
    return out.str();
}

std::string render_svg(const ScheduleTrace& trace,
                       const std::optional<TraceMeta>& meta, GanttWindow window) {
    check_window(trace, window);

    constexpr int px_per_tick = 12;
    constexpr int band_height = 28;
    constexpr int band_gap = 8;
    constexpr int left = 56;
    constexpr int top = 16;
    constexpr int axis_height = 24;
    const ticks span = window.to - window.from;
    const int width = left + static_cast<int>(span) * px_per_tick + 16;
    const int bands_bottom = top + trace.cpus * (band_height + band_gap);
    const int height = bands_bottom + axis_height;

    auto x_of = [&](ticks t) { return left + static_cast<int>(t - window.from) * px_per_tick; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" font-family=\"monospace\" font-size=\"11\">\n";

    for (int cpu = 0; cpu < trace.cpus; ++cpu) {
        const int y = top + cpu * (band_height + band_gap);
        out << "<text x=\"4\" y=\"" << (y + band_height / 2 + 4) << "\">cpu" << (cpu + 1)
            << "</text>\n";
        out << "<rect class=\"band\" x=\"" << left << "\" y=\"" << y << "\" width=\""
            << span * px_per_tick << "\" height=\"" << band_height
            << "\" fill=\"#f4f4f4\" stroke=\"#999\"/>\n";
        for (const Segment& seg : trace.lanes[static_cast<std::size_t>(cpu)]) {
            const ticks lo = std::max(seg.start, window.from);
            const ticks hi = std::min(seg.end, window.to);
            if (lo >= hi || !seg.job)
                continue;
            out << "<rect class=\"job\" x=\"" << x_of(lo) << "\" y=\"" << y
                << "\" width=\"" << (hi - lo) * px_per_tick << "\" height=\"" << band_height
                << "\" fill=\"" << kPalette[seg.job->task % kPalette.size()]
                << "\" stroke=\"#333\"><title>task " << (seg.job->task + 1) << " job "
                << seg.job->number << " [" << seg.start << ", " << seg.end
                << ")</title></rect>\n";
        }
    }

    // Time axis with labels every 5 ticks.
    out << "<line x1=\"" << left << "\" y1=\"" << bands_bottom << "\" x2=\""
        << x_of(window.to) << "\" y2=\"" << bands_bottom << "\" stroke=\"#333\"/>\n";
    for (ticks t = window.from; t <= window.to; ++t) {
        if (t % 5 != 0 && t != window.from && t != window.to)
            continue;
        out << "<line x1=\"" << x_of(t) << "\" y1=\"" << bands_bottom << "\" x2=\""
            << x_of(t) << "\" y2=\"" << (bands_bottom + 4) << "\" stroke=\"#333\"/>\n"
            << "<text x=\"" << x_of(t) << "\" y=\"" << (bands_bottom + 16)
            << "\" text-anchor=\"middle\">" << t << "</text>\n";
    }

    if (meta) {
        // Hyperperiod-aligned gridlines at o_max + k*P.
        for (ticks g = meta->max_offset; g <= window.to; g += meta->hyperperiod) {
            if (g < window.from)
                continue;
            out << "<line class=\"grid\" x1=\"" << x_of(g) << "\" y1=\"" << (top - 8)
                << "\" x2=\"" << x_of(g) << "\" y2=\"" << bands_bottom
                << "\" stroke=\"#c00\" stroke-dasharray=\"4 3\"/>\n";
            if (meta->hyperperiod <= 0)
                break;
        }
        // Release (solid) and deadline (hollow) marks per task along the top.
        for (std::size_t i = 0; i < meta->tasks.size(); ++i) {
            const PeriodicTask& task = meta->tasks[i];
            for (ticks r = task.offset; r <= window.to; r += task.period) {
                if (r >= window.from)
                    out << "<circle class=\"release\" cx=\"" << x_of(r) << "\" cy=\""
                        << (top - 10) << "\" r=\"3\" fill=\""
                        << kPalette[i % kPalette.size()] << "\"/>\n";
                const ticks d = r + task.deadline;
                if (d >= window.from && d <= window.to)
                    out << "<circle class=\"deadline\" cx=\"" << x_of(d) << "\" cy=\""
                        << (top - 10) << "\" r=\"3\" fill=\"none\" stroke=\""
                        << kPalette[i % kPalette.size()] << "\"/>\n";
                if (task.period <= 0)
                    break;
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace edf
