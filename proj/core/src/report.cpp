#include "ddsim/experiment.hpp"

#include <cstdio>
#include <sstream>

namespace ddsim {
namespace {

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Row {
    std::vector<std::string> cells;
};

std::string layout(const std::vector<std::string>& header, const std::vector<Row>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.cells.size(); ++c) width[c] = std::max(width[c], r.cells[c].size());
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c == 0) {
                s += cells[c] + std::string(width[c] - cells[c].size(), ' ');
            } else {
                s += "  " + std::string(width[c] - cells[c].size(), ' ') + cells[c];
            }
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out << s << '\n';
    };
    line(header);
    std::size_t total = 0;
    for (auto w : width) total += w;
    out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
    for (const auto& r : rows) line(r.cells);
    return out.str();
}

}  // namespace

std::string render_report(const ExperimentReport& report) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < report.generators.size(); ++i) {
        const auto& g = report.generators[i];
        if (g.error) continue;
        if (!best || g.mean.els > report.generators[*best].mean.els) best = i;
    }
    std::vector<Row> rows;
    for (std::size_t i = 0; i < report.generators.size(); ++i) {
        const auto& g = report.generators[i];
        const std::string name = g.name + (best == i ? " *" : "");
        if (g.error) {
            rows.push_back({{name, "0", "-", "-", "-", "-"}});
            continue;
        }
        rows.push_back({{name, std::to_string(g.per_log.size()), fixed2(g.mean.els), fixed2(g.mean.cfls),
                         fixed2(g.mean.cycle_time_mae), fixed2(g.mean.emd)}});
    }
    return layout({"generator", "logs", "ELS", "CFLS", "MAE", "EMD"}, rows);
}

std::string render_metrics(const MetricReport& report) {
    return layout({"ELS", "CFLS", "MAE", "EMD"},
                  {{{fixed2(report.els), fixed2(report.cfls), fixed2(report.cycle_time_mae), fixed2(report.emd)}}});
}

}  // namespace ddsim
