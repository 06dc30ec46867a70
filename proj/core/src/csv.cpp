#include "ddsim/csv.hpp"

#include "ddsim/errors.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <unordered_map>

namespace ddsim {
namespace {

std::vector<std::string> split_row(const std::string& line, std::size_t line_no,
                                   const std::string& source) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (quoted)
        throw ParseError(source + ":" + std::to_string(line_no) + ": unterminated quote", line_no);
    fields.push_back(std::move(cur));
    return fields;
}

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

EventLog parse_csv(std::istream& in, const ColumnMapping& mapping, const std::string& source) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw SchemaError(source + ": missing header row", mapping.case_id);
    ++line_no;
    strip_cr(line);
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

    const auto header = split_row(line, line_no, source);
    auto column = [&](const std::string& name, bool required) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        if (required)
            throw SchemaError(source + ": missing required column '" + name + "'", name);
        return std::nullopt;
    };
    const std::size_t c_case = *column(mapping.case_id, true);
    const std::size_t c_act = *column(mapping.activity, true);
    const std::size_t c_start = *column(mapping.start, true);
    const std::size_t c_end = *column(mapping.end, true);
    const auto c_res = mapping.resource.empty() ? std::nullopt : column(mapping.resource, false);

    std::vector<std::string> order;
    std::unordered_map<std::string, std::vector<Event>> by_case;
    std::vector<std::string> bad_cases;
    std::vector<std::size_t> bad_lines;

    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        auto fields = split_row(line, line_no, source);
        if (fields.size() != header.size())
            throw ParseError(source + ":" + std::to_string(line_no) + ": expected " +
                                 std::to_string(header.size()) + " fields, found " +
                                 std::to_string(fields.size()),
                             line_no);
        Event e;
        e.case_id = fields[c_case];
        e.activity = fields[c_act];
        if (c_res) e.resource = fields[*c_res];
        if (e.case_id.empty())
            throw ParseError(source + ":" + std::to_string(line_no) + ": empty case id", line_no);
        if (e.activity.empty())
            throw ParseError(source + ":" + std::to_string(line_no) + ": empty activity label",
                             line_no);
        const auto start = parse_timestamp(fields[c_start]);
        if (!start)
            throw ParseError(source + ":" + std::to_string(line_no) +
                                 ": unparseable start timestamp '" + fields[c_start] + "'",
                             line_no);
        const auto end = parse_timestamp(fields[c_end]);
        if (!end)
            throw ParseError(source + ":" + std::to_string(line_no) +
                                 ": unparseable end timestamp '" + fields[c_end] + "'",
                             line_no);
        e.start = *start;
        e.end = *end;
        if (e.end < e.start) {
            bad_cases.push_back(e.case_id);
            bad_lines.push_back(line_no);
        }
        auto [it, inserted] = by_case.try_emplace(e.case_id);
        if (inserted) order.push_back(e.case_id);
        it->second.push_back(std::move(e));
    }

    if (!bad_lines.empty()) {
        std::string msg = source + ": end timestamp precedes start on line";
        msg += bad_lines.size() > 1 ? "s" : "";
        for (std::size_t i = 0; i < bad_lines.size(); ++i)
            msg += (i ? ", " : " ") + std::to_string(bad_lines[i]) + " (case " + bad_cases[i] + ")";
        throw ValidationError(msg, std::move(bad_cases), std::move(bad_lines));
    }

    std::vector<Trace> traces;
    traces.reserve(order.size());
    for (auto& id : order) traces.emplace_back(id, std::move(by_case[id]));
    return EventLog(std::move(traces));
}

EventLog read_csv(const std::filesystem::path& path, const ColumnMapping& mapping) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return parse_csv(in, mapping, path.string());
}

void write_csv(const EventLog& log, std::ostream& out) {
    out << "case_id,activity,resource,start_timestamp,end_timestamp\n";
    for (const auto& trace : log.traces())
        for (const auto& e : trace.events())
            out << quote(e.case_id) << ',' << quote(e.activity) << ',' << quote(e.resource) << ','
                << format_timestamp(e.start) << ',' << format_timestamp(e.end) << '\n';
}

void write_csv(const EventLog& log, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_csv(log, out);
    out.flush();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace ddsim
