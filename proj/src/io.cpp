#include "spassoc/io.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <string_view>
#include <system_error>

namespace spassoc::io {

namespace {

std::string location(const std::string& path, std::size_t line) {
    return path + ":" + std::to_string(line) + ": ";
}

std::string_view trim(std::string_view text) {
    while (!text.empty() &&
           (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() &&
           (text.back() == ' ' || text.back() == '\t' ||
            text.back() == '\r')) {
        text.remove_suffix(1);
    }
    return text;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

int parse_int(std::string_view field, const std::string& path,
              std::size_t line) {
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    int value = 0;
    const auto* end = field.data() + field.size();
    const auto result = std::from_chars(field.data(), end, value);
    if (result.ec != std::errc{} || result.ptr != end || field.empty()) {
        throw ParseError(location(path, line) + "expected an integer, got '" +
                         std::string(field) + "'");
    }
    return value;
}

double parse_double(std::string_view field, const std::string& path,
                    std::size_t line) {
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto* end = field.data() + field.size();
    const auto result = std::from_chars(field.data(), end, value);
    if (result.ec != std::errc{} || result.ptr != end || field.empty()) {
        throw ParseError(location(path, line) + "expected a number, got '" +
                         std::string(field) + "'");
    }
    return value;
}

double parse_finite(std::string_view field, const std::string& path,
                    std::size_t line) {
    const double value = parse_double(field, path, line);
    if (!std::isfinite(value)) {
        throw ParseError(location(path, line) + "value must be finite, got '" +
                         std::string(field) + "'");
    }
    return value;
}

bool parse_bool(std::string_view field, const std::string& path,
                std::size_t line) {
    if (field == "0") return false;
    if (field == "1") return true;
    throw ParseError(location(path, line) + "expected 0 or 1, got '" +
                     std::string(field) + "'");
}

/// Reads all non-empty lines (trimmed of trailing CR), with 1-based file
/// line numbers preserved.
std::vector<std::pair<std::size_t, std::string>> read_lines(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "' for reading");
    }
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (trim(raw).empty()) continue;
        lines.emplace_back(number, raw);
    }
    return lines;
}

void expect_field_count(const std::vector<std::string_view>& fields,
                        std::size_t expected, const std::string& path,
                        std::size_t line) {
    if (fields.size() != expected) {
        throw ParseError(location(path, line) + "expected " +
                         std::to_string(expected) + " fields, got " +
                         std::to_string(fields.size()));
    }
}

std::ofstream open_for_writing(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open '" + path + "' for writing");
    }
    return out;
}

std::string format_bool(bool value) { return value ? "1" : "0"; }

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

EdgeListFile read_edge_list(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) {
        throw ParseError(path + ": empty file, expected header 'src,dst'");
    }
    if (trim(lines.front().second) != "src,dst") {
        throw ParseError(location(path, lines.front().first) +
                         "expected header 'src,dst'");
    }
    EdgeListFile file;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [number, text] = lines[k];
        const auto fields = split_fields(text);
        expect_field_count(fields, 2, path, number);
        const int src = parse_int(fields[0], path, number);
        const int dst = parse_int(fields[1], path, number);
        file.edges.emplace_back(src, dst);
        file.max_vertex = std::max({file.max_vertex, src, dst});
    }
    return file;
}

namespace {

PanelMatrix read_panel_wide(
    const std::string& path,
    const std::vector<std::pair<std::size_t, std::string>>& lines,
    const std::vector<std::string_view>& header) {
    const auto n = header.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (header[i] != "region_" + std::to_string(i)) {
            throw ParseError(location(path, lines.front().first) +
                             "wide header column " + std::to_string(i) +
                             " must be 'region_" + std::to_string(i) +
                             "', got '" + std::string(header[i]) + "'");
        }
    }
    const std::size_t time_count = lines.size() - 1;
    if (time_count == 0) {
        throw ParseError(path + ": no data rows after the wide header");
    }
    Eigen::MatrixXd values(time_count, n);
    for (std::size_t t = 0; t < time_count; ++t) {
        const auto& [number, text] = lines[t + 1];
        const auto fields = split_fields(text);
        expect_field_count(fields, n, path, number);
        for (std::size_t i = 0; i < n; ++i) {
            values(static_cast<Eigen::Index>(t),
                   static_cast<Eigen::Index>(i)) =
                parse_finite(fields[i], path, number);
        }
    }
    return PanelMatrix(std::move(values));
}

PanelMatrix read_panel_long(
    const std::string& path,
    const std::vector<std::pair<std::size_t, std::string>>& lines) {
    struct Entry {
        int region;
        int time;
        double value;
        std::size_t line;
    };
    std::vector<Entry> entries;
    entries.reserve(lines.size() - 1);
    int max_region = -1;
    int max_time = -1;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [number, text] = lines[k];
        const auto fields = split_fields(text);
        expect_field_count(fields, 3, path, number);
        Entry entry;
        entry.region = parse_int(fields[0], path, number);
        entry.time = parse_int(fields[1], path, number);
        entry.value = parse_finite(fields[2], path, number);
        entry.line = number;
        if (entry.region < 0 || entry.time < 0) {
            throw ParseError(location(path, number) +
                             "region and time indices must be non-negative");
        }
        max_region = std::max(max_region, entry.region);
        max_time = std::max(max_time, entry.time);
        entries.push_back(entry);
    }
    if (entries.empty()) {
        throw ParseError(path + ": no data rows after the long header");
    }
    const int n = max_region + 1;
    const int time_count = max_time + 1;
    Eigen::MatrixXd values(time_count, n);
    std::vector<char> seen(static_cast<std::size_t>(n) * time_count, 0);
    for (const Entry& entry : entries) {
        auto& flag = seen[static_cast<std::size_t>(entry.region) * time_count +
                          entry.time];
        if (flag) {
            throw ParseError(location(path, entry.line) +
                             "duplicate entry for region " +
                             std::to_string(entry.region) + ", time " +
                             std::to_string(entry.time));
        }
        flag = 1;
        values(entry.time, entry.region) = entry.value;
    }
    if (entries.size() != seen.size()) {
        for (int i = 0; i < n; ++i) {
            for (int t = 0; t < time_count; ++t) {
                if (!seen[static_cast<std::size_t>(i) * time_count + t]) {
                    throw ParseError(path + ": missing entry for region " +
                                     std::to_string(i) + ", time " +
                                     std::to_string(t));
                }
            }
        }
    }
    return PanelMatrix(std::move(values));
}

}  // namespace

PanelMatrix read_panel(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) {
        throw ParseError(path + ": empty file, expected a panel header");
    }
    const auto header = split_fields(lines.front().second);
    if (header.size() == 3 && header[0] == "region" && header[1] == "time" &&
        header[2] == "value") {
        return read_panel_long(path, lines);
    }
    if (!header.empty() && header[0] == "region_0") {
        return read_panel_wide(path, lines, header);
    }
    throw ParseError(location(path, lines.front().first) +
                     "unrecognized panel header; expected wide columns "
                     "'region_0,...' or long columns 'region,time,value'");
}

Eigen::MatrixXd read_metric_matrix(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) {
        throw ParseError(path + ": empty file, expected a square matrix");
    }
    const std::size_t dim = lines.size();
    Eigen::MatrixXd matrix(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const auto& [number, text] = lines[r];
        const auto fields = split_fields(text);
        if (fields.size() != dim) {
            throw ParseError(location(path, number) + "expected " +
                             std::to_string(dim) +
                             " fields to form a square matrix, got " +
                             std::to_string(fields.size()));
        }
        for (std::size_t c = 0; c < dim; ++c) {
            matrix(static_cast<Eigen::Index>(r),
                   static_cast<Eigen::Index>(c)) =
                parse_finite(fields[c], path, number);
        }
    }
    return matrix;
}

std::vector<SignificanceRecord> read_significance(const std::string& path) {
    static constexpr std::string_view kHeader =
        "region,statistic,centered_deviation,sign,p_raw,p_mc,p_adj,sig_05,"
        "sig_01";
    const auto lines = read_lines(path);
    if (lines.empty() || trim(lines.front().second) != kHeader) {
        throw ParseError(path + ": expected significance header '" +
                         std::string(kHeader) + "'");
    }
    std::vector<SignificanceRecord> records;
    records.reserve(lines.size() - 1);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [number, text] = lines[k];
        const auto fields = split_fields(text);
        expect_field_count(fields, 9, path, number);
        SignificanceRecord record;
        record.region = parse_int(fields[0], path, number);
        record.statistic = std::string(fields[1]);
        record.centered_deviation = parse_double(fields[2], path, number);
        record.sign = parse_int(fields[3], path, number);
        record.p_raw = parse_double(fields[4], path, number);
        if (!fields[5].empty()) {
            record.p_mc = parse_double(fields[5], path, number);
        }
        record.p_adj = parse_double(fields[6], path, number);
        record.sig_05 = parse_bool(fields[7], path, number);
        record.sig_01 = parse_bool(fields[8], path, number);
        records.push_back(std::move(record));
    }
    return records;
}

void write_significance(const std::string& path,
                        const SignificanceOutput& output) {
    const auto n = output.p_raw.size();
    if (output.centered_deviation.size() != n || output.sign.size() != n ||
        output.p_adj.size() != n ||
        output.sig_05.size() != static_cast<std::size_t>(n) ||
        output.sig_01.size() != static_cast<std::size_t>(n) ||
        (output.p_mc && output.p_mc->size() != n)) {
        throw std::invalid_argument(
            "significance columns must share one length");
    }
    auto out = open_for_writing(path);
    out << "region,statistic,centered_deviation,sign,p_raw,p_mc,p_adj,"
           "sig_05,sig_01\n";
    for (Eigen::Index i = 0; i < n; ++i) {
        out << i << ',' << output.statistic << ','
            << format_double(output.centered_deviation[i]) << ','
            << output.sign[i] << ',' << format_double(output.p_raw[i]) << ',';
        if (output.p_mc) out << format_double((*output.p_mc)[i]);
        out << ',' << format_double(output.p_adj[i]) << ','
            << format_bool(output.sig_05[static_cast<std::size_t>(i)]) << ','
            << format_bool(output.sig_01[static_cast<std::size_t>(i)])
            << '\n';
    }
    if (!out) {
        throw ParseError("failed while writing '" + path + "'");
    }
}

void write_global(const std::string& path, const GlobalOutput& output) {
    auto out = open_for_writing(path);
    out << "statistic,gamma,center,deviation,upsilon_sq,p_raw,p_mc\n";
    out << output.statistic << ',' << format_double(output.gamma) << ','
        << format_double(output.center) << ','
        << format_double(output.deviation) << ','
        << format_double(output.upsilon_sq) << ','
        << format_double(output.p_raw) << ',';
    if (output.p_mc) out << format_double(*output.p_mc);
    out << '\n';
    if (!out) {
        throw ParseError("failed while writing '" + path + "'");
    }
}

void write_power_curve(const std::string& path, const PowerCurve& curve) {
    auto out = open_for_writing(path);
    out << "mode,kernel,c,power,se,replicates\n";
    for (const PowerPoint& point : curve.points) {
        out << to_string(curve.mode) << ',' << point.kernel << ','
            << format_double(point.c) << ',' << format_double(point.power)
            << ',' << format_double(point.se) << ',' << point.replicates
            << '\n';
    }
    if (!out) {
        throw ParseError("failed while writing '" + path + "'");
    }
}

void write_compare_report(const std::string& path, const AgreementTable& table,
                          double mcc_value, double rand_value) {
    auto out = open_for_writing(path);
    out << "metric,value\n";
    out << "tp," << table.tp << '\n';
    out << "fp," << table.fp << '\n';
    out << "fn," << table.fn << '\n';
    out << "tn," << table.tn << '\n';
    out << "mcc," << format_double(mcc_value) << '\n';
    out << "rand_index," << format_double(rand_value) << '\n';
    if (!out) {
        throw ParseError("failed while writing '" + path + "'");
    }
}

void write_edge_list(const std::string& path, const WeightGraph& graph) {
    auto out = open_for_writing(path);
    out << "src,dst\n";
    for (int i = 0; i < graph.vertex_count(); ++i) {
        for (const int j : graph.neighbors(i)) {
            if (j >= i) out << i << ',' << j << '\n';
        }
    }
    if (!out) {
        throw ParseError("failed while writing '" + path + "'");
    }
}

std::string file_digest_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "' for digesting");
    }
    std::uint64_t hash = 14695981039346656037ull;
    char buffer[4096];
    while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
        const auto got = in.gcount();
        for (std::streamsize k = 0; k < got; ++k) {
            hash ^= static_cast<unsigned char>(buffer[k]);
            hash *= 1099511628211ull;
        }
        if (!in) break;
    }
    std::string hex(16, '0');
    static constexpr char kDigits[] = "0123456789abcdef";
    for (int k = 15; k >= 0; --k) {
        hex[static_cast<std::size_t>(k)] = kDigits[hash & 0xF];
        hash >>= 4;
    }
    return hex;
}

RunManifest::RunManifest(std::string command) {
    entries_.emplace_back("command", std::move(command));
}

void RunManifest::set(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
}

void RunManifest::set(const std::string& key, const char* value) {
    entries_.emplace_back(key, std::string(value));
}

void RunManifest::set(const std::string& key, double value) {
    entries_.emplace_back(key, format_double(value));
}

void RunManifest::set(const std::string& key, std::int64_t value) {
    entries_.emplace_back(key, std::to_string(value));
}

void RunManifest::set(const std::string& key, std::uint64_t value) {
    entries_.emplace_back(key, std::to_string(value));
}

void RunManifest::add_input(const std::string& key, const std::string& path) {
    entries_.emplace_back(key, path);
    entries_.emplace_back(key + "_digest", "fnv1a:" + file_digest_hex(path));
}

void RunManifest::write_sidecar(const std::string& output_path) const {
    const std::string path = output_path + ".manifest";
    auto out = open_for_writing(path);
    for (const auto& [key, value] : entries_) {
        out << key << '=' << value << '\n';
    }
    if (!out) {
        throw ParseError("failed while writing '" + path + "'");
    }
}

}  // namespace spassoc::io
