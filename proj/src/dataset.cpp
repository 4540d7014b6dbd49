#include "riskregion/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <tuple>

#include "riskregion/errors.hpp"

namespace riskregion {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

long parse_count(const std::string& field, const char* what, std::size_t line_no) {
    const std::string t = trim(field);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error(std::string(what) + " must be a non-negative integer, got '" + t + "'",
                          line_no);
    try {
        return std::stol(t);
    } catch (const std::out_of_range&) {
        throw parse_error(std::string(what) + " out of range: '" + t + "'", line_no);
    }
}

int parse_binary(const std::string& field, const char* what, std::size_t line_no) {
    const std::string t = trim(field);
    if (t == "0") return 0;
    if (t == "1") return 1;
    throw parse_error(std::string(what) + " must be 0 or 1, got '" + t + "'", line_no);
}

bool cell_before(const CellCount& a, const CellCount& b) {
    // stratum lexicographic ascending, z descending
    return std::tie(a.stratum, b.treatment) < std::tie(b.stratum, a.treatment);
}

}  // namespace

long GroupedDataset::total_trials() const {
    return std::accumulate(cells.begin(), cells.end(), 0L,
                           [](long acc, const CellCount& c) { return acc + c.trials; });
}

long GroupedDataset::total_events() const {
    return std::accumulate(cells.begin(), cells.end(), 0L,
                           [](long acc, const CellCount& c) { return acc + c.events; });
}

GroupedDataset parse_dataset(const std::string& csv_text) {
    std::stringstream input(csv_text);
    std::string line;
    std::size_t line_no = 0;

    // header: x1,...,xk,z,events,trials
    if (!std::getline(input, line)) throw parse_error("missing header row");
    ++line_no;
    std::vector<std::string> header = split_csv_line(line);
    for (auto& h : header) h = trim(h);
    if (header.size() < 3 || header[header.size() - 3] != "z" ||
        header[header.size() - 2] != "events" || header.back() != "trials")
        throw parse_error("header must end with z,events,trials", line_no);

    GroupedDataset ds;
    ds.covariate_names.assign(header.begin(), header.end() - 3);
    for (const auto& name : ds.covariate_names)
        if (name.empty()) throw parse_error("empty covariate name in header", line_no);
    const std::size_t k = ds.covariate_names.size();

    // duplicate (stratum, z) rows aggregate by summation
    std::map<std::pair<StratumKey, int>, std::pair<long, long>> agg;
    while (std::getline(input, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != k + 3)
            throw parse_error("expected " + std::to_string(k + 3) + " fields, got " +
                                  std::to_string(fields.size()),
                              line_no);
        StratumKey stratum(k);
        for (std::size_t j = 0; j < k; ++j)
            stratum[j] = static_cast<std::uint8_t>(
                parse_binary(fields[j], ("covariate " + ds.covariate_names[j]).c_str(), line_no));
        const int z = parse_binary(fields[k], "z", line_no);
        const long events = parse_count(fields[k + 1], "events", line_no);
        const long trials = parse_count(fields[k + 2], "trials", line_no);
        if (trials < 1) throw parse_error("trials must be >= 1", line_no);
        if (events > trials) throw parse_error("events exceed trials", line_no);
        auto& cell = agg[{stratum, z}];
        cell.first += events;
        cell.second += trials;
    }
    if (agg.empty()) throw parse_error("no data rows");

    for (const auto& [key, counts] : agg)
        ds.cells.push_back({key.first, key.second, counts.first, counts.second});
    std::sort(ds.cells.begin(), ds.cells.end(), cell_before);
    return ds;
}

GroupedDataset load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open data file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_dataset(buf.str());
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what(), e.line());
    }
}

std::string serialize_dataset(const GroupedDataset& ds) {
    std::vector<CellCount> cells = ds.cells;
    std::sort(cells.begin(), cells.end(), cell_before);

    std::string out;
    for (const auto& name : ds.covariate_names) out += name + ",";
    out += "z,events,trials\n";
    for (const auto& cell : cells) {
        for (std::uint8_t v : cell.stratum) out += std::to_string(int(v)) + ",";
        out += std::to_string(cell.treatment) + "," + std::to_string(cell.events) + "," +
               std::to_string(cell.trials) + "\n";
    }
    return out;
}

StrataWeights covariate_distribution(const GroupedDataset& ds) {
    if (ds.cells.empty()) throw error("covariate_distribution: empty dataset");
    const double total = static_cast<double>(ds.total_trials());
    StrataWeights w;
    for (const auto& cell : ds.cells) w.entries[cell.stratum] += cell.trials;
    for (auto& [stratum, weight] : w.entries) weight /= total;
    return w;
}

}  // namespace riskregion
