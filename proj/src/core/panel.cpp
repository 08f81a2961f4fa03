#include "gridcast/core/panel.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gridcast/core/calendar.hpp"
#include "gridcast/core/csv.hpp"

namespace gridcast::core {

int RegionalPanel::channel_index(const std::string& name) const {
    for (size_t i = 0; i < channels.size(); ++i) {
        if (channels[i] == name) return static_cast<int>(i);
    }
    return -1;
}

const Eigen::MatrixXd& RegionalPanel::channel(const std::string& name) const {
    const int i = channel_index(name);
    if (i < 0) throw std::invalid_argument("panel has no channel '" + name + "'");
    return features[static_cast<size_t>(i)];
}

Eigen::MatrixXd& RegionalPanel::channel(const std::string& name) {
    const int i = channel_index(name);
    if (i < 0) throw std::invalid_argument("panel has no channel '" + name + "'");
    return features[static_cast<size_t>(i)];
}

Eigen::MatrixXd RegionalPanel::features_at(int t,
                                           const std::vector<int>& channel_idx) const {
    Eigen::MatrixXd X(n(), static_cast<int>(channel_idx.size()));
    for (size_t c = 0; c < channel_idx.size(); ++c) {
        X.col(static_cast<int>(c)) = features[static_cast<size_t>(channel_idx[c])].col(t);
    }
    return X;
}

void RegionalPanel::validate() const {
    if (region_ids.empty()) throw std::invalid_argument("panel needs n >= 1 regions");
    if (timestamps.size() < 1) throw std::invalid_argument("panel needs T >= 1");
    for (size_t t = 1; t < timestamps.size(); ++t) {
        if (timestamps[t] <= timestamps[t - 1]) {
            throw std::invalid_argument("timestamps must be strictly increasing");
        }
    }
    if (timestamps.size() >= 3) {
        const int64_t step = timestamps[1] - timestamps[0];
        for (size_t t = 1; t < timestamps.size(); ++t) {
            if (timestamps[t] - timestamps[t - 1] != step) {
                throw std::invalid_argument("timestamps must be equally spaced");
            }
        }
    }
    if (channels.size() != features.size()) {
        throw std::invalid_argument("channel names and feature matrices disagree");
    }
    for (const auto& f : features) {
        if (f.rows() != n() || f.cols() != T()) {
            throw std::invalid_argument("feature matrix shape mismatch");
        }
        if (!f.allFinite()) throw std::invalid_argument("non-finite feature value");
    }
    if (loads.rows() != n() || loads.cols() != T()) {
        throw std::invalid_argument("load matrix shape mismatch");
    }
    if (!loads.allFinite()) throw std::invalid_argument("non-finite load value");
    if (!coords.empty() && static_cast<int>(coords.size()) != n()) {
        throw std::invalid_argument("coords size mismatch");
    }
}

const std::vector<std::string>& calendar_channel_names() {
    static const std::vector<std::string> names = {
        "Instant",  "Posan",    "DayType0", "DayType1", "DayType2",
        "DayType3", "DayType4", "DayType5", "DayType6", "Weekend",
        "Summer",   "Christmas", "Holiday_zone", "Trend"};
    return names;
}

void add_calendar_channels(RegionalPanel& panel) {
    const int n = panel.n();
    const int T = panel.T();
    std::map<std::string, Eigen::MatrixXd> cal;
    for (const auto& name : calendar_channel_names()) {
        cal[name] = Eigen::MatrixXd::Zero(n, T);
    }
    for (int t = 0; t < T; ++t) {
        const CalendarFeatures f = calendar_features(panel.timestamps[static_cast<size_t>(t)]);
        cal["Instant"].col(t).setConstant(f.instant);
        cal["Posan"].col(t).setConstant(f.posan);
        cal["DayType" + std::to_string(f.day_type)].col(t).setConstant(1.0);
        cal["Weekend"].col(t).setConstant(f.weekend);
        cal["Summer"].col(t).setConstant(f.summer);
        cal["Christmas"].col(t).setConstant(f.christmas);
        cal["Holiday_zone"].col(t).setConstant(f.holiday_zone);
        cal["Trend"].col(t).setConstant(static_cast<double>(t));
    }
    for (const auto& name : calendar_channel_names()) {
        const int idx = panel.channel_index(name);
        if (idx >= 0) {
            panel.features[static_cast<size_t>(idx)] = cal[name];
        } else {
            panel.channels.push_back(name);
            panel.features.push_back(cal[name]);
        }
    }
}

RegionalPanel load_panel_csv(const std::string& path,
                             const std::vector<std::string>& schema) {
    const auto rows = read_csv(path);
    if (rows.empty()) throw std::runtime_error("empty CSV: " + path);

    const auto& header = rows[0];
    std::vector<std::string> wanted = {"Date", "Region", "Load"};
    wanted.insert(wanted.end(), schema.begin(), schema.end());
    std::vector<int> col(wanted.size(), -1);
    for (size_t w = 0; w < wanted.size(); ++w) {
        for (size_t h = 0; h < header.size(); ++h) {
            if (header[h] == wanted[w]) col[w] = static_cast<int>(h);
        }
        if (col[w] < 0) {
            throw std::runtime_error("CSV missing column '" + wanted[w] + "': " + path);
        }
    }

    struct Cell {
        double load;
        std::vector<double> values;
    };
    std::map<std::pair<std::string, int64_t>, Cell> cells;
    std::set<std::string> regions;
    std::set<int64_t> times;
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() < header.size()) {
            throw std::runtime_error("row " + std::to_string(r) + ": too few fields");
        }
        const std::string region = row[static_cast<size_t>(col[1])];
        const int64_t ts = parse_iso8601(row[static_cast<size_t>(col[0])]);
        Cell cell;
        if (!try_parse_double(row[static_cast<size_t>(col[2])], cell.load)) {
            throw std::runtime_error("row " + std::to_string(r) + ": non-numeric load '" +
                                     row[static_cast<size_t>(col[2])] + "'");
        }
        if (cell.load < 0.0) {
            throw std::runtime_error("row " + std::to_string(r) + ": negative load");
        }
        for (size_t c = 3; c < wanted.size(); ++c) {
            double v;
            if (!try_parse_double(row[static_cast<size_t>(col[c])], v)) {
                throw std::runtime_error("row " + std::to_string(r) +
                                         ": non-numeric value in column '" + wanted[c] + "'");
            }
            cell.values.push_back(v);
        }
        const auto key = std::make_pair(region, ts);
        if (cells.count(key)) {
            throw std::runtime_error("duplicate (region, timestamp) row: " + region + " @ " +
                                     format_iso8601(ts));
        }
        cells[key] = std::move(cell);
        regions.insert(region);
        times.insert(ts);
    }

    // Completeness: every (region, timestamp) cell must exist.
    std::vector<std::string> gaps;
    for (const auto& region : regions) {
        for (const int64_t ts : times) {
            if (!cells.count({region, ts})) {
                gaps.push_back(region + " @ " + format_iso8601(ts));
            }
        }
    }
    if (!gaps.empty()) {
        std::ostringstream msg;
        msg << "panel has " << gaps.size() << " missing (region, timestamp) cells:";
        const size_t shown = std::min<size_t>(gaps.size(), 20);
        for (size_t i = 0; i < shown; ++i) msg << "\n  " << gaps[i];
        if (gaps.size() > shown) msg << "\n  ...";
        throw std::runtime_error(msg.str());
    }

    RegionalPanel panel;
    panel.region_ids.assign(regions.begin(), regions.end());
    panel.timestamps.assign(times.begin(), times.end());
    panel.channels = schema;
    const int n = panel.n();
    const int T = panel.T();
    panel.loads.resize(n, T);
    panel.features.assign(schema.size(), Eigen::MatrixXd(n, T));
    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < T; ++t) {
            const auto& cell = cells.at({panel.region_ids[static_cast<size_t>(i)],
                                         panel.timestamps[static_cast<size_t>(t)]});
            panel.loads(i, t) = cell.load;
            for (size_t c = 0; c < schema.size(); ++c) {
                panel.features[c](i, t) = cell.values[c];
            }
        }
    }
    panel.validate();
    return panel;
}

void save_panel_csv(const RegionalPanel& panel, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "Date,Region,Load";
    for (const auto& c : panel.channels) out << "," << c;
    out << "\n";
    for (int i = 0; i < panel.n(); ++i) {
        for (int t = 0; t < panel.T(); ++t) {
            out << format_iso8601(panel.timestamps[static_cast<size_t>(t)]) << ","
                << panel.region_ids[static_cast<size_t>(i)] << ","
                << format_double(panel.loads(i, t));
            for (const auto& f : panel.features) out << "," << format_double(f(i, t));
            out << "\n";
        }
    }
}

void save_forecast_csv(const std::vector<std::string>& region_ids,
                       const std::vector<int64_t>& timestamps,
                       const Eigen::MatrixXd& loads, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "Date,Region,Load\n";
    for (size_t i = 0; i < region_ids.size(); ++i) {
        for (size_t t = 0; t < timestamps.size(); ++t) {
            out << format_iso8601(timestamps[t]) << "," << region_ids[i] << ","
                << format_double(loads(static_cast<int>(i), static_cast<int>(t))) << "\n";
        }
    }
}

std::vector<std::pair<std::string, std::pair<double, double>>> load_centroid_csv(
    const std::string& path) {
    const auto rows = read_csv(path);
    if (rows.empty()) throw std::runtime_error("empty centroid table: " + path);
    std::vector<std::pair<std::string, std::pair<double, double>>> table;
    for (size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() < 3) throw std::runtime_error("bad centroid row");
        double lat, lon;
        if (!try_parse_double(rows[r][1], lat) || !try_parse_double(rows[r][2], lon)) {
            throw std::runtime_error("non-numeric centroid coordinates, row " +
                                     std::to_string(r));
        }
        table.push_back({rows[r][0], {lat, lon}});
    }
    return table;
}

void attach_coords(
    RegionalPanel& panel,
    const std::vector<std::pair<std::string, std::pair<double, double>>>& table) {
    panel.coords.resize(static_cast<size_t>(panel.n()));
    for (int i = 0; i < panel.n(); ++i) {
        const auto& id = panel.region_ids[static_cast<size_t>(i)];
        bool found = false;
        for (const auto& [name, ll] : table) {
            if (name == id) {
                panel.coords[static_cast<size_t>(i)] = ll;
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("no centroid for region '" + id + "'");
    }
}

}  // namespace gridcast::core
