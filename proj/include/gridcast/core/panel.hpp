#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gridcast::core {

/// Per-region, per-timestep data: feature tensor (d channels of n x T),
/// load targets (n x T, MW) and region metadata. Immutable by convention
/// after construction; operations produce new panels.
struct RegionalPanel {
    std::vector<std::string> region_ids;           // n, sorted ascending
    std::vector<int64_t> timestamps;               // T epoch seconds, strictly increasing, equally spaced
    std::vector<std::string> channels;             // d channel names
    std::vector<Eigen::MatrixXd> features;         // d matrices, each n x T
    Eigen::MatrixXd loads;                         // n x T
    std::vector<std::pair<double, double>> coords; // n (lat deg, lon deg); empty if unknown

    int n() const { return static_cast<int>(region_ids.size()); }
    int T() const { return static_cast<int>(timestamps.size()); }
    int d() const { return static_cast<int>(channels.size()); }

    int channel_index(const std::string& name) const;
    const Eigen::MatrixXd& channel(const std::string& name) const;
    Eigen::MatrixXd& channel(const std::string& name);

    /// Node-feature matrix at one timestep: n x |subset| in subset order.
    Eigen::MatrixXd features_at(int t, const std::vector<int>& channel_idx) const;

    /// Checks the struct invariants; throws std::invalid_argument on violation.
    void validate() const;
};

/// The calendar channels regenerated from timestamps: Instant, Posan,
/// DayType0..DayType6, Weekend, Summer, Christmas, Holiday_zone, Trend.
const std::vector<std::string>& calendar_channel_names();

/// Appends (or refreshes) the calendar channels of `panel` in place.
void add_calendar_channels(RegionalPanel& panel);

/// Loads a panel from CSV with header Date,Region,Load,<schema...>.
/// Requires one row per (region, timestamp); reports every missing cell.
RegionalPanel load_panel_csv(const std::string& path,
                             const std::vector<std::string>& schema);

void save_panel_csv(const RegionalPanel& panel, const std::string& path);

/// Forecast re-emission in the panel schema (Date,Region,Load only).
void save_forecast_csv(const std::vector<std::string>& region_ids,
                       const std::vector<int64_t>& timestamps,
                       const Eigen::MatrixXd& loads, const std::string& path);

/// Region centroid table: CSV `Region,Lat,Lon`.
std::vector<std::pair<std::string, std::pair<double, double>>> load_centroid_csv(
    const std::string& path);

/// Attaches coordinates by region id; throws if a region is missing.
void attach_coords(
    RegionalPanel& panel,
    const std::vector<std::pair<std::string, std::pair<double, double>>>& table);

}  // namespace gridcast::core
