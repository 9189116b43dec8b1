#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>

namespace cegi::emissions {

// One telemetry row: wall-clock seconds plus per-channel draw in watts.
struct PowerSample {
  double t_s = 0.0;
  double cpu_w = 0.0;
  double gpu_w = 0.0;
  double ram_w = 0.0;
};

// Integrated per-channel energy in MWh.
struct EnergyLedger {
  double e_cpu_mwh = 0.0;
  double e_gpu_mwh = 0.0;
  double e_ram_mwh = 0.0;

  double total() const { return e_cpu_mwh + e_gpu_mwh + e_ram_mwh; }
};

// Regional intensity (kg CO2 per MWh) and datacenter overhead multiplier.
struct EmissionProfile {
  double gamma_kg_per_mwh = 0.0;
  double pue = 1.0;
  std::string region_code;
};

struct EmissionReading {
  double cf_kg = 0.0;
  double cf_g = 0.0;  // always 1000 * cf_kg
  EnergyLedger ledger;
  EmissionProfile profile;
};

inline constexpr double kWattSecondsPerMwh = 3.6e9;

// Streaming trapezoidal integrator. Holds only the previous sample and the
// running watt-second sums, so arbitrarily long traces replay in O(1) memory.
// Timestamps must be strictly increasing and all wattages nonnegative.
class EnergyAccumulator {
 public:
  void add(const PowerSample& s);
  EnergyLedger ledger() const;
  std::size_t count() const { return count_; }

 private:
  bool has_prev_ = false;
  PowerSample prev_{};
  double ws_cpu_ = 0.0;
  double ws_gpu_ = 0.0;
  double ws_ram_ = 0.0;
  std::size_t count_ = 0;
};

// Trapezoidal integration over an ordered sample list. Empty and singleton
// inputs yield an all-zero ledger.
EnergyLedger integrate_energy(std::span<const PowerSample> samples);

// CF = gamma * PUE * (E_CPU + E_GPU + E_RAM), reported in kg and grams.
EmissionReading carbon_footprint(const EmissionProfile& profile, const EnergyLedger& ledger);

// region_code -> gamma table, loadable from CSV (header region_code,gamma_kg_per_mwh).
class IntensityTable {
 public:
  static IntensityTable from_csv(std::istream& in);
  static IntensityTable from_csv_file(const std::string& path);

  void set(const std::string& region_code, double gamma_kg_per_mwh);
  bool contains(const std::string& region_code) const;
  std::size_t size() const { return gamma_.size(); }

 private:
  friend double lookup_gamma(const std::string&, const IntensityTable&, std::optional<double>);
  std::map<std::string, double> gamma_;
};

double lookup_gamma(const std::string& region_code, const IntensityTable& table,
                    std::optional<double> fallback = std::nullopt);

// Replays a power-sample CSV (header t_s,cpu_w,gpu_w,ram_w) through the
// streaming accumulator and applies the footprint formula. Decode failures
// name the offending line.
EmissionReading track_replay(std::istream& trace_csv, const EmissionProfile& profile);
EmissionReading track_replay_file(const std::string& path, const EmissionProfile& profile);

}  // namespace cegi::emissions
