#include "emissions.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "error.hpp"

namespace cegi::emissions {

namespace {

void validate_sample(const PowerSample& s) {
  if (!std::isfinite(s.t_s)) fail(errc::invariant_violation, "sample timestamp is not finite");
  if (s.cpu_w < 0 || s.gpu_w < 0 || s.ram_w < 0 || !std::isfinite(s.cpu_w) ||
      !std::isfinite(s.gpu_w) || !std::isfinite(s.ram_w)) {
    fail(errc::negative_power, "wattage must be finite and >= 0 at t=" + std::to_string(s.t_s));
  }
}

double parse_double(std::string_view field, int line_no, const char* what) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail(errc::decode_error,
         "line " + std::to_string(line_no) + ": bad " + what + " value '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

void EnergyAccumulator::add(const PowerSample& s) {
  validate_sample(s);
  if (has_prev_) {
    if (s.t_s <= prev_.t_s) {
      fail(errc::non_monotonic_timestamps,
           "t=" + std::to_string(s.t_s) + " does not advance past t=" + std::to_string(prev_.t_s));
    }
    double dt = s.t_s - prev_.t_s;
    ws_cpu_ += 0.5 * (prev_.cpu_w + s.cpu_w) * dt;
    ws_gpu_ += 0.5 * (prev_.gpu_w + s.gpu_w) * dt;
    ws_ram_ += 0.5 * (prev_.ram_w + s.ram_w) * dt;
  }
  prev_ = s;
  has_prev_ = true;
  ++count_;
}

EnergyLedger EnergyAccumulator::ledger() const {
  return EnergyLedger{ws_cpu_ / kWattSecondsPerMwh, ws_gpu_ / kWattSecondsPerMwh,
                      ws_ram_ / kWattSecondsPerMwh};
}

EnergyLedger integrate_energy(std::span<const PowerSample> samples) {
  EnergyAccumulator acc;
  for (const PowerSample& s : samples) acc.add(s);
  return acc.ledger();
}

EmissionReading carbon_footprint(const EmissionProfile& profile, const EnergyLedger& ledger) {
  if (!(profile.gamma_kg_per_mwh >= 0)) {
    fail(errc::invariant_violation, "gamma must be >= 0");
  }
  if (!(profile.pue >= 1.0)) {
    fail(errc::invariant_violation, "PUE must be >= 1.0");
  }
  if (ledger.e_cpu_mwh < 0 || ledger.e_gpu_mwh < 0 || ledger.e_ram_mwh < 0) {
    fail(errc::invariant_violation, "ledger components must be >= 0");
  }
  EmissionReading reading;
  reading.ledger = ledger;
  reading.profile = profile;
  reading.cf_kg = profile.gamma_kg_per_mwh * profile.pue * ledger.total();
  reading.cf_g = 1000.0 * reading.cf_kg;
  return reading;
}

IntensityTable IntensityTable::from_csv(std::istream& in) {
  IntensityTable table;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = trim_cr(line);
    if (sv.empty()) continue;
    if (!saw_header) {
      if (sv != "region_code,gamma_kg_per_mwh") {
        fail(errc::decode_error, "line 1: expected header 'region_code,gamma_kg_per_mwh'");
      }
      saw_header = true;
      continue;
    }
    auto fields = split_csv(sv);
    if (fields.size() != 2) {
      fail(errc::decode_error, "line " + std::to_string(line_no) + ": expected 2 fields");
    }
    std::string code(fields[0]);
    double gamma = parse_double(fields[1], line_no, "gamma");
    if (gamma < 0) {
      fail(errc::invariant_violation, "line " + std::to_string(line_no) + ": gamma must be >= 0");
    }
    if (table.gamma_.count(code)) {
      fail(errc::duplicate_key, "line " + std::to_string(line_no) + ": region '" + code + "' repeated");
    }
    table.gamma_.emplace(std::move(code), gamma);
  }
  if (!saw_header) fail(errc::decode_error, "intensity table is empty (missing header)");
  return table;
}

IntensityTable IntensityTable::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open intensity table '" + path + "'");
  return from_csv(in);
}

void IntensityTable::set(const std::string& region_code, double gamma_kg_per_mwh) {
  if (gamma_kg_per_mwh < 0) fail(errc::invariant_violation, "gamma must be >= 0");
  gamma_[region_code] = gamma_kg_per_mwh;
}

bool IntensityTable::contains(const std::string& region_code) const {
  return gamma_.count(region_code) > 0;
}

double lookup_gamma(const std::string& region_code, const IntensityTable& table,
                    std::optional<double> fallback) {
  auto it = table.gamma_.find(region_code);
  if (it != table.gamma_.end()) return it->second;
  if (fallback) return *fallback;
  fail(errc::unknown_region, "no intensity entry for region '" + region_code + "'");
}

EmissionReading track_replay(std::istream& trace_csv, const EmissionProfile& profile) {
  EnergyAccumulator acc;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(trace_csv, line)) {
    ++line_no;
    std::string_view sv = trim_cr(line);
    if (sv.empty()) continue;
    if (!saw_header) {
      if (sv != "t_s,cpu_w,gpu_w,ram_w") {
        fail(errc::decode_error, "line 1: expected header 't_s,cpu_w,gpu_w,ram_w'");
      }
      saw_header = true;
      continue;
    }
    auto fields = split_csv(sv);
    if (fields.size() != 4) {
      fail(errc::decode_error, "line " + std::to_string(line_no) + ": expected 4 fields, got " +
                                   std::to_string(fields.size()));
    }
    PowerSample s;
    s.t_s = parse_double(fields[0], line_no, "t_s");
    s.cpu_w = parse_double(fields[1], line_no, "cpu_w");
    s.gpu_w = parse_double(fields[2], line_no, "gpu_w");
    s.ram_w = parse_double(fields[3], line_no, "ram_w");
    acc.add(s);
  }
  if (!saw_header) fail(errc::decode_error, "power trace is empty (missing header)");
  return carbon_footprint(profile, acc.ledger());
}

EmissionReading track_replay_file(const std::string& path, const EmissionProfile& profile) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open power trace '" + path + "'");
  return track_replay(in, profile);
}

}  // namespace cegi::emissions
