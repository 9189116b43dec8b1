#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cegi::lora {

// Frozen weight matrix dimensions: d_out rows, d_in columns.
struct ModuleShape {
  std::string name;
  std::int64_t d_out = 0;
  std::int64_t d_in = 0;
};

struct ArchSpec {
  std::string model_id;
  int num_layers = 0;
  std::vector<ModuleShape> per_layer_modules;
};

struct LoraConfig {
  int rank = 0;
  double alpha = 16.0;
  double dropout = 0.05;
  int quant_bits = 4;  // carried as metadata only
};

struct TrainableParamCount {
  std::int64_t params = 0;
  double millions() const { return static_cast<double>(params) / 1e6; }
};

// Entry count of the rank-r factor pair for one module: r*(d_out + d_in).
// The factors themselves are never materialized here.
std::int64_t decomposed_params(const ModuleShape& shape, int rank);

// num_layers * sum over per-layer modules of decomposed_params.
TrainableParamCount total_trainable_params(const ArchSpec& arch, int rank);

// Checks rank/quant invariants of a config against every targeted module.
void validate_config(const LoraConfig& config, const ArchSpec& arch);

// JSON object {model_id, num_layers, modules: [{name, d_out, d_in}]}.
ArchSpec arch_from_json(const std::string& text);
ArchSpec arch_from_json_file(const std::string& path);

// Published trainable-parameter counts in millions, keyed by a size/model key
// and rank. Model ids resolve through aliases (e.g. "Qwen-VL-7B" -> "7.0B").
// A mean override pins the rank-set mean for models whose published per-task
// column disagrees with the per-rank table; mean_trainable_params consults
// overrides first.
class ParamTable {
 public:
  // CSV header: model_size,rank,trainable_params_m
  static ParamTable from_csv(std::istream& in);
  static ParamTable from_csv_file(const std::string& path);

  void add(const std::string& key, int rank, double tp_millions);
  void add_alias(const std::string& model_id, const std::string& key);
  void set_mean_override(const std::string& model_id, double mean_tp_millions);

  double tp_millions(const std::string& model_id, int rank) const;
  std::optional<double> mean_override(const std::string& model_id) const;
  bool has_entry(const std::string& model_id, int rank) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::string resolve(const std::string& model_id) const;
  std::map<std::pair<std::string, int>, double> entries_;
  std::map<std::string, std::string> aliases_;
  std::map<std::string, double> mean_overrides_;
};

// Arithmetic mean of per-rank counts in millions for the given rank set.
double mean_trainable_params(const std::string& model_id, const std::vector<int>& ranks,
                             const ParamTable& table);

}  // namespace cegi::lora
