#include "lora.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace cegi::lora {

std::int64_t decomposed_params(const ModuleShape& shape, int rank) {
  if (shape.d_out < 1 || shape.d_in < 1) {
    fail(errc::invariant_violation, "module '" + shape.name + "' has non-positive dimensions");
  }
  if (rank < 1) fail(errc::invalid_argument, "rank must be >= 1");
  if (rank > std::min(shape.d_out, shape.d_in)) {
    fail(errc::rank_exceeds_dim, "rank " + std::to_string(rank) + " exceeds min(d_out, d_in) of module '" +
                                     shape.name + "'");
  }
  return static_cast<std::int64_t>(rank) * (shape.d_out + shape.d_in);
}

TrainableParamCount total_trainable_params(const ArchSpec& arch, int rank) {
  if (arch.num_layers < 1) fail(errc::invariant_violation, "num_layers must be >= 1");
  std::int64_t per_layer = 0;
  for (const ModuleShape& shape : arch.per_layer_modules) {
    per_layer += decomposed_params(shape, rank);
  }
  return TrainableParamCount{per_layer * arch.num_layers};
}

void validate_config(const LoraConfig& config, const ArchSpec& arch) {
  if (config.quant_bits != 4 && config.quant_bits != 8) {
    fail(errc::invariant_violation, "quant_bits must be 4 or 8");
  }
  if (config.rank < 1) fail(errc::invariant_violation, "rank must be >= 1");
  for (const ModuleShape& shape : arch.per_layer_modules) {
    if (config.rank > std::min(shape.d_out, shape.d_in)) {
      fail(errc::rank_exceeds_dim,
           "rank " + std::to_string(config.rank) + " exceeds dims of module '" + shape.name + "'");
    }
  }
}

ArchSpec arch_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::decode_error, std::string("architecture spec: ") + e.what());
  }
  if (!doc.is_object()) fail(errc::decode_error, "architecture spec must be a JSON object");
  ArchSpec arch;
  try {
    arch.model_id = doc.at("model_id").get<std::string>();
    arch.num_layers = doc.at("num_layers").get<int>();
    for (const auto& m : doc.at("modules")) {
      ModuleShape shape;
      shape.name = m.at("name").get<std::string>();
      shape.d_out = m.at("d_out").get<std::int64_t>();
      shape.d_in = m.at("d_in").get<std::int64_t>();
      arch.per_layer_modules.push_back(std::move(shape));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(errc::decode_error, std::string("architecture spec: ") + e.what());
  }
  if (arch.num_layers < 1) fail(errc::invariant_violation, "num_layers must be >= 1");
  std::set<std::string> names;
  for (const ModuleShape& shape : arch.per_layer_modules) {
    if (shape.d_out < 1 || shape.d_in < 1) {
      fail(errc::invariant_violation, "module '" + shape.name + "' has non-positive dimensions");
    }
    if (!names.insert(shape.name).second) {
      fail(errc::invariant_violation, "module name '" + shape.name + "' repeated within a layer");
    }
  }
  return arch;
}

ArchSpec arch_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open architecture spec '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return arch_from_json(buf.str());
}

namespace {

double parse_double_field(std::string_view field, int line_no, const char* what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    fail(errc::decode_error,
         "line " + std::to_string(line_no) + ": bad " + what + " value '" + std::string(field) + "'");
  }
  return value;
}

int parse_int_field(std::string_view field, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    fail(errc::decode_error,
         "line " + std::to_string(line_no) + ": bad " + what + " value '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

ParamTable ParamTable::from_csv(std::istream& in) {
  ParamTable table;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = line;
    if (!sv.empty() && sv.back() == '\r') sv.remove_suffix(1);
    if (sv.empty()) continue;
    if (!saw_header) {
      if (sv != "model_size,rank,trainable_params_m") {
        fail(errc::decode_error, "line 1: expected header 'model_size,rank,trainable_params_m'");
      }
      saw_header = true;
      continue;
    }
    std::size_t c1 = sv.find(',');
    std::size_t c2 = c1 == std::string_view::npos ? std::string_view::npos : sv.find(',', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
        sv.find(',', c2 + 1) != std::string_view::npos) {
      fail(errc::decode_error, "line " + std::to_string(line_no) + ": expected 3 fields");
    }
    std::string key(sv.substr(0, c1));
    int rank = parse_int_field(sv.substr(c1 + 1, c2 - c1 - 1), line_no, "rank");
    double tp = parse_double_field(sv.substr(c2 + 1), line_no, "trainable_params_m");
    if (rank < 1) fail(errc::invariant_violation, "line " + std::to_string(line_no) + ": rank must be >= 1");
    if (tp <= 0) {
      fail(errc::invariant_violation,
           "line " + std::to_string(line_no) + ": trainable_params_m must be > 0");
    }
    if (table.entries_.count({key, rank})) {
      fail(errc::duplicate_key,
           "line " + std::to_string(line_no) + ": (" + key + ", " + std::to_string(rank) + ") repeated");
    }
    table.entries_[{key, rank}] = tp;
  }
  if (!saw_header) fail(errc::decode_error, "param table is empty (missing header)");
  return table;
}

ParamTable ParamTable::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open param table '" + path + "'");
  return from_csv(in);
}

void ParamTable::add(const std::string& key, int rank, double tp_millions) {
  if (tp_millions <= 0) fail(errc::invariant_violation, "trainable_params_m must be > 0");
  entries_[{key, rank}] = tp_millions;
}

void ParamTable::add_alias(const std::string& model_id, const std::string& key) {
  aliases_[model_id] = key;
}

void ParamTable::set_mean_override(const std::string& model_id, double mean_tp_millions) {
  if (mean_tp_millions <= 0) fail(errc::invariant_violation, "mean override must be > 0");
  mean_overrides_[model_id] = mean_tp_millions;
}

std::string ParamTable::resolve(const std::string& model_id) const {
  auto it = aliases_.find(model_id);
  return it == aliases_.end() ? model_id : it->second;
}

double ParamTable::tp_millions(const std::string& model_id, int rank) const {
  auto it = entries_.find({resolve(model_id), rank});
  if (it == entries_.end()) {
    fail(errc::missing_param_entry,
         "no trainable-parameter entry for (" + model_id + ", rank " + std::to_string(rank) + ")");
  }
  return it->second;
}

std::optional<double> ParamTable::mean_override(const std::string& model_id) const {
  auto it = mean_overrides_.find(model_id);
  if (it == mean_overrides_.end()) return std::nullopt;
  return it->second;
}

bool ParamTable::has_entry(const std::string& model_id, int rank) const {
  return entries_.count({resolve(model_id), rank}) > 0;
}

double mean_trainable_params(const std::string& model_id, const std::vector<int>& ranks,
                             const ParamTable& table) {
  if (ranks.empty()) fail(errc::invalid_argument, "rank set is empty");
  if (auto o = table.mean_override(model_id)) return *o;
  double sum = 0.0;
  for (int rank : ranks) sum += table.tp_millions(model_id, rank);
  return sum / static_cast<double>(ranks.size());
}

}  // namespace cegi::lora
