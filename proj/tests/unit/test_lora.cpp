#include <doctest.h>

#include <sstream>

#include "../support/oracles.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "lora.hpp"

using namespace cegi;
using namespace cegi::lora;

TEST_CASE("decomposed_params examples") {
  CHECK(decomposed_params({"m", 1, 1}, 1) == 2);
  CHECK(decomposed_params({"q_proj", 896, 896}, 8) == 14336);
  CHECK(decomposed_params({"up_proj", 4864, 896}, 4) == 23040);
}

TEST_CASE("decomposed_params equals materialized entry count, d,k <= 32 exhaustive") {
  for (int d = 1; d <= 32; ++d) {
    for (int k = 1; k <= 32; ++k) {
      for (int r = 1; r <= std::min(d, k); ++r) {
        ModuleShape shape{"m", d, k};
        CHECK(decomposed_params(shape, r) == oracles::materialized_entry_count(d, k, r));
      }
    }
  }
}

TEST_CASE("decomposed_params rank validation") {
  try {
    decomposed_params({"m", 4, 8}, 5);
    FAIL("expected RankExceedsDim");
  } catch (const Error& e) {
    CHECK(e.code() == errc::rank_exceeds_dim);
  }
}

TEST_CASE("total_trainable_params") {
  ArchSpec arch;
  arch.model_id = "toy";
  arch.num_layers = 1;
  arch.per_layer_modules = {{"m", 4, 4}};
  CHECK(total_trainable_params(arch, 2).params == 16);

  arch.num_layers = 2;
  CHECK(total_trainable_params(arch, 2).params == 32);

  // rank homogeneity on a multi-module arch
  arch.per_layer_modules = {{"q", 64, 64}, {"up", 256, 64}, {"down", 64, 256}};
  arch.num_layers = 12;
  CHECK(total_trainable_params(arch, 16).params == 2 * total_trainable_params(arch, 8).params);

  // the error names the offending module
  arch.per_layer_modules = {{"q", 64, 64}, {"tiny", 2, 2}};
  try {
    total_trainable_params(arch, 4);
    FAIL("expected RankExceedsDim");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("tiny") != std::string::npos);
  }
}

TEST_CASE("arch spec JSON") {
  const char* json = R"({"model_id":"toy-1b","num_layers":3,
    "modules":[{"name":"q_proj","d_out":512,"d_in":512},{"name":"up_proj","d_out":2048,"d_in":512}]})";
  ArchSpec arch = arch_from_json(json);
  CHECK(arch.model_id == "toy-1b");
  CHECK(arch.num_layers == 3);
  CHECK(arch.per_layer_modules.size() == 2);
  CHECK(total_trainable_params(arch, 4).params ==
        3 * (4 * (512 + 512) + 4 * (2048 + 512)));

  CHECK_THROWS_AS(arch_from_json("{"), Error);
  CHECK_THROWS_AS(
      arch_from_json(R"({"model_id":"x","num_layers":0,"modules":[]})"), Error);
  CHECK_THROWS_AS(
      arch_from_json(
          R"({"model_id":"x","num_layers":1,"modules":[{"name":"a","d_out":1,"d_in":1},{"name":"a","d_out":2,"d_in":2}]})"),
      Error);
}

TEST_CASE("validate_config") {
  ArchSpec arch;
  arch.model_id = "toy";
  arch.num_layers = 1;
  arch.per_layer_modules = {{"m", 16, 16}};
  LoraConfig config;
  config.rank = 8;
  config.quant_bits = 4;
  CHECK_NOTHROW(validate_config(config, arch));
  config.quant_bits = 16;
  CHECK_THROWS_AS(validate_config(config, arch), Error);
  config.quant_bits = 8;
  config.rank = 32;
  CHECK_THROWS_AS(validate_config(config, arch), Error);
}

TEST_CASE("param table CSV round trip") {
  std::istringstream csv(
      "model_size,rank,trainable_params_m\n7.0B,8,1.34\n7.0B,16,2.68\n7.0B,32,5.35\n");
  ParamTable table = ParamTable::from_csv(csv);
  CHECK(table.tp_millions("7.0B", 8) == doctest::Approx(1.34));

  std::istringstream dup("model_size,rank,trainable_params_m\n7.0B,8,1.34\n7.0B,8,1.34\n");
  CHECK_THROWS_AS(ParamTable::from_csv(dup), Error);
}

TEST_CASE("mean_trainable_params against the published table") {
  ParamTable table = fixtures::paper_param_table();
  CHECK(mean_trainable_params("Qwen-VL-7B", {8, 16, 32}, table) ==
        doctest::Approx(3.12).epsilon(0.005));
  CHECK(mean_trainable_params("Llama-3.2-11B", {8, 16, 32}, table) ==
        doctest::Approx(3.92).epsilon(0.005));
  CHECK(mean_trainable_params("Qwen2.5-14B", {8}, table) == doctest::Approx(1.89));

  // the published per-task column pins this model's mean
  CHECK(mean_trainable_params("Qwen2.5-0.5B", {4, 8, 16}, table) == doctest::Approx(0.36));

  try {
    mean_trainable_params("Qwen-VL-7B", {8, 64}, table);
    FAIL("expected MissingParamEntry");
  } catch (const Error& e) {
    CHECK(e.code() == errc::missing_param_entry);
  }
}

TEST_CASE("published rank-doubling ratios stay near 2") {
  ParamTable table = fixtures::paper_param_table();
  for (const auto& row : fixtures::param_table_rows()) {
    if (row.rank >= 32) continue;
    double ratio = table.tp_millions(row.model_size, row.rank * 2) / row.tp_m;
    CHECK(ratio >= 1.96);
    CHECK(ratio <= 2.04);
  }
}
