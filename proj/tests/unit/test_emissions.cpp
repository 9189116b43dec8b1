#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "emissions.hpp"
#include "error.hpp"

using namespace cegi;
using namespace cegi::emissions;

namespace {

std::vector<PowerSample> constant_trace(double watts, double t0, double t1) {
  return {{t0, watts, watts, watts}, {t1, watts, watts, watts}};
}

}  // namespace

TEST_CASE("integrate_energy closed forms") {
  SUBCASE("empty stream has no energy") {
    EnergyLedger ledger = integrate_energy({});
    CHECK(ledger.e_cpu_mwh == 0.0);
    CHECK(ledger.e_gpu_mwh == 0.0);
    CHECK(ledger.e_ram_mwh == 0.0);
  }
  SUBCASE("singleton contributes zero energy") {
    std::vector<PowerSample> one = {{0.0, 250.0, 100.0, 30.0}};
    CHECK(integrate_energy(one).total() == 0.0);
  }
  SUBCASE("constant 100 W for an hour is 1e-4 MWh per channel") {
    EnergyLedger ledger = integrate_energy(constant_trace(100.0, 0.0, 3600.0));
    CHECK(ledger.e_cpu_mwh == doctest::Approx(1.0e-4).epsilon(1e-12));
    CHECK(ledger.e_gpu_mwh == doctest::Approx(1.0e-4).epsilon(1e-12));
    CHECK(ledger.e_ram_mwh == doctest::Approx(1.0e-4).epsilon(1e-12));
  }
  SUBCASE("cpu ramp 0 -> 100 W over an hour is 5e-5 MWh") {
    std::vector<PowerSample> trace = {{0.0, 0.0, 0.0, 0.0}, {3600.0, 100.0, 0.0, 0.0}};
    EnergyLedger ledger = integrate_energy(trace);
    CHECK(ledger.e_cpu_mwh == doctest::Approx(5.0e-5).epsilon(1e-12));
    CHECK(ledger.e_gpu_mwh == 0.0);
  }
}

TEST_CASE("integrate_energy error paths") {
  std::vector<PowerSample> dup = {{0.0, 1, 1, 1}, {0.0, 1, 1, 1}};
  CHECK_THROWS_WITH_AS(integrate_energy(dup), doctest::Contains("NonMonotonicTimestamps"), Error);

  std::vector<PowerSample> backwards = {{1.0, 1, 1, 1}, {0.5, 1, 1, 1}};
  CHECK_THROWS_AS(integrate_energy(backwards), Error);

  std::vector<PowerSample> negative = {{0.0, -1.0, 1, 1}};
  try {
    integrate_energy(negative);
    FAIL("expected NegativePower");
  } catch (const Error& e) {
    CHECK(e.code() == errc::negative_power);
  }
}

TEST_CASE("integrate_energy properties") {
  std::mt19937_64 rng(20240517);
  std::uniform_real_distribution<double> watts(0.0, 500.0);
  std::uniform_real_distribution<double> dt(0.001, 120.0);
  std::uniform_int_distribution<int> len(2, 40);

  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<PowerSample> trace;
    double t = 0.0;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      trace.push_back({t, watts(rng), watts(rng), watts(rng)});
      t += dt(rng);
    }

    EnergyLedger whole = integrate_energy(trace);

    // linearity: scaling all wattages scales the ledger
    double k = 3.25;
    std::vector<PowerSample> scaled = trace;
    for (auto& s : scaled) {
      s.cpu_w *= k;
      s.gpu_w *= k;
      s.ram_w *= k;
    }
    EnergyLedger scaled_ledger = integrate_energy(scaled);
    CHECK(scaled_ledger.e_cpu_mwh == doctest::Approx(k * whole.e_cpu_mwh).epsilon(1e-12));
    CHECK(scaled_ledger.e_gpu_mwh == doctest::Approx(k * whole.e_gpu_mwh).epsilon(1e-12));
    CHECK(scaled_ledger.e_ram_mwh == doctest::Approx(k * whole.e_ram_mwh).epsilon(1e-12));

    // additivity: split at an interior sample, shared boundary
    std::uniform_int_distribution<std::size_t> cut_dist(1, trace.size() - 2);
    std::size_t cut = trace.size() > 2 ? cut_dist(rng) : 1;
    std::vector<PowerSample> head(trace.begin(), trace.begin() + cut + 1);
    std::vector<PowerSample> tail(trace.begin() + cut, trace.end());
    EnergyLedger a = integrate_energy(head);
    EnergyLedger b = integrate_energy(tail);
    CHECK(a.e_cpu_mwh + b.e_cpu_mwh == doctest::Approx(whole.e_cpu_mwh).epsilon(1e-12));
    CHECK(a.e_gpu_mwh + b.e_gpu_mwh == doctest::Approx(whole.e_gpu_mwh).epsilon(1e-12));
    CHECK(a.e_ram_mwh + b.e_ram_mwh == doctest::Approx(whole.e_ram_mwh).epsilon(1e-12));
  }
}

TEST_CASE("streaming accumulator matches batch integration") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> watts(0.0, 900.0);
  std::vector<PowerSample> trace;
  EnergyAccumulator acc;
  for (int i = 0; i < 500; ++i) {
    PowerSample s{static_cast<double>(i) * 0.5, watts(rng), watts(rng), watts(rng)};
    trace.push_back(s);
    acc.add(s);
  }
  EnergyLedger batch = integrate_energy(trace);
  EnergyLedger streamed = acc.ledger();
  CHECK(streamed.e_cpu_mwh == doctest::Approx(batch.e_cpu_mwh).epsilon(1e-15));
  CHECK(streamed.e_gpu_mwh == doctest::Approx(batch.e_gpu_mwh).epsilon(1e-15));
  CHECK(streamed.e_ram_mwh == doctest::Approx(batch.e_ram_mwh).epsilon(1e-15));
}

TEST_CASE("carbon_footprint") {
  SUBCASE("zero intensity gives zero footprint") {
    EmissionProfile profile{0.0, 1.5, "XX"};
    EmissionReading r = carbon_footprint(profile, EnergyLedger{1.0, 2.0, 3.0});
    CHECK(r.cf_kg == 0.0);
    CHECK(r.cf_g == 0.0);
  }
  SUBCASE("direct evaluation, gamma=500 pue=1.2 total=0.001") {
    EmissionProfile profile{500.0, 1.2, "XX"};
    EmissionReading r = carbon_footprint(profile, EnergyLedger{0.001, 0.0, 0.0});
    CHECK(r.cf_kg == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(r.cf_g == doctest::Approx(600.0).epsilon(1e-12));
  }
  SUBCASE("direct evaluation, gamma=400 pue=1.0 mixed ledger") {
    EmissionProfile profile{400.0, 1.0, "XX"};
    EmissionReading r = carbon_footprint(profile, EnergyLedger{0.001, 0.002, 0.0005});
    CHECK(r.cf_kg == doctest::Approx(1.4).epsilon(1e-12));
  }
  SUBCASE("grams are exactly 1000x kilograms") {
    EmissionProfile profile{437.3, 1.07, "XX"};
    EmissionReading r = carbon_footprint(profile, EnergyLedger{0.0123, 0.0456, 0.0078});
    CHECK(r.cf_g == 1000.0 * r.cf_kg);
  }
  SUBCASE("monotone in gamma, pue, and energy") {
    EnergyLedger ledger{0.001, 0.002, 0.003};
    double base = carbon_footprint(EmissionProfile{400, 1.1, ""}, ledger).cf_kg;
    CHECK(carbon_footprint(EmissionProfile{410, 1.1, ""}, ledger).cf_kg >= base);
    CHECK(carbon_footprint(EmissionProfile{400, 1.2, ""}, ledger).cf_kg >= base);
    EnergyLedger bigger{0.0015, 0.002, 0.003};
    CHECK(carbon_footprint(EmissionProfile{400, 1.1, ""}, bigger).cf_kg >= base);
  }
  SUBCASE("pue below 1 is rejected") {
    CHECK_THROWS_AS(carbon_footprint(EmissionProfile{400, 0.9, ""}, EnergyLedger{}), Error);
  }
}

TEST_CASE("lookup_gamma") {
  IntensityTable table;
  table.set("AA", 500.0);
  CHECK(lookup_gamma("AA", table) == 500.0);
  CHECK(lookup_gamma("ZZ", table, 475.0) == 475.0);
  try {
    lookup_gamma("ZZ", table);
    FAIL("expected UnknownRegion");
  } catch (const Error& e) {
    CHECK(e.code() == errc::unknown_region);
  }
}

TEST_CASE("intensity table CSV") {
  std::istringstream csv("region_code,gamma_kg_per_mwh\nAA,500\nBB,41.5\n");
  IntensityTable table = IntensityTable::from_csv(csv);
  CHECK(table.size() == 2);
  CHECK(lookup_gamma("BB", table) == doctest::Approx(41.5));

  std::istringstream dup("region_code,gamma_kg_per_mwh\nAA,500\nAA,1\n");
  CHECK_THROWS_AS(IntensityTable::from_csv(dup), Error);

  std::istringstream bad_header("region,gamma\nAA,500\n");
  CHECK_THROWS_AS(IntensityTable::from_csv(bad_header), Error);
}

TEST_CASE("track_replay") {
  EmissionProfile profile{500.0, 1.0, "AA"};

  SUBCASE("constant 100 W trace gives 0.15 kg at gamma 500") {
    std::istringstream csv("t_s,cpu_w,gpu_w,ram_w\n0,100,100,100\n3600,100,100,100\n");
    EmissionReading r = track_replay(csv, profile);
    CHECK(r.cf_kg == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(r.cf_g == doctest::Approx(150.0).epsilon(1e-12));
  }
  SUBCASE("header-only trace is an empty stream") {
    std::istringstream csv("t_s,cpu_w,gpu_w,ram_w\n");
    CHECK(track_replay(csv, profile).cf_kg == 0.0);
  }
  SUBCASE("malformed row names its line") {
    std::istringstream csv("t_s,cpu_w,gpu_w,ram_w\n0,100,100,100\n10,oops,100,100\n");
    CHECK_THROWS_WITH_AS(track_replay(csv, profile), doctest::Contains("line 3"), Error);
  }
  SUBCASE("non-monotonic rows propagate the domain error") {
    std::istringstream csv("t_s,cpu_w,gpu_w,ram_w\n10,1,1,1\n5,1,1,1\n");
    try {
      track_replay(csv, profile);
      FAIL("expected NonMonotonicTimestamps");
    } catch (const Error& e) {
      CHECK(e.code() == errc::non_monotonic_timestamps);
    }
  }
}
