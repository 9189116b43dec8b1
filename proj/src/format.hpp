#pragma once

#include <string>

namespace cegi::format {

// Round half away from zero at the given decimal place.
double round_half_away(double x, int decimals);

// Fixed-point rendering after round_half_away, e.g. fixed(528.5714, 1) == "528.6".
std::string fixed(double x, int decimals);

// Explicitly signed percentage cell: "+118.75%", "-9.67%", "+0.00%".
std::string signed_pct(double pct, int decimals);

// Shortest %.Ng rendering, used by the canonical JSONL export (N significant digits).
std::string sig(double x, int significant);

}  // namespace cegi::format
