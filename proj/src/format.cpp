#include "format.hpp"

#include <cmath>
#include <cstdio>

namespace cegi::format {

double round_half_away(double x, int decimals) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) >= 1e15) return x;  // beyond double's integer grid; leave as-is
  double scale = std::pow(10.0, decimals);
  return std::copysign(std::floor(std::abs(x) * scale + 0.5), x) / scale;
}

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, round_half_away(x, decimals));
  return buf;
}

std::string signed_pct(double pct, int decimals) {
  std::string body = fixed(pct, decimals);
  if (!body.empty() && body[0] != '-') body.insert(body.begin(), '+');
  return body + "%";
}

std::string sig(double x, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant, x);
  return buf;
}

}  // namespace cegi::format
