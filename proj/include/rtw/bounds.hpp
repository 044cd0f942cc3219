#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rtw {

/// One evaluated formula. `formula` is plain arithmetic over the report's
/// inputs (+ - * / ^, parentheses, log, exp, sqrt), so every value can be
/// recomputed from the echo alone. `value` is empty when the quantity is
/// symbolic or a required hypothesis failed.
struct BoundEntry {
  std::string name;
  std::string formula;
  std::optional<long double> value;
  std::string note;
};

struct BoundReport {
  std::string name;
  std::map<std::string, long double> inputs;
  std::vector<BoundEntry> entries;
  std::map<std::string, std::string> flags;

  const BoundEntry* find(const std::string& entry) const;
};

struct BoundQuery {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t alpha = 0;
  std::optional<long double> delta;
  std::optional<long double> a;
};

/// Edge thresholds and independence rates across the critical window.
BoundReport window_summary(const BoundQuery& q);

/// Largest h with h^h <= n.
std::uint64_t largest_self_power_base(std::uint64_t n);

/// Sphere-construction parameters for order n: h, epsilon = 4 log log n / sqrt(h),
/// delta = 4 (log log n)^{3/2} / (log n)^{1/2}, and the (1/8 - delta) n^2 edge
/// floor. InputError when n < 16.
BoundReport corollary_89_params(std::uint64_t n);

/// Chains the construction level delta (or `delta_override`) into the
/// layer-splice corollary with d = 2 delta n. Values are withheld and flagged
/// when a hypothesis of the chain fails. InputError unless n >= 16 is even.
BoundReport assemble_theorem_17(std::uint64_t n,
                                std::optional<long double> delta_override = std::nullopt);

/// RT lower bound for independence parameter m via a = (m - delta n)/n.
/// InputError when m > n/3.
BoundReport assemble_theorem_14(std::uint64_t n, std::uint64_t m,
                                std::optional<long double> delta_override = std::nullopt);

nlohmann::json report_to_json(const BoundReport& r);
/// Header `report,name,formula,value,note` plus one row per entry.
std::string reports_to_csv(const std::vector<BoundReport>& reports);

/// Shortest round-trip decimal for a long double (via double), or empty.
std::string format_value(const std::optional<long double>& v);

}  // namespace rtw
