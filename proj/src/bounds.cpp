#include "rtw/bounds.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "rtw/error.hpp"

namespace rtw {
namespace {

using LD = long double;

const char* const kDeltaFormula = "4*log(log(n))^(3/2)/log(n)^(1/2)";
const char* const kEpsilonFormula = "4*log(log(n))/h^(1/2)";

LD construction_delta(LD n) {
  const LD ln = std::log(n);
  return 4.0L * std::pow(std::log(ln), 1.5L) / std::sqrt(ln);
}

std::string fmt(LD v) {
  std::ostringstream os;
  os.precision(6);
  os << static_cast<double>(v);
  return os.str();
}

}  // namespace

const BoundEntry* BoundReport::find(const std::string& entry) const {
  for (const auto& e : entries)
    if (e.name == entry) return &e;
  return nullptr;
}

std::string format_value(const std::optional<long double>& v) {
  if (!v) return {};
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, static_cast<double>(*v));
  return std::string(buf, end);
}

BoundReport window_summary(const BoundQuery& q) {
  const LD n = static_cast<LD>(q.n);
  const LD m = static_cast<LD>(q.m);
  const LD alpha = static_cast<LD>(q.alpha);
  BoundReport r;
  r.name = "window_summary";
  r.inputs = {{"n", n}, {"m", m}, {"alpha", alpha}};
  const LD base = n * n / 8.0L;
  r.entries.push_back({"rt_lower_leading", "n^2/8 + (1/3)*m*n", base + m * n / 3.0L,
                       "the -o(1) m n correction is not resolved"});
  r.entries.push_back({"rt_upper", "n^2/8 + (3/2)*m*n", base + 1.5L * m * n, ""});
  r.entries.push_back({"edge_threshold_coarse", "n^2/8 + 10^10*alpha*n", base + 1e10L * alpha * n,
                       "K4 or independent set > alpha above this edge count"});
  r.entries.push_back({"edge_threshold_sharp", "n^2/8 + (3/2)*alpha*n", base + 1.5L * alpha * n,
                       "requires alpha < gamma0 n for an unspecified gamma0"});
  std::optional<LD> sphere_rate, spliced_rate;
  if (q.n >= 16) {
    const LD ln = std::log(n);
    const LD lln = std::log(ln);
    sphere_rate = n * lln / ln;
    spliced_rate = n * std::pow(lln, 1.5L) / std::sqrt(ln);
  }
  r.entries.push_back({"sphere_alpha_rate_over_c", "n*log(log(n))/log(n)", sphere_rate,
                       "independence bound is c times this, c an absolute constant"});
  r.entries.push_back({"spliced_alpha_rate_over_cprime", "n*log(log(n))^(3/2)/log(n)^(1/2)", spliced_rate,
                       "independence bound is c' times this, c' an absolute constant"});
  r.flags["o1_terms"] = "symbolic: no explicit rate is available";
  if (3 * q.m > q.n) {
    r.flags["rt_bracket_regime"] = "outside: m exceeds n/3";
  } else if (spliced_rate && m > *spliced_rate) {
    r.flags["rt_bracket_regime"] = "m exceeds the window floor by a factor " + fmt(m / *spliced_rate) +
                              "; the bracket needs this factor to tend to infinity";
  } else {
    r.flags["rt_bracket_regime"] = "outside: m is not above the window floor";
  }
  return r;
}

std::uint64_t largest_self_power_base(std::uint64_t n) {
  std::uint64_t h = 1;
  while (true) {
    const std::uint64_t next = h + 1;
    // next^next <= n, compared in logs with an exact integer confirmation.
    if (static_cast<LD>(next) * std::log(static_cast<LD>(next)) > std::log(static_cast<LD>(n)) + 1e-9L)
      break;
    unsigned __int128 power = 1;
    bool fits = true;
    for (std::uint64_t i = 0; i < next && fits; ++i) {
      power *= next;
      if (power > n) fits = false;
    }
    if (!fits) break;
    h = next;
  }
  return h;
}

BoundReport corollary_89_params(std::uint64_t n) {
  if (n < 16) throw InputError("corollary_89_params: n must be at least 16");
  const LD nn = static_cast<LD>(n);
  const std::uint64_t h = largest_self_power_base(n);
  const LD hh = static_cast<LD>(h);
  const LD ln = std::log(nn);
  const LD lln = std::log(ln);
  const LD eps = 4.0L * lln / std::sqrt(hh);
  const LD delta = construction_delta(nn);
  BoundReport r;
  r.name = "corollary_89_params";
  r.inputs = {{"n", nn}, {"h", hh}};
  r.entries.push_back({"h", "h", hh, "largest integer with h^h <= n"});
  r.entries.push_back({"epsilon", kEpsilonFormula, eps, ""});
  r.entries.push_back({"mu", "4*log(log(n))/h", eps / std::sqrt(hh), "epsilon/sqrt(h)"});
  r.entries.push_back({"delta", kDeltaFormula, delta, ""});
  r.entries.push_back({"independence_level", "n*" + std::string(kDeltaFormula), delta * nn,
                       "m0 = delta n"});
  r.entries.push_back({"be_independence_bound", "2*n*exp(-(" + std::string(kEpsilonFormula) +
                                                    ")*h^(1/2)/4)",
                       2.0L * nn * std::exp(-eps * std::sqrt(hh) / 4.0L), "equals 2n/log n"});
  r.entries.push_back({"be_min_degree_bound", "(1/4 - 2*" + std::string(kEpsilonFormula) + ")*n",
                       (0.25L - 2.0L * eps) * nn, ""});
  r.entries.push_back({"edge_floor", "(1/8 - " + std::string(kDeltaFormula) + ")*n^2",
                       (0.125L - delta) * nn * nn, "S(n, delta n) >= this"});
  r.flags["be_h_at_least_16"] = h >= 16 ? "holds" : "fails: h=" + std::to_string(h);
  r.flags["be_epsilon_below_1"] = eps < 1.0L ? "holds" : "fails: epsilon=" + fmt(eps);
  r.flags["be_order_condition"] = "unknown: the constant C is unspecified";
  r.flags["delta_below_1_8"] = delta < 0.125L ? "holds" : "fails: delta=" + fmt(delta);
  return r;
}

BoundReport assemble_theorem_17(std::uint64_t n, std::optional<long double> delta_override) {
  if (n < 16 || n % 2 != 0) throw InputError("assemble_theorem_17: n must be even and >= 16");
  const LD nn = static_cast<LD>(n);
  const LD delta = delta_override ? *delta_override : construction_delta(nn);
  BoundReport r;
  r.name = "assemble_theorem_17";
  r.inputs = {{"n", nn}, {"delta", delta}};
  r.entries.push_back({"delta", delta_override ? "delta" : kDeltaFormula, delta,
                       delta_override ? "caller-supplied construction level"
                                      : "construction level from the sphere parameters"});
  const bool hyp = delta * delta * nn >= 1.0L - 1e-12L && delta <= 0.25L;
  r.flags["splice_hypothesis"] =
      hyp ? "holds" : "fails: need n^(-1/2) <= delta <= 1/4, delta=" + fmt(delta);
  const std::optional<LD> none;
  const LD factor = 1.0L + 48.0L * delta * delta - 8.0L / nn - 128.0L * delta * delta * delta;
  r.entries.push_back({"margin_factor", "1 + 48*delta^2 - 8/n - 128*delta^3",
                       hyp ? std::optional<LD>(factor) : none, ""});
  r.entries.push_back({"edge_count", "n^2/8*(1 + 48*delta^2 - 8/n - 128*delta^3)",
                       hyp ? std::optional<LD>(nn * nn / 8.0L * factor) : none,
                       "a nice graph with at least this many edges"});
  r.entries.push_back({"independence_bound", "3*delta*n",
                       hyp ? std::optional<LD>(3.0L * delta * nn) : none,
                       "delta n from the construction plus 2 delta n from the layer"});
  if (hyp) r.flags["edge_floor_n2_over_8"] = factor >= 1.0L ? "met" : "not met";
  return r;
}

BoundReport assemble_theorem_14(std::uint64_t n, std::uint64_t m,
                                std::optional<long double> delta_override) {
  if (3 * m > n) throw InputError("assemble_theorem_14: m must not exceed n/3");
  if (n < 16 || n % 2 != 0) throw InputError("assemble_theorem_14: n must be even and >= 16");
  const LD nn = static_cast<LD>(n);
  const LD mm = static_cast<LD>(m);
  const LD delta = delta_override ? *delta_override : construction_delta(nn);
  const LD a = (mm - delta * nn) / nn;
  BoundReport r;
  r.name = "assemble_theorem_14";
  r.inputs = {{"n", nn}, {"m", mm}, {"delta", delta}, {"a", a}};
  r.entries.push_back({"delta", delta_override ? "delta" : kDeltaFormula, delta, ""});
  r.entries.push_back({"a", "(m - delta*n)/n", a, "layer fraction d/n"});
  const bool hyp = delta > 0.0L && a * delta * nn >= 1.0L - 1e-12L && a <= 0.5L;
  r.flags["fractional_splice_hypothesis"] =
      hyp ? "holds" : "fails: need 1/(delta n) <= a <= 1/2, a=" + fmt(a);
  const std::optional<LD> none;
  const LD lower = nn * nn / 8.0L * (1.0L + 4.0L * a - 4.0L * a * a - 8.0L * delta);
  r.entries.push_back({"rt_lower_bound", "n^2/8*(1 + 4*a - 4*a^2 - 8*delta)",
                       hyp ? std::optional<LD>(lower) : none, ""});
  r.entries.push_back({"excess_over_mn", "(n^2/8*(1 + 4*a - 4*a^2 - 8*delta) - n^2/8)/(m*n)",
                       hyp && m > 0 ? std::optional<LD>((lower - nn * nn / 8.0L) / (mm * nn)) : none,
                       "coefficient of mn above n^2/8"});
  r.entries.push_back({"leading_constant", "(1 - m/n)/2", (1.0L - mm / nn) / 2.0L,
                       "tends to 1/2 as m/n -> 0 and equals 1/3 at m = n/3"});
  if (3 * m == n) {
    r.flags["regime"] = "turan_boundary: m = n/3, where the tripartite Turan graph takes over";
  } else if (100 * m <= n) {
    r.flags["regime"] = "sublinear: m << n, constant 1/2";
  } else {
    r.flags["regime"] = "linear: constant between 1/3 and 1/2";
  }
  return r;
}

nlohmann::json report_to_json(const BoundReport& r) {
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = static_cast<double>(v);
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json j{{"name", e.name}, {"formula", e.formula}, {"note", e.note}};
    j["value"] = e.value ? nlohmann::json(static_cast<double>(*e.value)) : nlohmann::json(nullptr);
    entries.push_back(std::move(j));
  }
  nlohmann::json flags = nlohmann::json::object();
  for (const auto& [k, v] : r.flags) flags[k] = v;
  return {{"report", r.name}, {"inputs", inputs}, {"entries", entries}, {"flags", flags}};
}

std::string reports_to_csv(const std::vector<BoundReport>& reports) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::string csv = "report,name,formula,value,note\n";
  for (const auto& r : reports)
    for (const auto& e : r.entries)
      csv += r.name + "," + e.name + "," + quote(e.formula) + "," + format_value(e.value) + "," +
             quote(e.note) + "\n";
  return csv;
}

}  // namespace rtw
