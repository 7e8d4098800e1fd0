#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "rsm/lhat_curve.hpp"

namespace rsm::io {

/// %.17g: enough digits for any double to round-trip.
std::string format_number(double value);

/// Header `N L_hat E0`, then one whitespace-separated sample per line.
void write_curve(std::ostream& out, const LhatCurve& curve);
LhatCurve read_curve(std::istream& in);
void save_curve(const std::string& path, const LhatCurve& curve);
LhatCurve load_curve(const std::string& path);

/// Serialises with fixed key order (insertion order of ordered_json), two
/// space indent and every floating-point number at 17 significant digits.
std::string to_json_text(const nlohmann::ordered_json& doc);

}  // namespace rsm::io
