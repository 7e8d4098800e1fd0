#include "rsm/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace rsm::io {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_curve(std::ostream& out, const LhatCurve& curve) {
  out << "N L_hat E0\n";
  for (const auto& s : curve.samples()) {
    out << s.n_basis << ' ' << format_number(s.length) << ' ' << format_number(s.energy) << '\n';
  }
}

LhatCurve read_curve(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("curve file is empty");
  {
    std::istringstream header(line);
    std::string a, b, c, extra;
    header >> a >> b >> c;
    if (a != "N" || b != "L_hat" || c != "E0" || (header >> extra)) {
      throw std::invalid_argument("curve file header must be 'N L_hat E0'");
    }
  }
  std::vector<LhatSample> samples;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    LhatSample s;
    std::string extra;
    if (!(row >> s.n_basis >> s.length >> s.energy) || (row >> extra)) {
      throw std::invalid_argument("malformed curve row at line " + std::to_string(line_no));
    }
    samples.push_back(s);
  }
  return LhatCurve(std::move(samples));
}

void save_curve(const std::string& path, const LhatCurve& curve) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write curve file " + path);
  write_curve(out, curve);
}

LhatCurve load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read curve file " + path);
  return read_curve(in);
}

namespace {

void emit(std::ostream& os, const nlohmann::ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner << nlohmann::ordered_json(it.key()).dump() << ": ";
        emit(os, it.value(), indent + 1);
      }
      os << '\n' << pad << '}';
      return;
    }
    case nlohmann::ordered_json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ",\n";
        first = false;
        os << inner;
        emit(os, v, indent + 1);
      }
      os << '\n' << pad << ']';
      return;
    }
    case nlohmann::ordered_json::value_t::number_float: {
      const double v = j.get<double>();
      os << (std::isfinite(v) ? format_number(v) : std::string("null"));
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

std::string to_json_text(const nlohmann::ordered_json& doc) {
  std::ostringstream os;
  emit(os, doc, 0);
  os << '\n';
  return os.str();
}

}  // namespace rsm::io
