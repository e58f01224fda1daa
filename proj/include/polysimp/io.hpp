#pragma once

// Text formats: polylines (one comma-separated point per line), Cell
// Reachability instances (JSON) and OV instances (three 0/1 blocks).

#include <charconv>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polysimp/cell_reachability.hpp"
#include "polysimp/lp_geometry.hpp"
#include "polysimp/ov_hardness.hpp"

namespace polysimp {

/// Raised for malformed input text; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string &what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_number(std::string_view tok, std::size_t line) {
  tok = trim(tok);
  if (tok.empty())
    throw ParseError("empty coordinate", line);
  if (tok.front() == '+')
    tok.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("non-numeric token '" + std::string(tok) + "'", line);
  return v;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size())
        out.push_back(text.substr(pos));
      break;
    }
    out.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

} // namespace detail

inline Polyline parse_polyline(std::string_view text) {
  Polyline P;
  std::size_t dim = 0;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string_view line = detail::trim(lines[ln]);
    if (line.empty() || line.front() == '#')
      continue;
    Point pt;
    std::size_t pos = 0;
    for (;;) {
      const auto comma = line.find(',', pos);
      pt.push_back(detail::parse_number(line.substr(pos, comma - pos), ln + 1));
      if (comma == std::string_view::npos)
        break;
      pos = comma + 1;
    }
    if (dim == 0) {
      dim = pt.size();
      P = Polyline(dim);
    } else if (pt.size() != dim) {
      throw ParseError("ragged arity: expected " + std::to_string(dim) + " coordinates, got " +
                           std::to_string(pt.size()),
                       ln + 1);
    }
    P.push_back(pt);
  }
  if (P.empty())
    throw ParseError("empty input: no points");
  return P;
}

inline std::string format_polyline(const Polyline &P) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (std::size_t i = 0; i < P.size(); ++i) {
    const PointView v = P[i];
    for (std::size_t k = 0; k < v.size(); ++k)
      os << (k ? "," : "") << v[k];
    os << '\n';
  }
  return os.str();
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

// Cell Reachability JSON:
//   {"passages": [[lo, hi] | null, ...], "entry_costs": [int | null, ...]}
// null passages are blocked, null costs infeasible.

inline CellReachInstance parse_cellreach(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("passages") || !j.contains("entry_costs"))
    throw ParseError("cellreach: expected object with 'passages' and 'entry_costs'");
  CellReachInstance inst;
  for (const auto &p : j.at("passages")) {
    if (p.is_null()) {
      inst.passages.push_back(UnitInterval::empty());
    } else if (p.is_array() && p.size() == 2 && p[0].is_number() && p[1].is_number()) {
      const double lo = p[0].get<double>(), hi = p[1].get<double>();
      if (!(0.0 <= lo && lo <= hi && hi <= 1.0))
        throw ParseError("cellreach: passage must satisfy 0 <= lo <= hi <= 1");
      inst.passages.push_back(UnitInterval::closed(lo, hi));
    } else {
      throw ParseError("cellreach: passage must be [lo, hi] or null");
    }
  }
  for (const auto &c : j.at("entry_costs")) {
    if (c.is_null())
      inst.entry_costs.push_back(kInfeasibleCost);
    else if (c.is_number_integer() && c.get<std::int64_t>() > 0)
      inst.entry_costs.push_back(c.get<Cost>());
    else
      throw ParseError("cellreach: entry cost must be a positive integer or null");
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
  return inst;
}

inline nlohmann::ordered_json cost_to_json(Cost c) {
  return c == kInfeasibleCost ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c);
}

inline std::string format_cellreach(const CellReachInstance &inst) {
  nlohmann::ordered_json j;
  j["passages"] = nlohmann::ordered_json::array();
  for (const auto &p : inst.passages)
    j["passages"].push_back(p.is_empty() ? nlohmann::ordered_json(nullptr)
                                         : nlohmann::ordered_json{p.lo, p.hi});
  j["entry_costs"] = nlohmann::ordered_json::array();
  for (Cost c : inst.entry_costs)
    j["entry_costs"].push_back(cost_to_json(c));
  return j.dump(2) + "\n";
}

// OV instances: n lines of A, blank line, n lines of B, blank line, n lines of C.

inline OVInstance parse_ov_instance(std::string_view text) {
  OVInstance inst;
  std::vector<BitVector> *blocks[] = {&inst.A, &inst.B, &inst.C};
  std::size_t block = 0;
  bool in_block = false;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string_view line = detail::trim(lines[ln]);
    if (!line.empty() && line.front() == '#')
      continue;
    if (line.empty()) {
      if (in_block) {
        ++block;
        in_block = false;
      }
      continue;
    }
    if (block >= 3)
      throw ParseError("OV instance: more than three blocks", ln + 1);
    BitVector v;
    for (char ch : line) {
      if (ch != '0' && ch != '1')
        throw ParseError("OV instance: expected only '0' and '1'", ln + 1);
      v.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    blocks[block]->push_back(std::move(v));
    in_block = true;
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
  return inst;
}

inline std::string format_ov_instance(const OVInstance &inst) {
  std::string out;
  const std::vector<BitVector> *blocks[] = {&inst.A, &inst.B, &inst.C};
  for (std::size_t b = 0; b < 3; ++b) {
    if (b)
      out += '\n';
    for (const auto &v : *blocks[b]) {
      for (auto bit : v)
        out += static_cast<char>('0' + bit);
      out += '\n';
    }
  }
  return out;
}

} // namespace polysimp
