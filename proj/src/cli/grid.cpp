#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "umbra/cli.hpp"

namespace umbra::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double number(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw UsageError("not a number: '" + std::string(s) + "'");
  return v;
}

}  // namespace

GridSpec GridSpec::parse(std::string_view text) {
  GridSpec g;
  for (auto part : split(text, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw UsageError("grid axis must look like k=v1,v2 or k=min:max:n, got '" + std::string(part) + "'");
    GridAxis axis{std::string(trim(part.substr(0, eq))), {}};
    const auto rhs = trim(part.substr(eq + 1));
    if (rhs.find(':') != std::string_view::npos) {
      const auto f = split(rhs, ':');
      if (f.size() != 3) throw UsageError("range must be min:max:n, got '" + std::string(rhs) + "'");
      const double lo = number(f[0]), hi = number(f[1]), nd = number(f[2]);
      if (nd < 1 || nd != static_cast<int>(nd)) throw UsageError("range count must be a positive integer");
      const int n = static_cast<int>(nd);
      if (n == 1 && lo != hi) throw UsageError("a one-point range needs min == max");
      for (int i = 0; i < n; ++i)
        axis.values.push_back(n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1));
    } else {
      for (auto v : split(rhs, ',')) axis.values.push_back(number(v));
    }
    if (g.has(axis.name)) throw UsageError("grid axis '" + axis.name + "' given twice");
    g.axes.push_back(std::move(axis));
  }
  return g;
}

void GridSpec::merge(const GridSpec& over) {
  for (const auto& a : over.axes) {
    const auto it = std::find_if(axes.begin(), axes.end(), [&](const GridAxis& b) { return b.name == a.name; });
    if (it != axes.end()) *it = a;
    else axes.push_back(a);
  }
}

bool GridSpec::has(std::string_view name) const {
  return std::any_of(axes.begin(), axes.end(), [&](const GridAxis& a) { return a.name == name; });
}

std::vector<Point> GridSpec::points() const {
  std::vector<Point> out;
  if (axes.empty()) return out;
  std::vector<std::size_t> idx(axes.size(), 0);
  for (const auto& a : axes)
    if (a.values.empty()) return out;
  while (true) {
    Point p;
    for (std::size_t i = 0; i < axes.size(); ++i) p[axes[i].name] = axes[i].values[idx[i]];
    out.push_back(std::move(p));
    std::size_t i = axes.size();
    while (i > 0) {
      --i;
      if (++idx[i] < axes[i].values.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::map<std::string, std::string> parse_config(std::string_view text) {
  std::map<std::string, std::string> out;
  int line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
    out[std::string(trim(line.substr(0, eq)))] = std::string(trim(line.substr(eq + 1)));
  }
  return out;
}

std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace umbra::cli
