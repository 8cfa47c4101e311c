#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "stardisc/core.hpp"

namespace stardisc {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::parse_error,
              "line " + std::to_string(line) + ": " + msg);
}

std::vector<double> parse_row(std::string_view row, std::size_t line) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (true) {
    const auto comma = row.find(',', pos);
    const auto field = trim(row.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos));
    double v = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (field.empty() || ec != std::errc() || ptr != end)
      parse_fail(line, "invalid number '" + std::string(field) + "'");
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

}  // namespace

PointSet read_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string raw;
  std::size_t line = 0;
  bool seen_data = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto row = trim(raw);
    if (row.empty()) continue;
    if (row.front() == '#') {
      if (seen_data) parse_fail(line, "comment after data rows");
      continue;
    }
    seen_data = true;
    rows.push_back(parse_row(row, line));
    if (rows.back().size() != rows.front().size())
      parse_fail(line, "expected " + std::to_string(rows.front().size()) +
                           " coordinates, got " +
                           std::to_string(rows.back().size()));
  }
  if (rows.empty())
    throw Error(ErrorKind::parse_error, "no data rows; dimension unknown");

  PointMatrix m(static_cast<Index>(rows.size()),
                static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return PointSet(std::move(m));
}

PointSet read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path);
  return read_csv(in);
}

void write_csv(std::ostream& out, const PointSet& X, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  char buf[32];
  for (Index i = 0; i < X.size(); ++i) {
    for (Index j = 0; j < X.dim(); ++j) {
      if (j) out << ',';
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, X.points()(i, j));
      out.write(buf, ptr - buf);
    }
    out << '\n';
  }
}

}  // namespace stardisc
