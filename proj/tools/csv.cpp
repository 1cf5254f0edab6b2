#include "csv.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace optocav::cli {

IoError::IoError(const std::filesystem::path& path, const std::string& what)
    : std::runtime_error(path.string() + ": " + what) {}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != header.size())
    throw std::logic_error("row has " + std::to_string(row.size()) + " cells, header has " +
                           std::to_string(header.size()));
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

namespace {

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_double(*d);
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  auto line = [&out](const auto& cells, auto text) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += text(cells[i]);
    }
    out += '\n';
  };
  line(t.header, [](const std::string& s) { return cell_text(s); });
  for (const auto& r : t.rows) line(r, cell_text);
  return out;
}

std::string to_svg(const Table& t, const Plot& plot) {
  constexpr double W = 640, H = 420, L = 70, R = 20, T = 40, B = 50;
  constexpr std::array<const char*, 8> colors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  auto num = [&](const std::vector<Cell>& row, std::size_t c) {
    const double* d = std::get_if<double>(&row.at(c));
    return d ? *d : std::numeric_limits<double>::quiet_NaN();
  };
  auto xval = [&](double x) { return plot.log_x ? (x > 0 ? std::log10(x) : std::nan("")) : x; };

  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& row : t.rows) {
    const double x = xval(num(row, plot.x_column));
    if (!std::isfinite(x)) continue;
    for (std::size_t c : plot.y_columns) {
      const double y = num(row, c);
      if (!std::isfinite(y)) continue;
      x0 = std::min(x0, x), x1 = std::max(x1, x);
      y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  }
  if (!(x1 > x0)) x0 -= 0.5, x1 += 0.5;
  if (!(y1 > y0)) y0 -= 0.5, y1 += 0.5;
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

  std::ostringstream s;
  s.precision(6);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << plot.title
    << "</text>\n"
    << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = x0 + (x1 - x0) * i / 4.0, fy = y0 + (y1 - y0) * i / 4.0;
    const double lx = plot.log_x ? std::pow(10.0, fx) : fx;
    s << "<text x=\"" << px(fx) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\" font-size=\"11\">"
      << lx << "</text>\n"
      << "<text x=\"" << L - 6 << "\" y=\"" << py(fy) + 4 << "\" text-anchor=\"end\" font-size=\"11\">" << fy
      << "</text>\n";
  }
  s << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"13\">"
    << plot.x_label << "</text>\n"
    << "<text x=\"16\" y=\"" << H / 2 << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
    << H / 2 << ")\">" << plot.y_label << "</text>\n";
  for (std::size_t i = 0; i < plot.y_columns.size(); ++i) {
    const std::size_t c = plot.y_columns[i];
    const char* color = colors[i % colors.size()];
    s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\""
      << (i % 2 ? " stroke-dasharray=\"6 3\"" : "") << " points=\"";
    for (const auto& row : t.rows) {
      const double x = xval(num(row, plot.x_column)), y = num(row, c);
      if (std::isfinite(x) && std::isfinite(y)) s << px(x) << ',' << py(y) << ' ';
    }
    s << "\"/>\n"
      << "<text x=\"" << W - R - 6 << "\" y=\"" << T + 16 + 14 * i << "\" text-anchor=\"end\" font-size=\"11\" fill=\""
      << color << "\">" << t.header.at(c) << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError(path, "cannot open for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  f.close();
  if (!f) throw IoError(path, "write failed");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError(path, "cannot open for reading");
  std::ostringstream s;
  s << f.rdbuf();
  if (f.bad()) throw IoError(path, "read failed");
  return s.str();
}

}  // namespace optocav::cli
