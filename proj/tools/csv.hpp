#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace optocav::cli {

/// Raised for any failure to read or write a file; carries the path.
class IoError : public std::runtime_error {
 public:
  IoError(const std::filesystem::path& path, const std::string& what);
};

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// 17 significant digits, so every double round-trips.
std::string format_double(double v);

/// Comma-separated, header first, LF line endings.
std::string to_csv(const Table& t);

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::size_t x_column = 0;
  std::vector<std::size_t> y_columns;
  bool log_x = false;
};

/// Polyline chart of the chosen numeric columns. Non-finite points are skipped.
std::string to_svg(const Table& t, const Plot& plot);

/// Writes the whole string or throws IoError.
void write_file(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

}  // namespace optocav::cli
