#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace tca {

/// RFC-4180 CSV reader. The first row is a required header; fields are
/// addressed by column name. Quoted fields may contain commas, quotes and
/// newlines.
class CsvReader {
 public:
  explicit CsvReader(const std::string& path);

  /// Reads the next record into the internal row. Returns false on EOF.
  bool next();

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::string>& row() const { return row_; }

  /// 1-based line number of the first physical line of the current record.
  long line() const { return record_line_; }
  const std::string& path() const { return path_; }

  /// Column accessors; throw TcaError(malformed_row) with file/line context
  /// on unknown columns or unparseable values.
  int column(const std::string& name) const;
  bool has_column(const std::string& name) const;
  const std::string& field(const std::string& name) const;
  std::string get_string(const std::string& name) const;
  double get_double(const std::string& name) const;
  long long get_int(const std::string& name) const;

  [[noreturn]] void fail_row(const std::string& reason) const;

 private:
  bool read_record(std::vector<std::string>& out);

  std::string path_;
  std::ifstream in_;
  std::vector<std::string> header_;
  std::vector<std::string> row_;
  long line_ = 0;
  long record_line_ = 0;
};

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  void write_row(const std::vector<std::string>& fields);

 private:
  std::ofstream out_;
  std::size_t columns_;
};

/// Quotes a single field per RFC-4180 when needed.
std::string csv_escape(const std::string& field);

}  // namespace tca
