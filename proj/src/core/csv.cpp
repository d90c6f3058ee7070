#include "tca/core/csv.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>

#include "tca/core/error.hpp"

namespace tca {

CsvReader::CsvReader(const std::string& path) : path_(path), in_(path) {
  if (!in_) fail(Errc::io_error, "cannot open " + path);
  if (!read_record(header_) || header_.empty())
    fail(Errc::malformed_row, path + ": missing header row");
}

bool CsvReader::next() {
  for (;;) {
    record_line_ = line_ + 1;
    if (!read_record(row_)) return false;
    // A blank line between records is tolerated and skipped.
    if (row_.size() == 1 && row_[0].empty()) continue;
    if (row_.size() != header_.size())
      fail_row("expected " + std::to_string(header_.size()) + " fields, got " +
               std::to_string(row_.size()));
    return true;
  }
}

bool CsvReader::read_record(std::vector<std::string>& out) {
  out.clear();
  std::string field;
  bool in_quotes = false;
  bool any = false;
  int c;
  while ((c = in_.get()) != EOF) {
    any = true;
    if (in_quotes) {
      if (c == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line_;
        field.push_back(static_cast<char>(c));
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else if (c == '\r') {
      // swallowed; CRLF handled at '\n'
    } else if (c == '\n') {
      ++line_;
      out.push_back(std::move(field));
      return true;
    } else {
      field.push_back(static_cast<char>(c));
    }
  }
  if (in_quotes) fail_row("unterminated quoted field");
  if (!any) return false;
  ++line_;
  out.push_back(std::move(field));
  return true;
}

bool CsvReader::has_column(const std::string& name) const {
  return std::find(header_.begin(), header_.end(), name) != header_.end();
}

int CsvReader::column(const std::string& name) const {
  const auto it = std::find(header_.begin(), header_.end(), name);
  if (it == header_.end())
    fail(Errc::malformed_row, path_ + ": missing column '" + name + "'");
  return static_cast<int>(it - header_.begin());
}

const std::string& CsvReader::field(const std::string& name) const {
  return row_[static_cast<std::size_t>(column(name))];
}

std::string CsvReader::get_string(const std::string& name) const {
  return field(name);
}

double CsvReader::get_double(const std::string& name) const {
  const std::string& s = field(name);
  if (s.empty()) fail_row("empty numeric field '" + name + "'");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (errno != 0 || end != s.c_str() + s.size())
    fail_row("bad number '" + s + "' in column '" + name + "'");
  return v;
}

long long CsvReader::get_int(const std::string& name) const {
  const std::string& s = field(name);
  if (s.empty()) fail_row("empty integer field '" + name + "'");
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size())
    fail_row("bad integer '" + s + "' in column '" + name + "'");
  return v;
}

void CsvReader::fail_row(const std::string& reason) const {
  fail(Errc::malformed_row,
       path_ + ":" + std::to_string(record_line_) + ": " + reason);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : out_(path, std::ios::binary), columns_(header.size()) {
  if (!out_) fail(Errc::io_error, "cannot write " + path);
  write_row(header);
}

void CsvWriter::write_row(const std::vector<std::string>& fields) {
  if (fields.size() != columns_)
    fail(Errc::io_error, "csv row width mismatch");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_escape(fields[i]);
  }
  out_ << '\n';
}

}  // namespace tca
