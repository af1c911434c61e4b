#pragma once

// CSV and manifest conventions shared by the library and the CLI:
// '.' decimal, header row, '#'-prefixed metadata lines, and all floating
// point values printed with 17 significant digits so that re-running an
// experiment from its manifest reproduces output byte-identically.

#include <map>
#include <string>
#include <vector>

namespace clt {

// shortest-round-trip-safe formatting (17 significant digits)
std::string fmt17(double v);

std::string fmt_int(long long v);

// Flat key=value configuration: one pair per line, '#' comments, no sections.
// This doubles as the experiment manifest format.
class KeyValueConfig {
 public:
  KeyValueConfig() = default;

  static KeyValueConfig parse_file(const std::string& path);
  static KeyValueConfig parse_text(const std::string& text);

  bool has(const std::string& key) const;
  std::string get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& dflt) const;
  double get_double(const std::string& key) const;
  long long get_int(const std::string& key) const;

  void set(const std::string& key, const std::string& value);
  void set_double(const std::string& key, double value);
  void set_int(const std::string& key, long long value);

  // keys are emitted sorted so the manifest is diff-friendly
  std::string to_text() const;
  void write_file(const std::string& path) const;

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

// Minimal CSV writer used by the CLI subcommands.
class CsvWriter {
 public:
  explicit CsvWriter(std::string path);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void comment(const std::string& text);
  void header(const std::vector<std::string>& cols);
  void row(const std::vector<std::string>& cells);

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace clt
