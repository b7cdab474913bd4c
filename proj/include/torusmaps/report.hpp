#pragma once

#include <string>
#include <vector>

namespace torusmaps {

// Ordered key/value findings attached to a titled report. Rendered twice: a
// prose form for reading and a key=value block for scripts; both list the
// lines in insertion order so output stays byte-stable.
struct ReportLine {
  std::string key;
  std::string value;
};

struct Report {
  std::string title;
  std::vector<ReportLine> lines;

  void add(std::string key, std::string value);
  void add(std::string key, const char* value);
  void add(std::string key, long long value);
  void add(std::string key, int value);
  void add(std::string key, bool value);

  const std::string* find(const std::string& key) const;

  std::string to_text() const;      // title plus "  key: value" lines
  std::string to_kv_block() const;  // bare "key=value" lines
  std::string full_text() const;    // prose, blank line, key=value block
};

}  // namespace torusmaps
