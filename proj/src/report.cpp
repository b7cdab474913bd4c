#include "torusmaps/report.hpp"

namespace torusmaps {

void Report::add(std::string key, std::string value) {
  lines.push_back({std::move(key), std::move(value)});
}

void Report::add(std::string key, const char* value) {
  add(std::move(key), std::string(value));
}

void Report::add(std::string key, long long value) {
  add(std::move(key), std::to_string(value));
}

void Report::add(std::string key, int value) {
  add(std::move(key), static_cast<long long>(value));
}

void Report::add(std::string key, bool value) {
  add(std::move(key), std::string(value ? "true" : "false"));
}

const std::string* Report::find(const std::string& key) const {
  for (const ReportLine& line : lines)
    if (line.key == key) return &line.value;
  return nullptr;
}

std::string Report::to_text() const {
  std::string out = title + "\n";
  for (const ReportLine& line : lines)
    out += "  " + line.key + ": " + line.value + "\n";
  return out;
}

std::string Report::to_kv_block() const {
  std::string out;
  for (const ReportLine& line : lines)
    out += line.key + "=" + line.value + "\n";
  return out;
}

std::string Report::full_text() const { return to_text() + "\n" + to_kv_block(); }

}  // namespace torusmaps
