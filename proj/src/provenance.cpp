#include "zeno/provenance.hpp"

#include <charconv>

namespace zeno {

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;  // 64 bytes always suffice for shortest form
  return std::string(buf, end);
}

void Provenance::add(const std::string& key, const std::string& value) {
  items_.emplace_back(key, value);
}

void Provenance::add(const std::string& key, double value) {
  items_.emplace_back(key, format_double(value));
}

void Provenance::add(const std::string& key, long value) {
  items_.emplace_back(key, std::to_string(value));
}

void Provenance::add(const std::string& key, int value) {
  items_.emplace_back(key, std::to_string(value));
}

}  // namespace zeno
