#pragma once

// Ordered key=value provenance attached to every serialized result.  Order
// is insertion order so that identical runs serialize byte-identically.

#include <string>
#include <utility>
#include <vector>

namespace zeno {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double x);

class Provenance {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, double value);
  void add(const std::string& key, long value);
  void add(const std::string& key, int value);

  const std::vector<std::pair<std::string, std::string>>& items() const {
    return items_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

}  // namespace zeno
