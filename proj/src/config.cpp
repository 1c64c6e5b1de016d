#include "zeno/config.hpp"

#include <charconv>
#include <climits>
#include <fstream>
#include <sstream>
#include <string_view>

namespace zeno {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_double_token(std::string_view token, const std::string& where) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw DomainError("cannot parse '" + std::string(token) +
                      "' as a number" + where);
  return value;
}

}  // namespace

KeyValues parse_config_text(const std::string& text) {
  KeyValues out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    if (auto hash = sv.find('#'); hash != std::string_view::npos)
      sv = sv.substr(0, hash);
    sv = trim(sv);
    if (sv.empty()) continue;
    auto eq = sv.find('=');
    if (eq == std::string_view::npos)
      throw DomainError("config line " + std::to_string(lineno) +
                        ": expected key=value, got '" + std::string(sv) +
                        "'");
    std::string_view key = trim(sv.substr(0, eq));
    std::string_view value = trim(sv.substr(eq + 1));
    if (key.empty())
      throw DomainError("config line " + std::to_string(lineno) +
                        ": empty key");
    out.emplace_back(std::string(key), std::string(value));
  }
  return out;
}

KeyValues parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

namespace {

const std::string* find_last(const KeyValues& kv, const std::string& key) {
  const std::string* hit = nullptr;
  for (const auto& [k, v] : kv)
    if (k == key) hit = &v;
  return hit;
}

}  // namespace

bool has_key(const KeyValues& kv, const std::string& key) {
  return find_last(kv, key) != nullptr;
}

std::string get_string(const KeyValues& kv, const std::string& key,
                       const std::string& fallback) {
  const std::string* hit = find_last(kv, key);
  return hit ? *hit : fallback;
}

double get_double(const KeyValues& kv, const std::string& key,
                  double fallback) {
  const std::string* hit = find_last(kv, key);
  if (!hit) return fallback;
  return parse_double_token(*hit, " for key '" + key + "'");
}

long get_long(const KeyValues& kv, const std::string& key, long fallback) {
  const std::string* hit = find_last(kv, key);
  if (!hit) return fallback;
  long value = 0;
  const char* end = hit->data() + hit->size();
  auto [ptr, ec] = std::from_chars(hit->data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw DomainError("cannot parse '" + *hit + "' as an integer for key '" +
                      key + "'");
  return value;
}

int get_int(const KeyValues& kv, const std::string& key, int fallback) {
  long value = get_long(kv, key, fallback);
  if (value < INT_MIN || value > INT_MAX)
    throw DomainError("value out of int range for key '" + key + "'");
  return int(value);
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::string_view sv(text);
  size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (i < sv.size()) {
    while (i < sv.size() && is_sep(sv[i])) ++i;
    if (i >= sv.size()) break;
    size_t j = i;
    while (j < sv.size() && !is_sep(sv[j])) ++j;
    out.push_back(parse_double_token(sv.substr(i, j - i), " in list"));
    i = j;
  }
  return out;
}

std::pair<ModelParams, Mode> params_from_config(const KeyValues& kv) {
  const std::string mode_str = get_string(kv, "mode", "resonant");
  Mode mode;
  if (mode_str == "resonant")
    mode = Mode::resonant;
  else if (mode_str == "detuned")
    mode = Mode::detuned;
  else
    throw DomainError("mode must be 'resonant' or 'detuned', got '" +
                      mode_str + "'");

  const double omega_a = get_double(kv, "omega_a", 1.0);
  const double omega_b = get_double(kv, "omega_b", 1.0);
  const double g12 = get_double(kv, "g12", 0.0);
  const double g23 = get_double(kv, "g23", 0.0);
  const double delta = get_double(kv, "delta", 0.0);
  const double temperature = get_double(kv, "temperature", 0.0);

  ModelParams p =
      mode == Mode::resonant
          ? make_resonant(omega_a, omega_b, g12, g23, temperature)
          : make_detuned(omega_a, omega_b, g12, g23, delta, temperature);

  const bool has1 = has_key(kv, "omega1");
  const bool has2 = has_key(kv, "omega2");
  const bool has3 = has_key(kv, "omega3");
  if (has1 != has2 || has2 != has3)
    throw DomainError(
        "omega1/omega2/omega3 must be given together or not at all");
  if (has1) {
    p.omega1 = get_double(kv, "omega1", 0.0);
    p.omega2 = get_double(kv, "omega2", 0.0);
    p.omega3 = get_double(kv, "omega3", 0.0);
  }
  return {p, mode};
}

MultimodeSpec multimode_from_config(const KeyValues& kv) {
  MultimodeSpec spec;
  std::vector<double> f12, g12, f23, g23;
  for (const auto& [k, v] : kv) {
    if (k == "mode_12.freq")
      f12.push_back(parse_double_token(v, " for key 'mode_12.freq'"));
    else if (k == "mode_12.g")
      g12.push_back(parse_double_token(v, " for key 'mode_12.g'"));
    else if (k == "mode_23.freq")
      f23.push_back(parse_double_token(v, " for key 'mode_23.freq'"));
    else if (k == "mode_23.g")
      g23.push_back(parse_double_token(v, " for key 'mode_23.g'"));
  }
  if (f12.size() != g12.size())
    throw DomainError("mode_12.freq and mode_12.g counts differ (" +
                      std::to_string(f12.size()) + " vs " +
                      std::to_string(g12.size()) + ")");
  if (f23.size() != g23.size())
    throw DomainError("mode_23.freq and mode_23.g counts differ (" +
                      std::to_string(f23.size()) + " vs " +
                      std::to_string(g23.size()) + ")");
  for (size_t i = 0; i < f12.size(); ++i)
    spec.modes_12.push_back({f12[i], g12[i]});
  for (size_t i = 0; i < f23.size(); ++i)
    spec.modes_23.push_back({f23[i], g23[i]});
  spec.temperature = get_double(kv, "temperature", 0.0);
  if (has_key(kv, "bohr_12")) spec.bohr_12 = get_double(kv, "bohr_12", 0.0);
  if (has_key(kv, "bohr_23")) spec.bohr_23 = get_double(kv, "bohr_23", 0.0);
  return spec;
}

}  // namespace zeno
