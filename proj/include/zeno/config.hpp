#pragma once

// Flat key=value config parsing and the assembly of model/multimode
// parameter structs from parsed keys.  '#' starts a comment, blank lines are
// skipped, later occurrences of a key win -- except for the repeatable
// mode_12.* / mode_23.* entries, which accumulate in file order.

#include <string>
#include <utility>
#include <vector>

#include "zeno/model.hpp"
#include "zeno/multimode.hpp"

namespace zeno {

// Parsed entries in file order, duplicates preserved.
using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Throws DomainError naming the offending line on malformed input
// (missing '=', empty key).
KeyValues parse_config_text(const std::string& text);

// Reads the file and delegates to parse_config_text; DomainError when the
// file cannot be opened.
KeyValues parse_config_file(const std::string& path);

bool has_key(const KeyValues& kv, const std::string& key);

// Last-occurrence-wins scalar getters; the fallback is returned when the key
// is absent.  Parse failures throw DomainError naming key and value.
std::string get_string(const KeyValues& kv, const std::string& key,
                       const std::string& fallback);
double get_double(const KeyValues& kv, const std::string& key,
                  double fallback);
long get_long(const KeyValues& kv, const std::string& key, long fallback);
int get_int(const KeyValues& kv, const std::string& key, int fallback);

// Comma- and/or whitespace-separated doubles; empty input gives an empty
// vector, malformed tokens throw DomainError.
std::vector<double> parse_double_list(const std::string& text);

// Keys: mode (resonant|detuned, default resonant), omega_a, omega_b, g12,
// g23, delta, temperature, and optionally all three of omega1/omega2/omega3
// to place the level energies explicitly (all-or-none; the default derives
// them from the splittings with omega3 = 0).  The result still has to pass
// validate().
std::pair<ModelParams, Mode> params_from_config(const KeyValues& kv);

// Repeatable mode_12.freq / mode_12.g entries zip by position into the 1-2
// mode list (likewise mode_23.*); counts must match within each family.
// Scalar keys: temperature, bohr_12, bohr_23.
MultimodeSpec multimode_from_config(const KeyValues& kv);

}  // namespace zeno
