// Loaders for the checked-in transcriptions of the published tables.
#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "negord/table.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(NEGORD_FIXTURE_DIR) + "/" + name; }

inline std::string read(const std::string& name) {
  std::ifstream in(path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// (n, k) -> cell text, from a grid whose first row holds k labels and first
/// column holds n.
inline std::map<std::pair<long, long>, std::string> grid(const std::string& name) {
  const auto rows = negord::parse_csv(read(name));
  std::map<std::pair<long, long>, std::string> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    for (std::size_t c = 1; c < rows[r].size(); ++c) {
      out[{std::stol(rows[r][0]), std::stol(rows[0][c])}] = rows[r][c];
    }
  }
  return out;
}

/// Tab-separated "n k laurent-json" lines; '#' starts a comment line.
inline std::map<std::pair<long, long>, std::string> cells(const std::string& name) {
  std::istringstream in(read(name));
  std::map<std::pair<long, long>, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long n = 0, k = 0;
    std::string json;
    ls >> n >> k >> json;
    out[{n, k}] = json;
  }
  return out;
}

}  // namespace fixtures
