#ifndef TESTS_FIXTURE_HPP
#define TESTS_FIXTURE_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "mpflow/io.hpp"

namespace testfix {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string data_path(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

/// The 5-node, 16-arc transportation fixture with the pinned basis.
inline mpf::Instance transport5x16() {
  return mpf::parse_instance(read_file(data_path("transport5x16.json")));
}

}  // namespace testfix

#endif
