#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace orthodim {

/// Where a reduced instance came from. Written as `c` comment lines so every
/// reader skips it.
struct Provenance {
  std::string reduction;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> input_digests;

  void add(std::string key, const std::string& value) { params.emplace_back(std::move(key), value); }
  template <class T>
  void add(std::string key, const T& value) {
    params.emplace_back(std::move(key), std::to_string(value));
  }

  void write(std::ostream& out) const {
    out << "c reduction " << reduction << '\n';
    for (const auto& [k, v] : params) out << "c param " << k << ' ' << v << '\n';
    for (const auto& d : input_digests) out << "c input " << d << '\n';
  }
};

}  // namespace orthodim
