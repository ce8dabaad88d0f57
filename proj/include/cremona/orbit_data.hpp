#pragma once

// Orbit data (n1, n2, n3, sigma): the combinatorial shape of a quadratic
// transformation whose j-th indeterminacy orbit has length n_j and lands on
// the sigma(j)-th base point.  Text form "n1,n2,n3:SIG" with SIG one of
// id, (12), (13), (23), (123), (132).

#include <array>
#include <stdexcept>
#include <string>

#include "cremona/perm3.hpp"

namespace cremona {

struct OrbitData {
  std::array<int, 3> n{1, 1, 1};
  Perm3 sigma;

  OrbitData() = default;
  OrbitData(int n1, int n2, int n3, Perm3 s = {}) : n{n1, n2, n3}, sigma(s) {
    for (int v : n)
      if (v < 1) throw std::invalid_argument("OrbitData: orbit lengths must be >= 1");
  }

  int total() const { return n[0] + n[1] + n[2]; }

  bool operator==(const OrbitData&) const = default;

  std::string str() const {
    return std::to_string(n[0]) + "," + std::to_string(n[1]) + "," +
           std::to_string(n[2]) + ":" + sigma.str();
  }

  static OrbitData parse(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("OrbitData: missing ':' in '" + s + "'");
    std::array<int, 3> n{};
    size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      size_t next = s.find(',', pos);
      if (i == 2) next = colon;
      if (next == std::string::npos || next > colon)
        throw std::invalid_argument("OrbitData: expected three lengths in '" + s + "'");
      n[i] = std::stoi(s.substr(pos, next - pos));
      pos = next + 1;
    }
    return OrbitData(n[0], n[1], n[2], Perm3::parse(s.substr(colon + 1)));
  }
};

}  // namespace cremona
