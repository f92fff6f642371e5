#pragma once

#include "adombell/partitions.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace golden_lambda {

using Table = std::map<std::pair<unsigned, unsigned>, std::vector<adombell::PartitionVector>>;

inline adombell::PartitionVector parse_vector(unsigned n, unsigned k, const std::string& tok) {
  if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')') throw std::runtime_error("bad vector " + tok);
  adombell::PartitionVector v{n, k, {}};
  std::stringstream ss(tok.substr(1, tok.size() - 2));
  std::string part;
  while (std::getline(ss, part, ',')) v.parts.push_back(static_cast<unsigned>(std::stoul(part)));
  return v;
}

inline Table load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Table t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    unsigned n = 0, k = 0;
    ls >> n >> k;
    auto& row = t[{n, k}];
    std::string tok;
    while (ls >> tok) row.push_back(parse_vector(n, k, tok));
    std::sort(row.begin(), row.end());
  }
  return t;
}

}  // namespace golden_lambda
