#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hotplug/combin.hpp"

namespace hotplug {

// A t-(v, k, lambda) design: points 1..v, blocks kept in file order.
struct Design {
  int v = 0;
  int k_block = 0;
  int lambda = 0;
  int t = 0;
  std::vector<std::vector<int>> blocks;  // each sorted ascending

  int b() const { return static_cast<int>(blocks.size()); }
};

struct DesignViolation {
  std::vector<int> t_subset;
  int count = 0;  // actual number of blocks containing the subset
};

struct DesignReport {
  bool valid = true;
  std::vector<DesignViolation> violations;
};

// File format: line 1 = "t v k lambda"; each further non-empty line is one
// block of k points; '#' starts a comment line. Block order is preserved.
inline Design parse_design(const std::string& text) {
  Design d;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  std::set<std::vector<int>> seen;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!have_header) {
      if (!(ls >> d.t >> d.v >> d.k_block >> d.lambda))
        continue;  // blank or comment before header
      if (d.t < 1 || d.v < 1 || d.k_block < 1 || d.lambda < 1 || d.k_block > d.v ||
          d.t > d.k_block)
        throw std::invalid_argument("design: malformed header");
      have_header = true;
      continue;
    }
    std::vector<int> block;
    int p;
    while (ls >> p) {
      if (p < 1 || p > d.v) throw std::invalid_argument("design: point out of range");
      block.push_back(p);
    }
    if (block.empty()) continue;
    if (static_cast<int>(block.size()) != d.k_block)
      throw std::invalid_argument("design: block of wrong size");
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      throw std::invalid_argument("design: duplicate point within a block");
    if (!seen.insert(block).second)
      throw std::invalid_argument("design: duplicate block");
    d.blocks.push_back(std::move(block));
  }
  if (!have_header) throw std::invalid_argument("design: missing header");
  return d;
}

inline std::string serialize_design(const Design& d) {
  std::ostringstream out;
  out << d.t << ' ' << d.v << ' ' << d.k_block << ' ' << d.lambda << '\n';
  for (const auto& block : d.blocks) {
    for (size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
    out << '\n';
  }
  return out.str();
}

// Exhaustive check that every t-subset of [v] lies in exactly lambda blocks.
inline DesignReport verify_design(const Design& d) {
  DesignReport rep;
  for_each_subset(d.v, d.t, [&](const std::vector<int>& sub) {
    int count = 0;
    for (const auto& block : d.blocks)
      if (std::includes(block.begin(), block.end(), sub.begin(), sub.end())) ++count;
    if (count != d.lambda) {
      rep.valid = false;
      rep.violations.push_back({sub, count});
    }
  });
  return rep;
}

// lambda_s = lambda * C(v-s, t-s) / C(k-s, t-s): blocks containing a fixed
// s-subset.
inline std::uint64_t lambda_s(const Design& d, int s) {
  if (s < 0 || s > d.t) throw std::out_of_range("lambda_s: s out of range");
  return d.lambda * binomial(d.v - s, d.t - s) / binomial(d.k_block - s, d.t - s);
}

// lambda_i^t = lambda * C(v-t, k-i) / C(v-t, k-t): blocks meeting a fixed
// t-subset T in exactly a fixed i-subset Y of T.
inline std::uint64_t lambda_exact(const Design& d, int i) {
  if (i < 0 || i > d.t) throw std::out_of_range("lambda_exact: i out of range");
  return d.lambda * binomial(d.v - d.t, d.k_block - i) /
         binomial(d.v - d.t, d.k_block - d.t);
}

// Ascending indices (1-based, file order) of blocks A with A ∩ T = Y.
inline std::vector<int> blocks_matching(const Design& d, const std::vector<int>& T,
                                        const std::vector<int>& Y) {
  if (static_cast<int>(T.size()) != d.t)
    throw std::invalid_argument("blocks_matching: T must have size t");
  std::vector<int> ts(T), ys(Y);
  std::sort(ts.begin(), ts.end());
  std::sort(ys.begin(), ys.end());
  if (!std::includes(ts.begin(), ts.end(), ys.begin(), ys.end()))
    throw std::invalid_argument("blocks_matching: Y must be a subset of T");
  std::vector<int> out;
  for (int idx = 0; idx < d.b(); ++idx) {
    const auto& block = d.blocks[idx];
    std::vector<int> inter;
    std::set_intersection(block.begin(), block.end(), ts.begin(), ts.end(),
                          std::back_inserter(inter));
    if (inter == ys) out.push_back(idx + 1);
  }
  return out;
}

}  // namespace hotplug
