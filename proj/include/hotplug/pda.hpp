#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hotplug/combin.hpp"

namespace hotplug {

// Cell encoding: kStar = star, kNull = null, s >= 1 = the integer s.
inline constexpr int kStar = -1;
inline constexpr int kNull = 0;

// Rectangular array of cells, row-major. Used both for full PDAs and for
// star/null placement arrays.
struct CellArray {
  int n_rows = 0;
  int n_cols = 0;
  std::vector<int> cells;

  CellArray() = default;
  CellArray(int rows, int cols, int fill = kNull)
      : n_rows(rows), n_cols(cols), cells(static_cast<size_t>(rows) * cols, fill) {}

  int& at(int row, int col) { return cells[static_cast<size_t>(row - 1) * n_cols + (col - 1)]; }
  int at(int row, int col) const {
    return cells[static_cast<size_t>(row - 1) * n_cols + (col - 1)];
  }

  bool operator==(const CellArray& o) const = default;
};

using Pda = CellArray;
using StarArray = CellArray;  // invariant: holds only kStar / kNull

struct PdaReport {
  bool valid = false;
  int K = 0, F = 0, Z = 0, S = 0;
  std::optional<int> regularity;  // g, when every integer appears exactly g times
  std::string failure;            // first violation, human readable
};

// Checks PDA conditions C1-C3 and extracts (K, F, Z, S). Never throws on an
// invalid array; the report carries the first witnessing cells.
inline PdaReport verify_pda(const CellArray& a) {
  PdaReport rep;
  rep.F = a.n_rows;
  rep.K = a.n_cols;
  if (a.n_rows == 0 || a.n_cols == 0) {
    rep.failure = "empty array";
    return rep;
  }
  // C1: uniform star count per column
  for (int k = 1; k <= a.n_cols; ++k) {
    int stars = 0;
    for (int f = 1; f <= a.n_rows; ++f)
      if (a.at(f, k) == kStar) ++stars;
    if (k == 1) {
      rep.Z = stars;
    } else if (stars != rep.Z) {
      rep.failure = "C1: column " + std::to_string(k) + " has " + std::to_string(stars) +
                    " stars, expected " + std::to_string(rep.Z);
      return rep;
    }
  }
  // Collect occurrences per integer
  std::map<int, std::vector<std::pair<int, int>>> occ;
  for (int f = 1; f <= a.n_rows; ++f)
    for (int k = 1; k <= a.n_cols; ++k)
      if (int s = a.at(f, k); s >= 1) {
        occ[s].push_back({f, k});
        rep.S = std::max(rep.S, s);
      }
  // C2: every integer in [S] present
  for (int s = 1; s <= rep.S; ++s)
    if (!occ.count(s)) {
      rep.failure = "C2: integer " + std::to_string(s) + " absent";
      return rep;
    }
  // C3: pairwise over occurrences of each integer
  for (const auto& [s, cells] : occ) {
    for (size_t i = 0; i < cells.size(); ++i)
      for (size_t j = i + 1; j < cells.size(); ++j) {
        auto [f1, k1] = cells[i];
        auto [f2, k2] = cells[j];
        if (f1 == f2 || k1 == k2) {
          rep.failure = "C3: integer " + std::to_string(s) + " repeats in row or column at (" +
                        std::to_string(f1) + "," + std::to_string(k1) + ")/(" +
                        std::to_string(f2) + "," + std::to_string(k2) + ")";
          return rep;
        }
        if (a.at(f1, k2) != kStar || a.at(f2, k1) != kStar) {
          rep.failure = "C3: integer " + std::to_string(s) +
                        " lacks anti-diagonal stars at (" + std::to_string(f1) + "," +
                        std::to_string(k1) + ")/(" + std::to_string(f2) + "," +
                        std::to_string(k2) + ")";
          return rep;
        }
      }
  }
  rep.valid = true;
  if (!occ.empty()) {
    size_t g = occ.begin()->second.size();
    bool regular = true;
    for (const auto& [s, cells] : occ)
      if (cells.size() != g) regular = false;
    if (regular) rep.regularity = static_cast<int>(g);
  }
  return rep;
}

// MAN PDA for Kp users at parameter t: rows are the t-subsets of [Kp] in lex
// order; cell (T, k) is a star when k is in T, otherwise the 1-based lex rank
// of T ∪ {k} among the (t+1)-subsets.
inline Pda man_pda(int Kp, int t) {
  if (t < 1 || t > Kp - 1) throw std::invalid_argument("man_pda: need 1 <= t <= Kp-1");
  const int F = static_cast<int>(binomial(Kp, t));
  Pda p(F, Kp);
  int row = 0;
  for_each_subset(Kp, t, [&](const std::vector<int>& T) {
    ++row;
    for (int k = 1; k <= Kp; ++k) {
      if (std::binary_search(T.begin(), T.end(), k)) {
        p.at(row, k) = kStar;
      } else {
        std::vector<int> u(T);
        u.insert(std::upper_bound(u.begin(), u.end(), k), k);
        p.at(row, k) = static_cast<int>(subset_rank(Kp, u));
      }
    }
  });
  return p;
}

// Replaces all integers with null, keeping the star pattern.
inline StarArray strip_to_stars(const CellArray& p) {
  StarArray out = p;
  for (int& c : out.cells)
    if (c >= 1) c = kNull;
  return out;
}

// Positions (1..|cols|) within the given column selection where the row has a
// star. cols are 1-based column indices of the array.
inline std::vector<int> star_pattern(const CellArray& a, int row, const std::vector<int>& cols) {
  if (row < 1 || row > a.n_rows) throw std::out_of_range("star_pattern: row out of range");
  std::vector<int> out;
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] < 1 || cols[j] > a.n_cols)
      throw std::out_of_range("star_pattern: column out of range");
    if (a.at(row, cols[j]) == kStar) out.push_back(static_cast<int>(j + 1));
  }
  return out;
}

}  // namespace hotplug
