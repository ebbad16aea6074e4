#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hotplug/hppda.hpp"
#include "hotplug/pda.hpp"

namespace hotplug {

// PDA file format: one row per line, cells comma-separated; '*' = star,
// '-' = null, base-10 integer = integer cell. Round-trips bit-exactly.
inline std::string serialize_pda(const CellArray& a) {
  std::ostringstream out;
  for (int f = 1; f <= a.n_rows; ++f) {
    for (int k = 1; k <= a.n_cols; ++k) {
      if (k > 1) out << ',';
      const int c = a.at(f, k);
      if (c == kStar) out << '*';
      else if (c == kNull) out << '-';
      else out << c;
    }
    out << '\n';
  }
  return out.str();
}

namespace detail {
inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}
}  // namespace detail

inline CellArray parse_pda(const std::string& text) {
  CellArray a;
  std::vector<int> cells;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    int cols = 0;
    while (std::getline(ls, tok, ',')) {
      tok = detail::trim(tok);
      ++cols;
      if (tok == "*") cells.push_back(kStar);
      else if (tok == "-") cells.push_back(kNull);
      else {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 1)
          throw std::invalid_argument("pda: bad cell token '" + tok + "'");
        cells.push_back(v);
      }
    }
    if (a.n_cols == 0) a.n_cols = cols;
    else if (cols != a.n_cols) throw std::invalid_argument("pda: ragged rows");
    ++a.n_rows;
  }
  if (a.n_rows == 0) throw std::invalid_argument("pda: empty file");
  a.cells = std::move(cells);
  return a;
}

// HpPDA bundle: header "K K' F F' Z Z' S", then P (stars/nulls only), a
// separator line "---", then B.
inline std::string serialize_bundle(const HpPda& h) {
  const auto& p = h.params;
  std::ostringstream out;
  out << p.K << ' ' << p.Kp << ' ' << p.F << ' ' << p.Fp << ' ' << p.Z << ' ' << p.Zp
      << ' ' << p.S << '\n';
  out << serialize_pda(h.P) << "---\n" << serialize_pda(h.B);
  return out.str();
}

inline HpPda parse_bundle(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("bundle: empty");
  HpPda h;
  {
    std::istringstream hs(line);
    auto& p = h.params;
    if (!(hs >> p.K >> p.Kp >> p.F >> p.Fp >> p.Z >> p.Zp >> p.S))
      throw std::invalid_argument("bundle: malformed header");
  }
  std::string p_text, b_text;
  bool past_sep = false;
  while (std::getline(in, line)) {
    if (detail::trim(line) == "---") {
      past_sep = true;
      continue;
    }
    (past_sep ? b_text : p_text) += line + '\n';
  }
  if (!past_sep) throw std::invalid_argument("bundle: missing --- separator");
  h.P = parse_pda(p_text);
  h.B = parse_pda(b_text);
  if (h.P.n_rows != h.params.F || h.P.n_cols != h.params.K)
    throw std::invalid_argument("bundle: P shape disagrees with header");
  if (h.B.n_rows != h.params.Fp || h.B.n_cols != h.params.Kp)
    throw std::invalid_argument("bundle: B shape disagrees with header");
  for (int c : h.P.cells)
    if (c >= 1) throw std::invalid_argument("bundle: P must contain only stars and nulls");
  return h;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace hotplug
