#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hotplug/combin.hpp"
#include "hotplug/design.hpp"
#include "hotplug/pda.hpp"

namespace hotplug {

struct HpParams {
  int K = 0, Kp = 0, F = 0, Fp = 0, Z = 0, Zp = 0, S = 0;

  int code_dim() const { return Fp - Zp + Z; }  // MDS dimension F'-Z'+Z
  bool operator==(const HpParams&) const = default;
};

struct HpPda {
  StarArray P;  // F x K, stars and nulls
  Pda B;        // F' x K' PDA
  HpParams params;
};

// The row alignment realizing [P]_{zeta x tau} ≅ B for one active set.
struct ZetaMatch {
  std::vector<int> tau;   // active users, ascending
  std::vector<int> zeta;  // P-row ids, aligned index-to-index with B's rows
  Pda b_bar;              // the filled sub-array; equals B cell-for-cell
};

struct HpVerifyReport {
  bool valid = false;
  std::string failure;
  std::vector<int> witness_tau;  // first failing active set, if any
  std::uint64_t taus_checked = 0;
};

// MAN family parameters (K' < K, t in [K']).
inline HpParams man_params(int K, int Kp, int t) {
  if (Kp >= K) throw std::invalid_argument("man_params: K' must be less than K");
  if (t < 1 || t > Kp) throw std::invalid_argument("man_params: need t in [K']");
  HpParams p;
  p.K = K;
  p.Kp = Kp;
  p.F = static_cast<int>(binomial(K, t));
  p.Fp = static_cast<int>(binomial(Kp, t));
  p.Z = static_cast<int>(binomial(K - 1, t - 1));
  p.Zp = static_cast<int>(binomial(Kp - 1, t - 1));
  p.S = static_cast<int>(binomial(Kp, t + 1));
  return p;
}

// MAN HpPDA: B is the MAN PDA for K' users, P the star pattern of the MAN PDA
// for K users.
inline HpPda man_hppda(int K, int Kp, int t) {
  HpPda h;
  h.params = man_params(K, Kp, t);
  if (t > Kp - 1) throw std::invalid_argument("man_hppda: need t <= K'-1");
  h.B = man_pda(Kp, t);
  h.P = strip_to_stars(man_pda(K, t));
  return h;
}

inline HpParams tdesign_params(const Design& d, const std::vector<int>& a) {
  const int t = d.t;
  if (static_cast<int>(a.size()) != t - 1)
    throw std::invalid_argument("tdesign: a-list must have t-1 entries");
  HpParams p;
  p.K = d.v;
  p.Kp = t;
  p.F = d.b();
  p.Z = static_cast<int>(lambda_s(d, 1));
  bool any = false;
  for (int s = 1; s <= t - 1; ++s) {
    int as = a[s - 1];
    if (as < 0 || as > static_cast<int>(lambda_exact(d, s)))
      throw std::invalid_argument("tdesign: a_" + std::to_string(s) +
                                  " exceeds lambda_" + std::to_string(s) + "^t");
    if (as > 0) any = true;
    p.Fp += as * static_cast<int>(binomial(t, s));
    p.Zp += as * static_cast<int>(binomial(t - 1, s - 1));
    p.S += as * static_cast<int>(binomial(t, s + 1));
  }
  if (!any) throw std::invalid_argument("tdesign: all a_s are zero");
  return p;
}

// HpPDA from a t-design: P(block, point) has a star when the point lies in
// the block; B's rows are pairs (Y, i) with Y a proper nonempty subset of [t]
// and i in [a_|Y|], ordered by |Y| descending, then i ascending, then Y lex.
// Integer labels enumerate the pairs (Y', i) with |Y'| = |Y|+1 by size
// descending, then Y' lex, then i ascending.
inline HpPda tdesign_hppda(const Design& d, const std::vector<int>& a) {
  HpPda h;
  h.params = tdesign_params(d, a);
  const int t = d.t;

  h.P = StarArray(d.b(), d.v);
  for (int row = 1; row <= d.b(); ++row)
    for (int pt : d.blocks[row - 1]) h.P.at(row, pt) = kStar;

  // Integer labels for B.
  std::map<std::pair<std::vector<int>, int>, int> label;
  int next = 1;
  for (int size = t; size >= 2; --size) {
    const int as = a[size - 2];  // rows of class s = size-1 carry i in [a_s]
    for_each_subset(t, size, [&](const std::vector<int>& Yp) {
      for (int i = 1; i <= as; ++i) label[{Yp, i}] = next++;
    });
  }

  h.B = Pda(h.params.Fp, t);
  int row = 0;
  for (int s = t - 1; s >= 1; --s) {
    for (int i = 1; i <= a[s - 1]; ++i) {
      for_each_subset(t, s, [&](const std::vector<int>& Y) {
        ++row;
        for (int j = 1; j <= t; ++j) {
          if (std::binary_search(Y.begin(), Y.end(), j)) {
            h.B.at(row, j) = kStar;
          } else {
            std::vector<int> u(Y);
            u.insert(std::upper_bound(u.begin(), u.end(), j), j);
            h.B.at(row, j) = label.at({u, i});
          }
        }
      });
    }
  }
  return h;
}

// Deterministic greedy matching: B's rows are processed top to bottom and each
// gets the smallest not-yet-used P-row whose star pattern on tau equals the
// B-row's pattern. Throws when some B-row has no remaining match.
inline ZetaMatch find_zeta(const HpPda& h, std::vector<int> tau) {
  std::sort(tau.begin(), tau.end());
  if (static_cast<int>(tau.size()) != h.params.Kp)
    throw std::invalid_argument("find_zeta: tau must have size K'");
  if (std::adjacent_find(tau.begin(), tau.end()) != tau.end() || tau.front() < 1 ||
      tau.back() > h.params.K)
    throw std::invalid_argument("find_zeta: tau must be a K'-subset of [K]");

  // Group P's rows by star pattern on tau; consume each group front to back.
  std::map<std::vector<int>, std::vector<int>> rows_by_pattern;
  for (int f = 1; f <= h.P.n_rows; ++f)
    rows_by_pattern[star_pattern(h.P, f, tau)].push_back(f);
  std::map<std::vector<int>, size_t> used;

  std::vector<int> all_cols(h.params.Kp);
  for (int c = 1; c <= h.params.Kp; ++c) all_cols[c - 1] = c;

  ZetaMatch m;
  m.tau = tau;
  m.b_bar = h.B;
  for (int r = 1; r <= h.B.n_rows; ++r) {
    auto pattern = star_pattern(h.B, r, all_cols);
    auto it = rows_by_pattern.find(pattern);
    size_t& cursor = used[pattern];
    if (it == rows_by_pattern.end() || cursor >= it->second.size())
      throw std::runtime_error("find_zeta: no matching P-row for B-row " + std::to_string(r) +
                               " (not an HpPDA for this tau)");
    m.zeta.push_back(it->second[cursor++]);
  }
  return m;
}

struct VerifyMode {
  bool exhaustive = true;
  std::uint64_t sample_count = 1000;
  std::uint64_t seed = 0;

  static VerifyMode Exhaustive() { return {true, 0, 0}; }
  static VerifyMode Sample(std::uint64_t count, std::uint64_t seed) {
    return {false, count, seed};
  }
  // Exhaustive when C(K,K') <= 1e5, else sample(1000, seed 0).
  static VerifyMode Auto(int K, int Kp) {
    return binomial(K, Kp) <= 100000 ? Exhaustive() : Sample(1000, 0);
  }
};

inline HpVerifyReport verify_hppda(const HpPda& h, VerifyMode mode = {}) {
  HpVerifyReport rep;
  const auto& p = h.params;
  if (h.P.n_rows != p.F || h.P.n_cols != p.K || h.B.n_rows != p.Fp || h.B.n_cols != p.Kp) {
    rep.failure = "array shapes disagree with parameters";
    return rep;
  }
  for (int c : h.P.cells)
    if (c >= 1) {
      rep.failure = "P contains an integer cell";
      return rep;
    }
  auto brep = verify_pda(h.B);
  if (!brep.valid || brep.Z != p.Zp || brep.S != p.S) {
    rep.failure = "B is not a [K',F',Z',S]-PDA: " +
                  (brep.valid ? "Z/S mismatch" : brep.failure);
    return rep;
  }
  for (int k = 1; k <= p.K; ++k) {
    int stars = 0;
    for (int f = 1; f <= p.F; ++f)
      if (h.P.at(f, k) == kStar) ++stars;
    if (stars != p.Z) {
      rep.failure = "P column " + std::to_string(k) + " has " + std::to_string(stars) +
                    " stars, expected Z=" + std::to_string(p.Z);
      return rep;
    }
  }
  if (p.Zp > p.Z) {
    rep.failure = "Z' > Z";
    return rep;
  }
  if (p.Fp - p.Zp + p.Z > p.F) {
    rep.failure = "F'-Z'+Z > F: no [F, F'-Z'+Z] MDS code fits";
    return rep;
  }

  auto check_tau = [&](const std::vector<int>& tau) {
    ++rep.taus_checked;
    try {
      find_zeta(h, tau);
      return true;
    } catch (const std::runtime_error&) {
      rep.witness_tau = tau;
      return false;
    }
  };
  if (mode.exhaustive) {
    bool ok = true;
    for_each_subset(p.K, p.Kp, [&](const std::vector<int>& tau) {
      if (ok && !check_tau(tau)) ok = false;
    });
    if (!ok) {
      rep.failure = "no zeta for some tau";
      return rep;
    }
  } else {
    std::mt19937_64 rng(mode.seed);
    for (std::uint64_t it = 0; it < mode.sample_count; ++it) {
      // Floyd's sampling of a K'-subset of [K]
      std::vector<int> tau;
      for (int j = p.K - p.Kp + 1; j <= p.K; ++j) {
        int x = static_cast<int>(rng() % j) + 1;
        if (std::find(tau.begin(), tau.end(), x) != tau.end()) tau.push_back(j);
        else tau.push_back(x);
      }
      if (!check_tau(tau)) {
        rep.failure = "no zeta for sampled tau";
        return rep;
      }
    }
  }
  rep.valid = true;
  return rep;
}

}  // namespace hotplug
