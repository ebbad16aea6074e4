// Acceptance suite: one self-contained check per criterion, one PASS/FAIL
// line each, nonzero exit if anything fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hotplug/hotplug.hpp"

using namespace hotplug;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  std::function<void()> run;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

std::multiset<std::pair<int, int>> term_multiset(const Transmission& x) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& t : x.terms) out.insert({t.demand, t.f});
  return out;
}

void check_transmissions(const std::vector<Transmission>& got,
                         const std::vector<fixtures::Terms>& want) {
  require(got.size() == want.size(), "transmission count mismatch");
  for (size_t s = 0; s < want.size(); ++s)
    require(term_multiset(got[s]) ==
                std::multiset<std::pair<int, int>>(want[s].begin(), want[s].end()),
            "term multiset of X_" + std::to_string(s + 1) + " differs");
}

// Demand vectors for the exhaustive decodability run: 20 seeded random ones
// plus all-equal and all-distinct.
std::vector<std::vector<int>> demand_vectors(int Kp, int N, std::uint64_t seed) {
  std::vector<std::vector<int>> out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 20; ++i) {
    std::vector<int> d(Kp);
    for (int& x : d) x = 1 + static_cast<int>(rng() % N);
    out.push_back(d);
  }
  std::vector<int> equal(Kp, 1), distinct(Kp);
  for (int i = 0; i < Kp; ++i) distinct[i] = i + 1;  // needs N >= K'
  out.push_back(equal);
  out.push_back(distinct);
  return out;
}

void criterion1() {
  auto start = Clock::now();
  auto h = man_hppda(6, 4, 2);
  require(serialize_pda(h.P) == fixtures::kExample1P, "P differs from the printed array");
  require(serialize_pda(h.B) == fixtures::kExample1B, "B differs from the printed array");
  auto match = find_zeta(h, {1, 4, 5, 6});
  require(match.zeta == std::vector<int>{3, 4, 5, 13, 14, 15}, "zeta mismatch");
  FileLibrary lib(h.params, random_files(6, 512, 1001));
  std::vector<int> demands{2, 3, 1, 5};
  auto xs = deliver(h, lib, match, demands);
  check_transmissions(xs, fixtures::kExample1Transmissions);
  auto caches = place(h, lib);
  for (size_t i = 0; i < match.tau.size(); ++i)
    require(decode_user(h, caches[match.tau[i] - 1], match, xs, demands, lib) ==
                lib.originals[demands[i] - 1],
            "user " + std::to_string(match.tau[i]) + " decode failed");
  auto rep = simulate(h, 6, {1, 4, 5, 6}, demands, 1001);
  require(rep.all_success() && rep.rate == Rational(1, 2), "rate != 1/2");
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  require(secs < 1.0, "runtime " + std::to_string(secs) + "s >= 1s");
}

void criterion2() {
  auto start = Clock::now();
  auto h = tdesign_hppda(fixtures::example2_design(), {1, 2});
  require(h.params == HpParams{8, 3, 14, 9, 7, 5, 5}, "parameter tuple mismatch");
  require(serialize_pda(h.P) == fixtures::kExample2P, "P differs from the printed array");
  require(serialize_pda(h.B) == fixtures::kExample2B, "B differs from the printed array");
  auto match = find_zeta(h, {2, 6, 8});
  require(match.zeta == std::vector<int>{1, 9, 8, 6, 14, 11, 7, 10, 2}, "zeta mismatch");
  FileLibrary lib(h.params, random_files(6, 512, 1002));
  std::vector<int> demands{1, 3, 4};
  auto xs = deliver(h, lib, match, demands);
  check_transmissions(xs, fixtures::kExample2Transmissions);
  require(xs[2].terms.size() == 2 && xs[3].terms.size() == 2, "X_3/X_4 term counts");
  auto caches = place(h, lib);
  for (size_t i = 0; i < match.tau.size(); ++i)
    require(decode_user(h, caches[match.tau[i] - 1], match, xs, demands, lib) ==
                lib.originals[demands[i] - 1],
            "user " + std::to_string(match.tau[i]) + " decode failed");
  auto rep = simulate(h, 6, {2, 6, 8}, demands, 1002);
  require(rep.all_success() && rep.rate == Rational(5, 11), "rate != 5/11");
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  require(secs < 1.0, "runtime " + std::to_string(secs) + "s >= 1s");
}

void criterion3() {
  auto start = Clock::now();
  std::vector<HpPda> cases{man_hppda(6, 4, 2),
                           tdesign_hppda(fixtures::example2_design(), {1, 2})};
  for (const auto& h : cases) {
    const int N = std::max(h.params.Kp, 4);
    std::uint64_t seed = 7;
    for_each_subset(h.params.K, h.params.Kp, [&](const std::vector<int>& tau) {
      for (const auto& demands : demand_vectors(h.params.Kp, N, ++seed)) {
        auto rep = simulate(h, N, tau, demands, seed, 8 * h.params.code_dim());
        require(rep.all_success(), "decode failure for some (tau, demands)");
      }
    });
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  require(secs < 60.0, "runtime " + std::to_string(secs) + "s >= 60s");
}

void criterion4() {
  Design d = fixtures::example2_design();
  auto p1 = tdesign_params(d, {1, 2});
  auto p2 = tdesign_params(d, {2, 2});
  require(proposed_point(p1).m_over_n == Rational(7, 11) &&
              proposed_point(p1).rate == Rational(5, 11),
          "proposed point of (1,2) != (7/11, 5/11)");
  require(proposed_point(p2).m_over_n == Rational(7, 13) &&
              proposed_point(p2).rate == Rational(8, 13),
          "proposed point of (2,2) != (7/13, 8/13)");
  require(theorem1_point(p1).m_over_n == Rational(7, 9) &&
              theorem1_point(p1).rate == Rational(5, 9),
          "theorem1 point of (1,2) != (7/9, 5/9)");
  require(theorem1_point(p2).m_over_n == Rational(7, 12) &&
              theorem1_point(p2).rate == Rational(8, 12),
          "theorem1 point of (2,2) != (7/12, 8/12)");
}

void criterion5() {
  auto start = Clock::now();
  const int N = 20;
  for (int t = 1; t <= 15; ++t) {
    auto p = man_params(20, 15, t);
    auto pt = proposed_point(p);
    Rational want(binomial(19, t - 1),
                  binomial(15, t) - binomial(14, t - 1) + binomial(19, t - 1));
    require(pt.m_over_n == want, "M/N formula mismatch at t=" + std::to_string(t));
    double bound = converse_bound(N, 15, pt.m_over_n * N);
    require(static_cast<double>(pt.rate) >= bound - 1e-9,
            "rate below converse bound at t=" + std::to_string(t));
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  require(secs < 30.0, "runtime " + std::to_string(secs) + "s >= 30s");
}

void criterion6() {
  std::mt19937_64 rng(606);
  // [14,11]: all 364 coordinate subsets
  {
    RsCodec c(14, 11);
    std::vector<SymbolBlock> msg(11, SymbolBlock(4));
    for (auto& b : msg)
      for (auto& s : b) s = static_cast<std::uint16_t>(rng() & 0xFF);
    auto coded = c.encode(msg);
    int subsets = 0;
    for_each_subset(14, 11, [&](const std::vector<int>& coords) {
      ++subsets;
      std::vector<SymbolBlock> vals;
      for (int col : coords) vals.push_back(coded[col - 1]);
      require(c.decode_from(coords, vals) == msg, "[14,11] round-trip failed");
    });
    require(subsets == 364, "expected 364 subsets");
  }
  // [15,8]: 5000 seeded subsets
  {
    RsCodec c(15, 8);
    std::vector<SymbolBlock> msg(8, SymbolBlock(4));
    for (auto& b : msg)
      for (auto& s : b) s = static_cast<std::uint16_t>(rng() & 0xFF);
    auto coded = c.encode(msg);
    for (int it = 0; it < 5000; ++it) {
      std::set<int> pick;
      while (pick.size() < 8) pick.insert(1 + static_cast<int>(rng() % 15));
      std::vector<int> coords(pick.begin(), pick.end());
      std::vector<SymbolBlock> vals;
      for (int col : coords) vals.push_back(coded[col - 1]);
      require(c.decode_from(coords, vals) == msg, "[15,8] round-trip failed");
    }
  }
  // field axioms on 10^4 seeded triples
  const Field& f = Field::gf256();
  for (int i = 0; i < 10000; ++i) {
    auto a = static_cast<std::uint16_t>(rng() & 0xFF);
    auto b = static_cast<std::uint16_t>(rng() & 0xFF);
    auto c = static_cast<std::uint16_t>(rng() & 0xFF);
    require(Field::add(a, a) == 0, "a+a != 0");
    require(f.mul(a, Field::add(b, c)) == Field::add(f.mul(a, b), f.mul(a, c)),
            "distributivity failed");
    if (a != 0) require(f.mul(a, f.inv(a)) == 1, "a*inv(a) != 1");
  }
}

void criterion7() {
  Design d = fixtures::example2_design();
  require(verify_design(d).valid, "shipped design invalid");
  require(lambda_s(d, 1) == 7 && lambda_s(d, 2) == 3 && lambda_s(d, 3) == 1 && d.b() == 14,
          "lambda_s closed forms");
  // enumeration agreement for lambda_s
  for (int s = 1; s <= 3; ++s) {
    for_each_subset(8, s, [&](const std::vector<int>& Y) {
      int count = 0;
      for (const auto& block : d.blocks)
        if (std::includes(block.begin(), block.end(), Y.begin(), Y.end())) ++count;
      require(count == static_cast<int>(lambda_s(d, s)), "lambda_s enumeration mismatch");
    });
  }
  // lambda_i^t formula vs enumeration over all 56 x 8 (T, Y) pairs
  int pairs = 0;
  for_each_subset(8, 3, [&](const std::vector<int>& T) {
    for (int i = 0; i <= 3; ++i) {
      for_each_subset(3, i, [&](const std::vector<int>& pick) {
        ++pairs;
        std::vector<int> Y;
        for (int idx : pick) Y.push_back(T[idx - 1]);
        require(blocks_matching(d, T, Y).size() == lambda_exact(d, i),
                "lambda_i^t enumeration mismatch");
      });
    }
  });
  require(pairs == 56 * 8, "expected 448 (T,Y) pairs");
}

void criterion8() {
  require(std::abs(converse_bound(8, 3, 0) - 3.0) <= 1e-3, "bound(8,3,0) != 3");
  for (auto [N, Kp] : std::vector<std::pair<int, int>>{{8, 3}, {12, 3}, {12, 5}, {20, 15}}) {
    require(converse_bound(N, Kp, N) == 0.0, "bound at M=N not exactly 0");
    double prev = 1e300;
    for (int i = 0; i < 100; ++i) {
      double v = converse_bound(N, Kp, Rational(static_cast<long long>(N) * i, 99));
      require(v <= prev + 1e-12, "bound not nonincreasing");
      prev = v;
    }
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"1 Example 1 reproduction (arrays, zeta, transmissions, decode, rate 1/2)", criterion1},
      {"2 Example 2 reproduction (arrays, zeta, transmissions, decode, rate 5/11)", criterion2},
      {"3 exhaustive decodability over all active sets and demand vectors", criterion3},
      {"4 rate-memory points match their expected exact rationals", criterion4},
      {"5 MAN family sweep (20,15,20): formulas exact, rates above the bound", criterion5},
      {"6 MDS property suite ([14,11] exhaustive, [15,8] sampled, field axioms)", criterion6},
      {"7 design oracle suite (verify, lambda_s, lambda_i^t vs enumeration)", criterion7},
      {"8 converse bound properties (anchors, exact clamp, monotone)", criterion8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    try {
      c.run();
      double secs = std::chrono::duration<double>(Clock::now() - start).count();
      std::printf("PASS  criterion %s  (%.2fs)\n", c.name.c_str(), secs);
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL  criterion %s: %s\n", c.name.c_str(), e.what());
    }
  }
  return failures == 0 ? 0 : 1;
}
