#pragma once

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hotplug/hppda.hpp"
#include "hotplug/rational.hpp"

namespace hotplug {

struct RatePoint {
  Rational m_over_n;
  Rational rate;
  std::string label;  // proposed | theorem1 | custom
};

// (M/N, R) = (Z/(F'-Z'+Z), S/(F'-Z'+Z)) for the coded-placement scheme.
inline RatePoint proposed_point(const HpParams& p) {
  return {Rational(p.Z, p.code_dim()), Rational(p.S, p.code_dim()), "proposed"};
}
inline RatePoint proposed_point(const HpPda& h) { return proposed_point(h.params); }

// (M/N, R) = (Z/F', S/F') for the prior HpPDA scheme.
inline RatePoint theorem1_point(const HpParams& p) {
  return {Rational(p.Z, p.Fp), Rational(p.S, p.Fp), "theorem1"};
}
inline RatePoint theorem1_point(const HpPda& h) { return theorem1_point(h.params); }

// Lower bound on R for N files and Kp users at memory M = m_num/m_den:
//   R >= s-1+a - (s(s-1)-l(l-1)+2as) / (2(N-l+1)) * M
// maximized over s in [min(N,Kp)] and a on a grid of `steps` points in [0,1],
// with l the smallest value in [s] satisfying
// (s(s-1)-l(l-1))/2 + as <= (N-l+1)l. The grid maximum is evaluated in exact
// rational arithmetic and clamped below at 0, so the result is 0 exactly at
// M = N; only the final division is floating point.
namespace detail {
inline double converse_bound_impl(int N, int Kp, long long m_num, long long m_den,
                                  int steps) {
  if (m_den <= 0 || m_num < 0 || m_num > N * m_den)
    throw std::out_of_range("converse_bound: need 0 <= M <= N");
  using I = __int128;
  const I p = m_num, q = m_den;
  I best_num = 0, best_den = 1;  // start at the clamp value 0
  for (int s = 1; s <= std::min(N, Kp); ++s) {
    for (int ai = 0; ai <= steps; ++ai) {
      int l = 0;
      for (int ll = 1; ll <= s; ++ll) {
        // feasibility, scaled by 2*steps to stay integral
        if (I(steps) * (s * (s - 1) - ll * (ll - 1)) + I(2) * ai * s <=
            I(2) * steps * (N - ll + 1) * ll) {
          l = ll;
          break;
        }
      }
      if (l == 0) continue;
      const I den = I(2) * steps * (N - l + 1) * q;
      const I num = (I(s - 1) * steps + ai) * 2 * (N - l + 1) * q -
                    (I(steps) * (s * (s - 1) - l * (l - 1)) + I(2) * ai * s) * p;
      if (num * best_den > best_num * den) {
        best_num = num;
        best_den = den;
      }
    }
  }
  if (best_num <= 0) return 0.0;
  return static_cast<double>(best_num) / static_cast<double>(best_den);
}
}  // namespace detail

inline double converse_bound(int N, int Kp, const Rational& M, int steps = 1000) {
  return detail::converse_bound_impl(
      N, Kp, static_cast<long long>(boost::multiprecision::numerator(M)),
      static_cast<long long>(boost::multiprecision::denominator(M)), steps);
}

struct BoundCurve {
  int N = 0, Kp = 0;
  std::vector<std::pair<Rational, double>> samples;  // (M, lower bound on R)
};

inline BoundCurve sample_bound(int N, int Kp, int grid_points = 101, int steps = 1000) {
  BoundCurve c{N, Kp, {}};
  for (int i = 0; i < grid_points; ++i) {
    Rational M(static_cast<long long>(N) * i, grid_points - 1);
    c.samples.push_back({M, converse_bound(N, Kp, M, steps)});
  }
  return c;
}

// Lower convex envelope over m_over_n: ordered vertex list with strictly
// increasing slopes. Evaluation extends as a constant beyond both ends.
inline std::vector<RatePoint> lower_envelope(std::vector<RatePoint> points) {
  if (points.empty()) throw std::invalid_argument("lower_envelope: empty input");
  std::sort(points.begin(), points.end(), [](const RatePoint& a, const RatePoint& b) {
    return a.m_over_n != b.m_over_n ? a.m_over_n < b.m_over_n : a.rate < b.rate;
  });
  // keep only the lowest point at each abscissa
  std::vector<RatePoint> uniq;
  for (auto& pt : points)
    if (uniq.empty() || uniq.back().m_over_n != pt.m_over_n) uniq.push_back(std::move(pt));
  std::vector<RatePoint> hull;
  for (auto& pt : uniq) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // pop b unless a->b->pt turns strictly left (slopes strictly increase)
      Rational cross = (b.m_over_n - a.m_over_n) * (pt.rate - a.rate) -
                       (b.rate - a.rate) * (pt.m_over_n - a.m_over_n);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(std::move(pt));
  }
  return hull;
}

inline Rational envelope_at(const std::vector<RatePoint>& hull, const Rational& x) {
  if (hull.empty()) throw std::invalid_argument("envelope_at: empty hull");
  if (x <= hull.front().m_over_n) return hull.front().rate;
  if (x >= hull.back().m_over_n) return hull.back().rate;
  for (size_t i = 1; i < hull.size(); ++i)
    if (x <= hull[i].m_over_n) {
      const auto& a = hull[i - 1];
      const auto& b = hull[i];
      return a.rate + (b.rate - a.rate) * (x - a.m_over_n) / (b.m_over_n - a.m_over_n);
    }
  return hull.back().rate;
}

// One CSV row per scheme point plus a sampled converse curve. M = N * (M/N).
// A sidecar "<out>.exact" carries the scheme points as exact "p/q" strings.
inline void sweep(const std::vector<HpParams>& family, int N, const std::string& out,
                  int bound_grid_points = 101, int bound_steps = 1000) {
  if (family.empty()) throw std::invalid_argument("sweep: empty family");
  for (const auto& p : family)
    if (p.K != family[0].K || p.Kp != family[0].Kp)
      throw std::invalid_argument("sweep: all HpPDAs must share (K, K')");

  std::ofstream csv(out);
  if (!csv) throw std::runtime_error("sweep: cannot write " + out);
  std::ofstream exact(out + ".exact");
  if (!exact) throw std::runtime_error("sweep: cannot write " + out + ".exact");
  csv << "scheme,M,R\n";
  exact << "scheme,M,R\n";
  for (const auto& p : family)
    for (const RatePoint& pt : {proposed_point(p), theorem1_point(p)}) {
      Rational M = pt.m_over_n * N;
      csv << pt.label << ',' << to_decimal_string(M) << ',' << to_decimal_string(pt.rate)
          << '\n';
      exact << pt.label << ',' << to_fraction_string(M) << ','
            << to_fraction_string(pt.rate) << '\n';
    }
  auto curve = sample_bound(N, family[0].Kp, bound_grid_points, bound_steps);
  for (const auto& [M, R] : curve.samples)
    csv << "bound," << to_decimal_string(M) << ',' << to_decimal_string(R) << '\n';
}

}  // namespace hotplug
