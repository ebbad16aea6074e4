// Command-line front end: construct, verify, simulate, sweep, bound, demo.
// Exit codes: 0 success, 1 verification/simulation failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hotplug/hotplug.hpp"

using namespace hotplug;

namespace {

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

// Decimal string -> exact rational, so "4.5" means exactly 9/2.
Rational parse_decimal(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  boost::multiprecision::cpp_int den = 1;
  for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  return Rational(boost::multiprecision::cpp_int(digits), den);
}

std::string params_line(const HpParams& p) {
  std::ostringstream out;
  out << p.K << ' ' << p.Kp << ' ' << p.F << ' ' << p.Fp << ' ' << p.Z << ' ' << p.Zp << ' '
      << p.S;
  return out.str();
}

void print_sim_report(const SimReport& rep, std::ostream& out) {
  for (const auto& u : rep.users)
    out << "user " << u.user << " demand " << u.demand << " "
        << (u.success ? "ok" : "FAIL") << " bytes " << u.bytes_compared << "\n";
  out << "rate=" << to_fraction_string(rep.rate) << "\n";
}

std::string transmissions_text(const std::vector<Transmission>& xs) {
  std::ostringstream out;
  for (const auto& x : xs) {
    out << "X_" << x.s << " =";
    for (size_t i = 0; i < x.terms.size(); ++i)
      out << (i ? " + " : " ") << "C_{" << x.terms[i].demand << "," << x.terms[i].f << "}";
    out << "\n";
  }
  return out.str();
}

void dump_transmissions(const std::vector<Transmission>& xs, const Field& field,
                        const std::string& path) {
  std::ostringstream out;
  const int sym_bytes = field.symbol_bytes();
  for (const auto& x : xs) {
    out << "X_" << x.s << " ";
    for (std::uint16_t sym : x.payload)
      for (int b = sym_bytes - 1; b >= 0; --b) {
        char buf[3];
        std::snprintf(buf, sizeof(buf), "%02x", (sym >> (8 * b)) & 0xFF);
        out << buf;
      }
    out << "\n";
  }
  write_file(path, out.str());
}

int run_exhaustive_simulation(const HpPda& h, int N, std::uint64_t seed) {
  const auto& p = h.params;
  bool all_ok = true;
  std::vector<std::vector<int>> taus;
  for_each_subset(p.K, p.Kp, [&](const std::vector<int>& tau) { taus.push_back(tau); });
  std::mt19937_64 rng(seed);
  for (const auto& tau : taus) {  // canonical order: sorted by tau
    std::vector<std::vector<int>> demand_sets;
    for (int i = 0; i < 1; ++i) {
      std::vector<int> d(p.Kp);
      for (int& x : d) x = 1 + static_cast<int>(rng() % N);
      demand_sets.push_back(d);
    }
    demand_sets.push_back(std::vector<int>(p.Kp, 1));
    if (N >= p.Kp) {
      std::vector<int> distinct(p.Kp);
      for (int i = 0; i < p.Kp; ++i) distinct[i] = i + 1;
      demand_sets.push_back(distinct);
    }
    for (const auto& demands : demand_sets) {
      auto rep = simulate(h, N, tau, demands, seed);
      if (!rep.all_success()) {
        all_ok = false;
        std::cout << "FAIL tau={";
        for (size_t i = 0; i < tau.size(); ++i) std::cout << (i ? "," : "") << tau[i];
        std::cout << "}\n";
      }
    }
  }
  std::cout << "rate=" << to_fraction_string(Rational(p.S, p.code_dim())) << "\n";
  return all_ok ? 0 : 1;
}

std::string demo_text() {
  std::ostringstream out;
  {
    auto h = man_hppda(6, 4, 2);
    out << "example 1: MAN HpPDA\n" << params_line(h.params) << "\n";
    out << "P\n" << serialize_pda(h.P) << "B\n" << serialize_pda(h.B);
    auto match = find_zeta(h, {1, 4, 5, 6});
    out << "tau = 1,4,5,6  zeta =";
    for (int z : match.zeta) out << ' ' << z;
    out << "\n";
    FileLibrary lib(h.params, random_files(6, 512, 1));
    auto xs = deliver(h, lib, match, {2, 3, 1, 5});
    out << transmissions_text(xs);
    auto rep = simulate(h, 6, {1, 4, 5, 6}, {2, 3, 1, 5}, 1);
    print_sim_report(rep, out);
  }
  {
    auto d = parse_design(read_file(std::string(HOTPLUG_DATA_DIR) + "/designs/3-8-4-1.txt"));
    auto h = tdesign_hppda(d, {1, 2});
    out << "example 2: HpPDA from the 3-(8,4,1) design\n" << params_line(h.params) << "\n";
    out << "P\n" << serialize_pda(h.P) << "B\n" << serialize_pda(h.B);
    auto match = find_zeta(h, {2, 6, 8});
    out << "tau = 2,6,8  zeta =";
    for (int z : match.zeta) out << ' ' << z;
    out << "\n";
    FileLibrary lib(h.params, random_files(6, 512, 2));
    auto xs = deliver(h, lib, match, {1, 3, 4});
    out << transmissions_text(xs);
    auto rep = simulate(h, 6, {2, 6, 8}, {1, 3, 4}, 2);
    print_sim_report(rep, out);
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hotplug coded caching: HpPDA construction, verification, simulation, analysis"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build an HpPDA bundle");
  construct->require_subcommand(1);
  int cK = 0, cKp = 0, cT = 0;
  std::string c_out, c_design, c_alist;
  auto* cman = construct->add_subcommand("man", "MAN HpPDA");
  cman->add_option("--K", cK, "total users")->required();
  cman->add_option("--Kp", cKp, "active users")->required();
  cman->add_option("--t", cT, "MAN parameter t")->required();
  cman->add_option("--out", c_out, "bundle output path");
  auto* ctd = construct->add_subcommand("tdesign", "HpPDA from a t-design");
  ctd->add_option("--design", c_design, "design file")->required();
  ctd->add_option("--a", c_alist, "comma-separated a_1..a_{t-1}")->required();
  ctd->add_option("--out", c_out, "bundle output path");

  // verify
  auto* verify = app.add_subcommand("verify", "check HpPDA conditions for a bundle");
  std::string v_bundle, v_mode = "auto";
  std::uint64_t v_count = 1000, v_seed = 0;
  verify->add_option("bundle", v_bundle, "bundle path")->required();
  verify->add_option("--mode", v_mode, "auto | exhaustive | sample")
      ->check(CLI::IsMember({"auto", "exhaustive", "sample"}));
  verify->add_option("--count", v_count, "sample count");
  verify->add_option("--seed", v_seed, "sample seed");

  // simulate
  auto* sim = app.add_subcommand("simulate", "run the scheme end to end");
  std::string s_bundle, s_tau, s_demands, s_dump;
  int s_N = 0;
  std::uint64_t s_seed = 0;
  bool s_exhaustive = false;
  sim->add_option("bundle", s_bundle, "bundle path")->required();
  sim->add_option("--N", s_N, "number of files")->required();
  sim->add_option("--tau", s_tau, "active users, comma-separated");
  sim->add_option("--demands", s_demands, "demands, comma-separated");
  sim->add_option("--seed", s_seed, "file-content seed");
  sim->add_flag("--exhaustive", s_exhaustive, "iterate all active sets");
  sim->add_option("--dump", s_dump, "write transmission payloads (hex) to this file");

  // sweep
  auto* sw = app.add_subcommand("sweep", "rate-memory CSV for a family of HpPDAs");
  std::vector<std::string> w_bundles;
  int w_manK = 0, w_manKp = 0, w_N = 0, w_grid = 101, w_steps = 1000;
  std::string w_out;
  sw->add_option("--bundle", w_bundles, "bundle path (repeatable)");
  sw->add_option("--man-K", w_manK, "MAN family: total users");
  sw->add_option("--man-Kp", w_manKp, "MAN family: active users (t runs over [K'])");
  sw->add_option("--N", w_N, "number of files")->required();
  sw->add_option("--out", w_out, "CSV output path")->required();
  sw->add_option("--grid", w_grid, "bound sample points");
  sw->add_option("--step", w_steps, "alpha grid resolution (1/step)");

  // bound
  auto* bd = app.add_subcommand("bound", "converse lower bound on the delivery rate");
  int b_N = 0, b_Kp = 0, b_steps = 1000, b_grid = 101;
  std::string b_M, b_out;
  bd->add_option("--N", b_N, "number of files")->required();
  bd->add_option("--Kp", b_Kp, "active users")->required();
  bd->add_option("--M", b_M, "memory point (decimal); prints a single value");
  bd->add_option("--out", b_out, "CSV path for a sampled curve");
  bd->add_option("--step", b_steps, "alpha grid resolution (1/step)");
  bd->add_option("--grid", b_grid, "curve sample points");

  // demo
  auto* demo = app.add_subcommand("demo", "replay both worked examples and diff against golden output");
  std::string d_golden = std::string(HOTPLUG_DATA_DIR) + "/golden/demo.txt";
  bool d_regen = false;
  demo->add_option("--golden", d_golden, "golden output path");
  demo->add_flag("--regen", d_regen, "rewrite the golden file instead of diffing");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      HpPda h;
      if (*cman) {
        if (cKp >= cK) {
          std::cerr << "K' must be less than K\n";
          return 2;
        }
        h = man_hppda(cK, cKp, cT);
      } else {
        h = tdesign_hppda(parse_design(read_file(c_design)), parse_int_list(c_alist));
      }
      std::cout << params_line(h.params) << "\n";
      if (!c_out.empty()) write_file(c_out, serialize_bundle(h));
      return 0;
    }

    if (*verify) {
      auto h = parse_bundle(read_file(v_bundle));
      VerifyMode mode = VerifyMode::Auto(h.params.K, h.params.Kp);
      if (v_mode == "exhaustive") mode = VerifyMode::Exhaustive();
      if (v_mode == "sample") mode = VerifyMode::Sample(v_count, v_seed);
      auto rep = verify_hppda(h, mode);
      if (rep.valid) {
        std::cout << "valid (" << rep.taus_checked << " active sets checked)\n";
        return 0;
      }
      std::cout << "invalid: " << rep.failure;
      if (!rep.witness_tau.empty()) {
        std::cout << " tau={";
        for (size_t i = 0; i < rep.witness_tau.size(); ++i)
          std::cout << (i ? "," : "") << rep.witness_tau[i];
        std::cout << "}";
      }
      std::cout << "\n";
      return 1;
    }

    if (*sim) {
      auto h = parse_bundle(read_file(s_bundle));
      if (s_N < 1) {
        std::cerr << "N must be positive\n";
        return 2;
      }
      if (s_exhaustive) return run_exhaustive_simulation(h, s_N, s_seed);
      auto tau = parse_int_list(s_tau);
      auto demands = parse_int_list(s_demands);
      for (int d : demands)
        if (d < 1 || d > s_N) {
          std::cerr << "demand out of range\n";
          return 2;
        }
      auto rep = simulate(h, s_N, tau, demands, s_seed);
      print_sim_report(rep, std::cout);
      if (!s_dump.empty()) {
        FileLibrary lib(h.params, random_files(s_N, 64 * h.params.code_dim(), s_seed));
        dump_transmissions(deliver(h, lib, tau, demands), lib.codec.field(), s_dump);
      }
      return rep.all_success() ? 0 : 1;
    }

    if (*sw) {
      std::vector<HpParams> family;
      for (const auto& path : w_bundles)
        family.push_back(parse_bundle(read_file(path)).params);
      if (w_manK > 0 || w_manKp > 0)
        for (int t = 1; t <= w_manKp; ++t) family.push_back(man_params(w_manK, w_manKp, t));
      sweep(family, w_N, w_out, w_grid, w_steps);
      std::cout << "wrote " << w_out << " and " << w_out << ".exact\n";
      return 0;
    }

    if (*bd) {
      if (!b_M.empty()) {
        std::cout << to_decimal_string(converse_bound(b_N, b_Kp, parse_decimal(b_M), b_steps))
                  << "\n";
      }
      if (!b_out.empty()) {
        auto curve = sample_bound(b_N, b_Kp, b_grid, b_steps);
        std::ostringstream csv;
        csv << "scheme,M,R\n";
        for (const auto& [M, R] : curve.samples)
          csv << "bound," << to_decimal_string(M) << ',' << to_decimal_string(R) << '\n';
        write_file(b_out, csv.str());
      }
      return 0;
    }

    if (*demo) {
      std::string text = demo_text();
      if (d_regen) {
        write_file(d_golden, text);
        std::cout << "wrote " << d_golden << "\n";
        return 0;
      }
      std::string golden = read_file(d_golden);
      if (text == golden) {
        std::cout << "demo matches golden output\n";
        return 0;
      }
      std::cout << "demo DIFFERS from golden output\n" << text;
      return 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
