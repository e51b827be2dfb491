#include <sstream>
#include <string>
#include <vector>

#include <boost/crc.hpp>

#include "commands.hpp"
#include "decompose_input.hpp"
#include "fixtures.hpp"
#include "resint/bundles.hpp"

namespace resint::cli {

namespace {

struct Check {
  std::string name;
  std::function<std::string()> actual;
  std::string expected;
};

std::string degrees(const LimitReport& r) {
  std::ostringstream out;
  for (const auto& p : r.pieces) {
    out << *p.main_degree << "," << *p.adjunct_degree << "," << *p.total_degree << ";";
  }
  out << *r.ambient_degree << (r.conserved ? "" : "!");
  return out.str();
}

std::string limit(int r, int n, int d, Piece a, Piece b) {
  return degrees(decompose_degeneration(DegenerationSpec(GrassContext(r, n), d, a, b)));
}

std::string fixture(const char* input, bool standard) {
  RingLibrary library;
  std::istringstream rings(fixtures::kRings);
  load_struct_rings(rings, library);
  std::istringstream in(input);
  const auto data = read_decompose_input(in, library);
  const auto dec = run_decomposition(data, standard);
  const StructRing& ring = result_ring(data);
  std::string out;
  for (const auto& c : dec.components) out += ring.format(c.total) + ";";
  return out + (dec.conserved ? "" : "!");
}

std::vector<Check> golden_checks() {
  std::vector<Check> checks;
  const GrassContext lines_p3(1, 3);
  const auto sym3 = sym_power(dual_tautological(lines_p3), 3);
  for (int i = 1; i <= 4; ++i) {
    static const char* expected[] = {"", "6*x", "11*x^2 + 10*y", "6*x^3 + 30*x*y", "18*x^2*y + 9*y^2"};
    checks.push_back({"c" + std::to_string(i) + "(Sym^3 U*)", [sym3, i] { return chern(sym3, i).to_string(); },
                      expected[i]});
  }
  const auto u = dual_tautological(lines_p3);
  checks.push_back({"s1(U*)", [u] { return segre(u, 1).to_string(); }, "-x"});
  checks.push_back({"s2(U*)", [u] { return segre(u, 2).to_string(); }, "x^2 - y"});
  checks.push_back({"cubic X_1 + X_1^2", [] {
                      const auto r = decompose_degeneration(
                          DegenerationSpec(GrassContext(1, 3), 3, Piece{1, 1}, Piece{1, 2}));
                      return r.pieces[0].total.to_string() + ";" + r.pieces[1].total.to_string() + ";" + degrees(r);
                    },
                    "6*x^2*y - 3*y^2;12*x^2*y + 12*y^2;15,-12,3;36,-12,24;27"});
  checks.push_back({"quintic lines", [] { return integrate(GrassContext(1, 4), fano_class(GrassContext(1, 4), 5)).str(); },
                    "2875"});
  const std::vector<std::tuple<Piece, Piece, std::string>> quintic{
      {{1, 4}, {1, 1}, "2400,320,2720;1275,-1120,155;2875"},
      {{1, 3}, {2, 1}, "3195,-540,2655;1300,-1080,220;2875"},
      {{1, 3}, {1, 2}, "3195,-1080,2115;2920,-2160,760;2875"},
      {{1, 2}, {3, 1}, "2920,-540,2380;1575,-1080,495;2875"},
      {{2, 2}, {1, 1}, "2880,-640,2240;1275,-640,635;2875"},
  };
  for (const auto& [a, b, want] : quintic) {
    checks.push_back({"quintic " + a.to_string() + " + " + b.to_string(), [a, b] { return limit(1, 4, 5, a, b); }, want});
  }
  checks.push_back({"quartic planes", [] { return integrate(GrassContext(2, 7), fano_class(GrassContext(2, 7), 4)).str(); },
                    "3297280"});
  const std::vector<std::tuple<Piece, Piece, std::string>> quartic{
      {{3, 1}, {1, 1}, "3304098,-2820258,483840;3656569,-843129,2813440;3297280"},
      {{2, 1}, {2, 1}, "3087616,-1438976,1648640;3087616,-1438976,1648640;3297280"},
      {{1, 3}, {1, 1}, "-20855205,24000165,3144960;3656569,-3504249,152320;3297280"},
      {{1, 2}, {1, 2}, "2645888,-997248,1648640;2645888,-997248,1648640;3297280"},
      {{1, 2}, {2, 1}, "2645888,561792,3207680;3087616,-2998016,89600;3297280"},
  };
  for (const auto& [a, b, want] : quartic) {
    checks.push_back({"quartic " + a.to_string() + " + " + b.to_string(), [a, b] { return limit(2, 7, 4, a, b); }, want});
  }
  for (auto [r, n] : {std::pair{1, 3}, std::pair{1, 4}, std::pair{2, 5}}) {
    for (const auto& c : identity_grid(GrassContext(r, n), 4)) {
      checks.push_back({"identity G(" + std::to_string(r) + "," + std::to_string(n) + ") k=" + std::to_string(c.k()) +
                            " l=" + std::to_string(c.l()),
                        [c] { return verify_identity(c).residual_class.to_string(); }, "0"});
    }
  }
  checks.push_back({"blow-up, p first", [] { return fixture(fixtures::kPointFirst, false); }, "2*p;2*p;"});
  checks.push_back({"blow-up, R(p) first", [] { return fixture(fixtures::kResidualFirst, false); }, "4*p;0;"});
  checks.push_back({"blow-up, standard split", [] { return fixture(fixtures::kPointFirst, true); }, "p;3*p;"});
  checks.push_back({"blow-up, symmetric form", [] { return fixture(fixtures::kSymmetric, false); }, "2*p;2*p;"});
  return checks;
}

}  // namespace

CommandResult run_selftest(unsigned threads) {
  const auto checks = golden_checks();
  const auto actual = parallel_map<std::string>(checks.size(), threads, [&](std::size_t i) {
    try {
      return checks[i].actual();
    } catch (const std::exception& e) {
      return std::string("error: ") + e.what();
    }
  });
  boost::crc_32_type crc;
  std::ostringstream out;
  std::size_t passed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string line = checks[i].name + "=" + actual[i] + "\n";
    crc.process_bytes(line.data(), line.size());
    if (actual[i] == checks[i].expected) {
      ++passed;
    } else {
      out << "FAIL " << checks[i].name << ": got " << actual[i] << ", expected " << checks[i].expected << "\n";
    }
  }
  std::ostringstream digest;
  digest << std::hex << std::setfill('0') << std::setw(8) << crc.checksum();
  out << "selftest: " << passed << "/" << checks.size() << " golden checks passed, digest " << digest.str() << "\n";
  return {out.str(), passed == checks.size() ? 0 : 1};
}

}  // namespace resint::cli
