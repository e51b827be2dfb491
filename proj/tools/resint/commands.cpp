#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "decompose_input.hpp"
#include "resint/bundles.hpp"
#include "resint/errors.hpp"

namespace resint::cli {

unsigned threads_from_env() {
  if (const char* env = std::getenv("RESINT_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) {
      throw ValidationError("RESINT_THREADS must be an integer between 1 and 1024, got '" + std::string(env) + "'");
    }
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void validate(const RunConfig& c) {
  const std::string& s = c.subcommand;
  if (s == "fano" || s == "degenerate" || s == "verify") {
    GrassContext(c.r, c.n);
  }
  if (s == "fano" || s == "degenerate") {
    if (c.d < 1) throw ValidationError("--d must be >= 1");
  }
  if (s == "degenerate") {
    if (c.all == !c.pieces.empty()) throw ValidationError("give either two --piece options or --all");
    if (!c.all && c.pieces.size() != 2) throw ValidationError("exactly two --piece options are needed");
    if (c.all && c.d < 2) throw ValidationError("--all needs d >= 2");
  }
  if (s == "verify" && c.dmax < 2) throw ValidationError("--dmax must be >= 2");
  if (s == "decompose" && !c.input_file) throw ValidationError("decompose needs --input");
  if (c.pairing && !(s == "fano" || s == "degenerate")) {
    throw ValidationError("--pair only applies to fano and degenerate");
  }
}

CommandResult cmd_fano(const RunConfig& c) {
  validate(c);
  const GrassContext ctx(c.r, c.n);
  const GradedPoly cls = fano_class(ctx, c.d);
  const Integer rank = rank_sym(c.r, c.d);
  const int codim = rank > ctx.dim() ? ctx.dim() + 1 : static_cast<int>(rank);
  const auto degree = class_degree(ctx, cls, codim, c.pairing);

  std::ostringstream out;
  switch (c.format) {
    case Format::json: {
      auto j = fano_to_json(ctx, c.d, cls, degree);
      if (c.pairing) j["pairing"] = c.pairing->to_string();
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "r,n,d,rank,dim,degree,class\n"
          << c.r << "," << c.n << "," << c.d << "," << rank << "," << ctx.dim() << ","
          << (degree ? degree->str() : "") << "," << csv_field(cls.to_string()) << "\n";
      break;
    case Format::table:
      out << "G(" << c.r << "," << c.n << "), d = " << c.d << ": class of c_" << rank << "(Sym^" << c.d
          << " U*)\n"
          << "class:  " << cls.to_string() << "\n"
          << "degree: ";
      if (degree) {
        out << group_thousands(*degree);
        if (c.pairing) out << " (paired with sigma" << c.pairing->to_string() << ")";
      } else {
        out << "- (r_d = " << rank << " < dim G = " << ctx.dim() << "; use --pair for a degree)";
      }
      out << "\n";
      break;
  }
  return {out.str(), 0};
}

CommandResult cmd_degenerate(const RunConfig& c) {
  validate(c);
  const GrassContext ctx(c.r, c.n);
  std::vector<std::pair<Piece, Piece>> cases;
  if (c.all) {
    for (const auto& pair : enumerate_degenerations(c.d)) {
      if (c.non_reduced_only && pair.first.multiplicity == 1 && pair.second.multiplicity == 1) continue;
      cases.push_back(pair);
    }
  } else {
    cases.emplace_back(c.pieces[0], c.pieces[1]);
  }
  std::vector<DegenerationSpec> specs;
  for (const auto& [a, b] : cases) specs.emplace_back(ctx, c.d, a, b);

  const auto reports = parallel_map<LimitReport>(specs.size(), c.threads, [&](std::size_t i) {
    return decompose_degeneration(specs[i], c.pairing);
  });

  int exit_code = 0;
  std::ostringstream out;
  if (c.format == Format::csv) out << report_csv_header();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& rep = reports[i];
    if (!rep.conserved) exit_code = 1;
    switch (c.format) {
      case Format::table:
        if (i) out << "\n";
        out << report_table(rep, c.show_classes);
        break;
      case Format::csv:
        out << report_csv_rows(rep);
        break;
      case Format::json:
        arr.push_back(report_to_json(rep));
        break;
    }
  }
  if (c.format == Format::json) out << (c.all ? arr : arr[0]).dump(2) << "\n";
  return {out.str(), exit_code};
}

CommandResult cmd_verify(const RunConfig& c) {
  validate(c);
  const GrassContext ctx(c.r, c.n);
  const auto grid = identity_grid(ctx, c.dmax);
  const auto results = parallel_map<IdentityResult>(grid.size(), c.threads, [&](std::size_t i) {
    return verify_identity(grid[i], c.fault);
  });

  std::size_t passed = 0;
  for (const auto& r : results) passed += r.holds() ? 1 : 0;
  const char* fault = c.fault == Mutation::shifted_binomial       ? "shifted binomial"
                      : c.fault == Mutation::dropped_cancellation ? "dropped cancellation"
                                                                  : nullptr;
  std::ostringstream out;
  switch (c.format) {
    case Format::json: {
      nlohmann::ordered_json cases = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < grid.size(); ++i) {
        cases.push_back({{"k", grid[i].k()},
                         {"l", grid[i].l()},
                         {"d", grid[i].d()},
                         {"holds", results[i].holds()},
                         {"residual", results[i].residual.to_string()},
                         {"residual_class", results[i].residual_class.to_string()}});
      }
      out << nlohmann::ordered_json{{"context", {{"r", c.r}, {"n", c.n}}},
                            {"dmax", c.dmax},
                            {"fault", fault ? nlohmann::ordered_json(fault) : nlohmann::ordered_json(nullptr)},
                            {"cases", std::move(cases)},
                            {"passed", passed},
                            {"total", grid.size()}}
                 .dump(2)
          << "\n";
      break;
    }
    case Format::csv:
      out << "r,n,k,l,d,holds,residual\n";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        out << c.r << "," << c.n << "," << grid[i].k() << "," << grid[i].l() << "," << grid[i].d() << ","
            << (results[i].holds() ? "true" : "false") << "," << csv_field(results[i].residual.to_string())
            << "\n";
      }
      break;
    case Format::table:
      out << "G(" << c.r << "," << c.n << "), identity grid k + l <= " << c.dmax;
      if (fault) out << ", fault injected: " << fault;
      out << "\n";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        out << "k=" << grid[i].k() << " l=" << grid[i].l() << " d=" << grid[i].d() << "  "
            << (results[i].holds() ? "PASS" : "FAIL") << "\n";
        if (!results[i].holds()) {
          out << "  residual: " << results[i].residual.to_string() << "\n"
              << "  schubert: " << results[i].residual_class.to_string() << "\n";
        }
      }
      out << passed << "/" << grid.size() << " identities hold\n";
      break;
  }
  return {out.str(), passed == grid.size() ? 0 : 1};
}

CommandResult cmd_decompose(const RunConfig& c) {
  validate(c);
  RingLibrary library;
  if (c.ring_file) {
    std::ifstream in(*c.ring_file);
    if (!in) throw ValidationError("cannot open ring file '" + *c.ring_file + "'");
    load_struct_rings(in, library);
  }
  std::ifstream in(*c.input_file);
  if (!in) throw ValidationError("cannot open input file '" + *c.input_file + "'");
  const DecomposeInput input = read_decompose_input(in, library);
  const auto dec = run_decomposition(input, c.standard);
  const StructRing& ring = result_ring(input);
  const std::string method = c.standard ? "standard" : input.method == Method::divisor ? "divisor" : "symmetric";

  std::ostringstream out;
  switch (c.format) {
    case Format::json: {
      nlohmann::ordered_json comps = nlohmann::ordered_json::array();
      for (const auto& p : dec.components) {
        comps.push_back({{"label", p.label},
                         {"main_class", ring.format(p.main)},
                         {"main_degree", degree_to_json(p.main_degree)},
                         {"adjunct_class", ring.format(p.adjunct)},
                         {"adjunct_degree", degree_to_json(p.adjunct_degree)},
                         {"total_class", ring.format(p.total)},
                         {"total_degree", degree_to_json(p.total_degree)}});
      }
      out << nlohmann::ordered_json{{"ring", input.ring->name()},
                            {"result_ring", ring.name()},
                            {"method", method},
                            {"d", input.d},
                            {"components", std::move(comps)},
                            {"ambient", {{"class", ring.format(dec.ambient)},
                                         {"degree", degree_to_json(dec.ambient_degree)}}},
                            {"conserved", dec.conserved}}
                 .dump(2)
          << "\n";
      break;
    }
    case Format::csv: {
      auto deg = [](const std::optional<Integer>& v) { return v ? v->str() : std::string(); };
      out << "label,main_class,adjunct_class,total_class,main_degree,adjunct_degree,total_degree\n";
      for (const auto& p : dec.components) {
        out << csv_field(p.label) << "," << csv_field(ring.format(p.main)) << ","
            << csv_field(ring.format(p.adjunct)) << "," << csv_field(ring.format(p.total)) << ","
            << deg(p.main_degree) << "," << deg(p.adjunct_degree) << "," << deg(p.total_degree) << "\n";
      }
      out << "ambient,,," << csv_field(ring.format(dec.ambient)) << ",,," << deg(dec.ambient_degree) << "\n";
      break;
    }
    case Format::table: {
      out << "ring " << input.ring->name();
      if (&ring != input.ring.get()) out << " -> " << ring.name();
      out << ", method " << method << ", d = " << input.d << "\n";
      out << std::left << std::setw(12) << "component" << std::setw(14) << "main" << std::setw(14) << "adjunct"
          << std::setw(14) << "total" << "degree\n";
      for (const auto& p : dec.components) {
        out << std::setw(12) << p.label << std::setw(14) << ring.format(p.main) << std::setw(14)
            << ring.format(p.adjunct) << std::setw(14) << ring.format(p.total) << degree_cell(p.total_degree)
            << "\n";
      }
      out << std::setw(12) << "ambient" << std::setw(42) << "" << std::setw(0);
      out << ring.format(dec.ambient) << " (degree " << degree_cell(dec.ambient_degree) << ")\n";
      out << "conserved: " << (dec.conserved ? "yes" : "NO") << "\n";
      break;
    }
  }
  return {out.str(), dec.conserved ? 0 : 1};
}

CommandResult run_config(const RunConfig& c) {
  if (c.subcommand == "fano") return cmd_fano(c);
  if (c.subcommand == "degenerate") return cmd_degenerate(c);
  if (c.subcommand == "verify") return cmd_verify(c);
  if (c.subcommand == "decompose") return cmd_decompose(c);
  if (c.subcommand == "selftest") return run_selftest(c.threads);
  throw ValidationError("unknown subcommand '" + c.subcommand + "'");
}

}  // namespace resint::cli
