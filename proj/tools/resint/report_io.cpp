#include "report_io.hpp"

#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>

#include "resint/errors.hpp"

namespace resint::cli {

Format parse_format(const std::string& text) {
  if (text == "table") return Format::table;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw ValidationError("unknown output format '" + text + "' (expected table, json or csv)");
}

nlohmann::ordered_json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

Integer integer_from_json(const nlohmann::ordered_json& value) {
  if (value.is_number_integer()) return Integer(value.get<std::int64_t>());
  if (value.is_string()) return parse_integer(value.get<std::string>());
  throw ParseError("expected an integer, got " + value.dump());
}

nlohmann::ordered_json degree_to_json(const std::optional<Integer>& value) {
  return value ? integer_to_json(*value) : nlohmann::ordered_json(nullptr);
}

std::optional<Integer> degree_from_json(const nlohmann::ordered_json& value) {
  if (value.is_null()) return std::nullopt;
  return integer_from_json(value);
}

std::string degree_cell(const std::optional<Integer>& value) {
  return value ? group_thousands(*value) : std::string("-");
}

nlohmann::ordered_json report_to_json(const LimitReport& report) {
  nlohmann::ordered_json pieces = nlohmann::ordered_json::array();
  for (const auto& p : report.pieces) {
    pieces.push_back({{"k", p.piece.degree},
                      {"e", p.piece.multiplicity},
                      {"main_class", p.main.to_string()},
                      {"main_degree", degree_to_json(p.main_degree)},
                      {"adjunct_class", p.adjunct.to_string()},
                      {"adjunct_degree", degree_to_json(p.adjunct_degree)},
                      {"total_degree", degree_to_json(p.total_degree)}});
  }
  nlohmann::ordered_json out{{"context", {{"r", report.r}, {"n", report.n}, {"d", report.d}}},
                     {"pieces", std::move(pieces)},
                     {"ambient", {{"class", report.ambient.to_string()},
                                  {"degree", degree_to_json(report.ambient_degree)}}},
                     {"conserved", report.conserved}};
  if (report.pairing) out["pairing"] = report.pairing->to_string();
  return out;
}

LimitReport report_from_json(const nlohmann::ordered_json& json) {
  try {
    const auto& c = json.at("context");
    const GrassContext ctx(c.at("r").get<int>(), c.at("n").get<int>());
    const auto& pj = json.at("pieces");
    if (!pj.is_array() || pj.size() != 2) throw ParseError("report needs exactly two pieces");
    auto piece = [&](const nlohmann::ordered_json& j) {
      PieceReport p{Piece{j.at("k").get<int>(), j.at("e").get<int>()},
                    parse_poly(ctx.spec(), j.at("main_class").get<std::string>()),
                    parse_poly(ctx.spec(), j.at("adjunct_class").get<std::string>()),
                    GradedPoly(ctx.spec()),
                    degree_from_json(j.at("main_degree")),
                    degree_from_json(j.at("adjunct_degree")),
                    degree_from_json(j.at("total_degree"))};
      p.total = p.main + p.adjunct;
      return p;
    };
    LimitReport out{ctx.r(),
                    ctx.n(),
                    c.at("d").get<int>(),
                    {piece(pj[0]), piece(pj[1])},
                    parse_poly(ctx.spec(), json.at("ambient").at("class").get<std::string>()),
                    degree_from_json(json.at("ambient").at("degree")),
                    std::nullopt,
                    json.at("conserved").get<bool>()};
    if (json.contains("pairing")) out.pairing = Partition::parse(json.at("pairing").get<std::string>());
    return out;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string report_table(const LimitReport& report, bool show_classes) {
  std::ostringstream out;
  out << "G(" << report.r << "," << report.n << "), d = " << report.d << ": "
      << report.pieces[0].piece.to_string() << " + " << report.pieces[1].piece.to_string();
  if (report.pairing) out << ", paired with sigma" << report.pairing->to_string();
  out << "\n";
  bool missing = !report.ambient_degree;
  out << std::left << std::setw(10) << "piece" << std::right << std::setw(16) << "main" << std::setw(16)
      << "adjunct" << std::setw(16) << "total" << "\n";
  for (const auto& p : report.pieces) {
    missing = missing || !p.total_degree;
    out << std::left << std::setw(10) << p.piece.to_string() << std::right << std::setw(16)
        << degree_cell(p.main_degree) << std::setw(16) << degree_cell(p.adjunct_degree) << std::setw(16)
        << degree_cell(p.total_degree) << "\n";
  }
  out << std::left << std::setw(10) << "ambient" << std::right << std::setw(48)
      << degree_cell(report.ambient_degree) << "\n";
  if (show_classes || missing) {
    for (const auto& p : report.pieces) {
      out << p.piece.to_string() << " main:    " << p.main.to_string() << "\n"
          << p.piece.to_string() << " adjunct: " << p.adjunct.to_string() << "\n"
          << p.piece.to_string() << " total:   " << p.total.to_string() << "\n";
    }
    out << "ambient: " << report.ambient.to_string() << "\n";
  }
  out << "conserved: " << (report.conserved ? "yes" : "NO") << "\n";
  return out.str();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\" ") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string report_csv_header() {
  return "r,n,d,piece,k,e,main_degree,adjunct_degree,total_degree,main_class,adjunct_class,total_class,"
         "conserved\n";
}

std::string report_csv_rows(const LimitReport& report) {
  auto deg = [](const std::optional<Integer>& v) { return v ? v->str() : std::string(); };
  std::ostringstream out;
  const std::string prefix =
      std::to_string(report.r) + "," + std::to_string(report.n) + "," + std::to_string(report.d) + ",";
  const std::string conserved = report.conserved ? "true" : "false";
  for (const auto& p : report.pieces) {
    out << prefix << p.piece.to_string() << "," << p.piece.degree << "," << p.piece.multiplicity << ","
        << deg(p.main_degree) << "," << deg(p.adjunct_degree) << "," << deg(p.total_degree) << ","
        << csv_field(p.main.to_string()) << "," << csv_field(p.adjunct.to_string()) << ","
        << csv_field(p.total.to_string()) << "," << conserved << "\n";
  }
  out << prefix << "ambient,,,,," << deg(report.ambient_degree) << ",,," << csv_field(report.ambient.to_string())
      << "," << conserved << "\n";
  return out.str();
}

nlohmann::ordered_json fano_to_json(const GrassContext& ctx, int d, const GradedPoly& cls,
                            const std::optional<Integer>& degree) {
  return {{"context", {{"r", ctx.r()}, {"n", ctx.n()}, {"d", d}}},
          {"rank", integer_to_json(rank_sym(ctx.r(), d))},
          {"dim", ctx.dim()},
          {"class", cls.to_string()},
          {"degree", degree_to_json(degree)}};
}

}  // namespace resint::cli
