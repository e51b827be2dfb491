#include "decompose_input.hpp"

#include <algorithm>
#include <cctype>

#include "resint/errors.hpp"

namespace resint::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_small(const std::string& value, const std::string& key, std::size_t line) {
  if (value.empty() || value.size() > 4 ||
      !std::all_of(value.begin(), value.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(key + " must be a small non-negative integer, got '" + value + "'", line);
  }
  return std::stoi(value);
}

const std::vector<std::string> kClassKeys{"divisor", "segre_D", "segre_R", "segre_W", "E1", "E2"};

}  // namespace

DecomposeInput read_decompose_input(std::istream& in, const RingLibrary& library) {
  std::map<std::string, std::pair<std::string, std::size_t>> raw;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    text = trim(text);
    if (text.empty()) continue;
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
    std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    if (key.empty()) throw ParseError("missing key before '='", line);
    if (!raw.emplace(key, std::pair{value, line}).second) throw ParseError("duplicate key '" + key + "'", line);
  }

  auto take = [&](const std::string& key) -> std::pair<std::string, std::size_t> {
    auto it = raw.find(key);
    if (it == raw.end()) throw ValidationError("decomposition input: missing key '" + key + "'");
    return it->second;
  };

  for (const auto& [key, value] : raw) {
    static const std::vector<std::string> known{"ring", "d", "k", "cN", "method", "labels"};
    if (std::find(known.begin(), known.end(), key) == known.end() &&
        std::find(kClassKeys.begin(), kClassKeys.end(), key) == kClassKeys.end()) {
      throw ParseError("unknown key '" + key + "'", value.second);
    }
  }

  DecomposeInput out;
  out.ring = library.find(take("ring").first);
  {
    auto [v, l] = take("d");
    out.d = parse_small(v, "d", l);
  }
  {
    auto [v, l] = take("k");
    out.k = parse_small(v, "k", l);
  }
  {
    auto [v, l] = take("cN");
    out.cN = out.ring->parse(v, l);
  }
  if (auto it = raw.find("method"); it != raw.end()) {
    const auto& [v, l] = it->second;
    if (v == "divisor") {
      out.method = Method::divisor;
    } else if (v == "symmetric") {
      out.method = Method::symmetric;
    } else {
      throw ParseError("unknown method '" + v + "' (expected divisor or symmetric)", l);
    }
  }
  if (auto it = raw.find("labels"); it != raw.end()) {
    std::string item;
    for (char c : it->second.first + ",") {
      if (c == ',') {
        item = trim(item);
        if (item.empty()) throw ParseError("empty label", it->second.second);
        out.labels.push_back(item);
        item.clear();
      } else {
        item += c;
      }
    }
    if (out.labels.size() != 2) throw ParseError("expected two labels", it->second.second);
  } else {
    out.labels = out.method == Method::divisor ? std::vector<std::string>{"D", "R"}
                                               : std::vector<std::string>{"Z1", "Z2"};
  }
  for (const auto& key : kClassKeys) {
    if (auto it = raw.find(key); it != raw.end()) out.classes.emplace(key, out.ring->parse(it->second.first, it->second.second));
  }
  const std::vector<std::string> needed = out.method == Method::divisor
                                              ? std::vector<std::string>{"divisor", "segre_D", "segre_R"}
                                              : std::vector<std::string>{"E1", "E2"};
  for (const auto& key : needed) {
    if (!out.classes.contains(key)) throw ValidationError("decomposition input: missing key '" + key + "'");
  }
  return out;
}

const StructRing& result_ring(const DecomposeInput& input) {
  return input.ring->has_pushforward() ? input.ring->pushforward_target() : *input.ring;
}

Decomposition<StructElement> run_decomposition(const DecomposeInput& input, bool standard) {
  const StructRing& ring = *input.ring;
  const IntersectionSetup<StructRing> setup(ring, input.cN, input.d, input.k);
  auto segre = [&](const std::string& key) { return SegreData<StructElement>{input.classes.at(key)}; };

  Decomposition<StructElement> dec;
  if (input.method == Method::symmetric) {
    if (standard) throw ValidationError("the standard split needs a divisor-method input");
    dec = symmetric_decompose(setup, input.classes.at("E1"), input.classes.at("E2"), input.labels[0],
                              input.labels[1]);
  } else {
    std::optional<SegreData<StructElement>> sW;
    if (input.classes.contains("segre_W")) sW = segre("segre_W");
    if (standard) {
      if (!sW) throw ValidationError("the standard split needs segre_W");
      dec = standard_decompose(setup, segre("segre_D"), *sW, input.labels[0], input.labels[1]);
    } else {
      dec = divisor_decompose(setup, segre("segre_D"), input.classes.at("divisor"), segre("segre_R"), sW,
                              input.labels[0], input.labels[1]);
    }
    if (ring.has_pushforward()) dec = push_forward(ring, dec);
  }
  const StructRing& target = result_ring(input);
  if (target.top_degree() == input.d && !dec.ambient_degree) attach_degrees(target, dec);
  return dec;
}

}  // namespace resint::cli
