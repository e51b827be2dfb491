#include "resint/struct_ring.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>
#include <sstream>

#include "resint/errors.hpp"
#include "resint/expression.hpp"

namespace resint {

StructRing::StructRing(std::string name, std::vector<Basis> basis,
                       const std::vector<Product>& products, std::vector<Integer> integral,
                       std::optional<Pushforward> pushforward)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      integral_(std::move(integral)),
      pushforward_(std::move(pushforward)) {
  const std::size_t n = basis_.size();
  if (n == 0) throw ValidationError("ring " + name_ + ": empty basis");
  std::size_t units = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (basis_[i].degree < 0) throw ValidationError("ring " + name_ + ": negative degree");
    if (basis_[i].degree == 0) {
      unit_ = i;
      ++units;
    }
    top_degree_ = std::max(top_degree_, basis_[i].degree);
    for (std::size_t j = 0; j < i; ++j) {
      if (basis_[i].label == basis_[j].label) {
        throw ValidationError("ring " + name_ + ": duplicate label '" + basis_[i].label + "'");
      }
    }
  }
  if (units != 1) throw ValidationError("ring " + name_ + ": need exactly one degree-0 basis element");
  if (integral_.size() != n) throw ValidationError("ring " + name_ + ": integral has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    if (integral_[i] != 0 && basis_[i].degree != top_degree_) {
      throw ValidationError("ring " + name_ + ": integral of '" + basis_[i].label +
                            "' must vanish outside the top degree");
    }
  }

  table_.assign(n, std::vector<Element>(n, zero()));
  std::vector<std::vector<bool>> set(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    table_[unit_][i] = basis_element(i);
    table_[i][unit_] = basis_element(i);
    set[unit_][i] = set[i][unit_] = true;
  }
  for (const auto& p : products) {
    if (p.left >= n || p.right >= n) throw ValidationError("ring " + name_ + ": product index out of range");
    require(p.value, "product");
    const std::string what = basis_[p.left].label + "*" + basis_[p.right].label;
    const int degree = basis_[p.left].degree + basis_[p.right].degree;
    for (std::size_t t = 0; t < n; ++t) {
      if (p.value.coeffs[t] != 0 && basis_[t].degree != degree) {
        throw ValidationError("ring " + name_ + ": " + what + " is not homogeneous of degree " +
                              std::to_string(degree));
      }
    }
    for (auto [a, b] : {std::pair{p.left, p.right}, std::pair{p.right, p.left}}) {
      if (set[a][b] && table_[a][b] != p.value) {
        throw ValidationError("ring " + name_ + ": conflicting values for " + what +
                              " (table must be commutative)");
      }
      table_[a][b] = p.value;
      set[a][b] = true;
    }
  }

  if (pushforward_) {
    if (!pushforward_->target) throw ValidationError("ring " + name_ + ": push-forward without target");
    const StructRing& target = *pushforward_->target;
    if (pushforward_->images.size() != n) {
      throw ValidationError("ring " + name_ + ": push-forward needs an image for every basis element");
    }
    const int shift = top_degree_ - target.top_degree();
    for (std::size_t i = 0; i < n; ++i) {
      const Element& img = pushforward_->images[i];
      if (img.coeffs.size() != target.size()) {
        throw ValidationError("ring " + name_ + ": push-forward image has wrong length");
      }
      for (std::size_t t = 0; t < target.size(); ++t) {
        if (img.coeffs[t] != 0 && target.basis()[t].degree != basis_[i].degree - shift) {
          throw ValidationError("ring " + name_ + ": push-forward of '" + basis_[i].label +
                                "' does not preserve dimension");
        }
      }
    }
  }
  check_table();
}

void StructRing::check_table() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] != table_[b][a]) {
        throw ValidationError("ring " + name_ + ": table is not commutative");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(table_[a][b], basis_element(c)) != mul(basis_element(a), table_[b][c])) {
          throw ValidationError("ring " + name_ + ": table is not associative at (" +
                                basis_[a].label + ", " + basis_[b].label + ", " +
                                basis_[c].label + ")");
        }
      }
    }
  }
}

std::size_t StructRing::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].label == label) return i;
  }
  throw ParseError("ring " + name_ + " has no basis element '" + std::string(label) + "'");
}

const StructRing& StructRing::pushforward_target() const {
  if (!pushforward_) throw UnsupportedOperation("ring " + name_ + " has no push-forward");
  return *pushforward_->target;
}

void StructRing::require(const Element& a, const char* op) const {
  if (a.coeffs.size() != basis_.size()) {
    throw ContextMismatch(std::string(op) + ": element is not over ring " + name_);
  }
}

StructElement StructRing::zero() const { return Element{std::vector<Integer>(basis_.size())}; }

StructElement StructRing::one() const { return basis_element(unit_); }

StructElement StructRing::basis_element(std::size_t i, const Integer& c) const {
  Element e = zero();
  e.coeffs.at(i) = c;
  return e;
}

StructElement StructRing::element(std::string_view label, const Integer& c) const {
  return basis_element(index_of(label), c);
}

StructElement StructRing::add(const Element& a, const Element& b) const {
  require(a, "add");
  require(b, "add");
  Element out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

StructElement StructRing::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

StructElement StructRing::neg(const Element& a) const { return scale(a, -1); }

StructElement StructRing::scale(const Element& a, const Integer& c) const {
  require(a, "scale");
  Element out = a;
  for (auto& v : out.coeffs) v *= c;
  return out;
}

StructElement StructRing::mul(const Element& a, const Element& b) const {
  require(a, "struct_mul");
  require(b, "struct_mul");
  const std::size_t n = size();
  Element out = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs[j] == 0) continue;
      const Integer c = a.coeffs[i] * b.coeffs[j];
      const Element& t = table_[i][j];
      for (std::size_t s = 0; s < n; ++s) {
        if (t.coeffs[s] != 0) out.coeffs[s] += c * t.coeffs[s];
      }
    }
  }
  return out;
}

StructElement StructRing::pow(const Element& a, unsigned e) const {
  Element out = one();
  for (unsigned i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

StructElement StructRing::component(const Element& a, int degree) const {
  require(a, "component");
  Element out = zero();
  for (std::size_t i = 0; i < size(); ++i) {
    if (basis_[i].degree == degree) out.coeffs[i] = a.coeffs[i];
  }
  return out;
}

StructElement StructRing::inverse(const Element& a) const {
  require(a, "inverse");
  if (a.coeffs[unit_] != 1) {
    throw NonUnitError("ring " + name_ + ": constant term is " + a.coeffs[unit_].str() +
                       ", expected 1");
  }
  std::vector<Element> parts;
  for (int t = 0; t <= top_degree_; ++t) parts.push_back(component(a, t));
  std::vector<Element> inv{one()};
  for (int t = 1; t <= top_degree_; ++t) {
    Element acc = zero();
    for (int j = 1; j <= t; ++j) acc = add(acc, mul(parts[j], inv[t - j]));
    inv.push_back(neg(acc));
  }
  Element out = zero();
  for (const auto& p : inv) out = add(out, p);
  return out;
}

Integer StructRing::integrate(const Element& a) const {
  require(a, "struct_integrate");
  Integer total = 0;
  for (std::size_t i = 0; i < size(); ++i) total += a.coeffs[i] * integral_[i];
  return total;
}

StructElement StructRing::pushforward(const Element& a) const {
  require(a, "struct_pushforward");
  const StructRing& target = pushforward_target();
  Element out = target.zero();
  for (std::size_t i = 0; i < size(); ++i) {
    if (a.coeffs[i] != 0) out = target.add(out, target.scale(pushforward_->images[i], a.coeffs[i]));
  }
  return out;
}

bool StructRing::is_zero(const Element& a) const {
  require(a, "is_zero");
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](const Integer& c) { return c == 0; });
}

std::string StructRing::format(const Element& a) const {
  require(a, "format");
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    const Integer& c = a.coeffs[i];
    if (c == 0) continue;
    bool negative = c < 0;
    Integer mag = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == unit_) {
      out += mag.str();
    } else if (mag == 1) {
      out += basis_[i].label;
    } else {
      out += mag.str() + "*" + basis_[i].label;
    }
  }
  return out.empty() ? "0" : out;
}

StructElement StructRing::parse(std::string_view text, std::size_t line) const {
  Element out = zero();
  for (const auto& term : parse_expression(text, line)) {
    Element t = scale(one(), term.coefficient);
    for (const auto& [label, e] : term.factors) {
      std::size_t idx;
      try {
        idx = index_of(label);
      } catch (const ParseError&) {
        throw ParseError("ring " + name_ + " has no basis element '" + label + "'", line);
      }
      t = mul(t, pow(basis_element(idx), e));
    }
    out = add(out, t);
  }
  return out;
}

StructElement struct_mul(const StructRing& ring, const StructElement& a, const StructElement& b) {
  return ring.mul(a, b);
}

Integer struct_integrate(const StructRing& ring, const StructElement& a) {
  return ring.integrate(a);
}

StructElement struct_pushforward(const StructRing& ring, const StructElement& a) {
  return ring.pushforward(a);
}

// ---------------------------------------------------------------------------
// Built-ins

namespace {

std::string power_label(int i, int m) {
  if (i == 0) return "1";
  if (i == m) return "pt";
  if (i == 1) return "h";
  return "h" + std::to_string(i);
}

StructRing make_projective(int m, std::string name,
                           std::optional<StructRing::Pushforward> push = std::nullopt) {
  if (m < 1) throw ValidationError("projective space needs m >= 1");
  std::vector<StructRing::Basis> basis;
  for (int i = 0; i <= m; ++i) basis.push_back({power_label(i, m), i});
  std::vector<StructRing::Product> products;
  const std::size_t n = static_cast<std::size_t>(m) + 1;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (i + j >= n) continue;
      std::vector<Integer> v(n);
      v[i + j] = 1;
      products.push_back({i, j, StructElement{std::move(v)}});
    }
  }
  std::vector<Integer> integral(n);
  integral[n - 1] = 1;
  return StructRing(std::move(name), std::move(basis), products, std::move(integral),
                    std::move(push));
}

}  // namespace

std::shared_ptr<const StructRing> projective_space(int m) {
  return std::make_shared<const StructRing>(make_projective(m, "P" + std::to_string(m)));
}

std::shared_ptr<const StructRing> projective_space_with_identity(int m) {
  auto target = projective_space(m);
  StructRing::Pushforward push{target, {}};
  for (std::size_t i = 0; i < target->size(); ++i) push.images.push_back(target->basis_element(i));
  return std::make_shared<const StructRing>(
      make_projective(m, "P" + std::to_string(m) + "_id", std::move(push)));
}

std::shared_ptr<const StructRing> blowup_p2_at_point() {
  auto p2 = projective_space(2);
  std::vector<StructRing::Basis> basis{{"1", 0}, {"h", 1}, {"e", 1}, {"P", 2}};
  auto vec = [](std::initializer_list<int> v) {
    StructElement e;
    for (int x : v) e.coeffs.emplace_back(x);
    return e;
  };
  std::vector<StructRing::Product> products{
      {1, 1, vec({0, 0, 0, 1})},
      {2, 2, vec({0, 0, 0, -1})},
      {1, 2, vec({0, 0, 0, 0})},
  };
  StructRing::Pushforward push{p2,
                               {p2->element("1"), p2->element("h"), p2->zero(), p2->element("pt")}};
  return std::make_shared<const StructRing>("BlP2", std::move(basis), products,
                                            std::vector<Integer>{0, 0, 0, 1}, std::move(push));
}

void RingLibrary::add(std::shared_ptr<const StructRing> ring) {
  const std::string name = ring->name();
  rings_[name] = std::move(ring);
}

std::shared_ptr<const StructRing> RingLibrary::find(const std::string& name) const {
  if (auto it = rings_.find(name); it != rings_.end()) return it->second;
  if (name == "BlP2") return blowup_p2_at_point();
  if (name.size() >= 2 && name[0] == 'P' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
      name.size() <= 4) {
    return projective_space(std::stoi(name.substr(1)));
  }
  throw ValidationError("unknown ring '" + name + "'");
}

std::vector<std::string> RingLibrary::names() const {
  std::vector<std::string> out;
  for (const auto& [name, ring] : rings_) out.push_back(name);
  return out;
}

// ---------------------------------------------------------------------------
// Loader

namespace {

struct PendingRing {
  std::string name;
  std::size_t line = 0;
  std::vector<StructRing::Basis> basis;
  std::vector<std::tuple<std::string, std::string, std::string, std::size_t>> products;
  std::vector<std::tuple<std::string, std::string, std::size_t>> integrals;
  std::string target;
  std::size_t target_line = 0;
  std::vector<std::tuple<std::string, std::string, std::size_t>> pushes;
};

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

// "A B = EXPR" -> lhs words, rhs
std::pair<std::vector<std::string>, std::string> split_assignment(const std::string& rest,
                                                                  std::size_t line) {
  auto eq = rest.find('=');
  if (eq == std::string::npos) throw ParseError("expected '='", line);
  std::istringstream lhs(rest.substr(0, eq));
  std::vector<std::string> words;
  for (std::string w; lhs >> w;) words.push_back(w);
  std::string rhs = trim(rest.substr(eq + 1));
  if (rhs.empty()) throw ParseError("missing right-hand side", line);
  return {words, rhs};
}

std::shared_ptr<const StructRing> build(const PendingRing& p, const RingLibrary& library) {
  // A ring without products/pushes still needs its basis to resolve labels.
  std::vector<StructRing::Basis> basis = p.basis;
  std::vector<Integer> integral(basis.size());
  auto index = [&](const std::string& label, std::size_t line) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].label == label) return i;
    }
    throw ParseError("ring " + p.name + " has no basis element '" + label + "'", line);
  };
  for (const auto& [label, value, line] : p.integrals) integral[index(label, line)] = parse_integer(value);

  // Products are parsed as linear combinations of basis labels.
  std::size_t unit = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].degree == 0) unit = i;
  }
  StructRing linear(p.name, basis, {}, std::vector<Integer>(basis.size()));
  auto parse_linear = [&](const std::string& text, std::size_t line) {
    StructElement out = linear.zero();
    for (const auto& term : parse_expression(text, line)) {
      if (term.factors.size() > 1 || (term.factors.size() == 1 && term.factors[0].second != 1)) {
        throw ParseError("product values must be linear in basis labels", line);
      }
      std::size_t idx = term.factors.empty() ? unit : index(term.factors[0].first, line);
      out.coeffs[idx] += term.coefficient;
    }
    return out;
  };
  std::vector<StructRing::Product> products;
  for (const auto& [a, b, value, line] : p.products) {
    products.push_back({index(a, line), index(b, line), parse_linear(value, line)});
  }

  std::optional<StructRing::Pushforward> push;
  if (!p.target.empty()) {
    std::shared_ptr<const StructRing> target;
    try {
      target = library.find(p.target);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), p.target_line);
    }
    std::vector<std::optional<StructElement>> images(basis.size());
    for (const auto& [label, value, line] : p.pushes) {
      images[index(label, line)] = target->parse(value, line);
    }
    push = StructRing::Pushforward{target, {}};
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!images[i]) {
        throw ParseError("ring " + p.name + ": missing push for '" + basis[i].label + "'",
                         p.target_line);
      }
      push->images.push_back(*images[i]);
    }
  } else if (!p.pushes.empty()) {
    throw ParseError("push without pushforward target", std::get<2>(p.pushes.front()));
  }
  try {
    return std::make_shared<const StructRing>(p.name, std::move(basis), products,
                                              std::move(integral), std::move(push));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), p.line);
  }
}

}  // namespace

std::vector<std::string> load_struct_rings(std::istream& in, RingLibrary& library) {
  std::vector<std::string> loaded;
  std::optional<PendingRing> cur;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string text = trim(raw);
    if (text.empty()) continue;
    std::istringstream words(text);
    std::string keyword;
    words >> keyword;
    std::string rest;
    std::getline(words, rest);
    rest = trim(rest);

    if (keyword == "ring") {
      if (cur) throw ParseError("nested 'ring' (missing 'end')", line);
      if (rest.empty() || rest.find(' ') != std::string::npos) throw ParseError("expected 'ring NAME'", line);
      cur = PendingRing{};
      cur->name = rest;
      cur->line = line;
      continue;
    }
    if (!cur) throw ParseError("'" + keyword + "' outside a ring block", line);
    if (keyword == "basis") {
      std::istringstream items(rest);
      for (std::string item; items >> item;) {
        auto colon = item.find(':');
        if (colon == std::string::npos || colon == 0) throw ParseError("expected LABEL:DEGREE, got '" + item + "'", line);
        Integer deg;
        try {
          deg = parse_integer(item.substr(colon + 1));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line);
        }
        if (deg < 0 || deg > 1000) throw ParseError("degree out of range in '" + item + "'", line);
        cur->basis.push_back({item.substr(0, colon), deg.convert_to<int>()});
      }
    } else if (keyword == "mul") {
      auto [lhs, rhs] = split_assignment(rest, line);
      if (lhs.size() != 2) throw ParseError("expected 'mul A B = EXPR'", line);
      cur->products.emplace_back(lhs[0], lhs[1], rhs, line);
    } else if (keyword == "integral") {
      auto [lhs, rhs] = split_assignment(rest, line);
      if (lhs.size() != 1) throw ParseError("expected 'integral LABEL = INTEGER'", line);
      try {
        parse_integer(rhs);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
      }
      cur->integrals.emplace_back(lhs[0], rhs, line);
    } else if (keyword == "pushforward") {
      if (rest.empty()) throw ParseError("expected 'pushforward TARGET'", line);
      cur->target = rest;
      cur->target_line = line;
    } else if (keyword == "push") {
      auto [lhs, rhs] = split_assignment(rest, line);
      if (lhs.size() != 1) throw ParseError("expected 'push LABEL = EXPR'", line);
      cur->pushes.emplace_back(lhs[0], rhs, line);
    } else if (keyword == "end") {
      try {
        library.add(build(*cur, library));
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), cur->line);
      }
      loaded.push_back(cur->name);
      cur.reset();
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line);
    }
  }
  if (cur) throw ParseError("ring " + cur->name + " is missing 'end'", cur->line);
  return loaded;
}

}  // namespace resint
