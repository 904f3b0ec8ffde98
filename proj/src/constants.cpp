#include "qtlie/constants.hpp"

#include <algorithm>
#include <cctype>

#include "qtlie/errors.hpp"

namespace qtlie {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// "name(inner)" -> inner, or nullopt when s does not have that shape.
std::optional<std::string> call_argument(const std::string& s, const std::string& name) {
  if (s.size() < name.size() + 2 || s.compare(0, name.size() + 1, name + "(") != 0 || s.back() != ')')
    return std::nullopt;
  return s.substr(name.size() + 1, s.size() - name.size() - 2);
}

}  // namespace

RingSpec parse_ring_spec(const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("ring spec is empty");
  RingSpec out{s, nullptr, std::nullopt};
  if (s == "Q(i)" || s == "C") {
    out.algebra = scalar_algebra();
  } else if (s == "C+Cop") {
    out.algebra = scalar_pair_algebra();
  } else if (s == "Mt2") {
    out.algebra = tilde_matrix_algebra();
  } else if (s == "CK4") {
    out.algebra = klein_algebra();
  } else if (s.size() > 1 && s[0] == 'M' && std::all_of(s.begin() + 1, s.end(), ::isdigit)) {
    std::size_t m = std::stoul(s.substr(1));
    if (m == 0 || m > 4) throw ParseError("ring spec: matrix size must be 1..4");
    out.algebra = matrix_algebra(m);
  } else if (auto inner = call_argument(s, "op")) {
    FinAlgPtr base = parse_ring_spec(*inner).algebra;
    if (!base) throw ParseError("ring spec: op() needs a finite-dimensional ring");
    out.algebra = op_pair_algebra(base);
  } else if (auto args = call_argument(s, "quotient")) {
    auto a = args->find(';'), b = args->find(';', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos) throw ParseError("ring spec: quotient(params;f;g)");
    TorusParams p = TorusParams::parse(args->substr(0, a));
    IdealFG ideal(p, Poly::parse(args->substr(a + 1, b - a - 1)), Poly::parse(args->substr(b + 1)));
    out.algebra = QuotientRing(ideal).algebra();
  } else if (auto params = call_argument(s, "torus")) {
    out.torus = TorusParams::parse(*params);
  } else {
    throw ParseError("unknown ring spec '" + s + "'");
  }
  return out;
}

nlohmann::json constants_json(int n, int rho, const RingSpec& ring) {
  using nlohmann::json;
  json doc{{"n", n}, {"rho", rho}, {"ring", ring.text}};
  if (ring.torus) {
    TorusLie lie(TorusRing(*ring.torus), n, rho);
    std::vector<GenSym<QTorusElem>> patterns;
    for (GenKind kind : {GenKind::F, GenKind::G, GenKind::H})
      for (int i = 1; i <= n; ++i)
        for (int j = kind == GenKind::F ? 1 : i; j <= n; ++j)
          if (kind != GenKind::F || i != j) patterns.push_back({kind, i, j, lie.ring().one()});
    auto with = [&](GenSym<QTorusElem> g, const char* c) {
      g.coeff = QTorusElem::parse(c, *ring.torus);
      return g;
    };
    json basis = json::array(), brackets = json::array();
    for (const auto& g : patterns) basis.push_back(with(g, "t1").to_string());
    for (std::size_t i = 0; i < patterns.size(); ++i)
      for (std::size_t j = i + 1; j < patterns.size(); ++j) {
        json terms = json::array();
        for (const auto& t : lie.symbolic_bracket(with(patterns[i], "t1"), with(patterns[j], "t2")))
          terms.push_back(t.to_string());
        if (!terms.empty()) brackets.push_back(json::array({i, j, terms}));
      }
    doc["mode"] = "symbolic";
    doc["coefficients"] = {{"a", "t1"}, {"b", "t2"}};
    doc["basis"] = basis;
    doc["brackets"] = brackets;
    return doc;
  }
  FinLieAlg lie(FinRing(ring.algebra), n, rho);
  LieBasis basis = enumerate_basis(lie);
  FinLie table = FinLie::from_basis(basis);
  json brackets = json::array();
  for (std::size_t i = 0; i < table.dim(); ++i)
    for (std::size_t j = i + 1; j < table.dim(); ++j) {
      const SparseVec& v = table.bracket(i, j);
      if (v.is_zero()) continue;
      json terms = json::array();
      for (const auto& [k, c] : v.entries()) terms.push_back(json::array({k, c.to_string()}));
      brackets.push_back(json::array({i, j, terms}));
    }
  doc["mode"] = "table";
  doc["dim"] = table.dim();
  doc["basis"] = basis.labels();
  doc["brackets"] = brackets;
  return doc;
}

FinLie read_constants(const nlohmann::json& doc) {
  try {
    if (doc.value("mode", "table") != "table") throw std::invalid_argument("not a numeric table");
    std::vector<std::string> labels = doc.at("basis").get<std::vector<std::string>>();
    const std::size_t d = labels.size();
    std::vector<SparseVec> table(d * d);
    for (const auto& entry : doc.at("brackets")) {
      auto i = entry.at(0).get<std::size_t>(), j = entry.at(1).get<std::size_t>();
      if (i >= j || j >= d) throw std::invalid_argument("bracket indices out of order or range");
      SparseVec v;
      for (const auto& term : entry.at(2)) v.push_back(term.at(0).get<std::size_t>(), GaussRat::parse(term.at(1)));
      table[j * d + i] = v.scaled(GaussRat(-1));
      table[i * d + j] = std::move(v);
    }
    return FinLie(std::move(labels), std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("constants file: ") + e.what());
  }
}

}  // namespace qtlie
