#include "agcode/curve_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace agcode {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

FieldElement element_from_json(const json& v, const Field& F) {
  if (!v.is_number_integer()) throw FormatError("field element must be an integer encoding");
  const auto x = v.get<std::int64_t>();
  if (x < 0 || !F.contains(static_cast<std::uint32_t>(x)))
    throw FormatError("field element " + std::to_string(x) + " out of range for " + F.describe());
  return FieldElement{static_cast<std::uint32_t>(x)};
}

}  // namespace

CurveSpec parse_curve(const json& j) {
  try {
    const auto& jf = j.at("field");
    Field F(jf.at("p").get<std::uint32_t>(), jf.at("m").get<std::uint32_t>(),
            jf.at("modulus").get<std::vector<std::uint32_t>>());
    auto weights = j.at("weights").get<std::vector<std::uint32_t>>();
    std::vector<MPoly> basis;
    for (const auto& jp : j.value("ideal_basis", json::array())) {
      MPoly p;
      for (const auto& term : jp) {
        if (!term.is_array() || term.size() != 2) throw FormatError("ideal basis term must be [exponents, coeff]");
        auto e = term[0].get<Exponent>();
        if (e.size() != weights.size()) throw FormatError("exponent tuple length differs from number of weights");
        const FieldElement c = element_from_json(term[1], F);
        p[e] = F.add(p[e], c);
      }
      basis.push_back(std::move(p));
    }
    CurveSpec spec{j.value("name", std::string("unnamed")), F, weights, std::move(basis),
                   j.at("genus").get<std::uint32_t>(), std::nullopt, std::nullopt};
    if (j.contains("vanishing_x1_poly")) {
      std::vector<FieldElement> c;
      for (const auto& v : j.at("vanishing_x1_poly")) c.push_back(element_from_json(v, F));
      spec.vanishing_x1_poly = Poly(std::move(c));
    }
    if (j.contains("points")) {
      std::vector<Point> pts;
      for (const auto& jp : j.at("points")) {
        Point P;
        for (const auto& v : jp) P.push_back(element_from_json(v, F));
        if (P.size() != weights.size()) throw FormatError("point has wrong number of coordinates");
        pts.push_back(std::move(P));
      }
      spec.points = std::move(pts);
    }
    return spec;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed curve file: ") + e.what());
  }
}

CurveSpec load_curve(const std::string& path) {
  json j;
  try {
    j = json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  return parse_curve(j);
}

json curve_to_json(const CurveSpec& spec) {
  json j;
  j["name"] = spec.name;
  j["field"] = {{"p", spec.field.characteristic()}, {"m", spec.field.degree()}, {"modulus", spec.field.modulus()}};
  j["weights"] = spec.weights;
  json basis = json::array();
  for (const auto& p : spec.ideal_basis) {
    json jp = json::array();
    for (const auto& [e, c] : p) jp.push_back(json::array({e, c.value}));
    basis.push_back(jp);
  }
  j["ideal_basis"] = basis;
  j["genus"] = spec.genus;
  if (spec.vanishing_x1_poly) {
    json c = json::array();
    for (auto x : spec.vanishing_x1_poly->coeffs()) c.push_back(x.value);
    j["vanishing_x1_poly"] = c;
  }
  if (spec.points) {
    json pts = json::array();
    for (const auto& P : *spec.points) {
      json jp = json::array();
      for (auto x : P) jp.push_back(x.value);
      pts.push_back(jp);
    }
    j["points"] = pts;
  }
  return j;
}

std::vector<Point> resolve_points(const StandardForm& ring) {
  const auto& spec = ring.spec();
  if (spec.points) {
    std::set<Point> seen;
    for (const auto& P : *spec.points) {
      if (!ring.on_curve(P)) throw InvalidCurve("listed point does not lie on the curve");
      if (!seen.insert(P).second) throw InvalidCurve("listed points are not pairwise distinct");
    }
    return *spec.points;
  }
  const Field& F = ring.field();
  const std::size_t t = ring.num_vars();
  std::vector<Point> out;
  Point P(t, FieldElement{});
  // odometer over F_q^t, last coordinate fastest
  while (true) {
    if (ring.on_curve(P)) out.push_back(P);
    std::size_t k = t;
    while (k > 0) {
      --k;
      if (P[k].value + 1 < F.order()) {
        P[k] = FieldElement{P[k].value + 1};
        break;
      }
      P[k] = FieldElement{};
      if (k == 0) return out;
    }
  }
}

Vector parse_vector(const std::string& text, const Field& F) {
  Vector v;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long x = 0;
      try {
        x = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw FormatError("not an integer: '" + tok + "'");
      }
      if (used != tok.size()) throw FormatError("not an integer: '" + tok + "'");
      if (x < 0 || !F.contains(static_cast<std::uint32_t>(x)))
        throw FormatError("symbol " + tok + " out of range for " + F.describe());
      v.push_back(FieldElement{static_cast<std::uint32_t>(x)});
    }
  }
  return v;
}

Vector read_vector(const std::string& path, const Field& F) { return parse_vector(slurp(path), F); }

std::string format_vector(const Vector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].value;
  return os.str();
}

std::vector<Point> read_points(const std::string& path, const Field& F, std::size_t t) {
  std::istringstream in(slurp(path));
  std::string line;
  std::vector<Point> pts;
  while (std::getline(in, line)) {
    Vector v = parse_vector(line, F);
    if (v.empty()) continue;
    if (v.size() != t) throw FormatError("point line has " + std::to_string(v.size()) + " entries, expected " + std::to_string(t));
    pts.push_back(std::move(v));
  }
  return pts;
}

}  // namespace agcode
