#include "hyperinv/io.hpp"

#include <sstream>

namespace hyperinv {

Json to_json(Cx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Cx cx_from_json(const Json& j) {
  if (j.is_number()) return Cx(j.get<double>(), 0.0);
  return Cx(j.at("re").get<double>(), j.value("im", 0.0));
}

namespace {

double parse_real(const std::string& s) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw DomainError("parse_cx: trailing characters in '" + s + "'");
    return v;
  } catch (const std::invalid_argument&) {
    throw DomainError("parse_cx: bad numeric literal '" + s + "'");
  } catch (const std::out_of_range&) {
    throw DomainError("parse_cx: literal out of range '" + s + "'");
  }
}

}  // namespace

Cx parse_cx(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw DomainError("parse_cx: empty literal");
  auto comma = s.find(',');
  if (comma != std::string::npos) {
    return Cx(parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1)));
  }
  if (s.back() == 'j' || s.back() == 'i') {
    std::string body = s.substr(0, s.size() - 1);
    // split at the last +/- that is not an exponent sign or leading sign
    for (std::size_t i = body.size(); i-- > 1;) {
      char c = body[i];
      if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
        double re = parse_real(body.substr(0, i));
        std::string imtxt = body.substr(i);
        if (imtxt == "+") imtxt = "1";
        if (imtxt == "-") imtxt = "-1";
        return Cx(re, parse_real(imtxt));
      }
    }
    if (body.empty() || body == "+") return Cx(0.0, 1.0);
    if (body == "-") return Cx(0.0, -1.0);
    return Cx(0.0, parse_real(body));
  }
  return Cx(parse_real(s), 0.0);
}

Json to_json(const Seq& s) {
  Json arr = Json::array();
  for (int i = 1; i <= s.size(); ++i) arr.push_back(to_json(s(i)));
  return Json{{"n", s.size()}, {"values", arr}};
}

Seq seq_from_json(const Json& j) {
  const Json& arr = j.is_array() ? j : j.at("values");
  Seq s(int(arr.size()));
  for (int i = 0; i < int(arr.size()); ++i) s(i + 1) = cx_from_json(arr[i]);
  return s;
}

Json to_json(const TriMatrixNum& m) {
  Json rows = Json::array();
  for (int r = 1; r <= m.n; ++r) {
    Json row = Json::array();
    for (int k = 1; k <= r; ++k) row.push_back(to_json(m.at(r, k)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n}, {"layout", "lower-triangular-row-major"}, {"entries", rows}};
}

Json to_json(const TriMatrixExact& m) {
  Json rows = Json::array();
  for (int r = 1; r <= m.n; ++r) {
    Json row = Json::array();
    for (int k = 1; k <= r; ++k) {
      Json terms = Json::array();
      for (const auto& [key, c] : m.at(r, k).terms())
        terms.push_back(Json::array({key.first, key.second, rational_to_string(c)}));
      row.push_back(std::move(terms));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n},
              {"layout", "lower-triangular-row-major"},
              {"term_format", "[deg_x, deg_nu, \"p/q\"]"},
              {"entries", rows}};
}

std::string tri_to_csv(const TriMatrixNum& m) {
  std::ostringstream out;
  out.precision(17);
  for (int r = 1; r <= m.n; ++r) {
    for (int k = 1; k <= r; ++k) {
      if (k > 1) out << ',';
      out << '"' << m.at(r, k).real() << ',' << m.at(r, k).imag() << '"';
    }
    out << '\n';
  }
  return out.str();
}

Json to_json(const H0Series& f) {
  Json arr = Json::array();
  for (int l = 1; l <= f.order(); ++l) arr.push_back(to_json(f.c(l)));
  return Json{{"order", f.order()}, {"coeffs", arr}, {"convention", "exponential"}};
}

H0Series h0_from_json(const Json& j) {
  if (j.is_object() && j.contains("convention") && j["convention"] != "exponential")
    throw DomainError("H0 series: unsupported coefficient convention");
  const Json& arr = j.is_array() ? j : j.at("coeffs");
  H0Series f(int(arr.size()));
  for (int l = 0; l < int(arr.size()); ++l) f.c(l + 1) = cx_from_json(arr[l]);
  return f;
}

Json to_json(const PowerSeries& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs) arr.push_back(to_json(c));
  return Json{{"order", p.order}, {"coeffs", arr}};
}

}  // namespace hyperinv
