#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "padic/simpson.hpp"
#include "padic/tate.hpp"

namespace padic {

using Json = nlohmann::ordered_json;

inline std::string coeff_to_string(const Coeff& c) {
  std::ostringstream os;
  os << c.sig << "*p^" << c.exp;
  return os.str();
}

inline Coeff parse_coeff(const std::string& s) {
  Coeff c;
  auto star = s.find("*p^");
  try {
    std::string sig = star == std::string::npos ? s : s.substr(0, star);
    c.sig = cpp_int(sig);
    if (star != std::string::npos) {
      size_t used = 0;
      std::string e = s.substr(star + 3);
      c.exp = std::stoll(e, &used);
      if (used != e.size()) throw ParseError("trailing characters");
    }
  } catch (const std::exception&) {
    throw ParseError("bad coefficient literal: \"" + s + "\" (expected s*p^v)");
  }
  return c;
}

/// Bit-exact element literal:
/// {"p": p, "e": e, "u": u, "prec": "m/e", "coeffs": ["s*p^v", ...]}.
inline Json element_to_json(const Element& x) {
  Json j;
  j["p"] = x.tower().p;
  j["e"] = x.tower().e;
  j["u"] = x.tower().u;
  j["prec"] = std::to_string(x.prec_pi()) + "/" + std::to_string(x.tower().e);
  Json coeffs = Json::array();
  for (const Coeff& c : x.coeffs()) coeffs.push_back(coeff_to_string(c));
  j["coeffs"] = coeffs;
  return j;
}

inline Element element_from_json(const Json& j) {
  try {
    long long p = j.at("p").get<long long>();
    int e = j.value("e", 1);
    long long u = j.value("u", 1LL);
    Rational prec = Rational(0);
    if (j.contains("prec")) {
      auto r = Rational::parse(j.at("prec").get<std::string>());
      if (!r) throw ParseError("bad prec");
      prec = *r;
    } else {
      prec = Rational(40LL * e);
    }
    Rational prec_pi = prec * Rational(e);
    if (prec_pi.den() != 1)
      throw ParseError("prec must be a multiple of 1/e");
    Tower t = make_tower(p, e, u, prec_pi.num());
    std::vector<Coeff> coeffs;
    for (const auto& cj : j.at("coeffs"))
      coeffs.push_back(parse_coeff(cj.get<std::string>()));
    if (static_cast<int>(coeffs.size()) > e)
      throw ParseError("more coefficients than the ramification index");
    return Element(t, std::move(coeffs), prec_pi.num());
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("bad element literal: ") + ex.what());
  } catch (const Error&) {
    throw;
  } catch (const std::exception& ex) {
    throw ParseError(std::string("bad element literal: ") + ex.what());
  }
}

/// Parses the CLI coefficient list "s*p^v[,s*p^v,...]" against a given tower.
inline Element element_from_coeff_list(const Tower& t, const std::string& s) {
  std::vector<Coeff> coeffs;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    // strip blanks
    std::string trimmed;
    for (char ch : cur)
      if (!isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed.empty()) throw ParseError("empty coefficient in list");
    coeffs.push_back(parse_coeff(trimmed));
  }
  if (coeffs.empty()) throw ParseError("empty element literal");
  if (static_cast<int>(coeffs.size()) > t.e)
    throw ParseError("more coefficients than the ramification index");
  return Element(t, std::move(coeffs), t.N);
}

/// {"nvars": n, "terms": [{"exp": [...], "coeff": <element literal>}, ...]}.
inline Json series_to_json(const RestrictedSeries& f) {
  Json j;
  j["nvars"] = f.nvars();
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json tj;
    tj["exp"] = m;
    tj["coeff"] = element_to_json(c);
    terms.push_back(tj);
  }
  j["terms"] = terms;
  return j;
}

inline RestrictedSeries series_from_json(const Json& j, const Tower* fallback = nullptr) {
  try {
    int nvars = j.at("nvars").get<int>();
    const auto& terms = j.at("terms");
    Tower t;
    if (!terms.empty())
      t = element_from_json(terms.front().at("coeff")).tower();
    else if (fallback)
      t = *fallback;
    else
      throw ParseError("empty series needs an explicit tower");
    RestrictedSeries f(t, nvars);
    for (const auto& tj : terms) {
      Monomial m = tj.at("exp").get<Monomial>();
      Element c = element_from_json(tj.at("coeff"));
      if (!c.tower().compatible(t))
        throw TowerMismatch("series literal mixes towers");
      f.add_term(m, c);
    }
    return f;
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("bad series literal: ") + ex.what());
  }
}

inline std::vector<Element> element_vector_from_json(const Json& j) {
  std::vector<Element> out;
  for (const auto& ej : j) out.push_back(element_from_json(ej));
  return out;
}

inline Json element_vector_to_json(const std::vector<Element>& v) {
  Json arr = Json::array();
  for (const Element& x : v) arr.push_back(element_to_json(x));
  return arr;
}

namespace detail {

inline Matrix matrix_from_json(const Tower& t, const Json& arr, int rows,
                               int cols, const std::string& name) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != rows * cols)
    throw ParseError(name + " must be a row-major list of " +
                     std::to_string(rows * cols) + " entries");
  Matrix m = Matrix::zero(t, rows, cols);
  int idx = 0;
  for (const auto& ej : arr) {
    Element x = ej.is_number_integer()
                    ? Element::from_integer(t, ej.get<long long>(), t.N)
                    : element_from_json(ej);
    if (!x.tower().compatible(t))
      throw TowerMismatch(name + " entry from a different tower");
    m.at(idx / cols, idx % cols) = x;
    ++idx;
  }
  return m;
}

}  // namespace detail

/// Key-value correspondence config:
///   p=3  e=1  u=1  prec=40  g=1  alpha=3/2  beta=auto
///   l_matrix=[0,1]  B_matrix=[0]
/// Matrix entries are integers or element literals, row-major.
inline CorrespondenceConfig config_from_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t\r");
      size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  auto need = [&](const std::string& k) -> const std::string& {
    auto it = kv.find(k);
    if (it == kv.end()) throw ParseError("config: missing key " + k);
    return it->second;
  };
  auto to_ll = [](const std::string& k, const std::string& s) {
    try {
      size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used != s.size()) throw ParseError("");
      return v;
    } catch (const std::exception&) {
      throw ParseError("config: bad integer for " + k + ": " + s);
    }
  };
  long long p = to_ll("p", need("p"));
  int e = static_cast<int>(kv.count("e") ? to_ll("e", kv["e"]) : 1);
  long long u = kv.count("u") ? to_ll("u", kv["u"]) : 1;
  long long prec = kv.count("prec") ? to_ll("prec", kv["prec"]) : 40;
  Tower t = make_tower(p, e, u, prec);
  int g = static_cast<int>(to_ll("g", need("g")));
  if (g < 1) throw ParseError("config: g must be >= 1");
  auto alpha = Rational::parse(need("alpha"));
  if (!alpha) throw ParseError("config: bad alpha");
  Rational beta(0);
  std::string bs = kv.count("beta") ? kv["beta"] : "auto";
  if (bs == "auto") {
    beta = (*alpha + Rational(1, p - 1)) / Rational(2);
  } else {
    auto b = Rational::parse(bs);
    if (!b) throw ParseError("config: bad beta");
    beta = *b;
  }
  Json lj, bj;
  try {
    lj = Json::parse(need("l_matrix"));
    bj = Json::parse(need("B_matrix"));
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("config: bad matrix JSON: ") + ex.what());
  }
  Matrix l = detail::matrix_from_json(t, lj, 2 * g, g, "l_matrix");
  Matrix B = detail::matrix_from_json(t, bj, g, g, "B_matrix");
  return CorrespondenceConfig(t, g, std::move(l), std::move(B), *alpha, beta);
}

inline CorrespondenceConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_text(ss.str());
}

inline std::string config_to_text(const CorrespondenceConfig& cfg) {
  std::ostringstream os;
  os << "p=" << cfg.tower.p << "\n"
     << "e=" << cfg.tower.e << "\n"
     << "u=" << cfg.tower.u << "\n"
     << "prec=" << cfg.tower.N << "\n"
     << "g=" << cfg.g << "\n"
     << "alpha=" << cfg.alpha.to_string() << "\n"
     << "beta=" << cfg.beta.to_string() << "\n";
  auto dump_matrix = [&](const char* key, const Matrix& m) {
    Json arr = Json::array();
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) arr.push_back(element_to_json(m.at(i, j)));
    os << key << "=" << arr.dump() << "\n";
  };
  dump_matrix("l_matrix", cfg.l);
  dump_matrix("B_matrix", cfg.B);
  return os.str();
}

inline Json json_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("bad JSON in ") + path + ": " + ex.what());
  }
}

}  // namespace padic
