#include "tamari/io.hpp"

#include <sstream>

#include "tamari/errors.hpp"

namespace tamari {

std::string mono_key(const Mono& m) {
  std::string key;
  for (int i = 0; i < kVarCount; ++i) {
    int e = m.e[i];
    if (e == 0) continue;
    if (!key.empty()) key += "*";
    key += kVarNames[i];
    if (e != 1) key += "^" + std::to_string(e);
  }
  return key.empty() ? "1" : key;
}

Json poly_to_json(const Poly& p) {
  Json j = Json::object();
  for (const auto& [m, c] : p.terms()) j[mono_key(m)] = rat_to_string(c);
  return j;
}

Poly poly_from_json(const Json& j) {
  Poly p;
  for (const auto& [key, val] : j.items()) {
    Mono m;
    if (key != "1") {
      std::istringstream is(key);
      std::string factor;
      while (std::getline(is, factor, '*')) {
        if (factor.empty()) throw InvalidInput("bad monomial key: " + key);
        char name = factor[0];
        int exp = 1;
        if (factor.size() > 1) {
          if (factor[1] != '^') throw InvalidInput("bad monomial key: " + key);
          exp = std::stoi(factor.substr(2));
        }
        bool found = false;
        for (int i = 0; i < kVarCount; ++i)
          if (kVarNames[i] == name) {
            m.e[i] = static_cast<int16_t>(exp);
            found = true;
          }
        if (!found) throw InvalidInput("unknown variable in key: " + key);
      }
    }
    Rat c(val.get<std::string>());
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

Json path_to_json(const PathWord& p) {
  Json j;
  j["m"] = p.m();
  j["n"] = p.size();
  j["word"] = p.to_string();
  j["form"] = p.form() == Form::Ballot ? "ballot" : "dyck";
  return j;
}

PathWord path_from_json(const Json& j) {
  int m = j.at("m").get<int>();
  std::string word = j.at("word").get<std::string>();
  std::string form = j.at("form").get<std::string>();
  if (form == "ballot") return PathWord::ballot(word, m);
  if (form == "dyck") return PathWord::dyck(word, m);
  throw InvalidInput("unknown path form: " + form);
}

Json labelling_to_json(const Labelling& l) {
  Json j = path_to_json(l.path);
  j["labels"] = l.labels;
  return j;
}

Labelling labelling_from_json(const Json& j) {
  Labelling l{path_from_json(j), j.at("labels").get<std::vector<int>>()};
  if (!is_valid_labelling(l)) throw InvalidInput("invalid labelling");
  return l;
}

Json parking_to_json(const ParkingFunction& f) {
  Json j;
  j["m"] = f.m;
  j["values"] = f.values;
  return j;
}

Json tseries_to_json(const TSeries& f) {
  Json j;
  j["var"] = "t";
  j["order"] = f.order();
  Json coeffs = Json::array();
  for (int n = 0; n <= f.order(); ++n) coeffs.push_back(poly_to_json(f[n]));
  j["coeffs"] = coeffs;
  return j;
}

Json zseries_to_json(const PolySeries& s) {
  Json j;
  j["var"] = "z";
  j["order"] = s.order();
  Json coeffs = Json::array();
  for (int n = 0; n <= s.order(); ++n) coeffs.push_back(poly_to_json(s[n]));
  j["coeffs"] = coeffs;
  return j;
}

Json interval_to_json(const TamariPoset& poset, const Interval& iv) {
  Json j;
  j["lower"] = poset.vertex(iv.lower).to_string();
  j["upper"] = poset.vertex(iv.upper).to_string();
  j["contacts"] = iv.contacts;
  j["rise"] = iv.rise;
  j["dist"] = iv.dist;
  return j;
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.name;
  j["m"] = r.m;
  j["N"] = r.N;
  j["status"] = r.pass ? "pass" : "fail";
  if (!r.pass) j["first_mismatch_order"] = r.first_mismatch_order;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

std::string hasse_to_dot(const TamariPoset& poset) {
  std::ostringstream os;
  os << "digraph tamari_" << poset.m() << "_" << poset.n() << " {\n";
  os << "  rankdir=BT;\n";
  for (int i = 0; i < poset.size(); ++i)
    os << "  v" << i << " [label=\"" << poset.vertex(i).to_string()
       << "\"];\n";
  for (int i = 0; i < poset.size(); ++i)
    for (int j : poset.hasse()[static_cast<std::size_t>(i)])
      os << "  v" << i << " -> v" << j << ";\n";
  os << "}\n";
  return os.str();
}

bool parse_dot(const std::string& text, DotGraph* out) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("digraph", 0) != 0) return false;
  DotGraph g;
  while (std::getline(is, line)) {
    std::size_t a = line.find_first_not_of(' ');
    if (a == std::string::npos) continue;
    std::string body = line.substr(a);
    if (body == "}") break;
    if (body.rfind("rankdir", 0) == 0) continue;
    if (body.rfind("v", 0) != 0) return false;
    std::size_t arrow = body.find(" -> ");
    if (arrow != std::string::npos) {
      int from = std::stoi(body.substr(1, arrow - 1));
      std::size_t semi = body.find(';', arrow);
      if (semi == std::string::npos) return false;
      int to = std::stoi(body.substr(arrow + 5, semi - arrow - 5));
      g.edges.emplace_back(from, to);
    } else {
      std::size_t lq = body.find("[label=\"");
      std::size_t rq = body.rfind("\"];");
      if (lq == std::string::npos || rq == std::string::npos) return false;
      int id = std::stoi(body.substr(1, lq - 2));
      if (id != static_cast<int>(g.labels.size())) return false;
      g.labels.push_back(body.substr(lq + 8, rq - lq - 8));
    }
  }
  *out = std::move(g);
  return true;
}

}  // namespace tamari
