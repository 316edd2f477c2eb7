#include "extensor/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "extensor/youngrep.hpp"

namespace extensor {

namespace {

std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(" + ", pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 3;
  }
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(' ');
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(' ');
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string ga_to_text(const GAElem& g) { return g.to_string(); }

GAElem ga_from_text(const std::string& s) {
  GAElem g;
  std::string body = trim(s);
  if (body == "0" || body.empty()) return g;
  for (const auto& term : split_terms(body)) {
    auto star = term.find('*');
    if (star == std::string::npos) throw std::invalid_argument("ga_from_text: missing '*'");
    Rat c = rat_parse(trim(term.substr(0, star)));
    Perm p = Perm::parse(trim(term.substr(star + 1)));
    g.add_term(p, c);
  }
  return g;
}

nlohmann::ordered_json ga_to_json(const GAElem& g) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [s, c] : g.terms()) {
    nlohmann::ordered_json t;
    t["perm"] = s.cycles_str();
    t["coeff"] = rat_str(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

GAElem ga_from_json(const nlohmann::json& j) {
  GAElem g;
  for (const auto& t : j) g.add_term(Perm::parse(t.at("perm").get<std::string>()),
                                     rat_parse(t.at("coeff").get<std::string>()));
  return g;
}

std::string lop_to_text(const LOp& op) { return op.to_string(); }

LOp lop_from_text(const std::string& s, int n) {
  LOp op = LOp::lop_zero(n);
  std::string body = trim(s);
  if (body == "0" || body.empty()) return op;
  for (const auto& term : split_terms(body)) {
    auto star = term.find(" * ");
    Rat c = 1;
    std::string rest = term;
    if (star != std::string::npos) {
      c = rat_parse(trim(term.substr(0, star)));
      rest = term.substr(star + 3);
    }
    Word left, right;
    Perm mid;
    std::stringstream ss(rest);
    std::string piece;
    // Pieces separated by " . ": an e-word, a cycle form, an e*-word.
    size_t pos = 0;
    std::vector<std::string> pieces;
    while (pos <= rest.size()) {
      size_t next = rest.find(" . ", pos);
      if (next == std::string::npos) {
        pieces.push_back(trim(rest.substr(pos)));
        break;
      }
      pieces.push_back(trim(rest.substr(pos, next - pos)));
      pos = next + 3;
    }
    for (const auto& pc : pieces) {
      if (pc.empty()) continue;
      if (pc[0] == '(') {
        mid = Perm::parse(pc);
        continue;
      }
      std::stringstream ps(pc);
      std::string tok;
      while (ps >> tok) {
        if (tok.rfind("e*", 0) == 0)
          right.push_back(std::stoi(tok.substr(2)));
        else if (tok.rfind("e", 0) == 0)
          left.push_back(std::stoi(tok.substr(1)));
        else
          throw std::invalid_argument("lop_from_text: bad token '" + tok + "'");
      }
    }
    // Displayed e-word is in product order; stored order is reversed.
    std::reverse(left.begin(), left.end());
    op.add_term(left, mid, right, c);
  }
  return op;
}

nlohmann::ordered_json lop_to_json(const LOp& op) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [k, c] : op.terms()) {
    nlohmann::ordered_json t;
    t["vectors"] = k.left;
    t["perm"] = k.mid.cycles_str();
    t["covectors"] = k.right;
    t["coeff"] = rat_str(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

LOp lop_from_json(const nlohmann::json& j, int n) {
  LOp op = LOp::lop_zero(n);
  for (const auto& t : j) {
    Word left = t.at("vectors").get<Word>();
    Word right = t.at("covectors").get<Word>();
    op.add_term(left, Perm::parse(t.at("perm").get<std::string>()), right,
                rat_parse(t.at("coeff").get<std::string>()));
  }
  return op;
}

nlohmann::ordered_json pbw_to_json(const PBW& u) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : u.terms()) {
    nlohmann::ordered_json t;
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : m) gens.push_back(nlohmann::ordered_json::array({g.i, g.j}));
    t["monomial"] = gens;
    t["coeff"] = rat_str(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

PBW pbw_from_json(const nlohmann::json& j) {
  PBW u;
  for (const auto& t : j) {
    PBWMono m;
    for (const auto& g : t.at("monomial")) m.push_back(PBWGen{g.at(0).get<int>(), g.at(1).get<int>()});
    u.add_term(std::move(m), rat_parse(t.at("coeff").get<std::string>()));
  }
  return u;
}

nlohmann::ordered_json jm_spectrum_json(const Partition& lambda) {
  nlohmann::ordered_json j;
  j["lambda"] = lambda.to_string();
  auto tabs = std_tableaux(lambda);
  auto names = nlohmann::ordered_json::array();
  for (const auto& t : tabs) names.push_back(t.to_string());
  j["tableaux"] = names;
  auto spec = jm_spectrum(lambda);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [key, val] : spec) {
    nlohmann::ordered_json e;
    e["tableau"] = key.first;
    e["i"] = key.second;
    e["content"] = rat_str(val);
    arr.push_back(std::move(e));
  }
  j["spectrum"] = arr;
  return j;
}

}  // namespace extensor
