#include "cochar/io.hpp"

#include <fstream>
#include <sstream>

namespace cochar {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CuspidalLine parse_line(const json& j) {
  return {j.at("id").get<std::string>(), parse_rat(j.at("twist").get<std::string>())};
}

json line_json(const CuspidalLine& l) {
  return {{"id", l.id}, {"twist", rat_to_string(l.twist)}};
}

json rat_vec_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(rat_to_string(x));
  return out;
}

}  // namespace

GroupSpec parse_group_json(const std::string& text) {
  json j = json::parse(text);
  GroupSpec spec;
  for (const json& f : j.at("factors"))
    spec.factors.push_back({f.value("degree", 1), f.at("rank").get<int>()});
  if (spec.factors.empty()) throw std::invalid_argument("group: no factors");
  for (const GroupFactor& f : spec.factors)
    if (f.degree < 1 || f.rank < 1) throw std::invalid_argument("group: bad factor");
  return spec;
}

GroupSpec load_group_file(const std::string& path) { return parse_group_json(slurp(path)); }

FormalRep parse_rep_json(const RootDatum& rd, const std::string& text) {
  json j = json::parse(text);
  if (j.contains("fixture")) {
    std::string name = j.at("fixture").get<std::string>();
    if (name != "appendixA" && name != "gl4")
      throw std::invalid_argument("rep: unknown fixture");
    return fixture_rep(rd, gl4_fixture(), j.at("class").get<std::string>());
  }
  std::vector<CuspidalLine> lines;
  for (const json& l : j.at("lines")) lines.push_back(parse_line(l));
  std::string regime = j.at("regime").get<std::string>();
  if (regime == "regular") {
    std::map<std::vector<int>, long long> borel;
    for (const json& t : j.at("borel"))
      borel[t.at("ordering").get<std::vector<int>>()] += t.value("coeff", 1LL);
    return make_regular(rd, std::move(lines), std::move(borel));
  }
  if (regime == "cuspidal") {
    LeviSet supp;
    for (int r : j.at("levi").get<std::vector<int>>()) supp.insert(r);
    return make_cuspidal(rd, supp, std::move(lines));
  }
  throw std::invalid_argument("rep: unknown regime " + regime);
}

FormalRep load_rep_file(const RootDatum& rd, const std::string& path) {
  return parse_rep_json(rd, slurp(path));
}

json pair_json(const RootDatum& rd, const CocharacterPair& p) {
  return {{"levi", std::vector<int>(p.S.begin(), p.S.end())},
          {"mu", p.mu},
          {"label", pair_label(rd, p)}};
}

json poset_json(const RootDatum& rd, const PairPoset& poset) {
  json nodes = json::array();
  for (const CocharacterPair& p : poset.nodes) nodes.push_back(pair_json(rd, p));
  json edges = json::array();
  for (auto [lo, hi] : poset.edges) edges.push_back({lo, hi});
  return {{"nodes", nodes}, {"edges", edges}};
}

json isocrystal_json(const RootDatum& rd, const IsocrystalClass& b) {
  return {{"ambient", std::vector<int>(b.ambient.begin(), b.ambient.end())},
          {"levi", std::vector<int>(b.levi.begin(), b.levi.end())},
          {"newton", rat_vec_json(b.newton)},
          {"kappa", b.kappa}};
}

json pair_sum_json(const RootDatum& rd, const SignedPairSum& sum) {
  json terms = json::array();
  for (const auto& [p, c] : sum.coeff) {
    json t = pair_json(rd, p);
    t["coeff"] = c;
    terms.push_back(t);
  }
  return {{"terms", terms}};
}

std::string galois_term_string(const GaloisTerm& g) {
  std::ostringstream ss;
  ss << "[";
  for (size_t f = 0; f < g.entries.size(); ++f) {
    if (f) ss << " ; ";
    for (size_t k = 0; k < g.entries[f].size(); ++k) {
      if (k) ss << " | ";
      if (g.entries[f][k].empty()) ss << "1";
      for (size_t t = 0; t < g.entries[f][k].size(); ++t) {
        if (t) ss << "*";
        ss << g.entries[f][k][t].first << "^" << g.entries[f][k][t].second;
      }
    }
  }
  ss << "](" << rat_to_string(g.tate) << ")";
  if (g.orbit_size != 1) ss << "{orbit " << g.orbit_size << "}";
  return ss.str();
}

namespace {

std::string rep_key_string(const RepKey& key) {
  std::ostringstream ss;
  if (const auto* o = std::get_if<std::vector<int>>(&key)) {
    ss << "(";
    for (int x : *o) ss << x;
    ss << ")";
  } else {
    const auto& ik = std::get<InducedKey>(key);
    ss << "I(";
    for (size_t f = 0; f < ik.size(); ++f) {
      if (f) ss << " ; ";
      for (size_t t = 0; t < ik[f].size(); ++t) {
        if (t) ss << ",";
        ss << ik[f][t].second.id << "(" << rat_to_string(ik[f][t].second.twist) << ")/"
           << ik[f][t].first;
      }
    }
    ss << ")";
  }
  return ss.str();
}

json rep_key_json(const RepKey& key) {
  if (const auto* o = std::get_if<std::vector<int>>(&key)) return {{"ordering", *o}};
  json fac = json::array();
  for (const auto& blocks : std::get<InducedKey>(key)) {
    json bs = json::array();
    for (const auto& [size, line] : blocks) bs.push_back({{"size", size}, {"line", line_json(line)}});
    fac.push_back(bs);
  }
  return {{"induced", fac}};
}

}  // namespace

json eval_json(const EvalResult& res) {
  json terms = json::array();
  for (const auto& [key, c] : res.terms) {
    json t = rep_key_json(key.first);
    t["galois"] = galois_term_string(key.second);
    t["tate"] = rat_to_string(key.second.tate);
    t["coeff"] = c;
    terms.push_back(t);
  }
  return {{"terms", terms}};
}

std::string eval_string(const EvalResult& res) {
  std::ostringstream ss;
  bool first = true;
  for (const auto& [key, c] : res.terms) {
    if (!first) ss << "\n";
    first = false;
    ss << (c >= 0 ? "+" : "") << c << " " << rep_key_string(key.first) << " (x) "
       << galois_term_string(key.second);
  }
  if (first) ss << "0";
  return ss.str();
}

std::string isocrystal_string(const RootDatum& rd, const IsocrystalClass& b) {
  std::ostringstream ss;
  ss << "nu=(";
  // One profile entry per position of each factor (the vector is Gamma-fixed).
  bool first = true;
  for (int f = 0; f < rd.num_factors(); ++f)
    for (int p = 0; p < rd.rank(f); ++p) {
      if (!first) ss << ",";
      first = false;
      ss << rat_to_string(b.newton[rd.coord(f, 0, p)]);
    }
  ss << ") kappa=(";
  for (size_t t = 0; t < b.kappa.size(); ++t) ss << (t ? "," : "") << b.kappa[t];
  ss << ")";
  return ss.str();
}

std::string pair_sum_string(const RootDatum& rd, const SignedPairSum& sum) {
  std::ostringstream ss;
  bool first = true;
  for (const auto& [p, c] : sum.coeff) {
    if (!first) ss << "\n";
    first = false;
    ss << (c >= 0 ? "+" : "") << c << " " << pair_label(rd, p);
  }
  if (first) ss << "0";
  return ss.str();
}

}  // namespace cochar
