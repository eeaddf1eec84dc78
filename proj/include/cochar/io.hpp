#pragma once

#include <string>

#include <json.hpp>

#include "cochar/groth.hpp"

namespace cochar {

// Group files: {"factors": [{"degree": d, "rank": n}, ...]}
GroupSpec parse_group_json(const std::string& text);
GroupSpec load_group_file(const std::string& path);

// Rep files: {"regime": "regular", "lines": [{"id": s, "twist": "p/q"}...],
//             "borel": [{"ordering": [..], "coeff": c}...]}
//         or {"regime": "cuspidal", "levi": [root indices], "lines": [...]}
//         or {"fixture": "gl4", "class": "111"}
FormalRep parse_rep_json(const RootDatum& rd, const std::string& text);
FormalRep load_rep_file(const RootDatum& rd, const std::string& path);

nlohmann::json pair_json(const RootDatum& rd, const CocharacterPair& p);
nlohmann::json poset_json(const RootDatum& rd, const PairPoset& poset);
nlohmann::json isocrystal_json(const RootDatum& rd, const IsocrystalClass& b);
nlohmann::json pair_sum_json(const RootDatum& rd, const SignedPairSum& sum);
nlohmann::json eval_json(const EvalResult& res);

std::string galois_term_string(const GaloisTerm& g);
std::string eval_string(const EvalResult& res);
std::string isocrystal_string(const RootDatum& rd, const IsocrystalClass& b);
std::string pair_sum_string(const RootDatum& rd, const SignedPairSum& sum);

}  // namespace cochar
