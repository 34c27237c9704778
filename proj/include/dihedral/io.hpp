#pragma once

/// JSON and CSV rendering for the report types.  JSON uses insertion-ordered
/// objects so identical inputs always serialize byte-identically.

#include <string>

#include <json.hpp>

#include "dihedral/additive.hpp"
#include "dihedral/claims.hpp"
#include "dihedral/group.hpp"
#include "dihedral/residue_set.hpp"
#include "dihedral/stability.hpp"
#include "dihedral/survey.hpp"
#include "dihedral/word_length.hpp"

namespace dihedral {

using json = nlohmann::ordered_json;

inline json to_json(const ResidueSet& s) {
    return {{"n", s.modulus()}, {"members", s.members()}};
}

inline json to_json(const GeneratingSet& S) {
    return {{"n", S.modulus()}, {"a", S.a()}, {"b", S.b()}};
}

inline json to_json(const WordLengthTable& t) {
    return {{"n", t.n},
            {"S", to_json(t.S)},
            {"engine", engine_name(t.engine)},
            {"rotation_lengths", t.rotation_lengths},
            {"reflection_lengths", t.reflection_lengths}};
}

/// element,rot,refl_flag,length — one row per element, rotations first.
inline std::string to_csv(const WordLengthTable& t) {
    std::string out = "element,rot,refl_flag,length\n";
    for (int i = 0; i < t.n; ++i)
        out += to_string(rotation(t.n, i)) + "," + std::to_string(i) + ",0," +
               std::to_string(t.rotation_lengths[i]) + "\n";
    for (int i = 0; i < t.n; ++i)
        out += to_string(reflection(t.n, i)) + "," + std::to_string(i) + ",1," +
               std::to_string(t.reflection_lengths[i]) + "\n";
    return out;
}

inline json to_json(const WPrimeSequence& seq) {
    json levels = json::array();
    for (const auto& level : seq.levels) levels.push_back(level.members());
    return {{"n", seq.n}, {"S", to_json(seq.S)}, {"levels", levels}};
}

inline json to_json(const KneserReport& r) {
    return {{"n", r.n},
            {"A", r.A.members()},
            {"B", r.B.members()},
            {"H", r.H.members()},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"hypothesis_met", r.hypothesis_met},
            {"identity_holds", r.identity_holds}};
}

inline json to_json(const LambdaReport& r) {
    json j{{"n", r.n},
           {"S", to_json(r.given)},
           {"canonical", {{"a", r.canonical.a()}, {"b", r.canonical.b()}}},
           {"negation_canonical", {{"a", r.negation_canonical.first}, {"b", r.negation_canonical.second}}},
           {"engine", engine_name(r.engine)},
           {"lambda1", r.lambda1},
           {"witness", {{"g", to_string(r.witness.g)}, {"s", to_string(r.witness.s)}}},
           {"max_reflection_length", r.max_reflection_length},
           {"bound_n_half", r.bound_n_half},
           {"prime_condition_met", r.prime_condition_met}};
    if (r.bound_prime_third) j["bound_prime_third"] = *r.bound_prime_third;
    return j;
}

inline std::string csv_header_lambda() { return "n,a,b,lambda1,max_refl_len,bound,tight\n"; }

inline std::string to_csv_row(const LambdaReport& r) {
    return std::to_string(r.n) + "," + std::to_string(r.given.a()) + "," + std::to_string(r.given.b()) +
           "," + std::to_string(r.lambda1) + "," + std::to_string(r.max_reflection_length) + "," +
           std::to_string(r.bound_n_half) + "," + (r.lambda1 == r.bound_n_half ? "true" : "false") + "\n";
}

inline json to_json(const SharpnessReport& r) {
    return {{"n", r.n}, {"measured", r.measured}, {"predicted", r.predicted}, {"match", r.match}};
}

inline std::string to_csv_row(const SharpnessReport& r) {
    return std::to_string(r.n) + ",1," + std::to_string(r.n - 1) + "," + std::to_string(r.measured) +
           "," + std::to_string(r.measured) + "," + std::to_string(r.predicted) + "," +
           (r.match ? "true" : "false") + "\n";
}

inline json to_json(const SqrtBoundReport& r) {
    return {{"n", r.n}, {"max_length", r.max_length}, {"bound", r.bound}, {"holds", r.holds}};
}

inline std::string csv_header_survey() {
    return "n,a,b,lambda1,max_refl_len,bound,tight,prime_condition_met\n";
}

inline std::string to_csv_row(const SurveyRow& r) {
    return std::to_string(r.n) + "," + std::to_string(r.a) + "," + std::to_string(r.b) + "," +
           std::to_string(r.lambda1) + "," + std::to_string(r.max_reflection_length) + "," +
           std::to_string(r.bound) + "," + (r.tight ? "true" : "false") + "," +
           (r.prime_condition_met ? "true" : "false") + "\n";
}

inline json to_json(const StabilizerCounterexample& e) {
    return {{"n", e.n}, {"a", e.a}, {"b", e.b}, {"l", e.level}, {"stabilizer", e.stab.members()}};
}

inline json to_json(const ConjectureScanResult& r) {
    json cx = json::array();
    for (const auto& e : r.counterexamples) cx.push_back(to_json(e));
    return {{"n_range", std::to_string(r.n_min) + ".." + std::to_string(r.n_max)},
            {"sets_scanned", r.sets_scanned},
            {"levels_checked", r.levels_checked},
            {"non_generating_skipped", r.non_generating_skipped},
            {"counterexamples", cx},
            {"confirmed", r.confirmed}};
}

inline json to_json(const VerificationReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return {{"claim", r.claim},
            {"pass", r.pass},
            {"cases_checked", r.cases_checked},
            {"params", params},
            {"witnesses", r.witnesses},
            {"witnesses_total", r.witnesses_total}};
}

} // namespace dihedral
