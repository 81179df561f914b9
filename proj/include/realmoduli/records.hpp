/*
   Copyright 2026 The realmoduli authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "charformula.hpp"
#include "partition.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace realmoduli {

using nlohmann::json;

/* All big integers travel through JSON as decimal strings so results stay
   exact regardless of magnitude. */

struct CharRecord {
    int n = 0;
    Partition lambda;
    std::vector<BigInt> coefficients;  // signed coefficient of t^k at index k
    BigInt euler = 0;

    static CharRecord from_character(int n, const Partition& lambda, const GradedCharacter& chi) {
        CharRecord rec;
        rec.n = n;
        rec.lambda = lambda;
        rec.coefficients.assign(static_cast<size_t>(chi.top_degree()) + 1, BigInt(0));
        for (const auto& [k, c] : chi.signed_coeffs()) rec.coefficients[static_cast<size_t>(k)] = c;
        rec.euler = chi.euler();
        return rec;
    }

    GradedCharacter character() const {
        GradedCharacter chi;
        for (size_t k = 0; k < coefficients.size(); ++k)
            chi.set_signed_coeff(static_cast<int>(k), coefficients[k]);
        return chi;
    }
};

struct EulerRecord {
    int n = 0;
    Partition lambda;
    BigInt value = 0;
};

struct CycleIndexEntry {
    Partition lambda;
    std::string coefficient;  // rendered rational function in t
};

struct CycleIndexRecord {
    std::string family;  // pointed | extended | chr | complex
    int pbound = 0;
    std::vector<CycleIndexEntry> entries;
};

struct VerifyRecord {
    int n = 0;
    Partition lambda;
    std::string formula;
    std::string oracle;
    bool match = false;
};

inline void to_json(json& j, const CharRecord& r) {
    std::vector<std::string> coeffs;
    for (const BigInt& c : r.coefficients) coeffs.push_back(c.str());
    j = json{{"n", r.n},
             {"class", r.lambda},
             {"coefficients", coeffs},
             {"character", r.character().str()},
             {"euler", r.euler.str()}};
}

inline void from_json(const json& j, CharRecord& r) {
    r.n = j.at("n").get<int>();
    r.lambda = j.at("class").get<Partition>();
    r.coefficients.clear();
    for (const auto& c : j.at("coefficients")) r.coefficients.emplace_back(c.get<std::string>());
    r.euler = BigInt(j.at("euler").get<std::string>());
}

inline void to_json(json& j, const EulerRecord& r) {
    j = json{{"n", r.n}, {"class", r.lambda}, {"euler", r.value.str()}};
}

inline void from_json(const json& j, EulerRecord& r) {
    r.n = j.at("n").get<int>();
    r.lambda = j.at("class").get<Partition>();
    r.value = BigInt(j.at("euler").get<std::string>());
}

inline void to_json(json& j, const CycleIndexEntry& e) {
    j = json{{"class", e.lambda}, {"coefficient", e.coefficient}};
}

inline void from_json(const json& j, CycleIndexEntry& e) {
    e.lambda = j.at("class").get<Partition>();
    e.coefficient = j.at("coefficient").get<std::string>();
}

inline void to_json(json& j, const CycleIndexRecord& r) {
    j = json{{"family", r.family}, {"pbound", r.pbound}, {"entries", r.entries}};
}

inline void from_json(const json& j, CycleIndexRecord& r) {
    r.family = j.at("family").get<std::string>();
    r.pbound = j.at("pbound").get<int>();
    r.entries = j.at("entries").get<std::vector<CycleIndexEntry>>();
}

inline void to_json(json& j, const VerifyRecord& r) {
    j = json{{"n", r.n},
             {"class", r.lambda},
             {"formula", r.formula},
             {"oracle", r.oracle},
             {"match", r.match}};
}

inline void from_json(const json& j, VerifyRecord& r) {
    r.n = j.at("n").get<int>();
    r.lambda = j.at("class").get<Partition>();
    r.formula = j.at("formula").get<std::string>();
    r.oracle = j.at("oracle").get<std::string>();
    r.match = j.at("match").get<bool>();
}

/* ---- plain / csv rendering ------------------------------------------- */

inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void emit_plain(std::ostream& os, const std::vector<CharRecord>& recs) {
    for (const auto& r : recs)
        os << "n=" << r.n << " class=" << partition_str(r.lambda) << " character=" << r.character().str()
           << " euler=" << r.euler.str() << "\n";
}

/* Character table layout: one row per conjugacy class, one column per t-degree.
   Degrees missing from a shorter character are emitted as 0. */
inline void emit_csv(std::ostream& os, const std::vector<CharRecord>& recs) {
    size_t degrees = 1;
    for (const auto& r : recs) degrees = std::max(degrees, r.coefficients.size());
    os << "n,class";
    for (size_t k = 0; k < degrees; ++k) os << ",t^" << k;
    os << ",euler\n";
    for (const auto& r : recs) {
        os << r.n << "," << csv_quote(partition_str(r.lambda));
        for (size_t k = 0; k < degrees; ++k)
            os << "," << (k < r.coefficients.size() ? r.coefficients[k].str() : "0");
        os << "," << r.euler.str() << "\n";
    }
}

inline void emit_plain(std::ostream& os, const std::vector<EulerRecord>& recs) {
    for (const auto& r : recs)
        os << "n=" << r.n << " class=" << partition_str(r.lambda) << " euler=" << r.value.str() << "\n";
}

inline void emit_csv(std::ostream& os, const std::vector<EulerRecord>& recs) {
    os << "n,class,euler\n";
    for (const auto& r : recs)
        os << r.n << "," << csv_quote(partition_str(r.lambda)) << "," << r.value.str() << "\n";
}

inline void emit_plain(std::ostream& os, const CycleIndexRecord& rec) {
    os << "family=" << rec.family << " pbound=" << rec.pbound << "\n";
    for (const auto& e : rec.entries)
        os << "  " << partition_str(e.lambda) << ": " << e.coefficient << "\n";
}

inline void emit_csv(std::ostream& os, const CycleIndexRecord& rec) {
    os << "family,pbound,class,coefficient\n";
    for (const auto& e : rec.entries)
        os << rec.family << "," << rec.pbound << "," << csv_quote(partition_str(e.lambda)) << ","
           << csv_quote(e.coefficient) << "\n";
}

inline void emit_plain(std::ostream& os, const std::vector<VerifyRecord>& recs) {
    for (const auto& r : recs)
        os << "n=" << r.n << " class=" << partition_str(r.lambda) << " formula=" << r.formula
           << " oracle=" << r.oracle << " match=" << (r.match ? "yes" : "NO") << "\n";
}

inline void emit_csv(std::ostream& os, const std::vector<VerifyRecord>& recs) {
    os << "n,class,formula,oracle,match\n";
    for (const auto& r : recs)
        os << r.n << "," << csv_quote(partition_str(r.lambda)) << "," << csv_quote(r.formula) << ","
           << csv_quote(r.oracle) << "," << (r.match ? "yes" : "no") << "\n";
}

}  // namespace realmoduli
