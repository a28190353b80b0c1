/*
   Copyright 2026 The lefschetz authors

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

#ifndef LEFSCHETZ_REPORT_JSON_HPP
#define LEFSCHETZ_REPORT_JSON_HPP

// JSON serialization of locus reports. Key order is fixed and polynomial
// printing is deterministic, so identical inputs and seeds produce
// byte-identical documents.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "lefschetz/conic_locus.hpp"
#include "lefschetz/version.hpp"

namespace lefschetz {

using Json = nlohmann::ordered_json;

namespace report_detail {

// Degrees small enough for a JSON number stay numeric; anything wider is
// emitted as a decimal string.
inline Json big_int_json(const BigInt& n) {
    static const BigInt lo(std::numeric_limits<std::int64_t>::min());
    static const BigInt hi(std::numeric_limits<std::int64_t>::max());
    if (n >= lo && n <= hi) return Json(n.convert_to<std::int64_t>());
    return Json(n.str());
}

template <Field K>
Json ideal_json(const Ideal<K>& I) {
    Json out = Json::array();
    for (const auto& g : I.gens) out.push_back(g.to_string());
    return out;
}

}  // namespace report_detail

template <Field K>
Json locus_report_json(const LocusReport<K>& rep, const std::string& field,
                       const std::vector<std::uint64_t>& seeds) {
    Json j;
    j["version"] = kVersion;
    j["field"] = field;
    j["seeds"] = seeds;
    if (rep.type)
        j["type"] = Json::array({rep.type->d1, rep.type->d2, rep.type->d3});
    else
        j["type"] = nullptr;
    j["hf"] = rep.hf;
    j["e"] = rep.e;
    j["mode"] = rep.mode == LocusMode::middle ? "middle" : "full";
    j["wlp_certified"] = rep.wlp_certified;
    Json ideals = Json::object();
    for (const auto& [i, I] : rep.ideals)
        ideals[std::to_string(i)] = report_detail::ideal_json(I);
    j["ideals"] = ideals;
    j["total_ideal"] = report_detail::ideal_json(rep.total);
    j["codim"] = rep.codim;
    j["degree"] = rep.degree ? report_detail::big_int_json(*rep.degree) : Json(nullptr);
    j["expected_codim"] = rep.expected_codim ? Json(*rep.expected_codim) : Json(nullptr);
    return j;
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_REPORT_JSON_HPP
