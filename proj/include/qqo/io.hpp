// Copyright 2026 The qqo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Tensor files, reports and trajectory CSV.
//
// Tensor file: a JSON object with exactly one of
//   {"b": [[[b_111, b_112, b_113], [b_121, ...], ...], ...]}   nesting m -> l -> k
//   {"epsilon": e}                                             the epsilon family
//
// Reports are JSON objects with "schema": "v1" and keys in insertion order.

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qqo/dynamics.hpp"
#include "qqo/epsilon_family.hpp"
#include "qqo/errors.hpp"
#include "qqo/ks_certifier.hpp"
#include "qqo/qqo_core.hpp"

namespace qqo {

using Json = nlohmann::ordered_json;

inline constexpr const char *kReportSchema = "v1";

/// Parsed tensor file: the tensor, plus the parameter when given as {"epsilon": e}.
struct TensorInput {
    CoeffTensor b;
    std::optional<EpsilonParam> epsilon;
};

inline TensorInput parse_tensor_json(const std::string &text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(std::string("tensor file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw InputError("tensor file must hold a JSON object");
    }
    const bool has_b = j.contains("b");
    const bool has_eps = j.contains("epsilon");
    if (has_b == has_eps) {
        throw InputError("tensor file must contain exactly one of \"b\" or \"epsilon\"");
    }
    if (j.size() != 1) {
        throw InputError("tensor file has unexpected keys");
    }
    if (has_eps) {
        const Json &e = j["epsilon"];
        if (!e.is_number()) {
            throw InputError("\"epsilon\" must be a number");
        }
        const EpsilonParam p(e.get<double>());
        return {build_coeff_tensor(p), p};
    }
    const Json &b = j["b"];
    auto fail = [] { throw InputError("\"b\" must be a 3x3x3 array of numbers"); };
    if (!b.is_array() || b.size() != 3) {
        fail();
    }
    CoeffTensor::Storage s{};
    for (std::size_t m = 0; m < 3; m++) {
        if (!b[m].is_array() || b[m].size() != 3) {
            fail();
        }
        for (std::size_t l = 0; l < 3; l++) {
            if (!b[m][l].is_array() || b[m][l].size() != 3) {
                fail();
            }
            for (std::size_t k = 0; k < 3; k++) {
                if (!b[m][l][k].is_number()) {
                    fail();
                }
                s[m][l][k] = b[m][l][k].get<double>();
            }
        }
    }
    return {CoeffTensor(s), std::nullopt};
}

inline TensorInput load_tensor_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open tensor file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_tensor_json(ss.str());
}

inline Json tensor_to_json(const CoeffTensor &b) {
    Json arr = Json::array();
    for (std::size_t m = 0; m < 3; m++) {
        Json plane = Json::array();
        for (std::size_t l = 0; l < 3; l++) {
            plane.push_back({b.at(m, l, 0), b.at(m, l, 1), b.at(m, l, 2)});
        }
        arr.push_back(plane);
    }
    return Json{{"b", arr}};
}

inline Json to_json(const RVec3 &v) {
    return Json::array({v[0], v[1], v[2]});
}

/// Complex vectors are written as [[re, im], [re, im], [re, im]].
inline Json to_json(const CVec3 &v) {
    Json out = Json::array();
    for (const cplx &z : v) {
        out.push_back({z.real(), z.imag()});
    }
    return out;
}

inline Json to_json(const StatePreservationReport &r) {
    return {{"passes", r.passes}, {"max_norm", r.max_norm}, {"margin", r.margin},
            {"f", to_json(r.f.vec())}, {"p", to_json(r.p.vec())}};
}

inline Json to_json(const PositivityReport &r) {
    return {{"is_positive", r.is_positive}, {"margin", r.margin}, {"worst_w", to_json(r.worst_w)}};
}

inline Json to_json(const CpReport &r) {
    return {{"is_cp", r.is_cp}, {"min_choi_eig", r.min_choi_eig}};
}

inline Json to_json(const std::optional<KSWitness> &w) {
    if (!w) {
        return {{"violation", false}, {"note", "no violation found within the search budget"}};
    }
    return {{"violation", true}, {"min_eig", w->min_eig}, {"w", to_json(w->w)},
            {"params", Json::array({w->params[0], w->params[1], w->params[2], w->params[3]})}};
}

inline Json to_json(const KSNecessaryReport &r) {
    Json j{{"holds11", r.holds11}, {"holds2", r.holds2}, {"lhs11", r.lhs11}, {"rhs11", r.rhs11},
           {"lhs2", r.lhs2},       {"rhs2", r.rhs2}};
    if (r.abcd) {
        j["abcd"] = Json::array({(*r.abcd)[0], (*r.abcd)[1], (*r.abcd)[2], (*r.abcd)[3]});
    } else {
        j["abcd"] = nullptr;
    }
    j["reduced"] = {{"holds", r.holds_reduced}, {"scalar", r.reduced_scalar}, {"vector_norm", r.reduced_vector_norm}};
    return j;
}

inline Json to_json(const BallInvarianceReport &r) {
    return {{"invariant", r.invariant}, {"worst_norm", r.worst_norm}, {"witness", to_json(r.witness)}};
}

inline Json to_json(const FixedPointReport &r) {
    Json pts = Json::array();
    for (std::size_t i = 0; i < r.points.size(); i++) {
        pts.push_back({{"point", to_json(r.points[i])}, {"residual", r.residuals[i]}});
    }
    Json sweep = Json::array();
    for (const auto &p : r.sweep_points) {
        sweep.push_back(to_json(p));
    }
    return {{"points", pts}, {"sweep_points", sweep}, {"sweep_agrees", r.sweep_agrees}};
}

inline Json trajectory_summary(const Trajectory &t) {
    return {{"converged", t.converged},
            {"stationary", t.stationary},
            {"steps", t.steps.empty() ? 0 : t.steps.back().index},
            {"final_rho", t.steps.empty() ? 0.0 : t.steps.back().rho},
            {"limit", to_json(t.limit)}};
}

/// Writes "step,f1,f2,f3,rho" rows with a one-line header.
inline void write_trajectory_csv(std::ostream &out, const Trajectory &t) {
    out << "step,f1,f2,f3,rho\n";
    out << std::setprecision(17);
    for (const auto &s : t.steps) {
        out << s.index << ',' << s.f[0] << ',' << s.f[1] << ',' << s.f[2] << ',' << s.rho << '\n';
    }
}

/// New report object carrying the schema tag and the command name.
inline Json make_report(const std::string &command) {
    return {{"schema", kReportSchema}, {"command", command}};
}

}  // namespace qqo
