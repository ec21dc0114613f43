#ifndef MULTIELIM_SYSTEM_IO_HPP
#define MULTIELIM_SYSTEM_IO_HPP

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "multielim/mpoly.hpp"

namespace multielim {

// System wire format:
// {"dims":[n1,...,nr],
//  "field":"Q"|"Fp:<p>",
//  "polys":[{"degree":[d1,...,dr],
//            "terms":[{"exps":[[...block1...],...],"coeff":"<string>"}]}]}

template <class K>
nlohmann::json system_to_json(const PolySystem<K>& f) {
    const GradedStructure& s = *f.structure();
    nlohmann::json out;
    out["dims"] = s.dims();
    if constexpr (std::is_same_v<K, Rational>) {
        out["field"] = "Q";
    } else {
        out["field"] = "Fp:" + std::to_string(f.zero_element().modulus());
    }
    out["polys"] = nlohmann::json::array();
    for (int i = 0; i < f.size(); ++i) {
        nlohmann::json jp;
        jp["degree"] = s.degree(i).c;
        jp["terms"] = nlohmann::json::array();
        for (const auto& [e, c] : f[i].terms()) {
            nlohmann::json jt;
            std::vector<std::vector<int>> blocks;
            for (int j = 0; j < s.r(); ++j) {
                std::vector<int> block;
                for (int k = 0; k <= s.dim(j); ++k)
                    block.push_back(e[static_cast<std::size_t>(s.var_index(j, k))]);
                blocks.push_back(std::move(block));
            }
            jt["exps"] = blocks;
            jt["coeff"] = c.str();
            jp["terms"].push_back(std::move(jt));
        }
        out["polys"].push_back(std::move(jp));
    }
    return out;
}

template <class K>
PolySystem<K> system_from_json_typed(const nlohmann::json& j, const K& zero) {
    const std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    std::vector<MultiDegree> degrees;
    for (const auto& jp : j.at("polys"))
        degrees.emplace_back(jp.at("degree").get<std::vector<int>>());
    StructurePtr s = make_structure(dims, degrees);

    std::vector<MultiPoly<K>> polys;
    for (int i = 0; i < s->poly_count(); ++i) {
        const auto& jp = j.at("polys").at(static_cast<std::size_t>(i));
        MultiPoly<K> p(s, s->degree(i), zero);
        for (const auto& jt : jp.at("terms")) {
            const auto blocks = jt.at("exps").get<std::vector<std::vector<int>>>();
            if (static_cast<int>(blocks.size()) != s->r())
                throw std::invalid_argument("term exps must list one block per factor");
            ExpVec e(static_cast<std::size_t>(s->var_count()), 0);
            for (int b = 0; b < s->r(); ++b) {
                if (static_cast<int>(blocks[static_cast<std::size_t>(b)].size()) != s->dim(b) + 1)
                    throw std::invalid_argument("term exps block arity mismatch");
                for (int k = 0; k <= s->dim(b); ++k)
                    e[static_cast<std::size_t>(s->var_index(b, k))] =
                        blocks[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
            }
            p.add_term(e, parse_element(jt.at("coeff").get<std::string>(), zero));
        }
        polys.push_back(std::move(p));
    }
    return PolySystem<K>(s, std::move(polys));
}

using AnySystem = std::variant<PolySystem<Rational>, PolySystem<Fp>>;

inline AnySystem system_from_json(const nlohmann::json& j) {
    const FieldSpec spec = FieldSpec::parse(j.at("field").get<std::string>());
    if (spec.rational) return system_from_json_typed(j, Rational());
    return system_from_json_typed(j, Fp(0, spec.p));
}

} // namespace multielim

#endif
