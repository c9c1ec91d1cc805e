#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "skein/ratfn.hpp"

namespace skein {

// Ordered JSON keeps key order deterministic; together with canonical forms
// the encoded output is byte-stable for equal inputs.
using Json = nlohmann::ordered_json;

inline Json to_json(const BiLaurent& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["a_exp"] = e.a;
        t["s_exp"] = e.s;
        t["num"] = mpz_class(c.get_num()).get_str();
        t["den"] = mpz_class(c.get_den()).get_str();
        terms.push_back(std::move(t));
    }
    return terms;
}

inline BiLaurent bilaurent_from_json(const Json& j) {
    BiLaurent p;
    for (const auto& t : j) {
        Rat c(mpz_class(t.at("num").get<std::string>()), mpz_class(t.at("den").get<std::string>()));
        c.canonicalize();
        p.add_term(Exp{t.at("a_exp").get<int32_t>(), t.at("s_exp").get<int32_t>()}, c);
    }
    return p;
}

inline Json to_json(const RatFn& r) {
    Json j;
    j["num"] = to_json(r.num());
    j["den"] = to_json(r.den());
    return j;
}

inline RatFn ratfn_from_json(const Json& j) {
    return RatFn(bilaurent_from_json(j.at("num")), bilaurent_from_json(j.at("den")));
}

}  // namespace skein
