#include "cyclicsum/serialize.hpp"

#include <stdexcept>

namespace csf {

nlohmann::json poly_to_json(const Poly& p) {
    auto out = nlohmann::json::array();
    for (const auto& [w, c] : p) {
        out.push_back({{"word", w.to_string()},
                       {"num", c.get_num().get_str()},
                       {"den", c.get_den().get_str()}});
    }
    return out;
}

Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("poly json: expected an array");
    Poly out;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("word") || !term.contains("num") || !term.contains("den"))
            throw std::invalid_argument("poly json: each term needs word, num and den");
        mpz_class num, den;
        if (num.set_str(term.at("num").get<std::string>(), 10) != 0 ||
            den.set_str(term.at("den").get<std::string>(), 10) != 0 || den == 0)
            throw std::invalid_argument("poly json: bad rational");
        Rational c(num, den);
        c.canonicalize();
        out.add_term(Word::from_string(term.at("word").get<std::string>()), c);
    }
    return out;
}

nlohmann::json index_to_json(const MultiIndex& k) { return k.parts(); }

nlohmann::json report_to_json(const CsfReport& r) {
    return {{"index", index_to_json(r.index)}, {"residual", r.residual}, {"err", r.err},
            {"tol", r.tol},                    {"N", r.cutoff},          {"pass", r.pass}};
}

nlohmann::json report_to_json(const MzsvCsfReport& r) {
    return {{"index", index_to_json(r.index)}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"residual", r.residual},
            {"tol", r.tol},                    {"N", r.cutoff}, {"pass", r.pass}};
}

} // namespace csf
