#include "waring/json_io.hpp"

#include "waring/errors.hpp"

namespace waring {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json{{"re", z.re.str()}, {"im", z.im.str()}}; }

Complex complex_from_json(const json& j, mpfr_prec_t prec) {
    return {BigFloat::from_string(j.at("re").get<std::string>(), prec),
            BigFloat::from_string(j.at("im").get<std::string>(), prec)};
}

}  // namespace

json decomposition_to_json(const WaringDecomposition& dec) {
    json terms = json::array();
    if (dec.exact) {
        for (const ExactTerm& t : dec.exact_terms)
            terms.push_back(json{{"alpha", to_string(t.alpha)},
                                 {"form", json::array({to_string(t.form.c0), to_string(t.form.c1)})}});
    } else {
        for (const NumericTerm& t : dec.numeric_terms)
            terms.push_back(json{{"alpha", complex_to_json(t.alpha)},
                                 {"form", json::array({complex_to_json(t.c0), complex_to_json(t.c1)})}});
    }
    json j{{"degree", dec.target.degree()},
           {"field", dec.field == Field::real ? "real" : "complex"},
           {"exact", dec.exact},
           {"residual", dec.exact ? "0" : dec.residual.str()},
           {"terms", std::move(terms)}};
    if (!dec.exact) j["precision"] = static_cast<long>(dec.precision);
    return j;
}

WaringDecomposition decomposition_from_json(const json& j) {
    WaringDecomposition dec;
    int degree = j.at("degree").get<int>();
    dec.target = BinaryForm(degree);
    dec.field = j.at("field").get<std::string>() == "real" ? Field::real : Field::complex;
    dec.exact = j.at("exact").get<bool>();
    dec.precision = dec.exact ? kDefaultPrecision : static_cast<mpfr_prec_t>(j.at("precision").get<long>());
    dec.residual = dec.exact ? BigFloat(dec.precision)
                             : BigFloat::from_string(j.at("residual").get<std::string>(), dec.precision);
    for (const json& t : j.at("terms")) {
        const json& form = t.at("form");
        if (form.size() != 2) throw InputError("decomposition term form must have two coordinates");
        if (dec.exact) {
            dec.exact_terms.push_back(
                {rational_from_string(t.at("alpha").get<std::string>()),
                 LinearForm(rational_from_string(form[0].get<std::string>()),
                            rational_from_string(form[1].get<std::string>()))});
        } else {
            dec.numeric_terms.push_back({complex_from_json(t.at("alpha"), dec.precision),
                                         complex_from_json(form[0], dec.precision),
                                         complex_from_json(form[1], dec.precision)});
        }
    }
    return dec;
}

json certificate_to_json(const LowerBoundCertificate& cert) {
    return json{{"a", cert.a},
                {"b", cert.b},
                {"r", cert.r},
                {"gap", json::array({cert.gap_start, cert.gap_end})}};
}

LowerBoundCertificate certificate_from_json(const json& j) {
    LowerBoundCertificate cert;
    cert.a = j.at("a").get<int>();
    cert.b = j.at("b").get<int>();
    cert.r = j.at("r").get<int>();
    const json& gap = j.at("gap");
    if (gap.size() != 2) throw InputError("certificate gap must be [start, end]");
    cert.gap_start = gap[0].get<int>();
    cert.gap_end = gap[1].get<int>();
    return cert;
}

json rank_to_json(const RankResult& res) {
    json j{{"rank", res.rank},
           {"field", res.field == Field::real ? "real" : "complex"},
           {"min_apolar_degree", res.min_apolar_degree},
           {"witness", decomposition_to_json(res.witness)}};
    if (!res.lower_bound_evidence.empty()) {
        json certs = json::array();
        for (const LowerBoundCertificate& c : res.lower_bound_evidence) certs.push_back(certificate_to_json(c));
        j["lower_bounds"] = std::move(certs);
    }
    return j;
}

}  // namespace waring
