#include "gfl/certificate_io.hpp"

namespace gfl {

using nlohmann::json;

json rational_matrix_to_json(const RationalMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m(i, j).str());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

RationalMatrix rational_matrix_from_json(const json& j) {
    RationalMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& entries = j.at("entries");
    if (entries.size() != m.rows() * m.cols())
        throw std::invalid_argument("matrix entry count does not match rows x cols");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t jj = 0; jj < m.cols(); ++jj)
            m(i, jj) = Rational::parse(entries[idx++].get<std::string>());
    return m;
}

json complex_matrix_to_json(const ComplexMatrix& m) {
    json re = json::array(), im = json::array();
    for (const auto& z : m.entries) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"re", re}, {"im", im}};
}

ComplexMatrix complex_matrix_from_json(const json& j) {
    ComplexMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != m.entries.size() || im.size() != m.entries.size())
        throw std::invalid_argument("complex matrix parts do not match rows x cols");
    for (std::size_t i = 0; i < m.entries.size(); ++i)
        m.entries[i] = {re[i].get<double>(), im[i].get<double>()};
    return m;
}

json certificate_to_json(const ObstructionCertificate& cert) {
    json gamma = json::array();
    for (const auto& g : cert.gamma) {
        if (g.num().fits_slong_p())
            gamma.push_back(static_cast<std::int64_t>(g.num().get_si()));
        else
            gamma.push_back(g.num().get_str());
    }
    return json{{"conjecture", cert.conjecture},
                {"m", cert.m},
                {"k", cert.k},
                {"a", cert.a.str()},
                {"b", cert.b.str()},
                {"p", cert.p},
                {"q", cert.q},
                {"rank", cert.rank},
                {"gamma", gamma},
                {"matrix", rational_matrix_to_json(cert.phi)},
                {"verified", cert.verified}};
}

ObstructionCertificate certificate_from_json(const json& j) {
    ObstructionCertificate cert;
    cert.conjecture = j.at("conjecture").get<int>();
    cert.m = j.at("m").get<long>();
    cert.k = j.at("k").get<long>();
    cert.a = Rational::parse(j.at("a").get<std::string>());
    cert.b = Rational::parse(j.at("b").get<std::string>());
    cert.p = j.at("p").get<long>();
    cert.q = j.at("q").get<long>();
    cert.rank = j.at("rank").get<std::size_t>();
    for (const auto& g : j.at("gamma")) {
        if (g.is_string())
            cert.gamma.push_back(Rational::parse(g.get<std::string>()));
        else
            cert.gamma.push_back(Rational(g.get<std::int64_t>()));
    }
    cert.phi = rational_matrix_from_json(j.at("matrix"));
    cert.verified = j.at("verified").get<bool>();
    return cert;
}

json record_to_json(const ScanRecord& rec) {
    json j{{"a", rec.a.str()},
           {"b", rec.b.str()},
           {"p", rec.p},
           {"q", rec.q},
           {"min_sigma", rec.min_sigma},
           {"argmin_x", rec.argmin_x},
           {"argmin_t", rec.argmin_t},
           {"verdict", to_string(rec.verdict)},
           {"borderline", rec.borderline}};
    if (rec.certificate) j["certificate"] = certificate_to_json(*rec.certificate);
    return j;
}

}  // namespace gfl
