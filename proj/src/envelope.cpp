#include "nilorb/envelope.hpp"

#include "nilorb/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace nilorb {

namespace {

nlohmann::json coeff_array(const PolyQ& p)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

PolyQ poly_from_array(const nlohmann::json& arr)
{
    if (!arr.is_array()) throw std::runtime_error("coefficient list is not an array");
    std::vector<BigRat> coeffs;
    for (const auto& x : arr) {
        if (!x.is_string()) throw std::runtime_error("coefficient is not a decimal string");
        BigRat c;
        if (c.set_str(x.get<std::string>(), 10) != 0) throw std::runtime_error("bad coefficient '" + x.get<std::string>() + "'");
        c.canonicalize();
        coeffs.push_back(c);
    }
    PolyQ p(std::move(coeffs));
    if (static_cast<std::size_t>(p.degree() + 1) != arr.size()) throw std::runtime_error("coefficient list has trailing zeros");
    return p;
}

} // namespace

nlohmann::json to_json(const CountingPolynomial& p)
{
    nlohmann::json j;
    j["kind"] = std::string(1, kind_letter(p.kind));
    j["g"] = p.g;
    j["n"] = p.n;
    j["coeffs"] = coeff_array(p.value.num());
    j["degree"] = p.value.num().degree();
    if (p.kind == Kind::H) j["den_coeffs"] = coeff_array(p.value.den());
    return j;
}

CountingPolynomial counting_polynomial_from_json(const nlohmann::json& j)
{
    try {
        CountingPolynomial p;
        p.kind = parse_kind(j.at("kind").get<std::string>());
        p.g = j.at("g").get<int>();
        p.n = j.at("n").get<int>();
        PolyQ num = poly_from_array(j.at("coeffs"));
        if (num.degree() != j.at("degree").get<int>()) throw std::runtime_error("degree field disagrees with coefficients");
        if (p.kind == Kind::H) {
            p.value = RationalFunction(std::move(num), poly_from_array(j.at("den_coeffs")));
        } else {
            p.value = RationalFunction(std::move(num));
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed polynomial record: ") + e.what());
    } catch (const UsageError& e) {
        throw std::runtime_error(std::string("malformed polynomial record: ") + e.what());
    }
}

nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json j;
    j["identity"] = r.identity;
    j["g"] = r.g;
    j["N"] = r.x_order;
    j["Q"] = r.q_order;
    j["pass"] = r.passed;
    if (r.mismatch) {
        j["mismatch"] = {{"x_degree", r.mismatch->x_degree},
                         {"q_degree", r.mismatch->q_degree},
                         {"lhs", r.mismatch->lhs},
                         {"rhs", r.mismatch->rhs}};
    } else {
        j["mismatch"] = nullptr;
    }
    return j;
}

std::string to_csv(const std::vector<CountingPolynomial>& polys)
{
    std::ostringstream os;
    os << "kind,g,n,s,coeff\n";
    for (const auto& p : polys) {
        const PolyQ& poly = p.poly();
        for (int s = 0; s <= poly.degree(); ++s)
            os << kind_letter(p.kind) << ',' << p.g << ',' << p.n << ',' << s << ',' << poly.coeff(s).get_str() << '\n';
    }
    return os.str();
}

std::string canonical_dump(const nlohmann::json& j)
{
    return j.dump();
}

} // namespace nilorb
