#include "serialize.hpp"

#include <iomanip>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace serialize {

namespace {

std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) out.push_back(trimmed(field));
    return out;
}

}  // namespace

nlohmann::json rational_json(const exact::Rational& q) {
    return exact::format_rational(q);
}

nlohmann::json weight_json(const lie::Weight& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : w.entries) arr.push_back(rational_json(e));
    return arr;
}

nlohmann::json poly_json(const exact::RatPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rational_json(c));
    return arr;
}

nlohmann::json closed_form_json(const form::ClosedForm& f) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [atom, coeff] : f.coefficients)
        obj[atom.key()] = exact::format_rational(coeff);
    return obj;
}

nlohmann::json pole_list_json(const cfunc::PoleList& pl) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& term : pl.terms) {
        nlohmann::json t;
        t["sign"] = term.sign;
        t["location"] = rational_json(term.location);
        arr.push_back(t);
    }
    return arr;
}

std::string format_real(const form::Real50& x, int precision) {
    std::ostringstream os;
    os << std::setprecision(precision) << x;
    return os.str();
}

std::string format_double(double x, int precision) {
    std::ostringstream os;
    os << std::setprecision(precision) << x;
    return os.str();
}

std::vector<exact::Rational> parse_weight_list(const std::string& csv) {
    std::vector<exact::Rational> out;
    for (const auto& tok : split_commas(csv)) {
        if (tok.empty()) throw std::invalid_argument("empty weight entry in '" + csv + "'");
        out.push_back(exact::parse_rational(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty weight list");
    return out;
}

std::vector<torsion::GeodesicRecord> load_geodesics_csv(std::istream& in, int n) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("geodesic table: empty input");
    const auto header = split_commas(line);
    std::vector<std::string> expected = {"length", "prim_length"};
    for (int j = 1; j <= n; ++j) expected.push_back("theta_" + std::to_string(j));
    if (header != expected) {
        std::string want;
        for (const auto& h : expected) want += (want.empty() ? "" : ",") + h;
        throw std::invalid_argument("geodesic table: header must be '" + want + "'");
    }

    std::vector<torsion::GeodesicRecord> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trimmed(line).empty()) continue;
        const auto fields = split_commas(line);
        if (static_cast<int>(fields.size()) != n + 2)
            throw std::invalid_argument("geodesic table: line " + std::to_string(lineno) +
                                        ": expected " + std::to_string(n + 2) + " fields");
        torsion::GeodesicRecord rec;
        try {
            rec.length = std::stod(fields[0]);
            rec.primitive_length = std::stod(fields[1]);
            for (int j = 0; j < n; ++j) rec.angles.push_back(std::stod(fields[2 + j]));
        } catch (const std::exception&) {
            throw std::invalid_argument("geodesic table: line " + std::to_string(lineno) +
                                        ": unparsable number");
        }
        out.push_back(rec);
    }
    return out;
}

}  // namespace serialize
