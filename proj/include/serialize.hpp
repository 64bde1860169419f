#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "cfunc.hpp"
#include "closed_form.hpp"
#include "liedata.hpp"
#include "ratpoly.hpp"
#include "torsion.hpp"

namespace serialize {

// Exact quantities are rendered as "p/q" strings so that output is
// precision-independent and byte-stable.
nlohmann::json rational_json(const exact::Rational& q);
nlohmann::json weight_json(const lie::Weight& w);
nlohmann::json poly_json(const exact::RatPoly& p);  // ascending coefficients
nlohmann::json closed_form_json(const form::ClosedForm& f);
nlohmann::json pole_list_json(const cfunc::PoleList& pl);

std::string format_real(const form::Real50& x, int precision);
std::string format_double(double x, int precision);

std::vector<exact::Rational> parse_weight_list(const std::string& csv);

// Expects the exact header  length,prim_length,theta_1,...,theta_n.
std::vector<torsion::GeodesicRecord> load_geodesics_csv(std::istream& in, int n);

}  // namespace serialize
