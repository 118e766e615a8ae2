#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ncball/ball_function.hpp"
#include "ncball/fock.hpp"
#include "ncball/group.hpp"
#include "ncball/spectral.hpp"

namespace ncball {

using nlohmann::json;

// Wire conventions: complex numbers are [re, im]; points are arrays of
// pairs; maps are row-major (n+1)x(n+1) nested arrays of pairs; all reals
// are plain JSON numbers (IEEE doubles, shortest round-trip text).

json complex_to_json(const Complex& c);
Complex complex_from_json(const json& j);

json point_to_json(const Point& p);
Point point_from_json(const json& j);

json map_to_json(const MoebiusMap& m);
MoebiusMap map_from_json(const json& j);

json poly_to_json(const NcPoly& p);
NcPoly poly_from_json(const json& j, int n);

// Expression tree; parsing re-validates every certificate.
json ball_function_to_json(const BallFunction& f);
BallFunction ball_function_from_json(const json& j);

json operator_to_json(const FockOperator& t);  // {n, d, entries row-major}

json presentation_to_json(const GroupPresentation& g);
GroupPresentation presentation_from_json(const json& j);

json blaschke_to_json(const BlaschkeReport& r);
json membership_to_json(const MembershipVerdict& v);
json witness_to_json(const VanishingProduct& w);
json ergodicity_to_json(const ErgodicityReport& r);

std::string verdict_name(Verdict v);
std::string check_name(CheckResult c);
std::string membership_name(Membership m);

// CSV rows re_1,im_1,...,re_n,im_n,shell with a header line.
std::string orbit_to_csv(const Orbit& orbit);

}  // namespace ncball
