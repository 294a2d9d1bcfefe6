#pragma once

#include <json.hpp>

#include "tlift/merovec.hpp"

namespace tlift {

using json = nlohmann::json;

// Wire format: complex scalar = [re, im]; polynomial = ascending coefficient
// array; RatFun = {"num": poly, "den": poly}; MeroVec = array of RatFun;
// LaurentSection = {"<exponent>": MeroVec, ...}.  Round-trips are bit-exact.

json to_json(cplx c);
json to_json(const Poly& p);
json to_json(const RatFun& f);
json to_json(const MeroVec& v);
json to_json(const LaurentSection& s);

cplx cplx_from_json(const json& j);
Poly poly_from_json(const json& j);
RatFun ratfun_from_json(const json& j);
MeroVec merovec_from_json(const json& j);
LaurentSection laurent_from_json(const json& j);

}  // namespace tlift
