#pragma once

#include "polytope.hpp"
#include "poset.hpp"

#include <string>

namespace dposet {

// {"elements": [...], "plus": [["a","b"],...], "minus": [[...]]}; a missing
// "minus" key yields the induced double poset.
DoublePoset double_poset_from_json(const std::string& text);
std::string double_poset_to_json(const DoublePoset& dp);

// "name" or "name:param" generator strings, e.g. "xw", "comb:3",
// "perm:2,3,1". Single-poset generators are wrapped as induced double posets.
DoublePoset parse_generator(const std::string& spec);

// rationals serialize as exact [numerator, denominator] pairs
std::string polytope_to_json(const QPolytope& p);
QPolytope polytope_from_json(const std::string& text); // vertices required

QVec point_from_json(const std::string& text);
std::string point_to_json(const QVec& v);

} // namespace dposet
