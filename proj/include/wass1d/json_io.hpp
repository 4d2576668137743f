#pragma once

#include <string>
#include <vector>

#include "wass1d/isometry.hpp"
#include "wass1d/measure.hpp"

namespace wass1d {

// {"domain":"real"|"unit","type":"discrete","atoms":[[x,w],...]} or
// {"domain":...,"type":"pl_quantile","breaks":[...],"segments":[[a,b],...]}.
// Malformed text throws ParseError; invalid measures keep their own codes.
Measure measure_from_json(const std::string& text);

// Canonical text: discrete measures as sorted atoms, others as pl_quantile.
std::string measure_to_json(const Measure& mu);
std::string measures_to_json(const std::vector<Measure>& measures);

// {"kind":"trivial","orientation":1,"offset":0}, {"kind":"flip"},
// {"kind":"translation","nu":<measure>}, {"kind":"barycentric_reflection"},
// {"kind":"exotic","q":0.5}, {"kind":"compose","items":[...]}.
IsometryDescriptor descriptor_from_json(const std::string& text);
std::string descriptor_to_json(const IsometryDescriptor& iso);

}  // namespace wass1d
