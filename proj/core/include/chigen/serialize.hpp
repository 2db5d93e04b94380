#pragma once

#include <string>

#include "chigen/series.hpp"

namespace chigen {

// JSON form of a series:
//   { "arity": int, "caps": [int...],
//     "terms": [ { "e": [int...], "num": "...", "den": "..." } ... ] }
// with terms sorted lexicographically by exponent vector and num/den as
// decimal strings. Deserializing the output reproduces an equal series.
std::string serialize_series(const MultiSeries& s);
MultiSeries deserialize_series(const std::string& json_text);

}  // namespace chigen
