#ifndef AR1BAND_SERIALIZE_HPP
#define AR1BAND_SERIALIZE_HPP

#include <string>

#include "ar1band/types.hpp"

namespace ar1band {

// Band matrices travel as the JSON object
//   {"dim": m, "diag": [...], "offdiag": [...]}
// for both the symmetric tridiagonal and the lower bidiagonal layout.
// Values round-trip bit-exactly.

std::string to_json(const TridiagSym& q);
std::string to_json(const BandLowerBi& l);

TridiagSym tridiag_from_json(const std::string& text);
BandLowerBi band_lower_from_json(const std::string& text);

}  // namespace ar1band

#endif  // AR1BAND_SERIALIZE_HPP
