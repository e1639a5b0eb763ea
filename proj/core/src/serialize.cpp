#include "ar1band/serialize.hpp"

#include <utility>

#include <json.hpp>

namespace ar1band {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

ojson band_to_json(std::size_t dim, const std::vector<double>& diag,
                   const std::vector<double>& off) {
  ojson j;
  j["dim"] = dim;
  j["diag"] = diag;
  j["offdiag"] = off;
  return j;
}

std::pair<std::vector<double>, std::vector<double>> band_from_json(
    const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("diag") ||
      !j.contains("offdiag")) {
    throw ValidationError(
        "band matrix JSON must be an object with dim, diag and offdiag");
  }
  std::vector<double> diag, off;
  std::size_t dim = 0;
  try {
    dim = j.at("dim").get<std::size_t>();
    diag = j.at("diag").get<std::vector<double>>();
    off = j.at("offdiag").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid band matrix JSON: ") +
                          e.what());
  }
  if (diag.size() != dim) {
    throw ValidationError("diag length does not match dim");
  }
  return {std::move(diag), std::move(off)};
}

}  // namespace

std::string to_json(const TridiagSym& q) {
  return band_to_json(q.dim(), q.diag(), q.offdiag()).dump();
}

std::string to_json(const BandLowerBi& l) {
  return band_to_json(l.dim(), l.diag(), l.subdiag()).dump();
}

TridiagSym tridiag_from_json(const std::string& text) {
  auto [diag, off] = band_from_json(text);
  return TridiagSym(std::move(diag), std::move(off));
}

BandLowerBi band_lower_from_json(const std::string& text) {
  auto [diag, off] = band_from_json(text);
  return BandLowerBi(std::move(diag), std::move(off));
}

}  // namespace ar1band
