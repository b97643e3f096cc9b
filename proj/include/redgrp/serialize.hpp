// JSON documents for data, reports and certificates.
//
// Datum: {"torus_rank": n, "factors": ["A1", ...], "H": rows, "K_modulus": e,
// "K": rows, "alpha": rows}, fields in this order. H rows are center
// coordinates (factor blocks in order, each block in the natural coordinates
// of roots.hpp); K and alpha rows are vectors in (Z/e)^n, alpha[i] being the
// image of H[i]. An affine datum adds "unipotent_dim". A raw document with
// "modulus" and "F" (a list of {"torus": [...], "center": [...]}) in place
// of H/K/alpha is accepted on input and normalized.

#ifndef REDGRP_SERIALIZE_HPP_
#define REDGRP_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "redgrp/affine.hpp"
#include "redgrp/varieties.hpp"

namespace redgrp {

using Json = nlohmann::ordered_json;

Json to_json(const GluingDatum& d);
Json to_json(const AffineDatum& a);
Json to_json(const InvariantReport& r);
Json to_json(const StructureFlags& f);
Json to_json(const TorusSplit& s);
Json to_json(const FactorizationReport& f);
Json to_json(const TwinCertificate& c);
Json to_json(const IntMatrix& m);
Json to_json(const FinAbSubgroup& s);  // generator rows

// Parse errors surface as Error(Errc::Parse); semantic ones keep their code.
GluingDatum datum_from_json(const Json& j, const Limits& limits = {});
AffineDatum affine_from_json(const Json& j, const Limits& limits = {});
Json parse_json(const std::string& text);

}  // namespace redgrp

#endif  // REDGRP_SERIALIZE_HPP_
