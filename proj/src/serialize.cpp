#include "redgrp/serialize.hpp"

#include "redgrp/error.hpp"

namespace redgrp {

namespace {

Json int_json(const Int& x) {
  if (x.fits_slong_p())
    return x.get_si();
  return x.get_str();
}

Json row_json(const IntVector& v) {
  Json out = Json::array();
  for (const Int& x : v)
    out.push_back(int_json(x));
  return out;
}

Json rows_json(const std::vector<FinAbElem>& rows) {
  Json out = Json::array();
  for (const FinAbElem& r : rows)
    out.push_back(row_json(r.coords));
  return out;
}

Int int_from(const Json& j) {
  if (j.is_number_integer())
    return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) == 0)
      return x;
  }
  fail(Errc::Parse, "expected an integer, got " + j.dump());
}

std::size_t count_from(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(Errc::Parse, std::string(what) + " must be a nonnegative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

IntVector row_from(const Json& j) {
  if (!j.is_array())
    fail(Errc::Parse, "expected an integer row, got " + j.dump());
  IntVector out;
  for (const Json& x : j)
    out.push_back(int_from(x));
  return out;
}

std::vector<IntVector> rows_from(const Json& j) {
  if (!j.is_array())
    fail(Errc::Parse, "expected a list of rows, got " + j.dump());
  std::vector<IntVector> out;
  for (const Json& r : j)
    out.push_back(row_from(r));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::Parse, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Json rational_json(const Rational& q) {
  return q.get_den() == 1 ? Json(q.get_num().get_str()) : Json(q.get_str());
}

}  // namespace

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.push_back(row_json(m.row(i)));
  return out;
}

Json to_json(const FinAbSubgroup& s) { return rows_json(s.generators()); }

Json to_json(const GluingDatum& d) {
  Json out;
  out["torus_rank"] = d.torus_rank();
  out["factors"] = d.semisimple().factor_names();
  out["H"] = rows_json(d.h_generators());
  out["K_modulus"] = int_json(d.k_modulus());
  out["K"] = rows_json(d.k().generators());
  out["alpha"] = rows_json(d.alpha_images());
  return out;
}

Json to_json(const AffineDatum& a) {
  Json out = to_json(a.reductive_part);
  out["unipotent_dim"] = a.u;
  return out;
}

Json to_json(const InvariantReport& r) {
  Json out;
  out["dim"] = r.dim;
  out["rank"] = r.rank;
  out["units"] = r.units;
  out["mh"] = r.mh;
  out["dim_radical"] = r.dim_radical;
  out["dim_unipotent_radical"] = r.dim_unipotent_radical;
  out["pi1_free_rank"] = r.pi1_free_rank;
  out["pi1_torsion"] = row_json(r.pi1_torsion.cyclic_orders());
  return out;
}

Json to_json(const StructureFlags& f) {
  Json out;
  out["reductive"] = f.reductive;
  out["semisimple"] = f.semisimple;
  out["solvable"] = f.solvable;
  out["unipotent"] = f.unipotent;
  out["torus"] = f.torus;
  return out;
}

Json to_json(const TorusSplit& s) {
  Json out;
  out["coroot_saturation"] = to_json(s.coroot_saturation);
  out["complement"] = to_json(s.complement);
  Json cochars = Json::array();
  for (const RationalVector& y : s.cocharacters) {
    Json row = Json::array();
    for (const Rational& q : y)
      row.push_back(rational_json(q));
    cochars.push_back(row);
  }
  out["cocharacters"] = cochars;
  return out;
}

Json to_json(const FactorizationReport& f) {
  Json out;
  if (f.has_torus_factor) {
    out["derived_dim"] = f.derived_dim;
    out["torus_dim"] = f.torus_dim;
    Json iota = Json::array();
    for (const RationalVector& y : f.iota) {
      Json row = Json::array();
      for (const Rational& q : y)
        row.push_back(rational_json(q));
      iota.push_back(row);
    }
    out["iota"] = iota;
  }
  out["obstructions"] = f.obstructions;
  return out;
}

Json to_json(const TwinCertificate& c) {
  Json out;
  out["group1"] = c.name1;
  out["group2"] = c.name2;
  out["C1"] = to_json(c.c1);
  out["C2"] = to_json(c.c2);
  out["witness"] = to_json(c.witness);
  out["out_orbit_size"] = c.out_orbit_size;
  return out;
}

GluingDatum datum_from_json(const Json& j, const Limits& limits) {
  if (!j.is_object())
    fail(Errc::Parse, "a datum must be a JSON object");
  const std::size_t n = count_from(field(j, "torus_rank"), "torus_rank");
  const Json& factors = field(j, "factors");
  if (!factors.is_array())
    fail(Errc::Parse, "\"factors\" must be a list of type names");
  std::vector<std::string> names;
  for (const Json& f : factors) {
    if (!f.is_string())
      fail(Errc::Parse, "type names must be strings");
    names.push_back(f.get<std::string>());
  }
  const SCSemisimple s = SCSemisimple::parse(names);
  if (j.contains("F")) {
    const Int modulus = int_from(field(j, "modulus"));
    std::vector<RawGluingElement> gens;
    for (const Json& g : field(j, "F")) {
      if (!g.is_object())
        fail(Errc::Parse, "raw gluing elements are objects with \"torus\" and \"center\"");
      gens.push_back({row_from(field(g, "torus")), row_from(field(g, "center"))});
    }
    return normalize(n, s, modulus, gens, limits);
  }
  return GluingDatum::from_parts(n, s, rows_from(field(j, "H")), int_from(field(j, "K_modulus")),
                                 rows_from(field(j, "K")), rows_from(field(j, "alpha")), limits);
}

AffineDatum affine_from_json(const Json& j, const Limits& limits) {
  AffineDatum a;
  a.reductive_part = datum_from_json(j, limits);
  if (j.contains("unipotent_dim"))
    a.u = count_from(j.at("unipotent_dim"), "unipotent_dim");
  return a;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace redgrp
