#include "redgrp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "redgrp/error.hpp"
#include "redgrp/serialize.hpp"

namespace redgrp::cli {

namespace {

struct Options {
  bool json = false;
  long long bound = 10000;
  unsigned p = 0;
  int max_rank = 3;

  Limits limits() const {
    Limits l;
    l.max_order = Int(std::to_string(bound));
    l.max_rank = max_rank;
    return l;
  }
};

// An argument is either inline JSON or a path.
Json load_document(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{')
    return parse_json(arg);
  std::ifstream in(arg);
  if (!in)
    fail(Errc::Parse, "cannot read " + arg);
  return parse_json(std::string(std::istreambuf_iterator<char>(in), {}));
}

std::string word_str(const NamedWord& w) {
  if (w.empty())
    return "identity";
  std::string out;
  for (const std::string& g : w)
    out += (out.empty() ? "" : " then ") + g;
  return out;
}

std::string subgroup_str(const FinAbSubgroup& s) {
  const std::vector<FinAbElem> gens = s.generators();
  if (gens.empty())
    return "<0>";
  std::string out = "<";
  for (std::size_t g = 0; g < gens.size(); ++g) {
    out += g ? ",(" : "(";
    for (std::size_t i = 0; i < gens[g].coords.size(); ++i)
      out += (i ? "," : "") + gens[g].coords[i].get_str();
    out += ")";
  }
  return out + ">";
}

std::string pi1_str(const InvariantReport& r) {
  std::string out;
  if (r.pi1_free_rank > 0)
    out = r.pi1_free_rank == 1 ? "Z" : "Z^" + std::to_string(r.pi1_free_rank);
  if (!r.pi1_torsion.is_trivial())
    out += (out.empty() ? "" : " + ") + r.pi1_torsion.str();
  return out.empty() ? "trivial" : out;
}

// Left-aligned table; the first row is the header.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty())
    return;
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c)
      width[c] = std::max(width[c], r[c].size());
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size())
        line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

void print_report(std::ostream& out, const InvariantReport& r) {
  print_table(out, {{"dim", std::to_string(r.dim)},
                    {"rank", std::to_string(r.rank)},
                    {"units", std::to_string(r.units)},
                    {"mh", std::to_string(r.mh)},
                    {"dim R", std::to_string(r.dim_radical)},
                    {"dim Ru", std::to_string(r.dim_unipotent_radical)},
                    {"pi1", pi1_str(r)}});
}

std::string flag_str(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

int cmd_center(const Options& o, const std::string& type, std::ostream& out) {
  const SCSemisimple s = SCSemisimple::parse(type);
  const FinAb z = center_of(s);
  if (o.json) {
    Json j;
    j["group"] = s.name();
    j["cyclic_orders"] = Json::array();
    for (const Int& m : z.cyclic_orders())
      j["cyclic_orders"].push_back(m.get_si());
    Json inv = Json::array();
    for (const Int& m : z.invariant_factors())
      inv.push_back(m.get_si());
    j["invariant_factors"] = inv;
    out << j.dump() << "\n";
  } else {
    out << z.str() << "\n";
  }
  return 0;
}

int cmd_quotients(const Options& o, const std::string& type, std::ostream& out) {
  const Limits limits = o.limits();
  const SCSemisimple s = SCSemisimple::parse(type);
  const FinAb z = center_of(s);
  std::vector<IntMatrix> gens;
  for (const NamedMatrix& g : extended_out_generators(s))
    gens.push_back(g.matrix);
  std::vector<FinAbSubgroup> reps;
  std::vector<std::size_t> sizes;
  std::vector<IntMatrix> seen;
  for (const FinAbSubgroup& c : subgroups(z, limits)) {
    if (std::find(seen.begin(), seen.end(), c.lattice()) != seen.end())
      continue;
    const Orbit orbit = subgroup_orbit(z, c, gens, limits);
    for (const FinAbSubgroup& m : orbit.members)
      seen.push_back(m.lattice());
    reps.push_back(c);
    sizes.push_back(orbit.members.size());
  }
  if (o.json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      Json j;
      j["name"] = quotient_name(s, reps[i]);
      j["order"] = reps[i].order().get_si();
      j["C"] = to_json(reps[i]);
      j["orbit_size"] = sizes[i];
      arr.push_back(j);
    }
    out << arr.dump() << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows{{"group", "|C|", "C", "orbit"}};
  for (std::size_t i = 0; i < reps.size(); ++i)
    rows.push_back({quotient_name(s, reps[i]), reps[i].order().get_str(), subgroup_str(reps[i]),
                    std::to_string(sizes[i])});
  print_table(out, rows);
  return 0;
}

int cmd_iso(const Options& o, const std::string& a, const std::string& b, std::ostream& out) {
  const Limits limits = o.limits();
  const GluingDatum d1 = datum_from_json(load_document(a), limits);
  const GluingDatum d2 = datum_from_json(load_document(b), limits);
  const std::optional<NamedWord> w = isomorphic(d1, d2, limits);
  const bool same_shape =
      d1.torus_rank() == d2.torus_rank() && d1.semisimple() == d2.semisimple();
  if (o.json) {
    Json j;
    j["isomorphic"] = w.has_value();
    if (w)
      j["witness"] = *w;
    else
      j["reason"] = same_shape ? "gluing orbits differ" : "torus rank or cover differ";
    out << j.dump() << "\n";
  } else if (w) {
    out << "ISOMORPHIC (witness: " << word_str(*w) << ")\n";
  } else if (same_shape) {
    out << "NOT ISOMORPHIC (gluing orbits differ)\n";
  } else {
    out << "NOT ISOMORPHIC (torus rank or simply connected cover differ)\n";
  }
  return 0;
}

int cmd_invariants(const Options& o, const std::string& file, std::ostream& out) {
  const AffineDatum a = affine_from_json(load_document(file), o.limits());
  const InvariantReport r = invariants(a);
  if (o.json) {
    out << to_json(r).dump() << "\n";
    return 0;
  }
  out << a.reductive_part.name();
  if (a.u > 0)
    out << " with unipotent radical of dimension " << a.u;
  out << "\n";
  print_report(out, r);
  return 0;
}

int cmd_classify(const Options& o, const std::string& file, std::ostream& out) {
  const AffineDatum a = affine_from_json(load_document(file), o.limits());
  const StructureFlags f = classify(a);
  const Determination det = variety_determines_group(a.reductive_part);
  std::optional<SolvableSignature> sig;
  if (f.solvable)
    sig = solvable_variety_signature(a);
  std::optional<FactorizationReport> fact;
  if (a.u == 0)
    fact = factorization_report(a.reductive_part);
  if (o.json) {
    Json j;
    j["flags"] = to_json(f);
    if (sig)
      j["solvable_signature"] = {{"t", sig->t}, {"r", sig->r}};
    if (a.u == 0) {
      j["variety_determines_group"] = {{"value", det.determined}, {"reason", det.reason}};
      j["factorization"] = to_json(*fact);
    }
    out << j.dump() << "\n";
    return 0;
  }
  out << a.reductive_part.name();
  if (a.u > 0)
    out << " with unipotent radical of dimension " << a.u;
  out << "\n";
  print_table(out, {{"reductive", flag_str(f.reductive)},
                    {"semisimple", flag_str(f.semisimple)},
                    {"solvable", flag_str(f.solvable)},
                    {"unipotent", flag_str(f.unipotent)},
                    {"torus", flag_str(f.torus)}});
  if (sig)
    out << "variety: A_*^" << sig->t << " x A^" << sig->r << "\n";
  if (fact) {
    if (fact->has_torus_factor)
      out << "variety factorization: dim " << fact->derived_dim << " x torus of dim "
          << fact->torus_dim << "\n";
    for (const std::string& ob : fact->obstructions)
      out << "obstruction: " << ob << "\n";
    out << "variety determines group: " << flag_str(det.determined) << " (" << det.reason
        << ")\n";
  }
  return 0;
}

int cmd_enumerate(const Options& o, int rank, std::ostream& out) {
  const std::vector<GluingDatum> all = enumerate_rank(rank, o.limits(), o.p);
  if (o.json) {
    Json arr = Json::array();
    for (const GluingDatum& d : all)
      arr.push_back(to_json(d));
    out << arr.dump() << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows{{"#", "group", "dim", "units", "pi1"}};
  for (std::size_t i = 0; i < all.size(); ++i) {
    const InvariantReport r = invariants(all[i]);
    rows.push_back({std::to_string(i + 1), all[i].name(), std::to_string(r.dim),
                    std::to_string(r.units), pi1_str(r)});
  }
  print_table(out, rows);
  out << all.size() << " groups of rank " << rank << "\n";
  return 0;
}

int cmd_twins(const Options& o, const std::string& type, int n, std::ostream& out) {
  if (n < 1)
    fail(Errc::Parse, "n must be positive");
  const SimpleType base = SimpleType::parse(type);
  const std::vector<TwinCertificate> certs =
      find_twin_pairs(base, static_cast<std::size_t>(n), o.limits());
  if (o.json) {
    Json arr = Json::array();
    for (const TwinCertificate& c : certs)
      arr.push_back(to_json(c));
    out << arr.dump() << "\n";
    return 0;
  }
  out << certs.size() << (certs.size() == 1 ? " twin pair" : " twin pairs") << " among quotients of "
      << simply_connected_name(base) << "^" << n << "\n";
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const TwinCertificate& c = certs[i];
    out << "pair " << i + 1 << ": " << c.name1 << " / " << c.name2 << "\n";
    out << "  C1 = " << subgroup_str(c.c1) << "\n";
    out << "  C2 = " << subgroup_str(c.c2) << "\n";
    out << "  witness " << c.witness.str() << " maps C1 to C2\n";
    out << "  Out orbit of C1 exhausted (" << c.out_orbit_size
        << (c.out_orbit_size == 1 ? " subgroup" : " subgroups") << "), C2 not in it\n";
  }
  return 0;
}

int cmd_split(const Options& o, const std::string& file, std::ostream& out) {
  const GluingDatum d = datum_from_json(load_document(file), o.limits());
  const TorusSplit s = torus_split(d);
  if (o.json) {
    out << to_json(s).dump() << "\n";
    return 0;
  }
  out << d.name() << "\n";
  out << "complement rank " << s.complement.rows() << "\n";
  for (const RationalVector& y : s.cocharacters) {
    out << "  cocharacter (";
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (i == d.torus_rank() && i > 0)
        out << " |";
      out << (i == 0 || i == d.torus_rank() ? "" : ",") << (i ? " " : "") << y[i].get_str();
    }
    out << ")\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected reductive groups as central gluing data", "redgrp"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--bound", o.bound, "largest group order enumerated")->check(CLI::PositiveNumber);
  app.add_option("--p", o.p, "characteristic parameter of the a' condition");
  app.add_option("--max-rank", o.max_rank, "largest rank accepted by enumerate")
      ->check(CLI::NonNegativeNumber);

  std::string type, file_a, file_b;
  int number = 0;
  std::function<int()> action;

  auto* center = app.add_subcommand("center", "center of a simply connected group");
  center->add_option("type", type, "type such as D4 or A1xA2")->required();
  center->callback([&] { action = [&] { return cmd_center(o, type, out); }; });

  auto* quotients = app.add_subcommand("quotients", "central quotients up to isomorphism");
  quotients->add_option("type", type)->required();
  quotients->callback([&] { action = [&] { return cmd_quotients(o, type, out); }; });

  auto* iso = app.add_subcommand("iso", "decide isomorphism of two data");
  iso->add_option("first", file_a)->required();
  iso->add_option("second", file_b)->required();
  iso->callback([&] { action = [&] { return cmd_iso(o, file_a, file_b, out); }; });

  auto* inv = app.add_subcommand("invariants", "dim, rank, units, mh, radicals, pi1");
  inv->add_option("datum", file_a)->required();
  inv->callback([&] { action = [&] { return cmd_invariants(o, file_a, out); }; });

  auto* cls = app.add_subcommand("classify", "structural criteria and variety facts");
  cls->add_option("datum", file_a)->required();
  cls->callback([&] { action = [&] { return cmd_classify(o, file_a, out); }; });

  auto* en = app.add_subcommand("enumerate", "all reductive groups of a given rank");
  en->add_option("rank", number)->required()->check(CLI::NonNegativeNumber);
  en->callback([&] { action = [&] { return cmd_enumerate(o, number, out); }; });

  auto* tw = app.add_subcommand("twins", "non-isomorphic quotients of H^n with isomorphic varieties");
  tw->add_option("type", type)->required();
  tw->add_option("n", number)->required();
  tw->callback([&] { action = [&] { return cmd_twins(o, type, number, out); }; });

  auto* sp = app.add_subcommand("split", "torus complement of the derived group");
  sp->add_option("datum", file_a)->required();
  sp->callback([&] { action = [&] { return cmd_split(o, file_a, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == Errc::Parse)
      return kExitParse;
    if (e.code() == Errc::TooLarge)
      return kExitTooLarge;
    return kExitLibrary;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitLibrary;
  }
}

}  // namespace redgrp::cli
