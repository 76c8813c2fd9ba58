#include "weylcoh/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylcoh/cohomology.hpp"
#include "weylcoh/errors.hpp"
#include "weylcoh/lattice_io.hpp"
#include "weylcoh/root_system.hpp"
#include "weylcoh/scenarios.hpp"

namespace weylcoh::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson integer_value(const Integer& x) {
  std::string s = integer_json(x);
  if (s.front() == '"') return x.to_string();
  return ojson::parse(s);
}

ojson matrix_json(const IntMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_value(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson rat_vector_json(const RatVector& v) {
  ojson a = ojson::array();
  for (const auto& q : v) a.push_back(rational_to_string(q));
  return a;
}

std::string rat_vector_text(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + rational_to_string(v[i]);
  return s + ")";
}

ojson invariants_json(const AbelianGroupInvariants& inv) {
  ojson t = ojson::array();
  for (const auto& d : inv.torsion) t.push_back(integer_value(d));
  return ojson{{"free_rank", inv.free_rank}, {"torsion", t}, {"text", inv.to_string()}};
}

ojson report_json(const ScenarioReport& r) {
  ojson claims = ojson::array();
  for (const auto& c : r.claims)
    claims.push_back({{"description", c.description},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"provenance", to_string(c.provenance)},
                      {"status", to_string(c.status)}});
  ojson j{{"name", r.name}, {"status", to_string(r.status)}, {"claims", claims}, {"runtime_ms", r.runtime_ms}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

struct VerifyArgs {
  std::vector<std::string> names;
  std::vector<std::string> params;
  bool json = false;
  bool no_timings = false;
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  Params ps;
  for (const auto& kv : a.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidInput("--param expects key=value, got '" + kv + "'");
    ps[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  auto reports = verify_all(a.names, ps);
  if (a.no_timings)
    for (auto& r : reports) r.runtime_ms = 0;

  bool guard_hit = false, all_pass = true;
  for (const auto& r : reports) {
    guard_hit = guard_hit || r.guard_exceeded;
    all_pass = all_pass && r.status == Status::pass;
  }
  if (a.json) {
    ojson arr = ojson::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << upper(to_string(r.status)) << "  " << r.name;
      if (!a.no_timings) out << "  (" << static_cast<long long>(r.runtime_ms + 0.5) << " ms)";
      out << "\n";
      for (const auto& c : r.claims) {
        out << "  [" << to_string(c.status) << "] " << c.description << ": " << c.computed;
        if (c.status != Status::pass) out << " (expected " << c.expected << ")";
        out << "\n";
      }
      if (!r.error.empty()) out << "  error: " << r.error << "\n";
    }
  }
  if (guard_hit) return guard;
  return all_pass ? ok : failed;
}

struct CohomologyArgs {
  std::string input;
  std::size_t degree = 1;
  bool tate = false;
  bool sha = false;
  bool json = false;
  bool no_timings = false;
};

int do_cohomology(const CohomologyArgs& a, std::ostream& out) {
  if (a.degree == 0 && a.sha && !a.tate) throw InvalidInput("--sha-omega in degree 0 needs --tate");
  auto t0 = std::chrono::steady_clock::now();
  GLattice m = load_lattice_spec(a.input);
  auto t1 = std::chrono::steady_clock::now();

  // retry without certification when the certifying differential is too large
  bool certified = true;
  AbelianGroupInvariants inv;
  std::size_t cyclic = 0;
  Integer witness_order(0);
  auto compute = [&](const CohomologyOptions& o) {
    if (a.sha) {
      auto s = sha_omega(m, a.degree, a.tate, o);
      inv = s.invariants();
      cyclic = s.cyclic_subgroups;
      witness_order = s.witness_order;
    } else {
      inv = cohomology(m, a.degree, a.tate, o).invariants();
    }
  };
  try {
    compute(CohomologyOptions{});
  } catch (const ResourceGuardError&) {
    if (a.degree == 0) throw;
    CohomologyOptions o;
    o.certify = false;
    certified = false;
    compute(o);
  }
  auto t2 = std::chrono::steady_clock::now();
  auto ms = [](auto x, auto y) { return std::chrono::duration<double, std::milli>(y - x).count(); };

  std::string what = std::string(a.sha ? "Sha^" : (a.tate ? "Htate^" : "H^")) + std::to_string(a.degree);
  if (a.sha && a.tate) what = "Sha^" + std::to_string(a.degree) + " (Tate)";
  if (a.json) {
    ojson j{{"quantity", what},
            {"degree", a.degree},
            {"tate", a.tate},
            {"sha_omega", a.sha},
            {"group_order", m.group()->order()},
            {"rank", m.rank()},
            {"invariants", invariants_json(inv)}};
    j["exponent"] = inv.is_finite() ? integer_value(inv.exponent()) : ojson(nullptr);
    j["certified"] = certified;
    if (a.sha) {
      j["cyclic_subgroups"] = cyclic;
      j["witness_order"] = integer_value(witness_order);
    }
    j["timings"] = {{"load_ms", a.no_timings ? 0.0 : ms(t0, t1)}, {"compute_ms", a.no_timings ? 0.0 : ms(t1, t2)}};
    out << j.dump(2) << "\n";
  } else {
    out << what << " = " << inv.to_string() << "\n";
    out << "exponent " << (inv.is_finite() ? inv.exponent().to_string() : "infinite") << "\n";
    if (!certified) out << "uncertified (guard fallback)\n";
    if (!a.no_timings) out << "time " << static_cast<long long>(ms(t0, t2) + 0.5) << " ms\n";
  }
  return ok;
}

struct RootArgs {
  std::string type;
  std::size_t rank = 0;
  std::string emit = "json";
};

int do_rootsystem(const RootArgs& a, std::ostream& out) {
  if (a.type.size() != 1) throw InvalidInput("--type must be one letter A..G");
  auto t = DynkinType::make(static_cast<char>(std::toupper(static_cast<unsigned char>(a.type[0]))), a.rank);
  auto rs = build_root_system(t);
  if (a.emit == "json") {
    ojson simple = ojson::array(), gens = ojson::array(), roots = ojson::array();
    for (std::size_t j = 0; j < rs.rank(); ++j) simple.push_back(rat_vector_json(rs.simple_roots.column(j)));
    for (const auto& s : rs.reflections_weight) gens.push_back(matrix_json(s));
    for (const auto& r : rs.roots) roots.push_back(rat_vector_json(r));
    ojson j{{"type", t.to_string()},
            {"rank", rs.rank()},
            {"ambient_dimension", rs.ambient_dim},
            {"simple_roots", simple},
            {"cartan_matrix", matrix_json(rs.cartan)},
            {"weyl_generators", gens},
            {"weyl_generator_basis", "fundamental weights"},
            {"roots", roots},
            {"root_count", rs.roots.size()},
            {"positive_roots", rs.positive_count},
            {"connection_index", integer_value(rs.connection_index())}};
    out << j.dump(2) << "\n";
  } else {
    out << "type " << t.to_string() << ", ambient dimension " << rs.ambient_dim << "\n";
    out << "simple roots:\n";
    for (std::size_t j = 0; j < rs.rank(); ++j)
      out << "  alpha" << j + 1 << " = " << rat_vector_text(rs.simple_roots.column(j)) << "\n";
    out << "cartan matrix:\n" << rs.cartan.to_string() << "\n";
    out << "weyl generators (fundamental weight basis):\n";
    for (std::size_t j = 0; j < rs.rank(); ++j) out << "  s" << j + 1 << " = " << rs.reflections_weight[j].to_string() << "\n";
    out << rs.roots.size() << " roots, " << rs.positive_count << " positive:\n";
    for (const auto& r : rs.roots) out << "  " << rat_vector_text(r) << "\n";
    out << "connection index " << rs.connection_index().to_string() << "\n";
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice cohomology for Weyl group lattices", "weylcoh"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run named scenarios and report their claims");
  verify->add_option("scenario", va.names, "scenario name or 'all'")->required();
  verify->add_option("--param", va.params, "scenario parameter key=value")->take_all()->type_name("K=V");
  verify->add_flag("--json", va.json, "emit a JSON report");
  verify->add_flag("--no-timings", va.no_timings, "report zero runtimes (byte-stable output)");

  CohomologyArgs ca;
  auto* coh = app.add_subcommand("cohomology", "cohomology of a lattice given as a JSON spec");
  coh->add_option("--input", ca.input, "lattice spec file")->required();
  coh->add_option("--degree", ca.degree, "0, 1 or 2")->required()->check(CLI::Range(0, 2));
  coh->add_flag("--tate", ca.tate, "Tate cohomology (differs from ordinary only in degree 0)");
  coh->add_flag("--sha-omega", ca.sha, "kernel of restriction to all cyclic subgroups");
  coh->add_flag("--json", ca.json, "emit JSON");
  coh->add_flag("--no-timings", ca.no_timings, "report zero timings");

  RootArgs ra;
  auto* root = app.add_subcommand("rootsystem", "dump a root system and its Weyl group generators");
  root->add_option("--type", ra.type, "A, B, C, D, E, F or G")->required();
  root->add_option("--rank", ra.rank, "rank")->required();
  root->add_option("--emit", ra.emit, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*verify) return do_verify(va, out);
    if (*coh) return do_cohomology(ca, out);
    return do_rootsystem(ra, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const ResourceGuardError& e) {
    err << "resource guard: " << e.what() << "\n";
    return guard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failed;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, out, err);
}

}  // namespace weylcoh::cli
