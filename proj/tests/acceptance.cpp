// One pass/fail line per acceptance criterion, with wall time against its limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "properties.hpp"
#include "weylcoh/cohomology.hpp"
#include "weylcoh/scenarios.hpp"

using namespace weylcoh;

namespace {

struct Criterion {
  int id;
  const char* what;
  double limit_ms;
  std::function<bool(std::string&)> body;
};

bool all_pass(const std::vector<ScenarioReport>& rs, std::string& note) {
  bool ok = !rs.empty();
  for (const auto& r : rs) {
    if (r.status == Status::pass) continue;
    ok = false;
    note += r.name + " " + to_string(r.status);
    for (const auto& c : r.claims)
      if (c.status != Status::pass) note += " [" + c.description + ": " + c.computed + " vs " + c.expected + "]";
    if (!r.error.empty()) note += " (" + r.error + ")";
    note += "; ";
  }
  return ok;
}

bool props_ok(const props::Outcome& o, const char* name, std::size_t want, std::string& note) {
  bool ok = o.ok() && (want == 0 || o.cases == want);
  note += std::string(name) + " " + std::to_string(o.cases) + " cases";
  if (!o.failures.empty()) note += ", " + std::to_string(o.failures.size()) + " failed (" + o.failures.front() + ")";
  note += "; ";
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Sha^1(H, I_H) = Z/2 for H = (Z/2)^2", 1e3,
       [](std::string& note) {
         auto inv = sha_omega(augmentation_and_norm(elementary_abelian_group(2, 2)).I, 1).invariants();
         note = inv.to_string();
         return inv.to_string() == "Z/2";
       }},
      {2, "claim72_c3", 1e3, [](std::string& note) { return all_pass({claim72_c3()}, note); }},
      {3, "claim72_d4", 5e3, [](std::string& note) { return all_pass({claim72_d4()}, note); }},
      {4, "prop71 for B3, B4, D4, D5, F4, E6", 60e3,
       [](std::string& note) {
         std::vector<ScenarioReport> rs;
         for (const char* t : {"B3", "B4", "D4", "D5", "F4", "E6"}) rs.push_back(prop71(DynkinType::parse(t)));
         return all_pass(rs, note);
       }},
      {5, "A_n (n = 1..4) and C_n (n = 2..4) resolutions with sweeps for n <= 3", 60e3,
       [](std::string& note) {
         std::vector<ScenarioReport> rs;
         for (std::size_t n = 1; n <= 4; ++n) rs.push_back(an_sequence(n, 3));
         for (std::size_t n = 2; n <= 4; ++n) rs.push_back(cn_sequence(n, 3));
         return all_pass(rs, note);
       }},
      {6, "g2_vanishing over all 16 subgroups", 5e3, [](std::string& note) { return all_pass({g2_vanishing()}, note); }},
      {7, "lemma83_bruteforce(n = 3, bound = 1)", 600e3,
       [](std::string& note) { return all_pass({lemma83_bruteforce(3, 1)}, note); }},
      {8, "appendix_counterexample (2,2) and (2,3)", 300e3,
       [](std::string& note) { return all_pass({appendix_counterexample(2, 2), appendix_counterexample(2, 3)}, note); }},
      {9, "pgl2_section_check", 1e3, [](std::string& note) { return all_pass({pgl2_section_check()}, note); }},
      {10, "property suites", 300e3,
       [](std::string& note) {
         bool ok = props_ok(props::smith_random(), "smith", 1000, note);
         ok = props_ok(props::cyclic_closed_forms(), "cyclic", 50, note) && ok;
         ok = props_ok(props::wc3_permutation_sweep(), "W(C3) pairs", 98 * 98, note) && ok;
         ok = props_ok(props::weight_root_duality(4), "duality", 0, note) && ok;
         return ok;
       }},
  };

  int failed = 0;
  for (auto& c : criteria) {
    std::string note;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = ms < c.limit_ms;
    if (!in_time) note += " over time limit";
    bool pass = ok && in_time;
    failed += !pass;
    std::printf("[%s] criterion %2d: %s (%.0f ms, limit %.0f ms)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.what, ms,
                c.limit_ms, pass ? "" : ": ", pass ? "" : note.c_str());
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
