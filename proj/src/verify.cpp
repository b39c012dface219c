#include <algorithm>
#include <set>
#include <string>

#include "cayley/classify.hpp"
#include "cayley/maps.hpp"
#include "cayley/oracle.hpp"

namespace cayley::oracle {

namespace {

std::string describe(const FieldPoly& f, const std::string& what) { return ffpoly::to_string(f) + ": " + what; }

void fail(Check& check, std::string why) {
  check.passed = false;
  check.counterexamples.push_back(std::move(why));
}

}  // namespace

VerificationReport verify_all(unsigned n, std::uint32_t p, const VerifyOptions& opts) {
  classify::check_request(n, p, opts.limits);
  VerificationReport report;
  report.n = n;
  report.p = p;

  const auto tagged = classify::enum_Mnp_tagged(n, p, opts.limits);
  std::vector<FieldPoly> members;
  for (const auto& t : tagged) members.push_back(t.poly);
  report.records = members.size();
  const std::set<FieldPoly> member_set(members.begin(), members.end());

  Check membership{"membership", true, {}};
  for (const FieldPoly& f : ffpoly::monic_polys(p, n)) {
    if (f.constant_term() == 0) continue;
    const bool listed = member_set.count(f) > 0;
    const bool direct = oracle::neg_identity_in_powers(f);
    if (listed != direct) {
      fail(membership, describe(f, listed ? "listed but -I is not a power of C" : "-I is a power of C but not listed"));
    }
  }

  // M_1 only has meaning for odd p; for p = 2 the flag must be false everywhere.
  Check m1{"m1_criterion", true, {}};
  Check rl{"rl_order", true, {}};
  Check genus{"genus", true, {}};
  for (const FieldPoly& f : members) {
    const bool formula_m1 = classify::is_M1(f);
    const bool direct_m1 = p != 2 && fixes_hyperplane(f);
    if (formula_m1 != direct_m1) {
      fail(m1, describe(f, "is_M1 = " + std::string(formula_m1 ? "true" : "false") + ", fixed-subspace test = " +
                               (direct_m1 ? "true" : "false")));
    }
    try {
      const auto measured = measure_map(f, n, opts.size_cap);
      const auto record = maps::map_record(f, n);
      if (record.rl_order != measured.rl_order) {
        fail(rl, describe(f, "formula " + std::to_string(record.rl_order) + ", measured " +
                                 std::to_string(measured.rl_order)));
      }
      if (record.genus != measured.genus) {
        fail(genus, describe(f, "formula " + std::to_string(record.genus) + ", measured " +
                                    std::to_string(measured.genus)));
      }
    } catch (const std::exception& e) {
      fail(rl, describe(f, e.what()));
      fail(genus, describe(f, e.what()));
    }
  }

  Check count{"count_vs_enum", true, {}};
  const auto counted = classify::count_Mnp(n, p, opts.limits);
  if (counted.total != members.size()) {
    fail(count, "count_Mnp total " + std::to_string(counted.total) + ", enumerated " + std::to_string(members.size()));
  }
  for (const auto& [j, nj] : counted.per_j) {
    const auto listed = static_cast<std::uint64_t>(
        std::count_if(tagged.begin(), tagged.end(), [j = j](const classify::TaggedPoly& t) { return t.j == j; }));
    if (listed != nj) {
      fail(count, "j = " + std::to_string(j) + ": counted " + std::to_string(nj) + ", enumerated " +
                      std::to_string(listed));
    }
  }

  report.checks = {membership, m1, rl, genus, count};
  return report;
}

}  // namespace cayley::oracle
