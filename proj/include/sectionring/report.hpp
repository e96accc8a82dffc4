#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sectionring/explorer.hpp"
#include "sectionring/presentation.hpp"
#include "sectionring/section_oracle.hpp"
#include "sectionring/sweep.hpp"

namespace sectionring {

/// Shared report header: how the divisor and the curve were specified, and
/// whether a second point carries weight (controls the ord(P2) column).
struct ReportContext {
  std::string divisor;
  std::string curve;
  int n_points = 1;
};

/// One CLI invocation, serializable as a single "key=value;..." line.
/// parse(serialize()) is the identity.
struct JobConfig {
  std::string command = "present";
  std::string alpha1 = "1";
  std::string alpha2;  // empty = one-point divisor
  std::string curve = "0,0,1,-1,0";
  std::string p1 = "O";
  std::string p2 = "0,0";
  std::string field = "q";
  std::int64_t max_degree = 12;
  std::string format = "text";
  std::string out;

  std::string serialize() const;
  static JobConfig parse(const std::string& line);

  friend bool operator==(const JobConfig& a, const JobConfig& b) {
    return a.serialize() == b.serialize();
  }
};

std::string divisor_desc(const Rational& alpha1, const std::optional<Rational>& alpha2,
                         bool ineffective);
std::string weierstrass_equation(const Rational& a1, const Rational& a2, const Rational& a3,
                                 const Rational& a4, const Rational& a6);

/// Orders of vanishing at P1 / P2 recovered from a generator's pole data.
std::int64_t generator_ord1(const LabeledGenerator& g);
std::int64_t generator_ord2(const LabeledGenerator& g);

std::string presentation_text(const ReportContext& ctx,
                              const std::vector<LabeledGenerator>& gens,
                              const std::vector<RelationLeader>& rels);

/// Schema-1 JSON document for a computed presentation. `verification` may be
/// null (present-only run). Output is deterministic: fixed key order, fixed
/// array order, trailing newline; reruns are byte-identical.
std::string presentation_json(const ReportContext& ctx,
                              const std::vector<LabeledGenerator>& gens,
                              const std::vector<RelationLeader>& rels,
                              const VerifyReport* verification);

std::string verify_text(const ReportContext& ctx, const VerifyReport& rep);

std::string explore_text(const ReportContext& ctx, const ConjectureCheck& chk);
std::string explore_json(const ReportContext& ctx, const ConjectureCheck& chk);

std::string sweep_json(const std::vector<SweepEntry>& entries);

}  // namespace sectionring
