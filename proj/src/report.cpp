#include "sectionring/report.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sectionring {

using json = nlohmann::ordered_json;

// A generator is one of: u (no poles), w u^k (simple poles at both points),
// or t_c u^d with a pole of order c at its own point and a zero of order
// c - 1 at the other one. pole1/pole2 determine which case we are in.
std::int64_t generator_ord1(const LabeledGenerator& g) {
  if (g.pole1 > 0) return -g.pole1;
  return g.pole2 > 1 ? g.pole2 - 1 : 0;
}

std::int64_t generator_ord2(const LabeledGenerator& g) {
  if (g.pole2 > 0) return -g.pole2;
  return g.pole1 > 1 ? g.pole1 - 1 : 0;
}

std::string JobConfig::serialize() const {
  std::ostringstream os;
  os << "command=" << command << ";alpha1=" << alpha1 << ";alpha2=" << alpha2
     << ";curve=" << curve << ";p1=" << p1 << ";p2=" << p2 << ";field=" << field
     << ";max_degree=" << max_degree << ";format=" << format << ";out=" << out;
  return os.str();
}

JobConfig JobConfig::parse(const std::string& line) {
  JobConfig job;
  std::istringstream is(line);
  std::string item;
  while (std::getline(is, item, ';')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("JobConfig: missing '=' in " + item);
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "command") job.command = value;
    else if (key == "alpha1") job.alpha1 = value;
    else if (key == "alpha2") job.alpha2 = value;
    else if (key == "curve") job.curve = value;
    else if (key == "p1") job.p1 = value;
    else if (key == "p2") job.p2 = value;
    else if (key == "field") job.field = value;
    else if (key == "max_degree") job.max_degree = std::stoll(value);
    else if (key == "format") job.format = value;
    else if (key == "out") job.out = value;
    else throw std::invalid_argument("JobConfig: unknown key " + key);
  }
  return job;
}

std::string divisor_desc(const Rational& alpha1, const std::optional<Rational>& alpha2,
                         bool ineffective) {
  if (!alpha2) return alpha1.str() + " P";
  return alpha1.str() + " P1 " + (ineffective ? "- " : "+ ") + alpha2->str() + " P2";
}

namespace {

std::string coeff_term(const Rational& a, const std::string& var) {
  if (a.sign() == 0) return "";
  std::string mag = (a.sign() < 0 ? -a : a).str();
  std::string body = var.empty() ? mag : (mag == "1" ? var : mag + " " + var);
  return (a.sign() < 0 ? " - " : " + ") + body;
}

}  // namespace

std::string weierstrass_equation(const Rational& a1, const Rational& a2, const Rational& a3,
                                 const Rational& a4, const Rational& a6) {
  return "y^2" + coeff_term(a1, "xy") + coeff_term(a3, "y") + " = x^3" + coeff_term(a2, "x^2") +
         coeff_term(a4, "x") + coeff_term(a6, "");
}

namespace {

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.resize(w, ' ');
  return s;
}

json generator_entry(const LabeledGenerator& g, int n_points) {
  json e;
  e["degree"] = g.degree();
  e["ord_p1"] = generator_ord1(g);
  if (n_points == 2) e["ord_p2"] = generator_ord2(g);
  e["label"] = std::string(1, to_char(g.label));
  e["symbol"] = g.fname;
  e["function"] = g.function_kind;
  return e;
}

json relation_entry(const std::vector<LabeledGenerator>& gens, const RelationLeader& r) {
  json e;
  e["leading"] = json::array();
  for (std::size_t k = 0; k < gens.size() && k < r.monomial.size(); ++k) {
    if (r.monomial[k] == 0) continue;
    json term;
    term["gen"] = gens[k].fname;
    term["exp"] = r.monomial[k];
    e["leading"].push_back(term);
  }
  e["minimal"] = r.minimal;
  e["boxed"] = r.boxed;
  return e;
}

json verification_entry(const VerifyReport& rep) {
  json v;
  v["status"] = rep.ok ? "MATCH" : "MISMATCH";
  v["diffs"] = rep.diffs;
  v["notes"] = rep.notes;
  return v;
}

json document_head(const ReportContext& ctx) {
  json doc;
  doc["schema"] = 1;
  doc["divisor"] = ctx.divisor;
  doc["curve"] = ctx.curve;
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string presentation_text(const ReportContext& ctx,
                              const std::vector<LabeledGenerator>& gens,
                              const std::vector<RelationLeader>& rels) {
  std::ostringstream os;
  os << "section ring of D = " << ctx.divisor << " on " << ctx.curve << "\n\n";

  os << "generators\n";
  os << "  " << pad("name", 10) << pad("degree", 8) << pad("ord(P1)", 9);
  if (ctx.n_points == 2) os << pad("ord(P2)", 9);
  os << pad("label", 7) << "function\n";
  for (const auto& g : gens) {
    os << "  " << pad(g.fname, 10) << pad(std::to_string(g.degree()), 8)
       << pad(std::to_string(generator_ord1(g)), 9);
    if (ctx.n_points == 2) os << pad(std::to_string(generator_ord2(g)), 9);
    os << pad(std::string(1, to_char(g.label)), 7) << g.function_kind << "\n";
  }

  os << "\nrelation leading terms\n";
  if (rels.empty()) os << "  (none)\n";
  for (const auto& r : rels) {
    os << "  " << pad(monomial_string(gens, r.monomial), 22)
       << (r.minimal ? "minimal    " : "not minimal");
    if (r.boxed) os << "  [degree >= 3]";
    os << "\n";
  }
  return os.str();
}

std::string presentation_json(const ReportContext& ctx,
                              const std::vector<LabeledGenerator>& gens,
                              const std::vector<RelationLeader>& rels,
                              const VerifyReport* verification) {
  json doc = document_head(ctx);
  doc["generators"] = json::array();
  for (const auto& g : gens) doc["generators"].push_back(generator_entry(g, ctx.n_points));
  doc["relations"] = json::array();
  for (const auto& r : rels) doc["relations"].push_back(relation_entry(gens, r));
  doc["verification"] = verification ? verification_entry(*verification) : json(nullptr);
  return dump(doc);
}

std::string verify_text(const ReportContext& ctx, const VerifyReport& rep) {
  std::ostringstream os;
  os << "verify D = " << ctx.divisor << " on " << ctx.curve << "\n" << rep.str() << "\n";
  return os.str();
}

std::string explore_text(const ReportContext& ctx, const ConjectureCheck& chk) {
  std::ostringstream os;
  os << "explore D = " << ctx.divisor << " on " << ctx.curve << "\n\n";

  os << "dimensions\n  " << pad("degree", 8) << "dim H^0(floor(dD))\n";
  for (const auto& [d, n] : chk.dims)
    os << "  " << pad(std::to_string(d), 8) << n << "\n";

  os << "\noracle generator degrees:";
  for (auto d : chk.oracle_degrees()) os << " " << d;
  os << "\n\n" << chk.scan.str() << "\n" << chk.str() << "\n";
  return os.str();
}

std::string explore_json(const ReportContext& ctx, const ConjectureCheck& chk) {
  json doc = document_head(ctx);
  doc["strip"] = chk.scan.variant == StripVariant::kAboveCeil ? "above-ceiling" : "above-floor";
  doc["max_degree"] = chk.scan.d_max;

  doc["dimensions"] = json::array();
  for (const auto& [d, n] : chk.dims) {
    json row;
    row["degree"] = d;
    row["dim"] = n;
    doc["dimensions"].push_back(row);
  }

  doc["candidates"] = json::array();
  for (const auto& c : chk.scan.candidates) {
    json row;
    row["degree"] = c.d;
    row["pole_p1"] = c.c;
    row["type"] = to_string(c.type);
    row["note"] = c.note;
    doc["candidates"].push_back(row);
  }

  doc["oracle_generators"] = json::array();
  for (const auto& g : chk.oracle) {
    json row;
    row["degree"] = g.degree;
    row["ord_p1"] = g.ord1;
    row["ord_p2"] = g.ord2;
    doc["oracle_generators"].push_back(row);
  }

  auto points = [](const std::vector<std::pair<std::int64_t, std::int64_t>>& v) {
    json arr = json::array();
    for (const auto& [d, c] : v) {
      json row;
      row["degree"] = d;
      row["pole_p1"] = c;
      arr.push_back(row);
    }
    return arr;
  };
  json check;
  check["status"] = chk.match() ? "MATCH" : "MISMATCH";
  check["matched"] = points(chk.matched);
  check["missing"] = points(chk.missing);
  check["extra"] = points(chk.extra);
  check["notes"] = chk.notes;
  doc["check"] = check;
  return dump(doc);
}

std::string sweep_json(const std::vector<SweepEntry>& entries) {
  json doc;
  doc["schema"] = 1;
  doc["sweep"] = json::array();
  for (const auto& e : entries) {
    json row;
    row["alpha"] = e.alpha.str();
    row["generators"] = e.gen_count;
    row["leaders"] = e.leader_count;
    row["status"] = e.ok() ? "MATCH" : "MISMATCH";
    if (!e.ok()) row["diff"] = e.diff;
    doc["sweep"].push_back(row);
  }
  return dump(doc);
}

}  // namespace sectionring
