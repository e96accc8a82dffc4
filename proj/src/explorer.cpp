#include "sectionring/explorer.hpp"

#include <functional>
#include <numeric>
#include <set>

namespace sectionring {

FrobeniusInstance FrobeniusInstance::from_pq(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw std::invalid_argument("FrobeniusInstance: need coprime positive p, q");
  for (std::int64_t a = 1; a <= p * q + 1; ++a) {
    std::int64_t num = a * q - 1;
    if (num % p == 0 && num / p >= 1) return {p, q, a, num / p};
  }
  throw std::invalid_argument("FrobeniusInstance: no witness found");
}

FrobeniusDimensions frobenius_dimension(const FrobeniusInstance& inst, std::int64_t d) {
  if (d < 0) throw std::invalid_argument("frobenius_dimension: need d >= 0");
  FrobeniusDimensions out;
  std::int64_t m = d - inst.p * inst.q;
  if (m >= 0)
    for (std::int64_t x = 0; x * inst.p <= m; ++x)
      if ((m - x * inst.p) % inst.q == 0) ++out.count;
  std::int64_t dim =
      Rational(inst.a * d, inst.p).floor_i64() - Rational(inst.b * d, inst.q).ceil_i64();
  out.formula_a = std::max<std::int64_t>(0, dim);
  out.formula_b = std::max<std::int64_t>(0, dim - 1);
  out.a_matches = out.formula_a == out.count;
  out.b_matches = out.formula_b == out.count;
  return out;
}

std::string to_string(CandidateType t) {
  switch (t) {
    case CandidateType::kA: return "a";
    case CandidateType::kB: return "b";
    case CandidateType::kC: return "c";
  }
  return "?";
}

namespace {

// One product of candidate generators, recorded as its pole multiset. The
// product has pole order sum at P1 and vanishes to order sum - parts at P2,
// so in its column it can account for one pole order in [zfloor, sum].
struct Token {
  std::vector<std::int64_t> cs;
  std::int64_t sum = 0;
  std::int64_t zfloor = 0;
  bool used = false;
};

std::vector<Token> product_tokens(const std::vector<std::pair<std::int64_t, std::int64_t>>& gens,
                                  std::int64_t d) {
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> cur;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (left == 0) {
      if (cur.size() >= 2) {
        std::vector<std::int64_t> cs = cur;
        std::sort(cs.begin(), cs.end());
        seen.insert(cs);
      }
      return;
    }
    for (std::size_t k = i; k < gens.size(); ++k) {
      if (gens[k].first > left) break;
      cur.push_back(gens[k].second);
      rec(k, left - gens[k].first);
      cur.pop_back();
    }
  };
  rec(0, d);
  std::vector<Token> out;
  for (const auto& cs : seen) {
    std::int64_t sum = std::accumulate(cs.begin(), cs.end(), std::int64_t{0});
    out.push_back({cs, sum, sum - static_cast<std::int64_t>(cs.size()) + 1, false});
  }
  return out;
}

// Matches each column slot, top down, with the unused token of largest
// vanishing floor that can still sit there.
int pick_token(std::vector<Token>& tokens, std::int64_t c) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    Token& t = tokens[i];
    if (t.used || t.sum < c || t.zfloor > c) continue;
    if (best < 0 || t.zfloor > tokens[best].zfloor ||
        (t.zfloor == tokens[best].zfloor && t.sum > tokens[best].sum))
      best = i;
  }
  return best;
}

}  // namespace

ConjectureScan conjecture_generators(const Rational& alpha1, const Rational& alpha2,
                                     std::int64_t d_max, StripVariant variant) {
  if (!(alpha2 > Rational(0) && alpha1 > alpha2))
    throw std::invalid_argument("conjecture_generators: need alpha1 > alpha2 > 0");
  ConjectureScan scan;
  scan.alpha1 = alpha1;
  scan.alpha2 = alpha2;
  scan.variant = variant;
  scan.d_max = d_max;

  IneffectiveStrip strip{alpha1, alpha2, variant};
  std::set<std::pair<std::int64_t, std::int64_t>> bla_points;
  for (const Frac& f : best_lower_approximations(alpha1))
    if (f.c >= 1) bla_points.insert({f.d, f.c});
  std::map<std::int64_t, int> bua_col;  // degree -> 1-based index
  {
    int j = 0;
    for (const Frac& f : best_upper_approximations(alpha2)) bua_col.emplace(f.d, ++j);
  }
  // First strip point on the ray c/d = alpha1. When no plain approximation
  // point reaches the strip this is where the slope-alpha1 generator lands.
  std::optional<std::pair<std::int64_t, std::int64_t>> edge_a;
  {
    Frac last{alpha1.num_i64(), alpha1.den_i64()};
    for (std::int64_t k = 1; k * last.d <= d_max; ++k)
      if (strip.contains(k * last.d, k * last.c)) {
        edge_a = {k * last.d, k * last.c};
        break;
      }
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> gens;  // (degree, pole)
  for (std::int64_t d = 1; d <= d_max; ++d) {
    std::int64_t lo = strip.lo(d), hi = strip.hi(d);
    if (hi < lo) continue;
    std::vector<Token> tokens = product_tokens(gens, d);
    std::vector<ConjectureCandidate> column;
    for (std::int64_t c = hi; c >= lo; --c) {
      int t = pick_token(tokens, c);
      if (t >= 0) {
        tokens[t].used = true;
        scan.covered.push_back({d, c});
        continue;
      }
      ConjectureCandidate cand;
      cand.d = d;
      cand.c = c;
      if (bla_points.count({d, c})) {
        cand.type = CandidateType::kA;
        cand.note = "best lower approximation point of alpha1";
      } else if (edge_a && *edge_a == std::make_pair(d, c)) {
        cand.type = CandidateType::kA;
        cand.note = "first strip point on the ray of slope alpha1";
      } else if (c == lo) {
        cand.type = CandidateType::kB;
        cand.note = "bottom strip slot out of reach of products";
      } else if (c == lo + 1 && bua_col.count(d) && bua_col[d] >= 2) {
        cand.type = CandidateType::kC;
        cand.in_strict_c_indexing = bua_col[d] >= 3;
        cand.note = "next-to-bottom slot at upper approximation column j=" +
                    std::to_string(bua_col[d]);
      } else {
        scan.unlabeled.push_back({d, c});
        continue;
      }
      column.push_back(cand);
    }
    std::reverse(column.begin(), column.end());
    for (const auto& cand : column) gens.push_back({cand.d, cand.c});
    scan.candidates.insert(scan.candidates.end(), column.begin(), column.end());
  }
  return scan;
}

std::vector<std::int64_t> ConjectureScan::degrees() const {
  std::set<std::int64_t> ds;
  for (const auto& c : candidates) ds.insert(c.d);
  return {ds.begin(), ds.end()};
}

std::string ConjectureScan::str() const {
  std::string s = "conjecture candidates for D = " + alpha1.str() + " P1 - " + alpha2.str() +
                  " P2, degree <= " + std::to_string(d_max) +
                  (variant == StripVariant::kAboveCeil ? " (strip c > ceil(d*alpha2))"
                                                       : " (strip c > floor(d*alpha2))");
  for (const auto& c : candidates)
    s += "\n  " + to_string(c.type) + " (" + std::to_string(c.d) + "," + std::to_string(c.c) +
         ")  " + c.note;
  s += "\n  strip points covered by products: " + std::to_string(covered.size());
  if (!unlabeled.empty()) {
    s += "\n  uncovered points no rule names:";
    for (const auto& [d, c] : unlabeled)
      s += " (" + std::to_string(d) + "," + std::to_string(c) + ")";
  }
  return s;
}

void finish_conjecture_check(ConjectureCheck& out) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> want;
  for (const auto& c : out.scan.candidates) ++want[{c.d, c.c}];
  for (const auto& g : out.oracle) {
    std::pair<std::int64_t, std::int64_t> pt{g.degree, -g.ord1};
    auto it = want.find(pt);
    if (it != want.end() && it->second > 0) {
      --it->second;
      out.matched.push_back(pt);
    } else {
      out.missing.push_back(pt);
    }
  }
  for (const auto& [pt, n] : want)
    for (std::int64_t i = 0; i < n; ++i) out.extra.push_back(pt);
  std::sort(out.matched.begin(), out.matched.end());
  std::sort(out.missing.begin(), out.missing.end());

  std::vector<std::pair<std::int64_t, std::int64_t>> loose;  // type c emitted only by j >= 2
  for (const auto& c : out.scan.candidates)
    if (c.type == CandidateType::kC && !c.in_strict_c_indexing) loose.push_back({c.d, c.c});
  if (!loose.empty()) {
    bool all_found = true;
    for (const auto& pt : loose)
      if (std::find(out.extra.begin(), out.extra.end(), pt) != out.extra.end())
        all_found = false;
    std::string pts;
    for (const auto& [d, c] : loose) pts += " (" + std::to_string(d) + "," + std::to_string(c) + ")";
    out.notes.push_back(all_found
                            ? "type c index range j >= 2 confirmed:" + pts +
                                  " found by the oracle; the range j >= 3 would drop them"
                            : "type c points emitted only by j >= 2 include oracle misses:" + pts);
  }
  if (out.scan.variant == StripVariant::kAboveFloor)
    out.notes.push_back("strip variant: c > floor(d*alpha2), keeps the excluded pole row");
}

std::vector<std::int64_t> ConjectureCheck::oracle_degrees() const {
  std::set<std::int64_t> ds;
  for (const auto& g : oracle) ds.insert(g.degree);
  return {ds.begin(), ds.end()};
}

std::string ConjectureCheck::str() const {
  std::string s = match() ? "MATCH" : "MISMATCH";
  s += ": oracle found " + std::to_string(oracle.size()) + " generators, conjecture named " +
       std::to_string(scan.candidates.size());
  for (const auto& [d, c] : missing)
    s += "\n  candidate-missing: oracle generator at degree " + std::to_string(d) +
         ", pole " + std::to_string(c);
  for (const auto& [d, c] : extra)
    s += "\n  candidate-extra: no oracle generator at degree " + std::to_string(d) + ", pole " +
         std::to_string(c);
  for (const auto& n : notes) s += "\n  note: " + n;
  return s;
}

}  // namespace sectionring
