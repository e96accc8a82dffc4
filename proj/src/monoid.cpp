#include "sectionring/monoid.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace sectionring {

std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.d) + "," + std::to_string(p.c) + ")";
}

LatticeMonoid::LatticeMonoid(const Rational& alpha) : alpha_(alpha) {
  if (alpha.sign() <= 0) throw std::invalid_argument("LatticeMonoid: alpha must be positive");
}

std::int64_t LatticeMonoid::max_pole(std::int64_t d) const {
  return (alpha_ * Rational(d)).floor_i64();
}

bool LatticeMonoid::contains(LatticePoint p) const {
  return p.d >= 1 && p.c >= 0 && p.c != 1 && p.c <= max_pole(p.d);
}

std::vector<LatticePoint> LatticeMonoid::elements_up_to(std::int64_t dmax) const {
  std::vector<LatticePoint> out;
  for (std::int64_t d = 1; d <= dmax; ++d)
    for (std::int64_t c = 0, hi = max_pole(d); c <= hi; ++c)
      if (c != 1) out.push_back({d, c});
  return out;
}

std::vector<LatticePoint> LatticeMonoid::irreducibles_up_to(std::int64_t dmax) const {
  std::vector<LatticePoint> out;
  for (LatticePoint p : elements_up_to(dmax)) {
    bool split = false;
    for (std::int64_t d = 1; !split && 2 * d <= 2 * p.d - 2; ++d) {
      std::int64_t hi = std::min(max_pole(d), p.c);
      for (std::int64_t c = 0; c <= hi; ++c) {
        if (contains({d, c}) && contains(p - LatticePoint{d, c})) {
          split = true;
          break;
        }
      }
    }
    if (!split) out.push_back(p);
  }
  return out;
}

MonoidDecomposer::MonoidDecomposer(std::vector<LatticePoint> gens, std::int64_t dmax,
                                   std::int64_t cmax)
    : gens_(std::move(gens)), dmax_(dmax), cmax_(cmax) {
  if (!std::is_sorted(gens_.begin(), gens_.end()))
    throw std::invalid_argument("MonoidDecomposer: generators must be (d,c)-sorted");
  for (const auto& g : gens_)
    if (g.d < 1 || g.c < 0)
      throw std::invalid_argument("MonoidDecomposer: bad generator");
  memo_.assign(gens_.size() + 1,
               std::vector<signed char>((dmax_ + 1) * (cmax_ + 1), -1));
}

bool MonoidDecomposer::rep(std::size_t i, LatticePoint p) {
  if (p.d < 0 || p.c < 0) return false;
  if (p.d == 0) return p.c == 0 && true;
  if (i == 0) return false;  // nonzero point, no generators left
  if (p.d > dmax_ || p.c > cmax_) throw std::out_of_range("MonoidDecomposer: point beyond table");
  signed char& m = memo_[i][p.d * (cmax_ + 1) + p.c];
  if (m != -1) return m == 1;
  m = 0;  // settles recursive self-reference benignly: g.d >= 1 strictly shrinks d
  const LatticePoint g = gens_[i - 1];
  for (LatticePoint q = p; q.d >= 0 && q.c >= 0; q = q - g) {
    if (rep(i - 1, q)) {
      m = 1;
      return true;
    }
  }
  m = 0;
  return false;
}

bool MonoidDecomposer::representable(LatticePoint p) { return rep(gens_.size(), p); }

std::vector<std::int64_t> MonoidDecomposer::minimal_decomposition(LatticePoint p) {
  if (!representable(p))
    throw std::invalid_argument("minimal_decomposition: " + to_string(p) + " not representable");
  std::vector<std::int64_t> exps(gens_.size(), 0);
  for (std::size_t k = gens_.size(); k-- > 0;) {
    const LatticePoint g = gens_[k];
    LatticePoint q = p;
    std::int64_t a = 0;
    while (!rep(k, q)) {
      q = q - g;
      ++a;
      if (q.d < 0 || q.c < 0)
        throw std::logic_error("minimal_decomposition: greedy step failed");
    }
    exps[k] = a;
    p = q;
  }
  return exps;
}

void MonoidDecomposer::gather(std::size_t i, LatticePoint p, std::vector<std::int64_t>& cur,
                              std::vector<std::vector<std::int64_t>>& out) {
  if (i == 0) {
    if (p.d == 0 && p.c == 0) out.push_back(cur);
    return;
  }
  if (!rep(i, p)) return;
  const LatticePoint g = gens_[i - 1];
  for (LatticePoint q = p; q.d >= 0 && q.c >= 0; q = q - g) {
    cur[i - 1] = (p.d - q.d) / g.d;
    gather(i - 1, q, cur, out);
  }
  cur[i - 1] = 0;
}

std::vector<std::vector<std::int64_t>> MonoidDecomposer::all_decompositions(LatticePoint p) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(gens_.size(), 0);
  gather(gens_.size(), p, cur, out);
  return out;
}

LatticePoint MonoidDecomposer::image(const std::vector<std::int64_t>& exps) const {
  LatticePoint p{0, 0};
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    p.d += exps[i] * gens_[i].d;
    p.c += exps[i] * gens_[i].c;
  }
  return p;
}

std::int64_t default_leader_degree_bound(const std::vector<LatticePoint>& gens) {
  std::int64_t m = 0;
  for (const auto& g : gens) m = std::max(m, g.d);
  return 4 * m;
}

namespace {

bool contains_exps(const std::vector<std::int64_t>& big, const std::vector<std::int64_t>& small) {
  for (std::size_t i = 0; i < big.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

}  // namespace

std::vector<LeaderVector> relation_leaders_oracle(const LatticeMonoid& M,
                                                  const std::vector<LatticePoint>& gens,
                                                  std::int64_t deg_max) {
  const std::int64_t cmax = M.max_pole(deg_max);
  MonoidDecomposer dec(gens, deg_max, cmax);

  std::set<std::vector<std::int64_t>> candidates;
  std::map<LatticePoint, std::vector<std::int64_t>> md_cache;
  auto md_of = [&](LatticePoint p) -> const std::vector<std::int64_t>& {
    auto it = md_cache.find(p);
    if (it == md_cache.end()) it = md_cache.emplace(p, dec.minimal_decomposition(p)).first;
    return it->second;
  };

  for (LatticePoint m : M.elements_up_to(deg_max)) {
    if (!dec.representable(m)) {
      throw std::invalid_argument("relation_leaders_oracle: " + to_string(m) +
                                  " is in the monoid but not generated; generator list incomplete");
    }
    const auto& md = md_of(m);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (m.d + gens[k].d > deg_max) continue;
      auto v = md;
      ++v[k];
      candidates.insert(std::move(v));
    }
  }

  std::vector<LeaderVector> leaders;
  for (const auto& v : candidates) {
    LatticePoint p = dec.image(v);
    if (v == md_of(p)) continue;
    bool ok = true;
    for (std::size_t k = 0; ok && k < gens.size(); ++k) {
      if (v[k] == 0) continue;
      auto w = v;
      --w[k];
      if (w != md_of(p - gens[k])) ok = false;
    }
    if (ok) leaders.push_back({v, p, false});
  }

  std::sort(leaders.begin(), leaders.end(), [](const LeaderVector& a, const LeaderVector& b) {
    if (a.image.d != b.image.d) return a.image.d < b.image.d;
    if (a.image.c != b.image.c) return a.image.c < b.image.c;
    return a.exps < b.exps;
  });

  // Minimality: connectivity to the minimal decomposition through moves that
  // swap a lower-degree leader for its minimal decomposition (either way).
  for (std::size_t li = 0; li < leaders.size(); ++li) {
    LeaderVector& L = leaders[li];
    auto fiber = dec.all_decompositions(L.image);
    std::map<std::vector<std::int64_t>, int> index;
    for (std::size_t i = 0; i < fiber.size(); ++i) index[fiber[i]] = static_cast<int>(i);

    std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> moves;
    for (const auto& other : leaders)
      if (other.image.d < L.image.d) moves.emplace_back(other.exps, md_of(other.image));

    const auto& target = md_of(L.image);
    std::vector<char> seen(fiber.size(), 0);
    std::queue<int> bfs;
    bfs.push(index.at(L.exps));
    seen[static_cast<std::size_t>(bfs.front())] = 1;
    bool connected = false;
    while (!bfs.empty() && !connected) {
      const auto& u = fiber[static_cast<std::size_t>(bfs.front())];
      bfs.pop();
      if (u == target) {
        connected = true;
        break;
      }
      for (const auto& [from, to] : moves) {
        for (int dir = 0; dir < 2; ++dir) {
          const auto& a = dir == 0 ? from : to;
          const auto& b = dir == 0 ? to : from;
          if (!contains_exps(u, a)) continue;
          auto w = u;
          for (std::size_t i = 0; i < w.size(); ++i) w[i] += b[i] - a[i];
          auto it = index.find(w);
          if (it != index.end() && !seen[static_cast<std::size_t>(it->second)]) {
            seen[static_cast<std::size_t>(it->second)] = 1;
            bfs.push(it->second);
          }
        }
      }
    }
    L.minimal = !connected;
  }
  return leaders;
}

}  // namespace sectionring
