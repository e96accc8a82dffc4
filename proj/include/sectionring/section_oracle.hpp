#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sectionring/divisor.hpp"
#include "sectionring/localexp.hpp"
#include "sectionring/presentation.hpp"
#include "sectionring/riemann_roch.hpp"

namespace sectionring {

/// dim of the degree-d graded piece u^d H^0(floor(d D)).
template <class K>
std::int64_t hilbert_dim(const WeierstrassCurve<K>& e, const QDivisor<K>& qd, std::int64_t d) {
  CurveDivisor<K> dd = floor_divisor(qd, d);
  std::int64_t deg = dd.degree();
  if (deg >= 1) return deg;
  if (deg == 0) return is_principal(e, dd) ? 1 : 0;
  return 0;
}

/// Drops known-zero leading coefficients so lo is the order of the series.
template <class K>
Series<K> series_trimmed(Series<K> s) {
  std::size_t k = 0;
  while (k < s.c.size() && s.c[k] == K(0)) ++k;
  s.lo += static_cast<std::int64_t>(k);
  s.c.erase(s.c.begin(), s.c.begin() + static_cast<std::ptrdiff_t>(k));
  return s;
}

/// Expansion at p carrying at least `rel` coefficients from the leading term
/// on, trimmed so lo equals the order of f at p.
template <class K>
Series<K> expand_rel(const WeierstrassCurve<K>& e, const CurveFunction<K>& f,
                     const CurvePoint<K>& p, std::int64_t rel) {
  if (f.is_zero()) throw std::invalid_argument("expand_rel: zero function");
  std::int64_t base = rel + 8;
  for (std::int64_t t = base; t <= 64 * base; t *= 2) {
    Series<K> s;
    try {
      s = expand_at(e, f, p, t);
    } catch (const PrecisionError&) {
      continue;
    }
    auto v = s.first_nonzero();
    if (!v) continue;
    if (s.hi - *v < rel) continue;
    return series_trimmed(std::move(s));
  }
  throw std::runtime_error("expand_rel: precision cap exceeded");
}

/// Coefficients of s on the exponent window [lo, lo + len).
template <class K>
std::vector<K> window_coords(const Series<K>& s, std::int64_t lo, std::int64_t len) {
  std::vector<K> out;
  out.reserve(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) out.push_back(s.coeff(lo + i));
  return out;
}

/// Reduced echelon basis of the span of fs, coordinatized by the expansion
/// coefficients at p on [lo, lo + len). Rows come back ordered by pole depth
/// at p, deepest first, with leading coefficient 1 and zeros at the other
/// rows' pivot exponents. Throws if the inputs are dependent.
template <class K>
std::vector<CurveFunction<K>> echelonize_functions(const WeierstrassCurve<K>& e,
                                                   const std::vector<CurveFunction<K>>& fs,
                                                   const CurvePoint<K>& p, std::int64_t lo,
                                                   std::int64_t len) {
  std::size_t n = fs.size();
  std::size_t width = static_cast<std::size_t>(len);
  std::vector<std::vector<K>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = window_coords(expand_rel(e, fs[i], p, len + 4), lo, len);
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(K(i == j ? 1 : 0));
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < width && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && m[sel][col] == K(0)) ++sel;
    if (sel == n) continue;
    std::swap(m[row], m[sel]);
    K inv = K(1) / m[row][col];
    for (auto& x : m[row]) x = x * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == K(0)) continue;
      K c = m[i][col];
      for (std::size_t j = col; j < m[i].size(); ++j) m[i][j] = m[i][j] - c * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  if (row != n) throw std::logic_error("echelonize_functions: dependent inputs");
  std::vector<CurveFunction<K>> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    CurveFunction<K> g;
    for (std::size_t j = 0; j < n; ++j) {
      const K& c = m[r][width + j];
      if (!(c == K(0))) g = fadd(g, fscale(c, fs[j]));
    }
    out.push_back(std::move(g));
  }
  return out;
}

/// Canonical basis of u^d H^0(floor(d D)), echelonized at p1 so the pole
/// orders at p1 strictly decrease down the list.
template <class K>
std::vector<CurveFunction<K>> graded_piece(const WeierstrassCurve<K>& e, const QDivisor<K>& qd,
                                           const CurvePoint<K>& p1, std::int64_t d) {
  CurveDivisor<K> dd = floor_divisor(qd, d);
  std::int64_t deg = dd.degree();
  std::vector<CurveFunction<K>> basis;
  if (deg >= 1) {
    basis = riemann_roch_space(e, dd);
  } else if (deg == 0 && is_principal(e, dd)) {
    CurveDivisor<K> aug = dd;
    aug.add(CurvePoint<K>::at_infinity(), 1);
    basis = riemann_roch_space(e, aug);
  } else {
    return {};
  }
  std::int64_t lo = -dd.at(p1);
  std::int64_t len = std::max<std::int64_t>(deg, 0) + 2;
  return echelonize_functions(e, basis, p1, lo, len);
}

/// The element of L(c P) with pole order exactly c, normalized to leading
/// coefficient 1 and zero coefficients at the pivot exponents of L((c-1) P).
template <class K>
CurveFunction<K> one_point_t(const WeierstrassCurve<K>& e, const CurvePoint<K>& p,
                             std::int64_t c) {
  if (c < 2) throw std::invalid_argument("one_point_t: pole order must be at least 2");
  CurveDivisor<K> d;
  d.add(p, c);
  auto basis = echelonize_functions(e, riemann_roch_space(e, d), p, -c, c + 2);
  const CurveFunction<K>& f = basis.front();
  if (order_at(e, f, p) != -c) throw std::logic_error("one_point_t: wrong pole order");
  return f;
}

/// Leading monomial of one ring relation found by the scan. exps aligns with
/// the scan's generator order. minimal_known is false when the relation
/// bookkeeping did not reach this degree.
struct OracleLeader {
  std::vector<std::int64_t> exps;
  std::int64_t degree = 0;
  bool minimal = true;
  bool minimal_known = true;
};

struct GenProfileEntry {
  std::int64_t degree = 0;
  std::int64_t ord1 = 0;
  std::int64_t ord2 = 0;

  friend bool operator==(const GenProfileEntry& a, const GenProfileEntry& b) {
    return a.degree == b.degree && a.ord1 == b.ord1 && a.ord2 == b.ord2;
  }
};

template <class K>
struct SuppliedGenerator {
  std::string name;
  std::int64_t degree;
  CurveFunction<K> f;
  std::int64_t pred_ord1;
  std::int64_t pred_ord2;

  SuppliedGenerator(std::string n, std::int64_t deg, CurveFunction<K> fn, std::int64_t o1,
                    std::int64_t o2)
      : name(std::move(n)), degree(deg), f(std::move(fn)), pred_ord1(o1), pred_ord2(o2) {}
};

using MonomialCmp =
    std::function<int(const std::vector<std::int64_t>&, const std::vector<std::int64_t>&)>;

inline int default_monomial_cmp(const std::vector<std::int64_t>& a,
                                const std::vector<std::int64_t>& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

/// Degree-by-degree scan of the section ring S_D. In profile mode it
/// discovers a minimal generating set and the Groebner relation leaders with
/// minimality flags; in verify mode it checks a supplied generator list
/// instead and records every disagreement in diffs().
template <class K>
class RingScan {
 public:
  RingScan(WeierstrassCurve<K> e, QDivisor<K> qd, CurvePoint<K> p1,
           std::optional<CurvePoint<K>> p2)
      : e_(std::move(e)), qd_(std::move(qd)), p1_(std::move(p1)), p2_(std::move(p2)) {}

  void supply_generators(std::vector<SuppliedGenerator<K>> gens) { supplied_ = std::move(gens); }
  void set_compare(MonomialCmp cmp) { cmp_ = std::move(cmp); }
  void set_relation_degree_cap(std::int64_t cap) { explicit_cap_ = cap; }

  void run(std::int64_t d_max) {
    rel_ = 8;
    for (std::int64_t d = 1; d <= d_max; ++d) {
      std::int64_t deg = floor_divisor(qd_, d).degree();
      rel_ = std::max(rel_, std::max<std::int64_t>(deg, 0) + 8);
    }
    mono_memo_.clear();
    mono_memo_[{}] = MonoEntry{Series<K>::exact_poly(Poly<K>::one()),
                               CurveFunction<K>::constant(K(1))};
    verify_mode_ = !supplied_.empty();
    for (const auto& g : supplied_) activate(g);
    for (std::int64_t d = 1; d <= d_max; ++d) process_degree(d);
    for (auto& l : leaders_) l.exps.resize(active_.size(), 0);
  }

  const std::vector<GenProfileEntry>& generator_profile() const { return profile_; }
  const std::vector<OracleLeader>& leaders() const { return leaders_; }
  const std::vector<std::string>& diffs() const { return diffs_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::map<std::int64_t, std::int64_t>& dims() const { return dims_; }
  const std::map<std::int64_t, std::int64_t>& minimal_relation_counts() const { return betti1_; }
  bool ok() const { return diffs_.empty(); }

 private:
  struct ActiveGen {
    std::string name;
    std::int64_t degree = 1;
    std::int64_t ord1 = 0;
    std::int64_t ord2 = 0;
    CurveFunction<K> f;
    Series<K> s1;
  };
  struct MonoEntry {
    Series<K> s;
    CurveFunction<K> f;
  };
  using Expr = std::vector<std::pair<std::vector<std::int64_t>, K>>;
  struct EchRow {
    std::vector<K> v;  // leading coefficient 1, zeros before the pivot
    Expr expr;         // v as a combination of monomial values; empty for basis residues
    std::optional<CurveFunction<K>> fn;  // set for basis residues
  };
  struct StoredRelation {
    std::int64_t degree = 0;
    std::vector<std::int64_t> lead;
    Expr rhs;  // lead = sum of rhs over standard monomials
  };

  void activate(const SuppliedGenerator<K>& g) {
    ActiveGen a;
    a.name = g.name;
    a.degree = g.degree;
    a.f = g.f;
    a.s1 = expand_rel(e_, g.f, p1_, rel_);
    a.ord1 = a.s1.lo;
    if (a.ord1 != g.pred_ord1)
      diffs_.push_back("generator " + g.name + ": order at P1 is " + std::to_string(a.ord1) +
                       ", expected " + std::to_string(g.pred_ord1));
    if (p2_) {
      a.ord2 = order_at(e_, g.f, *p2_);
      if (a.ord2 != g.pred_ord2)
        diffs_.push_back("generator " + g.name + ": order at P2 is " + std::to_string(a.ord2) +
                         ", expected " + std::to_string(g.pred_ord2));
    }
    active_.push_back(std::move(a));
  }

  int cmp(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const {
    return cmp_ ? cmp_(a, b) : default_monomial_cmp(a, b);
  }

  std::int64_t relation_cap() const {
    std::int64_t md = 0;
    for (const auto& g : active_) md = std::max(md, g.degree);
    return std::max(explicit_cap_, 3 * md);
  }

  static std::vector<std::int64_t> trimmed(std::vector<std::int64_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  }

  static bool divides(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > (i < b.size() ? b[i] : 0)) return false;
    return true;
  }

  bool divisible_by_leader(const std::vector<std::int64_t>& m) const {
    for (const auto& l : leaders_)
      if (divides(l.exps, m)) return true;
    return false;
  }

  std::vector<std::vector<std::int64_t>> enumerate_monomials(std::int64_t d) const {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur(active_.size(), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rem) {
      if (i == active_.size()) {
        if (rem == 0) out.push_back(cur);
        return;
      }
      std::int64_t step = active_[i].degree;
      for (std::int64_t e = 0; e * step <= rem; ++e) {
        cur[i] = e;
        rec(i + 1, rem - e * step);
      }
      cur[i] = 0;
    };
    rec(0, d);
    return out;
  }

  const MonoEntry& mono_entry(const std::vector<std::int64_t>& key) {
    auto it = mono_memo_.find(key);
    if (it != mono_memo_.end()) return it->second;
    std::size_t k = key.size() - 1;  // key is trimmed, so the back is nonzero
    std::vector<std::int64_t> parent = key;
    parent[k] -= 1;
    parent = trimmed(std::move(parent));
    const MonoEntry& pe = mono_entry(parent);
    MonoEntry cur{series_trimmed(smul(pe.s, active_[k].s1)), fmul(e_, pe.f, active_[k].f)};
    return mono_memo_.emplace(key, std::move(cur)).first->second;
  }

  std::vector<K> coords_of(const std::vector<std::int64_t>& m, std::int64_t lo,
                           std::int64_t len) {
    return window_coords(mono_entry(trimmed(m)).s, lo, len);
  }

  static bool is_zero_vec(const std::vector<K>& v) {
    for (const auto& x : v)
      if (!(x == K(0))) return false;
    return true;
  }

  // Rows have zeros before their pivot, so one ascending pass is a full
  // reduction.
  static void reduce(const std::map<std::int64_t, EchRow>& rows, std::vector<K>& v,
                     std::vector<std::pair<std::int64_t, K>>* used) {
    for (const auto& [piv, row] : rows) {
      K lam = v[static_cast<std::size_t>(piv)];
      if (lam == K(0)) continue;
      for (std::size_t j = static_cast<std::size_t>(piv); j < v.size(); ++j)
        v[j] = v[j] - lam * row.v[j];
      if (used) used->push_back({piv, lam});
    }
  }

  static std::int64_t insert_row(std::map<std::int64_t, EchRow>& rows, std::vector<K> v,
                                 Expr expr, std::optional<CurveFunction<K>> fn) {
    std::size_t j0 = 0;
    while (j0 < v.size() && v[j0] == K(0)) ++j0;
    if (j0 == v.size()) throw std::logic_error("insert_row: zero row");
    K inv = K(1) / v[j0];
    for (auto& x : v) x = x * inv;
    for (auto& [m, c] : expr) c = c * inv;
    std::int64_t piv = static_cast<std::int64_t>(j0);
    rows.emplace(piv, EchRow{std::move(v), std::move(expr), std::move(fn)});
    return piv;
  }

  static void reduce_plain(const std::map<std::int64_t, std::vector<K>>& rows,
                           std::vector<K>& v) {
    for (const auto& [piv, row] : rows) {
      K lam = v[static_cast<std::size_t>(piv)];
      if (lam == K(0)) continue;
      for (std::size_t j = static_cast<std::size_t>(piv); j < v.size(); ++j)
        v[j] = v[j] - lam * row[j];
    }
  }

  static bool insert_plain(std::map<std::int64_t, std::vector<K>>& rows, std::vector<K> v) {
    std::size_t j0 = 0;
    while (j0 < v.size() && v[j0] == K(0)) ++j0;
    if (j0 == v.size()) return false;
    K inv = K(1) / v[j0];
    for (auto& x : v) x = x * inv;
    rows.emplace(static_cast<std::int64_t>(j0), std::move(v));
    return true;
  }

  static std::vector<std::int64_t> add_exp(const std::vector<std::int64_t>& m, std::size_t k) {
    std::vector<std::int64_t> out = m;
    if (out.size() <= k) out.resize(k + 1, 0);
    out[k] += 1;
    return out;
  }

  CurveFunction<K> function_of_row(const EchRow& row) {
    if (row.fn) return *row.fn;
    CurveFunction<K> f;
    for (const auto& [m, c] : row.expr) f = fadd(f, fscale(c, mono_entry(trimmed(m)).f));
    return f;
  }

  void process_degree(std::int64_t d) {
    CurveDivisor<K> dd = floor_divisor(qd_, d);
    std::int64_t n_d = hilbert_dim(e_, qd_, d);
    dims_[d] = n_d;
    std::int64_t lo = -dd.at(p1_);
    std::int64_t len = std::max<std::int64_t>(dd.degree(), 0) + 2;
    std::int64_t cap = relation_cap();
    bool shortcut = d > cap;

    std::vector<std::vector<std::int64_t>> monos = enumerate_monomials(d);
    std::sort(monos.begin(), monos.end(),
              [&](const auto& a, const auto& b) { return cmp(a, b) < 0; });

    std::map<std::int64_t, EchRow> rows;
    std::vector<std::vector<std::int64_t>> dependents;
    std::vector<std::vector<std::int64_t>> new_leaders;
    std::map<std::vector<std::int64_t>, std::vector<K>> coord_cache;
    std::int64_t n_standard = 0;
    bool skipped = false;

    for (const auto& m : monos) {
      bool divisible = divisible_by_leader(m);
      if (shortcut && divisible) {
        skipped = true;
        continue;
      }
      std::vector<K> v = coords_of(m, lo, len);
      coord_cache.emplace(m, v);
      std::vector<std::pair<std::int64_t, K>> used;
      reduce(rows, v, &used);
      if (is_zero_vec(v)) {
        dependents.push_back(m);
        StoredRelation r;
        r.degree = d;
        r.lead = m;
        std::map<std::vector<std::int64_t>, K> acc;
        for (const auto& [piv, lam] : used)
          for (const auto& [s, c] : rows.at(piv).expr) {
            auto it = acc.emplace(s, K(0)).first;
            it->second = it->second + lam * c;
          }
        for (auto& [s, c] : acc)
          if (!(c == K(0))) r.rhs.push_back({s, c});
        rel_store_.push_back(std::move(r));
        if (!divisible) new_leaders.push_back(m);
      } else {
        ++n_standard;
        std::map<std::vector<std::int64_t>, K> acc;
        acc[m] = K(1);
        for (const auto& [piv, lam] : used)
          for (const auto& [s, c] : rows.at(piv).expr) {
            auto it = acc.emplace(s, K(0)).first;
            it->second = it->second - lam * c;
          }
        Expr expr;
        for (auto& [s, c] : acc)
          if (!(c == K(0))) expr.push_back({s, c});
        insert_row(rows, std::move(v), std::move(expr), std::nullopt);
      }
    }
    if (skipped && d < skip_marker_) skip_marker_ = d;
    if (n_standard > n_d)
      diffs_.push_back("degree " + std::to_string(d) +
                       ": monomial rank exceeds the graded dimension");

    std::int64_t missing = n_d - n_standard;
    if (verify_mode_) {
      if (missing != 0)
        diffs_.push_back("degree " + std::to_string(d) + ": monomials span " +
                         std::to_string(n_standard) + " of " + std::to_string(n_d) +
                         " dimensions");
      product_span_checks(d, monos, coord_cache, n_d, lo, len);
    } else if (missing > 0) {
      discover_generators(d, rows, lo, len, missing);
    }

    bool solid = d <= cap && skip_marker_ >= d;
    if (!new_leaders.empty()) {
      std::map<std::vector<std::int64_t>, bool> flags;
      if (solid) flags = minimality_flags(d, new_leaders);
      for (const auto& m : new_leaders) {
        OracleLeader l;
        l.exps = m;
        l.degree = d;
        if (solid) {
          l.minimal = flags.at(m);
        } else {
          l.minimal = true;
          l.minimal_known = false;
          notes_.push_back("degree " + std::to_string(d) +
                           ": leader beyond the relation bookkeeping window, minimality untested");
        }
        leaders_.push_back(std::move(l));
      }
    } else if (solid) {
      // every dependent leading term is divisible by an earlier leader, and a
      // shift of that leader's relation reduces it, so nothing is minimal here
      betti1_[d] = 0;
    }

    for (auto& g : pending_) active_.push_back(std::move(g));
    pending_.clear();
  }

  void product_span_checks(std::int64_t d, const std::vector<std::vector<std::int64_t>>& monos,
                           const std::map<std::vector<std::int64_t>, std::vector<K>>& coord_cache,
                           std::int64_t n_d, std::int64_t lo, std::int64_t len) {
    std::map<std::int64_t, std::vector<K>> prows;
    std::int64_t prank = 0;
    for (const auto& m : monos) {
      std::int64_t total = 0;
      for (auto e : m) total += e;
      if (total < 2) continue;
      auto it = coord_cache.find(m);
      if (it == coord_cache.end()) continue;  // divisible skip: already in the span
      std::vector<K> v = it->second;
      reduce_plain(prows, v);
      if (insert_plain(prows, std::move(v))) ++prank;
    }
    std::int64_t g_here = 0;
    for (const auto& g : active_) {
      if (g.degree != d) continue;
      ++g_here;
      std::vector<K> v = window_coords(g.s1, lo, len);
      reduce_plain(prows, v);
      if (!insert_plain(prows, std::move(v)))
        diffs_.push_back("degree " + std::to_string(d) + ": generator " + g.name +
                         " lies in the span of products");
    }
    if (prank + g_here != n_d)
      diffs_.push_back("degree " + std::to_string(d) + ": products span " +
                       std::to_string(prank) + " dimensions and " + std::to_string(g_here) +
                       " generators are listed, but the graded piece has dimension " +
                       std::to_string(n_d));
  }

  void discover_generators(std::int64_t d, std::map<std::int64_t, EchRow>& rows, std::int64_t lo,
                           std::int64_t len, std::int64_t missing) {
    std::vector<CurveFunction<K>> basis = graded_piece(e_, qd_, p1_, d);
    std::int64_t found = 0;
    for (const auto& b : basis) {
      std::vector<K> v = window_coords(expand_rel(e_, b, p1_, len + 4), lo, len);
      std::vector<std::pair<std::int64_t, K>> used;
      reduce(rows, v, &used);
      if (is_zero_vec(v)) continue;
      CurveFunction<K> f = b;
      for (const auto& [piv, lam] : used)
        f = fsub(f, fscale(lam, function_of_row(rows.at(piv))));
      std::size_t j0 = 0;
      while (v[j0] == K(0)) ++j0;
      f = fscale(K(1) / v[j0], f);
      ActiveGen a;
      a.name = "g" + std::to_string(active_.size() + pending_.size() + 1);
      a.degree = d;
      a.f = f;
      a.s1 = expand_rel(e_, f, p1_, rel_);
      a.ord1 = a.s1.lo;
      if (a.ord1 != lo + static_cast<std::int64_t>(j0))
        throw std::logic_error("ring scan: representative order disagrees with its pivot");
      a.ord2 = p2_ ? order_at(e_, f, *p2_) : 0;
      profile_.push_back({d, a.ord1, a.ord2});
      insert_row(rows, std::move(v), {}, std::move(f));
      pending_.push_back(std::move(a));
      if (++found == missing) break;
    }
    if (found != missing)
      throw std::logic_error("ring scan: could not complete the graded piece at degree " +
                             std::to_string(d));
  }

  // Flags each new leader by whether its relation survives modulo shifts of
  // lower-degree relations. Dependents divisible by an earlier leader reduce
  // through the shifted leader relation, so only leaders need testing.
  std::map<std::vector<std::int64_t>, bool> minimality_flags(
      std::int64_t d, const std::vector<std::vector<std::int64_t>>& new_leaders) {
    std::map<std::vector<std::int64_t>, std::size_t> idx;
    {
      std::size_t i = 0;
      for (const auto& r : rel_store_)
        if (r.degree == d) idx.emplace(trimmed(r.lead), i++);
    }
    std::size_t n = idx.size();
    std::map<std::int64_t, std::vector<K>> ech;
    for (const auto& r : rel_store_) {
      if (r.degree >= d) continue;
      for (std::size_t k = 0; k < active_.size(); ++k) {
        if (active_[k].degree != d - r.degree) continue;
        std::vector<K> row(n, K(0));
        auto lead = trimmed(add_exp(r.lead, k));
        auto it = idx.find(lead);
        if (it == idx.end())
          throw std::logic_error("ring scan: shifted relation leader missing at degree " +
                                 std::to_string(d));
        row[it->second] = row[it->second] + K(1);
        for (const auto& [s, c] : r.rhs) {
          auto jt = idx.find(trimmed(add_exp(s, k)));
          if (jt != idx.end()) row[jt->second] = row[jt->second] - c;
        }
        reduce_plain(ech, row);
        insert_plain(ech, std::move(row));
      }
    }
    std::map<std::vector<std::int64_t>, bool> flags;
    std::int64_t count = 0;
    for (const auto& m : new_leaders) {  // ascending: new_leaders follow scan order
      std::vector<K> v(n, K(0));
      v[idx.at(trimmed(m))] = K(1);
      reduce_plain(ech, v);
      bool minimal = !is_zero_vec(v);
      flags[m] = minimal;
      if (minimal) {
        insert_plain(ech, std::move(v));
        ++count;
      }
    }
    betti1_[d] = count;
    return flags;
  }

  WeierstrassCurve<K> e_;
  QDivisor<K> qd_;
  CurvePoint<K> p1_;
  std::optional<CurvePoint<K>> p2_;
  std::vector<SuppliedGenerator<K>> supplied_;
  MonomialCmp cmp_;
  std::int64_t explicit_cap_ = -1;
  std::int64_t rel_ = 8;
  bool verify_mode_ = false;
  std::int64_t skip_marker_ = Series<K>::kInf;

  std::vector<ActiveGen> active_;
  std::vector<ActiveGen> pending_;
  std::map<std::vector<std::int64_t>, MonoEntry> mono_memo_;
  std::vector<StoredRelation> rel_store_;
  std::vector<OracleLeader> leaders_;
  std::vector<GenProfileEntry> profile_;
  std::vector<std::string> diffs_;
  std::vector<std::string> notes_;
  std::map<std::int64_t, std::int64_t> dims_;
  std::map<std::int64_t, std::int64_t> betti1_;
};

struct RingProfile {
  std::vector<GenProfileEntry> generators;
  std::vector<OracleLeader> leaders;
  std::map<std::int64_t, std::int64_t> dims;
  std::map<std::int64_t, std::int64_t> minimal_relation_counts;
};

/// Brute-force generator and relation profile of S_D up to degree d_max.
template <class K>
RingProfile profile_section_ring(const WeierstrassCurve<K>& e, const QDivisor<K>& qd,
                                 const CurvePoint<K>& p1, std::optional<CurvePoint<K>> p2,
                                 std::int64_t d_max) {
  RingScan<K> scan(e, qd, p1, std::move(p2));
  scan.run(d_max);
  if (!scan.ok()) throw std::logic_error("profile_section_ring: " + scan.diffs().front());
  return {scan.generator_profile(), scan.leaders(), scan.dims(),
          scan.minimal_relation_counts()};
}

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> diffs;
  std::vector<std::string> notes;

  std::string str() const {
    std::string s = ok ? "MATCH" : "MISMATCH";
    for (const auto& d : diffs) s += "\n  diff: " + d;
    for (const auto& n : notes) s += "\n  note: " + n;
    return s;
  }
};

template <class K>
VerifyReport finish_verify(const RingScan<K>& scan, const std::vector<LabeledGenerator>& gens,
                           const std::vector<RelationLeader>& rels, std::int64_t d_max,
                           const std::function<std::int64_t(const std::vector<std::int64_t>&)>&
                               degree_of) {
  VerifyReport rep;
  rep.diffs = scan.diffs();
  rep.notes = scan.notes();
  auto key = [](std::vector<std::int64_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  auto pad = [&](std::vector<std::int64_t> v) {
    v.resize(gens.size(), 0);
    return v;
  };
  std::map<std::vector<std::int64_t>, OracleLeader> found;
  for (const auto& l : scan.leaders()) found[key(l.exps)] = l;
  std::set<std::vector<std::int64_t>> matched;
  for (const auto& r : rels) {
    std::string name = monomial_string(gens, r.monomial);
    if (degree_of(r.monomial) > d_max) {
      rep.notes.push_back("closed-form leader " + name + " lies beyond the scan window");
      continue;
    }
    auto it = found.find(key(r.monomial));
    if (it == found.end()) {
      rep.diffs.push_back("closed-form leader " + name + " not found by the scan");
      continue;
    }
    matched.insert(key(r.monomial));
    const OracleLeader& l = it->second;
    if (r.minimality_asserted) {
      if (!l.minimal_known)
        rep.diffs.push_back("leader " + name + ": minimality could not be tested");
      else if (l.minimal != r.minimal)
        rep.diffs.push_back("leader " + name + ": closed form says " +
                            (r.minimal ? "minimal" : "non-minimal") + ", scan measured " +
                            (l.minimal ? "minimal" : "non-minimal"));
    } else {
      rep.notes.push_back("boxed leader " + name + ": scan measured " +
                          (l.minimal_known ? (l.minimal ? "minimal" : "non-minimal")
                                           : "nothing (beyond the bookkeeping window)"));
    }
  }
  for (const auto& [k, l] : found) {
    if (matched.count(k)) continue;
    rep.diffs.push_back("scan found leader " + monomial_string(gens, pad(l.exps)) +
                        " at degree " + std::to_string(l.degree) +
                        " that the closed form does not list");
  }
  rep.ok = rep.diffs.empty();
  return rep;
}

/// Checks the one-point closed-form presentation of S_{alpha P} against the
/// ring scan on an explicit curve, through degree d_max.
template <class K>
VerifyReport verify_one_point(const WeierstrassCurve<K>& e, const CurvePoint<K>& p,
                              const Rational& alpha, std::int64_t d_max) {
  OnePointPresentation pres = one_point_presentation(alpha);
  QDivisor<K> qd;
  qd.add(p, alpha);
  RingScan<K> scan(e, qd, p, std::nullopt);
  std::vector<SuppliedGenerator<K>> gens;
  for (const auto& g : pres.gens) {
    if (g.fname == "u")
      gens.emplace_back(g.fname, g.lattice.d, CurveFunction<K>::constant(K(1)), 0, 0);
    else
      gens.emplace_back(g.fname, g.lattice.d, one_point_t(e, p, g.lattice.c), -g.lattice.c, 0);
  }
  scan.supply_generators(std::move(gens));
  scan.set_compare([pres](const std::vector<std::int64_t>& a,
                          const std::vector<std::int64_t>& b) {
    return compare_monomials(pres, a, b);
  });
  std::int64_t cap = 1;
  for (const auto& r : pres.rels) cap = std::max(cap, pres.monomial_degree(r.monomial));
  scan.set_relation_degree_cap(cap);
  scan.run(d_max);
  return finish_verify(scan, pres.gens, pres.rels, d_max,
                       [pres](const std::vector<std::int64_t>& m) {
                         return pres.monomial_degree(m);
                       });
}

/// Checks the two-point closed-form presentation of S_{a1 P1 + a2 P2} against
/// the ring scan, through degree d_max. Inputs may arrive in either order.
template <class K>
VerifyReport verify_two_point(const WeierstrassCurve<K>& e, CurvePoint<K> p1, CurvePoint<K> p2,
                              Rational alpha1, Rational alpha2, std::int64_t d_max) {
  if (alpha2 > alpha1) {
    std::swap(alpha1, alpha2);
    std::swap(p1, p2);
  }
  TwoPointPresentation pres = two_point_presentation(alpha1, alpha2);
  QDivisor<K> qd;
  qd.add(p1, alpha1);
  qd.add(p2, alpha2);
  RingScan<K> scan(e, qd, p1, p2);
  std::vector<SuppliedGenerator<K>> gens;
  for (const auto& g : pres.gens) {
    if (g.fname == "u")
      gens.emplace_back(g.fname, g.lattice.d, CurveFunction<K>::constant(K(1)), 0, 0);
    else if (g.label == GenLabel::kE)
      gens.emplace_back(g.fname, g.lattice.d, w_function(e, p1, p2), -1, -1);
    else if (g.point_index == 1)
      gens.emplace_back(g.fname, g.lattice.d, t_function(e, p1, p2, g.lattice.c),
                        -g.lattice.c, g.lattice.c - 1);
    else
      gens.emplace_back(g.fname, g.lattice.d, t_function(e, p2, p1, g.lattice.c),
                        g.lattice.c - 1, -g.lattice.c);
  }
  scan.supply_generators(std::move(gens));
  scan.set_compare([pres](const std::vector<std::int64_t>& a,
                          const std::vector<std::int64_t>& b) {
    return compare_monomials(pres, a, b);
  });
  std::int64_t cap = 1;
  for (const auto& r : pres.rels) cap = std::max(cap, pres.monomial_degree(r.monomial));
  scan.set_relation_degree_cap(cap);
  scan.run(d_max);
  return finish_verify(scan, pres.gens, pres.rels, d_max,
                       [pres](const std::vector<std::int64_t>& m) {
                         return pres.monomial_degree(m);
                       });
}

}  // namespace sectionring
