#include "fusioncat/solver.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <sstream>

#include "fusioncat/pentagon.hpp"
#include "fusioncat/scalar_text.hpp"

namespace fusioncat {

PartialTable::PartialTable(FusionRing r)
    : ring(std::move(r)), keys(enumerate_fkeys(ring)), known(keys.size()) {}

std::size_t PartialTable::known_count() const {
  return static_cast<std::size_t>(
      std::count_if(known.begin(), known.end(), [](const auto& v) { return v.has_value(); }));
}

long PartialTable::index_of(const FKey& k) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), k);
  if (it == keys.end() || !(*it == k)) return -1;
  return it - keys.begin();
}

namespace {

bool is_pointed(const FusionRing& ring) {
  for (Label a = 0; a < ring.size(); ++a)
    for (Label b = 0; b < ring.size(); ++b) {
      int total = 0;
      for (Label c = 0; c < ring.size(); ++c) total += ring.n(a, b, c);
      if (total != 1) return false;
    }
  return true;
}

std::size_t must_index(const PartialTable& p, const FKey& k) {
  long i = p.index_of(k);
  if (i < 0) throw Error("inadmissible key " + key_text(p.ring, k));
  return static_cast<std::size_t>(i);
}

}  // namespace

PartialTable seed(const FusionRing& ring) {
  PartialTable p(ring);
  FieldScalar one(ring.tower(), Rational(1));
  if (is_pointed(ring)) {
    for (auto& v : p.known) v = one;
    p.gauge_log.push_back("pointed ring: every entry gauged to 1 (trivial cocycle)");
    return p;
  }
  for (std::size_t i = 0; i < p.keys.size(); ++i) {
    const FKey& k = p.keys[i];
    if (k.a == 0 || k.b == 0 || k.c == 0) p.known[i] = one;
  }
  p.gauge_log.push_back("unit-label vertices: entries with a unit among a, b, c set to 1");
  if (ring.name() == "h3") {
    const Label r = 3;
    p.known[must_index(p, {r, r, r, 0, r, r})] = one;
    p.known[must_index(p, {r, r, r, r, r, r})] = -named_constant(Constant::B, ring.tower());
  }
  return p;
}

std::vector<Equation> build_equations(const FusionRing& ring) {
  PartialTable p(ring);
  const TowerPtr& t = ring.tower();
  FieldScalar one(t, Rational(1)), minus_one(t, Rational(-1)), zero(t);
  std::vector<Equation> eqs;
  auto finish = [](Equation& e) {
    for (const auto& term : e.terms)
      for (std::size_t k : term.keys) e.distinct_keys.push_back(k);
    std::sort(e.distinct_keys.begin(), e.distinct_keys.end());
    e.distinct_keys.erase(std::unique(e.distinct_keys.begin(), e.distinct_keys.end()),
                          e.distinct_keys.end());
  };

  for (const auto& inst : enumerate_instances(ring)) {
    Equation e{{}, zero, {}, {}};
    e.terms.push_back({one, {must_index(p, inst.lhs1()), must_index(p, inst.lhs2())}});
    for (Label x : inst.e_range)
      e.terms.push_back({minus_one,
                         {must_index(p, inst.rhs1(x)), must_index(p, inst.rhs2(x)),
                          must_index(p, inst.rhs3(x))}});
    std::ostringstream o;
    o << "pentagon";
    for (Label l : {inst.x, inst.y, inst.z, inst.w, inst.u, inst.a, inst.b, inst.c, inst.d})
      o << ' ' << ring.token(l);
    e.origin = o.str();
    finish(e);
    eqs.push_back(std::move(e));
  }

  for (const auto& blk : f_blocks(ring)) {
    std::size_t n = blk.dim();
    auto at = [&](std::size_t row, std::size_t col) {
      return must_index(p, {blk.a, blk.b, blk.c, blk.u, blk.left_labels[col], blk.right_labels[row]});
    };
    std::string name = "F_" + ring.token(blk.u) + "^{" + ring.token(blk.a) + " " +
                       ring.token(blk.b) + " " + ring.token(blk.c) + "}";
    for (int transpose = 0; transpose < 2; ++transpose)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          if (transpose && n == 1) continue;
          Equation e{{}, i == j ? minus_one : zero, {}, {}};
          for (std::size_t k = 0; k < n; ++k) {
            if (transpose)
              e.terms.push_back({one, {at(k, i), at(k, j)}});
            else
              e.terms.push_back({one, {at(i, k), at(j, k)}});
          }
          e.origin = std::string(transpose ? "columns " : "rows ") + std::to_string(i) + "," +
                     std::to_string(j) + " of " + name;
          finish(e);
          eqs.push_back(std::move(e));
        }
  }

  if (ring.name() == "h3") {
    const Label r = 3;
    FieldScalar sqrt_d = named_constant(Constant::bBigon, t);
    FieldScalar c1 = named_constant(Constant::c1, t), c2 = named_constant(Constant::c2, t);
    for (Label x : {Label{4}, Label{5}}) {
      Equation e{{}, zero, {}, {}};
      e.terms.push_back({sqrt_d, {must_index(p, {r, r, r, r, x, r}), must_index(p, {r, r, r, x, r, r})}});
      e.terms.push_back({-c1, {must_index(p, {r, r, r, r, 0, x})}});
      e.terms.push_back({-c2, {must_index(p, {r, r, r, r, r, x})}});
      e.origin = "square-pop relation x=" + ring.token(x);
      finish(e);
      eqs.push_back(std::move(e));
    }
  }
  return eqs;
}

namespace {

struct State {
  PartialTable p;
  std::vector<char> done;
  std::vector<std::size_t> per_round;
  std::vector<std::string> decisions;
};

struct Roots {
  enum Kind { trivial, none, some, unsolvable } kind;
  std::vector<FieldScalar> values;
};

FieldScalar evaluate(const Equation& e, const PartialTable& p) {
  FieldScalar sum = e.constant;
  for (const auto& term : e.terms) {
    FieldScalar prod = term.coef;
    for (std::size_t k : term.keys) prod *= *p.known[k];
    sum += prod;
  }
  return sum;
}

Roots roots_of(std::vector<FieldScalar> c, const TowerPtr& t) {
  while (c.size() < 4) c.emplace_back(t);
  std::size_t deg = c.size() - 1;
  while (deg > 0 && c[deg].is_zero()) --deg;
  if (deg > 3) return {Roots::unsolvable, {}};
  switch (deg) {
    case 0: return {c[0].is_zero() ? Roots::trivial : Roots::none, {}};
    case 1: return {Roots::some, {-(c[0] * c[1].inverse())}};
    case 2: {
      FieldScalar disc = c[1] * c[1] - c[2] * c[0].scaled(4);
      int s = disc.sign();
      if (s < 0) return {Roots::none, {}};
      FieldScalar inv = c[2].scaled(2).inverse();
      if (s == 0) return {Roots::some, {-(c[1] * inv)}};
      auto root = disc.sqrt_nonnegative();
      if (!root) return {Roots::unsolvable, {}};
      return {Roots::some, {(*root - c[1]) * inv, (-*root - c[1]) * inv}};
    }
    default:
      if (c[0].is_zero() && c[1].is_zero()) {
        // c3 x^3 + c2 x^2 = 0
        return {Roots::some, {FieldScalar(t), -(c[2] * c[3].inverse())}};
      }
      return {Roots::unsolvable, {}};
  }
}

Roots solve_single(const Equation& e, const PartialTable& p, std::size_t x) {
  const TowerPtr& t = p.ring.tower();
  std::vector<FieldScalar> c(4, FieldScalar(t));
  c[0] = e.constant;
  for (const auto& term : e.terms) {
    FieldScalar prod = term.coef;
    std::size_t deg = 0;
    for (std::size_t k : term.keys) {
      if (k == x) {
        ++deg;
      } else {
        prod *= *p.known[k];
        if (prod.is_zero()) break;
      }
    }
    if (deg >= c.size()) c.resize(deg + 1, FieldScalar(t));
    c[deg] += prod;
  }
  return roots_of(std::move(c), t);
}

using Monomial = std::vector<std::size_t>;  // sorted unknown key positions
using Poly = std::map<Monomial, FieldScalar>;

Poly to_poly(const Equation& e, const PartialTable& p) {
  Poly out;
  if (!e.constant.is_zero()) out.emplace(Monomial{}, e.constant);
  for (const auto& term : e.terms) {
    FieldScalar c = term.coef;
    Monomial m;
    for (std::size_t k : term.keys) {
      if (p.known[k])
        c *= *p.known[k];
      else
        m.push_back(k);
    }
    if (c.is_zero()) continue;
    std::sort(m.begin(), m.end());
    auto [it, fresh] = out.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

std::size_t distinct_count(Monomial m) {
  return static_cast<std::size_t>(std::unique(m.begin(), m.end()) - m.begin());
}

// Pivot order: monomials in more unknowns first, then higher degree.
bool worse(const Monomial& a, const Monomial& b) {
  Monomial ua = a, ub = b;
  ua.erase(std::unique(ua.begin(), ua.end()), ua.end());
  ub.erase(std::unique(ub.begin(), ub.end()), ub.end());
  if (ua.size() != ub.size()) return ua.size() > ub.size();
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

void add_term(Poly& p, const Monomial& m, const FieldScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly multiply(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      Monomial m;
      std::merge(mx.begin(), mx.end(), my.begin(), my.end(), std::back_inserter(m));
      add_term(out, m, cx * cy);
    }
  return out;
}

// Replaces the unknown v by the affine form e everywhere in p.
Poly substitute(const Poly& p, std::size_t v, const Poly& e) {
  Poly out;
  for (const auto& [m, c] : p) {
    Poly term{{Monomial{}, c}};
    Monomial rest;
    for (std::size_t k : m) {
      if (k == v)
        term = multiply(term, e);
      else
        rest.push_back(k);
    }
    for (const auto& [tm, tc] : term) {
      Monomial merged;
      std::merge(tm.begin(), tm.end(), rest.begin(), rest.end(), std::back_inserter(merged));
      add_term(out, merged, tc);
    }
  }
  return out;
}

// Uses affine rows in two or more unknowns to eliminate one unknown each.
void substitute_affine(std::vector<Poly>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Poly& r = rows[i];
    if (r.empty()) continue;
    bool affine = std::all_of(r.begin(), r.end(), [](const auto& t) { return t.first.size() <= 1; });
    std::size_t vars = std::count_if(r.begin(), r.end(), [](const auto& t) { return t.first.size() == 1; });
    if (!affine || vars < 2) continue;
    std::size_t v = r.rbegin()->first[0];
    FieldScalar inv = -(r.rbegin()->second.inverse());
    Poly e;
    for (const auto& [m, c] : r)
      if (!(m.size() == 1 && m[0] == v)) add_term(e, m, c * inv);
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i) rows[j] = substitute(rows[j], v, e);
    rows[i].clear();
    i = static_cast<std::size_t>(-1);  // rescan, earlier rows may have become affine
  }
}

struct Univariate {
  std::size_t key;
  std::vector<FieldScalar> coefs;  // by degree
};

// Treats every unknown monomial as a separate variable and row-reduces,
// eliminating mixed monomials first. Returns false on a contradiction.
bool linear_elimination(const std::vector<Poly>& rows_in, const TowerPtr& t,
                        std::vector<Univariate>& out) {
  std::vector<Poly> rows = rows_in;
  substitute_affine(rows);
  std::vector<Monomial> cols;
  for (const auto& r : rows)
    for (const auto& [m, c] : r)
      if (!m.empty()) cols.push_back(m);
  std::sort(cols.begin(), cols.end(), worse);
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::vector<bool> used(rows.size(), false);
  for (const auto& col : cols) {
    std::size_t piv = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!used[i] && rows[i].count(col)) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    used[piv] = true;
    FieldScalar inv = rows[piv].at(col).inverse();
    for (auto& [m, c] : rows[piv]) c *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == piv) continue;
      auto hit = rows[i].find(col);
      if (hit == rows[i].end()) continue;
      FieldScalar f = hit->second;
      for (const auto& [m, c] : rows[piv]) {
        auto [it, fresh] = rows[i].emplace(m, -(f * c));
        if (!fresh) {
          it->second -= f * c;
          if (it->second.is_zero()) rows[i].erase(it);
        }
      }
    }
  }
  for (const auto& r : rows) {
    if (r.empty()) continue;
    std::optional<std::size_t> var;
    bool uni = true;
    for (const auto& [m, c] : r) {
      if (m.empty()) continue;
      if (distinct_count(m) != 1 || (var && *var != m[0])) {
        uni = false;
        break;
      }
      var = m[0];
    }
    if (!uni) continue;
    if (!var) return false;  // nonzero constant
    Univariate u{*var, std::vector<FieldScalar>(1, FieldScalar(t))};
    for (const auto& [m, c] : r) {
      if (u.coefs.size() <= m.size()) u.coefs.resize(m.size() + 1, FieldScalar(t));
      u.coefs[m.size()] += c;
    }
    out.push_back(std::move(u));
  }
  return true;
}

// Vertices of an entry in the gauge ratio, with multiplicity.
std::array<std::array<Label, 3>, 4> vertices(const FKey& k) {
  return {{{k.a, k.right, k.u}, {k.b, k.c, k.right}, {k.a, k.b, k.left}, {k.left, k.c, k.u}}};
}

int flip_parity(const FKey& k, const std::array<Label, 3>& v) {
  int n = 0;
  for (const auto& w : vertices(k))
    if (w == v) ++n;
  return n & 1;
}

class Search {
 public:
  Search(const std::vector<Equation>& eqs, bool branching, std::vector<std::size_t> protected_keys)
      : eqs_(eqs), branching_(branching), protected_(std::move(protected_keys)) {
    // Elimination is quadratic in the system size; small rings only.
    eliminate_ = eqs_.size() <= kEliminationLimit;
  }

  void run(State s) {
    ++report_.branches_explored;
    const auto& ring = s.p.ring;
    for (;;) {
      std::size_t resolved = 0;
      struct Candidate {
        std::size_t eq, key;
        std::vector<FieldScalar> roots;
      };
      std::optional<Candidate> cand;
      for (std::size_t i = 0; i < eqs_.size(); ++i) {
        if (s.done[i]) continue;
        const Equation& e = eqs_[i];
        std::size_t unknown = 0, which = 0;
        for (std::size_t k : e.distinct_keys)
          if (!s.p.known[k]) {
            which = k;
            if (++unknown > 1) break;
          }
        if (unknown == 0) {
          if (!evaluate(e, s.p).is_zero()) {
            ++report_.dead_branches;
            return;
          }
          s.done[i] = 1;
          continue;
        }
        if (unknown > 1) continue;
        Roots r = solve_single(e, s.p, which);
        if (r.kind == Roots::trivial) {
          s.done[i] = 1;
          continue;
        }
        if (r.kind == Roots::unsolvable) continue;
        const FKey& key = s.p.keys[which];
        if (f_block(ring, key.a, key.b, key.c, key.u).dim() == 1)
          std::erase_if(r.values, [](const FieldScalar& v) { return v.is_zero(); });
        if (r.values.empty() || r.kind == Roots::none) {
          ++report_.dead_branches;
          return;
        }
        if (r.values.size() == 1) {
          s.p.known[which] = r.values[0];
          ++resolved;
        } else if (!cand) {
          cand = Candidate{i, which, r.values};
        }
      }
      if (resolved > 0) {
        s.per_round.push_back(resolved);
        continue;
      }
      if (s.p.known_count() == s.p.keys.size()) {
        solutions_.push_back(s);
        return;
      }
      if (!cand && eliminate_) {
        std::vector<Poly> rows;
        for (std::size_t i = 0; i < eqs_.size(); ++i)
          if (!s.done[i]) rows.push_back(to_poly(eqs_[i], s.p));
        std::vector<Univariate> found;
        if (!linear_elimination(rows, ring.tower(), found)) {
          ++report_.dead_branches;
          return;
        }
        for (auto& u : found) {
          if (s.p.known[u.key]) continue;
          Roots r = roots_of(std::move(u.coefs), ring.tower());
          if (r.kind == Roots::unsolvable || r.kind == Roots::trivial) continue;
          const FKey& key = s.p.keys[u.key];
          if (f_block(ring, key.a, key.b, key.c, key.u).dim() == 1)
            std::erase_if(r.values, [](const FieldScalar& v) { return v.is_zero(); });
          if (r.kind == Roots::none || r.values.empty()) {
            ++report_.dead_branches;
            return;
          }
          if (r.values.size() == 1) {
            s.p.known[u.key] = r.values[0];
            ++resolved;
          } else if (!cand) {
            cand = Candidate{kEliminated, u.key, r.values};
          }
        }
        if (resolved > 0) {
          s.per_round.push_back(resolved);
          continue;
        }
      }
      if (!cand) {
        stuck_.push_back(s);
        return;
      }
      const FKey& key = s.p.keys[cand->key];
      if (cand->roots.size() == 2 && cand->roots[0] == -cand->roots[1]) {
        if (auto v = free_vertex(s.p, cand->key)) {
          FieldScalar pos = cand->roots[0].sign() > 0 ? cand->roots[0] : cand->roots[1];
          s.p.known[cand->key] = pos;
          s.p.gauge_log.push_back("sign of vertex (" + ring.token((*v)[0]) + "," +
                                  ring.token((*v)[1]) + ";" + ring.token((*v)[2]) +
                                  ") fixed by taking " + key_text(ring, key) + " > 0");
          s.per_round.push_back(1);
          continue;
        }
      }
      if (!branching_) {
        stuck_.push_back(s);
        return;
      }
      for (std::size_t b = 0; b < cand->roots.size(); ++b) {
        State child = s;
        child.p.known[cand->key] = cand->roots[b];
        child.per_round.push_back(1);
        child.decisions.push_back(key_text(ring, key) + " = " + to_text(cand->roots[b]) +
                                  " (branch " + std::to_string(b + 1) + "/" +
                                  std::to_string(cand->roots.size()) + ", " +
                                  (cand->eq == kEliminated ? std::string("linear elimination")
                                                           : eqs_[cand->eq].origin) +
                                  ")");
        run(std::move(child));
      }
      return;
    }
  }

  std::vector<State> solutions_, stuck_;
  SolveReport report_;

 private:
  // A vertex whose sign flip negates the key but no known or protected entry.
  std::optional<std::array<Label, 3>> free_vertex(const PartialTable& p, std::size_t key) {
    for (const auto& v : vertices(p.keys[key])) {
      if (!flip_parity(p.keys[key], v)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < p.keys.size() && ok; ++i)
        if (p.known[i] && flip_parity(p.keys[i], v)) ok = false;
      for (std::size_t i : protected_)
        if (flip_parity(p.keys[i], v)) ok = false;
      if (ok) return v;
    }
    return std::nullopt;
  }

  static constexpr std::size_t kEliminated = static_cast<std::size_t>(-1);
  static constexpr std::size_t kEliminationLimit = 5000;
  const std::vector<Equation>& eqs_;
  bool branching_;
  bool eliminate_ = false;
  std::vector<std::size_t> protected_;
};

}  // namespace

PropagateResult propagate(const PartialTable& start, bool branching) {
  std::vector<Equation> eqs = build_equations(start.ring);
  std::vector<std::size_t> protected_keys;
  for (const auto& e : eqs)
    if (e.origin.starts_with("square-pop"))
      protected_keys.insert(protected_keys.end(), e.distinct_keys.begin(), e.distinct_keys.end());

  Search search(eqs, branching, protected_keys);
  State s{start, std::vector<char>(eqs.size(), 0), {}, {}};
  search.run(s);

  SolveReport rep = search.report_;
  rep.seeds = start.known_count();
  rep.solutions = search.solutions_.size();
  const State* shown = nullptr;
  if (!search.solutions_.empty())
    shown = &search.solutions_.front();
  else if (!search.stuck_.empty())
    shown = &search.stuck_.front();
  if (!shown) throw Error("inconsistent seeds");
  rep.rounds = shown->per_round.size();
  rep.resolved_per_round = shown->per_round;
  rep.remaining = shown->p.keys.size() - shown->p.known_count();
  rep.branch_decisions = shown->decisions;
  rep.gauge_log = shown->p.gauge_log;

  PropagateResult out{shown->p, rep, {}};
  for (const auto& sol : search.solutions_) out.solutions.push_back(sol.p);
  return out;
}

FSymbolTable to_table(const PartialTable& p) {
  FSymbolTable t(p.ring);
  for (std::size_t i = 0; i < p.keys.size(); ++i) {
    if (!p.known[i]) throw Error("incomplete table: " + key_text(p.ring, p.keys[i]));
    t.set(p.keys[i], ParamScalar(*p.known[i]));
  }
  return t;
}

std::vector<FSymbolTable> solve(const FusionRing& ring, SolveReport* report) {
  PropagateResult res = propagate(seed(ring), true);
  std::vector<FSymbolTable> out;
  for (const auto& sol : res.solutions) {
    FSymbolTable t = to_table(sol);
    if (verify_all(t).ok() && check_orthogonality(t).ok()) out.push_back(std::move(t));
  }
  if (report) *report = res.report;
  if (out.empty()) throw Error("no solution survived verification");
  return out;
}

CompareReport compare_to_dataset(const PartialTable& partial, const FSymbolTable& table) {
  CompareReport best;
  bool first = true;
  for (auto [p1, p2] : kSignAssignments) {
    CompareReport rep;
    rep.assignment = {p1, p2};
    for (std::size_t i = 0; i < partial.keys.size(); ++i) {
      if (!partial.known[i]) continue;
      ++rep.compared;
      const ParamScalar& v = table.get(partial.keys[i]);
      const FieldScalar& mine = *partial.known[i];
      if (v.is_constant() && v.term(0) == mine) ++rep.exact;
      FieldScalar s = v.substitute(p1, p2);
      if (s == mine)
        ++rep.at_assignment;
      else if (s == -mine)
        ++rep.up_to_sign;
    }
    if (first || rep.at_assignment > best.at_assignment) best = rep;
    first = false;
  }
  return best;
}

std::string report_text(const SolveReport& r, std::size_t total_keys) {
  std::ostringstream o;
  o << "seeds=" << r.seeds << " rounds=" << r.rounds << " remaining=" << r.remaining
    << " resolved=" << (total_keys - r.remaining) << "/" << total_keys
    << " solutions=" << r.solutions << " branches=" << r.branches_explored
    << " dead=" << r.dead_branches << '\n';
  o << "resolved per round:";
  for (std::size_t n : r.resolved_per_round) o << ' ' << n;
  o << '\n';
  for (const auto& g : r.gauge_log) o << "gauge: " << g << '\n';
  for (const auto& d : r.branch_decisions) o << "branch: " << d << '\n';
  return o.str();
}

}  // namespace fusioncat
