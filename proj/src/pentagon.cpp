#include "fusioncat/pentagon.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <thread>

#include "fusioncat/scalar_text.hpp"

namespace fusioncat {

TrivialityRule triviality_from_name(std::string_view name) {
  if (name == "none") return TrivialityRule::none;
  if (name == "unit") return TrivialityRule::unit;
  if (name == "identical") return TrivialityRule::identical;
  if (name == "both") return TrivialityRule::both;
  throw Error("unknown triviality rule: " + std::string(name));
}

std::string_view triviality_name(TrivialityRule rule) {
  switch (rule) {
    case TrivialityRule::none: return "none";
    case TrivialityRule::unit: return "unit";
    case TrivialityRule::identical: return "identical";
    case TrivialityRule::both: return "both";
  }
  return "?";
}

std::vector<PentagonInstance> enumerate_instances(const FusionRing& ring) {
  if (!ring.multiplicity_free()) throw Error("ring " + ring.name() + " has multiplicities");
  std::vector<PentagonInstance> out;
  Label s = static_cast<Label>(ring.size());
  for (Label x = 0; x < s; ++x)
    for (Label y = 0; y < s; ++y)
      for (Label z = 0; z < s; ++z)
        for (Label w = 0; w < s; ++w)
          for (Label u = 0; u < s; ++u)
            for (Label a = 0; a < s; ++a) {
              if (!ring.fuses(x, y, a)) continue;
              for (Label b = 0; b < s; ++b) {
                if (!ring.fuses(a, z, b) || !ring.fuses(b, w, u)) continue;
                for (Label c = 0; c < s; ++c) {
                  if (!ring.fuses(z, w, c) || !ring.fuses(a, c, u)) continue;
                  for (Label d = 0; d < s; ++d) {
                    if (!ring.fuses(y, c, d) || !ring.fuses(x, d, u)) continue;
                    PentagonInstance inst{x, y, z, w, u, a, b, c, d, {}};
                    for (Label e = 0; e < s; ++e)
                      if (admissible(ring, inst.rhs1(e)) && admissible(ring, inst.rhs2(e)) &&
                          admissible(ring, inst.rhs3(e)))
                        inst.e_range.push_back(e);
                    out.push_back(std::move(inst));
                  }
                }
              }
            }
  return out;
}

namespace {

bool unit_in_abc(const FKey& k) {
  return k.a == FusionRing::unit() || k.b == FusionRing::unit() || k.c == FusionRing::unit();
}

bool formally_identical(const PentagonInstance& inst) {
  if (inst.e_range.size() != 1) return false;
  Label e = inst.e_range[0];
  std::vector<FKey> lhs{inst.lhs1(), inst.lhs2()};
  std::vector<FKey> rhs{inst.rhs1(e), inst.rhs2(e), inst.rhs3(e)};
  for (auto it = lhs.begin(); it != lhs.end();) {
    auto hit = std::find(rhs.begin(), rhs.end(), *it);
    if (hit != rhs.end()) {
      rhs.erase(hit);
      it = lhs.erase(it);
    } else {
      ++it;
    }
  }
  return std::all_of(lhs.begin(), lhs.end(), unit_in_abc) &&
         std::all_of(rhs.begin(), rhs.end(), unit_in_abc);
}

}  // namespace

bool is_trivial(const PentagonInstance& inst, TrivialityRule rule) {
  bool unit = inst.x == 0 || inst.y == 0 || inst.z == 0 || inst.w == 0;
  switch (rule) {
    case TrivialityRule::none: return false;
    case TrivialityRule::unit: return unit;
    case TrivialityRule::identical: return formally_identical(inst);
    case TrivialityRule::both: return unit || formally_identical(inst);
  }
  return false;
}

ParamScalar residual(const PentagonInstance& inst, const FSymbolTable& table) {
  ParamScalar r = table.get(inst.lhs1()) * table.get(inst.lhs2());
  for (Label e : inst.e_range) {
    const ParamScalar& f1 = table.get(inst.rhs1(e));
    if (f1.is_zero()) continue;
    const ParamScalar& f3 = table.get(inst.rhs3(e));
    if (f3.is_zero()) continue;
    r -= f1 * table.get(inst.rhs2(e)) * f3;
  }
  return r;
}

InstanceCounts count_instances(const FusionRing& ring, TrivialityRule rule) {
  InstanceCounts c;
  for (const auto& inst : enumerate_instances(ring)) {
    ++c.total;
    if (is_trivial(inst, rule))
      ++c.trivial;
    else
      ++c.nontrivial;
  }
  return c;
}

VerifyReport verify_all(const FSymbolTable& table, TrivialityRule rule, unsigned jobs) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport rep;
  std::vector<PentagonInstance> work;
  for (auto& inst : enumerate_instances(table.ring())) {
    ++rep.counts.total;
    if (is_trivial(inst, rule)) {
      ++rep.counts.trivial;
    } else {
      ++rep.counts.nontrivial;
      work.push_back(std::move(inst));
    }
  }
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, work.size())));

  // Worker i takes instances i, i + jobs, ...; failures keep their position.
  std::vector<std::vector<std::pair<std::size_t, PentagonFailure>>> found(jobs);
  auto run = [&](unsigned id) {
    for (std::size_t i = id; i < work.size(); i += jobs) {
      ParamScalar r = residual(work[i], table);
      if (!r.is_zero()) found[id].push_back({i, {work[i], std::move(r)}});
    }
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(run, id);
    for (auto& t : threads) t.join();
  }
  std::vector<std::pair<std::size_t, PentagonFailure>> merged;
  for (auto& f : found)
    for (auto& p : f) merged.push_back(std::move(p));
  std::sort(merged.begin(), merged.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  for (auto& p : merged) rep.failures.push_back(std::move(p.second));
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string failure_line(const FusionRing& ring, const PentagonFailure& f) {
  const auto& i = f.instance;
  std::string s = "FAIL";
  for (Label l : {i.x, i.y, i.z, i.w, i.u, i.a, i.b, i.c, i.d}) s += " " + ring.token(l);
  return s + " residual=" + to_text(f.residual);
}

std::string summary_line(const VerifyReport& report) {
  return "instances=" + std::to_string(report.counts.total) +
         " trivial=" + std::to_string(report.counts.trivial) +
         " nontrivial=" + std::to_string(report.counts.nontrivial) +
         " failures=" + std::to_string(report.failures.size());
}

namespace {

ParamScalar get_or_zero(const FSymbolTable& table, const FKey& k) {
  long i = table.index_of(k);
  if (i < 0) return ParamScalar(table.ring().tower());
  return table.at(static_cast<std::size_t>(i));
}

// Matrix-style accessor: F(a,b,c,u)_{right,left}.
ParamScalar F(const FSymbolTable& t, Label a, Label b, Label c, Label u, Label right, Label left) {
  return get_or_zero(t, {a, b, c, u, left, right});
}

// (F^*)_{ij} with i a left label and j a right label. The adjoint is taken as
// the block inverse: on orthogonal tables this is F_{ji}, and unlike the plain
// transpose it transforms correctly under non-unitary gauges.
class Adjoints {
 public:
  explicit Adjoints(const FSymbolTable& t) : t_(t) {}

  ParamScalar operator()(Label a, Label b, Label c, Label u, Label i, Label j) {
    std::array<Label, 4> id{a, b, c, u};
    auto it = cache_.find(id);
    if (it == cache_.end()) {
      FBlock blk = f_block(t_.ring(), a, b, c, u);
      ParamMatrix inv = blk.dim() ? invert(t_.f_matrix(a, b, c, u)) : ParamMatrix{};
      it = cache_.emplace(id, Entry{std::move(blk), std::move(inv)}).first;
    }
    const Entry& e = it->second;
    auto li = std::find(e.blk.left_labels.begin(), e.blk.left_labels.end(), i);
    auto rj = std::find(e.blk.right_labels.begin(), e.blk.right_labels.end(), j);
    if (li == e.blk.left_labels.end() || rj == e.blk.right_labels.end())
      return ParamScalar(t_.ring().tower());
    return e.inv[static_cast<std::size_t>(li - e.blk.left_labels.begin())]
                [static_cast<std::size_t>(rj - e.blk.right_labels.begin())];
  }

 private:
  struct Entry {
    FBlock blk;
    ParamMatrix inv;
  };
  const FSymbolTable& t_;
  std::map<std::array<Label, 4>, Entry> cache_;
};

}  // namespace

CheckReport check_triangle(const FSymbolTable& table) {
  CheckReport rep{"triangle", 0, {}, {}};
  const FusionRing& ring = table.ring();
  Label s = static_cast<Label>(ring.size());
  ParamScalar one = ParamScalar::constant(ring.tower(), 1);
  auto check = [&](const FKey& k1, const FKey& k2, const char* form) {
    long i1 = table.index_of(k1), i2 = table.index_of(k2);
    if (i1 < 0 || i2 < 0) return;
    ++rep.checked;
    ParamScalar p = table.at(static_cast<std::size_t>(i1)) * table.at(static_cast<std::size_t>(i2));
    if (!(p - one).is_zero())
      rep.failures.push_back(std::string(form) + " " + key_text(ring, k1) + " * " +
                             key_text(ring, k2) + " = " + to_text(p));
  };
  for (Label x = 0; x < s; ++x)
    for (Label y = 0; y < s; ++y)
      for (Label z = 0; z < s; ++z) {
        check({0, x, y, z, x, z}, {0, z, y, x, z, x}, "F_z^{1xy} F_x^{1zy}");
        check({x, y, 0, z, z, y}, {x, z, 0, y, y, z}, "F_z^{xy1} F_y^{xz1}");
      }
  return rep;
}

CheckReport check_additional(const FSymbolTable& table) {
  CheckReport rep{"additional", 0, {}, {}};
  const FusionRing& ring = table.ring();
  Adjoints Fadj(table);
  Label s = static_cast<Label>(ring.size());
  for (Label a = 0; a < s; ++a)
    for (Label b = 0; b < s; ++b)
      for (Label c = 0; c < s; ++c)
        for (Label u = 0; u < s; ++u) {
          FBlock blk = f_block(ring, a, b, c, u);
          if (blk.dim() == 0) continue;
          for (Label x1 = 0; x1 < s; ++x1)
            for (Label x2 = 0; x2 < s; ++x2) {
              if (!ring.fuses(x1, x2, b)) continue;
              for (Label x3 = 0; x3 < s; ++x3) {
                if (!ring.fuses(a, x1, x3)) continue;
                for (Label x4 = 0; x4 < s; ++x4) {
                  if (!ring.fuses(x2, c, x4) || !ring.fuses(x3, x4, u)) continue;
                  for (Label y : blk.left_labels) {
                    ParamScalar lhs(ring.tower());
                    for (Label x3p = 0; x3p < s; ++x3p)
                      lhs += F(table, a, x1, x4, u, x3p, x3) * Fadj(x1, x2, c, x3p, b, x4) *
                             Fadj(a, b, c, u, y, x3p);
                    ParamScalar rhs = Fadj(x3, x2, c, u, y, x4) * F(table, a, x1, x2, y, b, x3);
                    ++rep.checked;
                    ParamScalar diff = lhs - rhs;
                    if (!diff.is_zero()) {
                      std::string labels;
                      for (Label l : {a, b, c, u, x1, x2, x3, x4, y}) labels += " " + ring.token(l);
                      rep.failures.push_back("addeq" + labels + " residual=" + to_text(diff));
                    }
                  }
                }
              }
            }
        }
  return rep;
}

CheckReport check_addtriv(const FSymbolTable& table) {
  const FusionRing& ring = table.ring();
  if (ring.name() != "h3") throw Error("square-popping relations are specific to h3");
  CheckReport rep{"addtriv", 0, {}, "holds only in the gauge of the published table"};
  const TowerPtr& t = ring.tower();
  const Label one = 0, r = 3;
  ParamScalar c1(named_constant(Constant::c1, t)), c2(named_constant(Constant::c2, t));
  ParamScalar sqrt_d(named_constant(Constant::bBigon, t));
  Adjoints Fadj(table);
  for (Label x : {Label{4}, Label{5}}) {
    ParamScalar lhs = Fadj(r, r, r, r, x, r) * F(table, r, r, r, x, r, r) * sqrt_d;
    ParamScalar rhs = c1 * F(table, r, r, r, r, x, one) + c2 * F(table, r, r, r, r, x, r);
    ++rep.checked;
    ParamScalar diff = lhs - rhs;
    if (!diff.is_zero())
      rep.failures.push_back("x=" + ring.token(x) + " residual=" + to_text(diff));
  }
  return rep;
}

CheckReport check_seeds(const FSymbolTable& table) {
  const FusionRing& ring = table.ring();
  if (ring.name() != "h3") throw Error("seed theorems are specific to h3");
  CheckReport rep{"seeds", 0, {}, {}};
  const TowerPtr& t = ring.tower();
  ParamScalar one = ParamScalar::constant(t, 1);
  auto expect = [&](const FKey& k, const ParamScalar& v, const char* what) {
    ++rep.checked;
    if (!(table.get(k) - v).is_zero())
      rep.failures.push_back(std::string(what) + " " + key_text(ring, k) + " = " +
                             to_text(table.get(k)));
  };
  const Label r = 3;
  // labels in {1, rho}, at least one unit, fusion allowed: one-dimensional and 1
  for (Label a : {Label{0}, r})
    for (Label b : {Label{0}, r})
      for (Label c : {Label{0}, r})
        for (Label u : {Label{0}, r}) {
          if (a && b && c && u) continue;
          FBlock blk = f_block(ring, a, b, c, u);
          if (blk.dim() == 0) continue;
          if (blk.dim() != 1) {
            rep.failures.push_back("unit-label block of dimension " + std::to_string(blk.dim()));
            continue;
          }
          expect({a, b, c, u, blk.left_labels[0], blk.right_labels[0]}, one, "unit-label");
        }
  for (Label x : {r, Label{4}, Label{5}}) {
    expect({r, 0, r, x, r, r}, one, "F_x^{r1r}");
    expect({0, r, x, r, r, f_block(ring, 0, r, x, r).right_labels.at(0)}, one, "F_r^{1rx}");
    expect({x, r, 0, r, f_block(ring, x, r, 0, r).left_labels.at(0), r}, one, "F_r^{xr1}");
  }
  // (F_rho^{rho rho rho})_{rho rho} = t / sqrt(d) with t = -B sqrt(d)
  FieldScalar tt = named_constant(Constant::tTriangle, t);
  FieldScalar ratio = tt * named_constant(Constant::bBigon, t).inverse();
  expect({r, r, r, r, r, r}, ParamScalar(ratio), "t/sqrt(d)");
  return rep;
}

}  // namespace fusioncat
