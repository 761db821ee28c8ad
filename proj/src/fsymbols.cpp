#include "fusioncat/fsymbols.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "fusioncat/scalar_text.hpp"
#include "h3_dataset.hpp"

namespace fusioncat {

FSymbolTable::FSymbolTable(FusionRing ring)
    : ring_(std::move(ring)), keys_(enumerate_fkeys(ring_)) {
  std::size_t s = ring_.size();
  lookup_.assign(s * s * s * s * s * s, -1);
  values_.reserve(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    lookup_[slot(keys_[i])] = static_cast<int>(i);
    values_.emplace_back(ring_.tower());
  }
}

std::size_t FSymbolTable::slot(const FKey& k) const {
  std::size_t s = ring_.size();
  return ((((k.a * s + k.b) * s + k.c) * s + k.u) * s + k.left) * s + k.right;
}

long FSymbolTable::index_of(const FKey& k) const {
  std::size_t s = ring_.size();
  if (k.a >= s || k.b >= s || k.c >= s || k.u >= s || k.left >= s || k.right >= s) return -1;
  return lookup_[slot(k)];
}

const ParamScalar& FSymbolTable::get(const FKey& k) const {
  long i = index_of(k);
  if (i < 0) throw Error("inadmissible key " + key_text(ring_, k));
  return values_[static_cast<std::size_t>(i)];
}

void FSymbolTable::set(const FKey& k, ParamScalar v) {
  long i = index_of(k);
  if (i < 0) throw Error("inadmissible key " + key_text(ring_, k));
  values_[static_cast<std::size_t>(i)] = std::move(v);
}

ParamMatrix FSymbolTable::f_matrix(Label a, Label b, Label c, Label u) const {
  FBlock blk = f_block(ring_, a, b, c, u);
  if (blk.dim() == 0) throw Error("empty F block");
  ParamMatrix m;
  for (Label r : blk.right_labels) {
    std::vector<ParamScalar> row;
    for (Label l : blk.left_labels) row.push_back(get({a, b, c, u, l, r}));
    m.push_back(std::move(row));
  }
  return m;
}

const FSymbolTable& h3_table() {
  static const FSymbolTable table = [] {
    const FusionRing& ring = builtin_ring(BuiltinRing::h3);
    TowerPtr t = ring.tower();
    SymbolMap symbols;
    for (Constant c : {Constant::A, Constant::B, Constant::C, Constant::Dplus, Constant::Dminus,
                       Constant::sqrtA})
      symbols.emplace(std::string(constant_name(c)), ParamScalar(named_constant(c, t)));
    FSymbolTable out(ring);
    std::vector<bool> seen(out.size(), false);
    for (const auto& e : detail::h3_raw_entries()) {
      FKey k{ring.from_token(e.a), ring.from_token(e.b), ring.from_token(e.c),
             ring.from_token(e.u), ring.from_token(e.left), ring.from_token(e.right)};
      long i = out.index_of(k);
      if (i < 0 || seen[static_cast<std::size_t>(i)])
        throw Error("h3 dataset: bad or duplicate entry " + key_text(ring, k));
      seen[static_cast<std::size_t>(i)] = true;
      out.set_at(static_cast<std::size_t>(i), parse_scalar(e.value, t, 1, 1, &symbols));
    }
    for (bool s : seen)
      if (!s) throw Error("h3 dataset: missing entries");
    return out;
  }();
  return table;
}

GaugeAssignment::GaugeAssignment(const FusionRing& ring) : n_(ring.size()) {
  u_.assign(n_ * n_ * n_, FieldScalar(ring.tower(), Rational(1)));
}

const FieldScalar& GaugeAssignment::get(Label a, Label b, Label c) const {
  return u_[(a * n_ + b) * n_ + c];
}

void GaugeAssignment::set(Label a, Label b, Label c, FieldScalar v) {
  if (v.is_zero()) throw Error("gauge value must be nonzero");
  u_[(a * n_ + b) * n_ + c] = std::move(v);
}

GaugeAssignment GaugeAssignment::operator*(const GaugeAssignment& other) const {
  GaugeAssignment r = *this;
  for (std::size_t i = 0; i < u_.size(); ++i) r.u_[i] = u_[i] * other.u_[i];
  return r;
}

FSymbolTable apply_gauge(const FSymbolTable& table, const GaugeAssignment& g) {
  FSymbolTable out = table;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const FKey& k = table.keys()[i];
    FieldScalar num = g.get(k.a, k.right, k.u) * g.get(k.b, k.c, k.right);
    FieldScalar den = g.get(k.a, k.b, k.left) * g.get(k.left, k.c, k.u);
    out.set_at(i, table.at(i) * ParamScalar(num * den.inverse()));
  }
  return out;
}

GaugeAssignment random_gauge(const FusionRing& ring, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 5), den(1, 4), sign(0, 1);
  GaugeAssignment g(ring);
  Label s = static_cast<Label>(ring.size());
  for (Label a = 0; a < s; ++a)
    for (Label b = 0; b < s; ++b)
      for (Label c = 0; c < s; ++c) {
        if (!ring.fuses(a, b, c)) continue;
        Rational v(num(rng), den(rng));
        v.canonicalize();
        if (sign(rng)) v = -v;
        g.set(a, b, c, FieldScalar(ring.tower(), v));
      }
  return g;
}

OrthogonalityReport check_orthogonality(const FSymbolTable& table) {
  OrthogonalityReport rep;
  const FusionRing& ring = table.ring();
  for (const auto& blk : f_blocks(ring)) {
    ++rep.blocks;
    ParamMatrix m = table.f_matrix(blk.a, blk.b, blk.c, blk.u);
    std::size_t n = m.size();
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i; j < n && ok; ++j) {
        ParamScalar dot(ring.tower());
        for (std::size_t k = 0; k < n; ++k) dot += m[i][k] * m[j][k];
        if (i == j) dot -= ParamScalar::constant(ring.tower(), 1);
        if (!dot.is_zero()) {
          ok = false;
          detail = "row " + std::to_string(i) + " . row " + std::to_string(j) +
                   " - delta = " + to_text(dot);
        }
      }
    if (!ok) rep.failures.push_back({blk, detail});
  }
  return rep;
}

ParamMatrix invert(const ParamMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) return {};
  const TowerPtr& t = m[0][0].tower();
  std::array<std::vector<std::vector<FieldScalar>>, 4> inv;
  for (std::size_t s = 0; s < 4; ++s) {
    auto [p1, p2] = kSignAssignments[s];
    std::vector<std::vector<FieldScalar>> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i].push_back(m[i][j].substitute(p1, p2));
        b[i].emplace_back(t, Rational(i == j ? 1 : 0));
      }
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a[piv][col].is_zero()) ++piv;
      if (piv == n) throw Error("singular F block");
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
      FieldScalar f = a[col][col].inverse();
      for (std::size_t j = 0; j < n; ++j) {
        a[col][j] *= f;
        b[col][j] *= f;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a[i][col].is_zero()) continue;
        FieldScalar g = a[i][col];
        for (std::size_t j = 0; j < n; ++j) {
          a[i][j] -= g * a[col][j];
          b[i][j] -= g * b[col][j];
        }
      }
    }
    inv[s] = std::move(b);
  }
  // v(p1,p2) = t0 + t1 p1 + t2 p2 + t3 p1 p2
  ParamMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::array<FieldScalar, 4> terms{FieldScalar(t), FieldScalar(t), FieldScalar(t), FieldScalar(t)};
      for (std::size_t mono = 0; mono < 4; ++mono) {
        for (std::size_t s = 0; s < 4; ++s) {
          auto [p1, p2] = kSignAssignments[s];
          int sign = ((mono & 1) ? p1 : 1) * ((mono & 2) ? p2 : 1);
          terms[mono] += sign > 0 ? inv[s][i][j] : -inv[s][i][j];
        }
        terms[mono] = terms[mono].scaled(Rational(1, 4));
      }
      out[i].emplace_back(t, terms);
    }
  return out;
}

FSymbolTable substitute_params(const FSymbolTable& table, int p1, int p2) {
  FSymbolTable out = table;
  for (std::size_t i = 0; i < table.size(); ++i)
    out.set_at(i, ParamScalar(table.at(i).substitute(p1, p2)));
  return out;
}

std::string serialize(const FSymbolTable& table) {
  const FusionRing& ring = table.ring();
  std::ostringstream out;
  out << "h3fsym v1\n";
  if (ring.name() != "h3") out << "ring " << ring.name() << "\n";
  out << "# F <u> <a> <b> <c> <e> <f> = value of (F_u^{abc}) with e the right-tree label (in b c)\n"
         "# and f the left-tree label (in a b); printed matrices use rows = e, columns = f.\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    const FKey& k = table.keys()[i];
    out << "F " << ring.token(k.u) << ' ' << ring.token(k.a) << ' ' << ring.token(k.b) << ' '
        << ring.token(k.c) << ' ' << ring.token(k.right) << ' ' << ring.token(k.left) << " = "
        << to_text(table.at(i)) << '\n';
  }
  return out.str();
}

FSymbolTable parse_table(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  auto strip = [](std::string_view s) {
    if (auto h = s.find('#'); h != std::string_view::npos) s = s.substr(0, h);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r' || s.back() == '\t'))
      s.remove_suffix(1);
    return s;
  };

  std::size_t ln = 0;
  auto next_content = [&]() -> std::string_view {
    while (ln < lines.size()) {
      std::string_view s = strip(lines[ln++]);
      std::size_t lead = s.find_first_not_of(" \t");
      if (lead != std::string_view::npos) return s;
    }
    return {};
  };

  std::string_view header = next_content();
  if (header != "h3fsym v1") throw ParseError(ln == 0 ? 1 : ln, 1, "expected header 'h3fsym v1'");

  BuiltinRing which = BuiltinRing::h3;
  std::size_t first_entry = ln;
  std::string_view line = next_content();
  if (line.starts_with("ring ")) {
    try {
      which = builtin_ring_from_name(line.substr(5));
    } catch (const Error& e) {
      throw ParseError(ln, 6, e.what());
    }
    first_entry = ln;
  } else {
    ln = first_entry;
  }

  const FusionRing& ring = builtin_ring(which);
  FSymbolTable table(ring);
  std::vector<bool> seen(table.size(), false);
  for (; ln < lines.size(); ++ln) {
    std::string_view raw = strip(lines[ln]);
    std::size_t lineno = ln + 1;
    if (raw.find_first_not_of(" \t") == std::string_view::npos) continue;
    std::size_t eq = raw.find('=');
    if (eq == std::string_view::npos) throw ParseError(lineno, 1, "missing '='");
    std::istringstream fields{std::string(raw.substr(0, eq))};
    std::string tag;
    std::vector<std::string> tok;
    fields >> tag;
    if (tag != "F") throw ParseError(lineno, 1, "expected 'F'");
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.size() != 6) throw ParseError(lineno, 1, "expected 6 object labels");
    Label l[6];
    for (std::size_t i = 0; i < 6; ++i) {
      try {
        l[i] = ring.from_token(tok[i]);
      } catch (const Error& e) {
        throw ParseError(lineno, raw.find(tok[i]) + 1, e.what());
      }
    }
    FKey k{l[1], l[2], l[3], l[0], l[5], l[4]};
    long idx = table.index_of(k);
    if (idx < 0) throw ParseError(lineno, 1, "inadmissible key " + key_text(ring, k));
    if (seen[static_cast<std::size_t>(idx)])
      throw ParseError(lineno, 1, "duplicate key " + key_text(ring, k));
    seen[static_cast<std::size_t>(idx)] = true;
    table.set_at(static_cast<std::size_t>(idx),
                 parse_scalar(raw.substr(eq + 1), ring.tower(), lineno, eq + 2));
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw ParseError(lines.size(), 1, "missing key " + key_text(ring, table.keys()[i]));
  return table;
}

FSymbolTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

}  // namespace fusioncat
