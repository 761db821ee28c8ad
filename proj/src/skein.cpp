#include "fusioncat/skein.hpp"

#include <algorithm>

namespace fusioncat {

std::vector<int> TrivalentGraph::add_vertex(std::size_t degree) {
  std::vector<int> darts;
  int base = static_cast<int>(twin_.size());
  for (std::size_t i = 0; i < degree; ++i) {
    int d = base + static_cast<int>(i);
    darts.push_back(d);
    twin_.push_back(-1);
    next_.push_back(base + static_cast<int>((i + 1) % degree));
    vertex_.push_back(vertices_);
    alive_.push_back(true);
  }
  ++vertices_;
  return darts;
}

void TrivalentGraph::connect(int d1, int d2) {
  twin_[d1] = d2;
  twin_[d2] = d1;
}

int TrivalentGraph::add_boundary(int index) {
  int d = add_vertex(1)[0];
  boundary_[index] = d;
  return d;
}

std::size_t TrivalentGraph::boundary_count() const {
  return static_cast<std::size_t>(
      std::count_if(boundary_.begin(), boundary_.end(), [&](int d) { return d >= 0 && alive_[d]; }));
}

std::size_t TrivalentGraph::vertex_count() const {
  std::vector<int> seen;
  for (std::size_t d = 0; d < twin_.size(); ++d)
    if (alive_[d] && next_[d] != static_cast<int>(d)) seen.push_back(vertex_[d]);
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

void TrivalentGraph::validate() const {
  for (std::size_t i = 0; i < twin_.size(); ++i) {
    if (!alive_[i]) continue;
    int d = static_cast<int>(i);
    if (twin_[d] < 0 || !alive_[twin_[d]] || twin_[twin_[d]] != d || twin_[d] == d)
      throw Error("skein graph: bad twin");
    int len = 1;
    for (int e = next_[d]; e != d; e = next_[e], ++len)
      if (!alive_[e] || vertex_[e] != vertex_[d] || len > 3) throw Error("skein graph: bad rotation");
    bool boundary = std::find(boundary_.begin(), boundary_.end(), d) != boundary_.end();
    if (len != (boundary ? 1 : 3)) throw Error("skein graph: vertex degree must be 3");
  }
}

TrivalentGraph TrivalentGraph::reflected() const {
  TrivalentGraph g = *this;
  for (std::size_t d = 0; d < next_.size(); ++d) {
    if (!alive_[d]) continue;
    int prev = static_cast<int>(d);
    while (next_[prev] != static_cast<int>(d)) prev = next_[prev];
    g.next_[d] = prev;
  }
  return g;
}

class SkeinReducer {
 public:
  static void kill(TrivalentGraph& g, int d) { g.alive_[d] = false; }
  static void set_next(TrivalentGraph& g, int d, int n) { g.next_[d] = n; }
  static void set_vertex(TrivalentGraph& g, int d, int v) { g.vertex_[d] = v; }
  static int new_vertex(TrivalentGraph& g) { return g.vertices_++; }
  static void use_loop(TrivalentGraph& g) { --g.free_loops_; }
  static void clear(TrivalentGraph& g) {
    std::fill(g.alive_.begin(), g.alive_.end(), false);
    g.free_loops_ = 0;
  }
  // Joins the far ends of darts p and q, which are discarded.
  static void splice(TrivalentGraph& g, int p, int q) {
    int a = g.twin_[p], b = g.twin_[q];
    kill(g, p);
    kill(g, q);
    if (a == q) {
      ++g.free_loops_;
      return;
    }
    g.connect(a, b);
  }
};

bool is_empty(const TrivalentGraph& g) {
  if (g.free_loops() > 0) return false;
  for (std::size_t d = 0; d < g.dart_count(); ++d)
    if (g.alive(static_cast<int>(d))) return false;
  return true;
}

namespace {

int phi(const TrivalentGraph& g, int d) { return g.next(g.twin(d)); }

std::vector<int> face_of(const TrivalentGraph& g, int d) {
  std::vector<int> f{d};
  for (int e = phi(g, d); e != d; e = phi(g, e)) {
    f.push_back(e);
    if (f.size() > g.dart_count()) throw Error("skein graph: broken face");
  }
  return f;
}

bool distinct_vertices(const TrivalentGraph& g, const std::vector<int>& face) {
  for (std::size_t i = 0; i < face.size(); ++i)
    for (std::size_t j = i + 1; j < face.size(); ++j)
      if (g.vertex(face[i]) == g.vertex(face[j])) return false;
  return true;
}

}  // namespace

std::vector<Move> available_moves(const TrivalentGraph& g) {
  std::vector<Move> moves;
  if (g.free_loops() > 0) moves.push_back({MoveKind::loop, -1});
  std::size_t n = g.dart_count();
  for (std::size_t i = 0; i < n; ++i) {
    int d = static_cast<int>(i);
    if (g.alive(d) && g.vertex(g.twin(d)) == g.vertex(d)) {
      moves.push_back({MoveKind::tadpole, d});
      return moves;
    }
  }
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    int d = static_cast<int>(i);
    if (!g.alive(d) || seen[i]) continue;
    std::vector<int> f = face_of(g, d);
    for (int e : f) seen[static_cast<std::size_t>(e)] = true;
    if (!distinct_vertices(g, f)) continue;
    if (f.size() == 2) moves.push_back({MoveKind::bigon, *std::min_element(f.begin(), f.end())});
    if (f.size() == 3) moves.push_back({MoveKind::triangle, *std::min_element(f.begin(), f.end())});
  }
  return moves;
}

FieldScalar apply_move(TrivalentGraph& g, const Move& m, const SkeinParams& p) {
  using R = SkeinReducer;
  switch (m.kind) {
    case MoveKind::loop:
      R::use_loop(g);
      return p.d;
    case MoveKind::tadpole:
      R::clear(g);
      return FieldScalar(p.d.tower());
    case MoveKind::bigon: {
      int h1 = m.dart, h2 = phi(g, h1);
      int ext_v = g.next(h1), ext_w = g.next(h2);
      int t1 = g.twin(h1), t2 = g.twin(h2);
      R::kill(g, h1);
      R::kill(g, h2);
      R::kill(g, t1);
      R::kill(g, t2);
      R::splice(g, ext_v, ext_w);
      return p.b;
    }
    case MoveKind::triangle: {
      int h[3] = {m.dart, phi(g, m.dart), phi(g, phi(g, m.dart))};
      int ext[3] = {g.next(h[0]), g.next(h[1]), g.next(h[2])};
      for (int d : h) {
        R::kill(g, g.twin(d));
        R::kill(g, d);
      }
      // The face runs clockwise, so the legs appear as ext0, ext2, ext1
      // counterclockwise around the contracted vertex.
      int v = R::new_vertex(g);
      for (int e : ext) R::set_vertex(g, e, v);
      R::set_next(g, ext[0], ext[2]);
      R::set_next(g, ext[2], ext[1]);
      R::set_next(g, ext[1], ext[0]);
      return p.t;
    }
  }
  throw Error("unknown move");
}

FieldScalar evaluate_closed(TrivalentGraph g, const SkeinParams& p) {
  if (g.boundary_count() != 0) throw Error("evaluate_closed needs a closed graph");
  FieldScalar acc(p.d.tower(), Rational(1));
  while (!is_empty(g)) {
    auto moves = available_moves(g);
    if (moves.empty()) throw Error("requires square-pop");
    acc *= apply_move(g, moves.front(), p);
    if (acc.is_zero()) return acc;
  }
  return acc;
}

TrivalentGraph glue(const TrivalentGraph& x, const TrivalentGraph& y) {
  TrivalentGraph ry = y.reflected();
  TrivalentGraph g = x;
  int offset = static_cast<int>(g.twin_.size());
  int voffset = g.vertices_;
  for (std::size_t d = 0; d < ry.twin_.size(); ++d) {
    g.twin_.push_back(ry.twin_[d] + offset);
    g.next_.push_back(ry.next_[d] + offset);
    g.vertex_.push_back(ry.vertex_[d] + voffset);
    g.alive_.push_back(ry.alive_[d]);
  }
  g.vertices_ += ry.vertices_;
  g.free_loops_ += ry.free_loops_;
  for (int i = 0; i < 4; ++i) {
    int bx = x.boundary_[i], by = ry.boundary_[i];
    if (bx < 0 || by < 0) throw Error("glue needs four boundary points on both sides");
    SkeinReducer::splice(g, bx, by + offset);
  }
  g.boundary_ = {-1, -1, -1, -1};
  return g;
}

FieldScalar pair(const TrivalentGraph& x, const TrivalentGraph& y, const SkeinParams& p) {
  return evaluate_closed(glue(x, y), p);
}

std::array<TrivalentGraph, 4> c4_basis() {
  std::array<TrivalentGraph, 4> w;
  {
    auto& g = w[0];
    int p[4];
    for (int i = 0; i < 4; ++i) p[i] = g.add_boundary(i);
    g.connect(p[0], p[3]);
    g.connect(p[1], p[2]);
  }
  {
    auto& g = w[1];
    int p[4];
    for (int i = 0; i < 4; ++i) p[i] = g.add_boundary(i);
    g.connect(p[0], p[1]);
    g.connect(p[3], p[2]);
  }
  {
    auto& g = w[2];
    int p[4];
    for (int i = 0; i < 4; ++i) p[i] = g.add_boundary(i);
    auto l = g.add_vertex(3);  // to R, to p3, to p0
    auto r = g.add_vertex(3);  // to p1, to p2, to L
    g.connect(l[0], r[2]);
    g.connect(l[1], p[3]);
    g.connect(l[2], p[0]);
    g.connect(r[0], p[1]);
    g.connect(r[1], p[2]);
  }
  {
    auto& g = w[3];
    int p[4];
    for (int i = 0; i < 4; ++i) p[i] = g.add_boundary(i);
    auto b = g.add_vertex(3);  // to p1, to T, to p0
    auto t = g.add_vertex(3);  // to p2, to p3, to B
    g.connect(b[1], t[2]);
    g.connect(b[0], p[1]);
    g.connect(b[2], p[0]);
    g.connect(t[0], p[2]);
    g.connect(t[1], p[3]);
  }
  return w;
}

TrivalentGraph square_diagram() {
  TrivalentGraph g;
  int p[4];
  for (int i = 0; i < 4; ++i) p[i] = g.add_boundary(i);
  // corner i: outward leg, edge to corner i+1, edge to corner i-1
  std::vector<int> c[4];
  for (int i = 0; i < 4; ++i) c[i] = g.add_vertex(3);
  for (int i = 0; i < 4; ++i) {
    g.connect(c[i][0], p[i]);
    g.connect(c[i][1], c[(i + 1) % 4][2]);
  }
  return g;
}

TrivalentGraph circle() {
  TrivalentGraph g;
  g.add_free_loop();
  return g;
}

TrivalentGraph theta() {
  TrivalentGraph g;
  // u on the left: middle, top, bottom edge; v on the right: top, middle, bottom.
  auto u = g.add_vertex(3), v = g.add_vertex(3);
  g.connect(u[0], v[1]);
  g.connect(u[1], v[0]);
  g.connect(u[2], v[2]);
  return g;
}

TrivalentGraph tetrahedron() {
  // Outer triangle 0,1,2 counterclockwise with vertex 3 in the middle.
  TrivalentGraph g;
  auto a = g.add_vertex(3);  // to 1, to 3, to 2
  auto b = g.add_vertex(3);  // to 2, to 3, to 0
  auto c = g.add_vertex(3);  // to 0, to 3, to 1
  auto m = g.add_vertex(3);  // to 0, to 1, to 2
  g.connect(a[0], b[2]);
  g.connect(b[0], c[2]);
  g.connect(c[0], a[2]);
  g.connect(a[1], m[0]);
  g.connect(b[1], m[1]);
  g.connect(c[1], m[2]);
  return g;
}

TrivalentGraph prism() {
  // Inner triangle i0,i1,i2 inside outer triangle o0,o1,o2, spokes i_k - o_k.
  TrivalentGraph g;
  std::vector<int> in[3], out[3];
  for (int k = 0; k < 3; ++k) in[k] = g.add_vertex(3);   // to spoke, to i(k+1), to i(k-1)
  for (int k = 0; k < 3; ++k) out[k] = g.add_vertex(3);  // to o(k+1), to spoke, to o(k-1)
  for (int k = 0; k < 3; ++k) {
    g.connect(in[k][0], out[k][1]);
    g.connect(in[k][1], in[(k + 1) % 3][2]);
    g.connect(out[k][0], out[(k + 1) % 3][2]);
  }
  return g;
}

std::array<std::array<FieldScalar, 4>, 4> gram_matrix(const SkeinParams& p) {
  auto w = c4_basis();
  FieldScalar zero(p.d.tower());
  std::array<std::array<FieldScalar, 4>, 4> g{{{zero, zero, zero, zero},
                                               {zero, zero, zero, zero},
                                               {zero, zero, zero, zero},
                                               {zero, zero, zero, zero}}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g[i][j] = pair(w[i], w[j], p);
  return g;
}

std::vector<FieldScalar> solve_linear(std::vector<std::vector<FieldScalar>> m,
                                      std::vector<FieldScalar> rhs) {
  std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error("degenerate parameters");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    FieldScalar inv = m[col][col].inverse();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      FieldScalar f = m[r][col] * inv;
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<FieldScalar> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(rhs[i] * m[i][i].inverse());
  return x;
}

SquarePop derive_square_pop(const SkeinParams& p) {
  auto w = c4_basis();
  auto g = gram_matrix(p);
  TrivalentGraph s = square_diagram();
  std::vector<std::vector<FieldScalar>> m;
  std::vector<FieldScalar> v;
  for (std::size_t i = 0; i < 4; ++i) {
    m.emplace_back(g[i].begin(), g[i].end());
    v.push_back(pair(s, w[i], p));
  }
  auto c = solve_linear(std::move(m), std::move(v));
  if (!(c[0] == c[1]) || !(c[2] == c[3])) throw Error("square-pop coefficients not symmetric");
  return {c[0], c[2]};
}

SquarePop square_pop_closed_form(const SkeinParams& p) {
  const FieldScalar &d = p.d, &b = p.b, &t = p.t;
  FieldScalar den = b * d + t + d * t;
  if (den.is_zero()) throw Error("degenerate parameters");
  FieldScalar inv = den.inverse();
  FieldScalar one(d.tower(), Rational(1));
  return {b * (b * b + b * t - t * t) * inv, (t * t * (d + one) - b * b) * inv};
}

SkeinParams h3_skein_params() {
  TowerPtr t = tower_preset(TowerPreset::h3);
  return {named_constant(Constant::dRho, t), named_constant(Constant::bBigon, t),
          named_constant(Constant::tTriangle, t)};
}

H3Constants h3_constants() {
  SkeinParams p = h3_skein_params();
  SquarePop sp = derive_square_pop(p);
  return {sp.cup, sp.tri, p.t, p.b, p.d};
}

}  // namespace fusioncat
