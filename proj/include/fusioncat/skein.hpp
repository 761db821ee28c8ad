#ifndef FUSIONCAT_SKEIN_HPP
#define FUSIONCAT_SKEIN_HPP

#include <array>
#include <vector>

#include "fusioncat/exactnum.hpp"

namespace fusioncat {

// Planar trivalent graph as a half-edge structure. Each dart has a twin (the
// other end of its edge) and a successor in the counterclockwise order around
// its vertex. Boundary points are one-dart vertices. Edge-free closed
// components are counted in free_loops.
class TrivalentGraph {
 public:
  // Adds a vertex whose darts are listed counterclockwise; returns their ids.
  std::vector<int> add_vertex(std::size_t degree);
  void connect(int d1, int d2);
  // Boundary point i (0..3) as a one-dart vertex; returns the dart.
  int add_boundary(int index);
  void add_free_loop() { ++free_loops_; }

  int twin(int d) const { return twin_[d]; }
  int next(int d) const { return next_[d]; }
  int vertex(int d) const { return vertex_[d]; }
  bool alive(int d) const { return alive_[d]; }
  std::size_t dart_count() const { return twin_.size(); }
  int free_loops() const { return free_loops_; }
  int boundary_dart(int index) const { return boundary_[index]; }
  std::size_t boundary_count() const;
  std::size_t vertex_count() const;

  // Checks twins, rotations and vertex degrees (3 inside, 1 on the boundary).
  void validate() const;

  // Mirror image: reverses every rotation.
  TrivalentGraph reflected() const;

 private:
  friend class SkeinReducer;
  friend TrivalentGraph glue(const TrivalentGraph& x, const TrivalentGraph& y);
  std::vector<int> twin_, next_, vertex_;
  std::vector<bool> alive_;
  std::array<int, 4> boundary_{-1, -1, -1, -1};
  int vertices_ = 0;
  int free_loops_ = 0;
};

struct SkeinParams {
  FieldScalar d, b, t;
};

enum class MoveKind { loop, tadpole, bigon, triangle };

struct Move {
  MoveKind kind;
  int dart;  // a dart of the face or edge the move acts on
};

// Moves available on a closed graph, in a fixed order.
std::vector<Move> available_moves(const TrivalentGraph& g);

// Applies one move and returns the scalar factor it contributes.
FieldScalar apply_move(TrivalentGraph& g, const Move& m, const SkeinParams& p);

bool is_empty(const TrivalentGraph& g);

// Removes loops, bigons and triangles until nothing is left. Throws
// "requires square-pop" when only faces of length four or more remain.
FieldScalar evaluate_closed(TrivalentGraph g, const SkeinParams& p);

// Glues the reflection of y to x along the four boundary points.
TrivalentGraph glue(const TrivalentGraph& x, const TrivalentGraph& y);
FieldScalar pair(const TrivalentGraph& x, const TrivalentGraph& y, const SkeinParams& p);

// Boundary points 0..3 sit counterclockwise at the corners of a square,
// starting bottom left. w1: strands 0-3 and 1-2. w2: strands 0-1 and 3-2.
// w3: an H with legs 0,3 and 1,2. w4: the rotated H with legs 0,1 and 3,2.
std::array<TrivalentGraph, 4> c4_basis();
TrivalentGraph square_diagram();

// Closed test diagrams.
TrivalentGraph circle();
TrivalentGraph theta();
TrivalentGraph tetrahedron();
TrivalentGraph prism();

std::array<std::array<FieldScalar, 4>, 4> gram_matrix(const SkeinParams& p);

struct SquarePop {
  FieldScalar cup, tri;  // coefficients on w1, w2 and on w3, w4
};

// Solves Gram * coeffs = (pair(square, w_i))_i.
SquarePop derive_square_pop(const SkeinParams& p);

// b(b^2 + bt - t^2)/(bd + t + dt) and (t^2(d+1) - b^2)/(bd + t + dt).
SquarePop square_pop_closed_form(const SkeinParams& p);

SkeinParams h3_skein_params();

struct H3Constants {
  FieldScalar c1, c2, t, b, d;
};

// c1, c2 come from the linear solve. t uses (-(2/3) d + 5/3) sqrt(d), the
// sign placement for which t / sqrt(d) matches the tabulated
// (F_rho^{rho rho rho})_{rho rho} = -B; the variant -((2/3) d + 5/3) sqrt(d)
// does not.
H3Constants h3_constants();

// Solves a square linear system over the field; throws on singular input.
std::vector<FieldScalar> solve_linear(std::vector<std::vector<FieldScalar>> m,
                                      std::vector<FieldScalar> rhs);

}  // namespace fusioncat

#endif  // FUSIONCAT_SKEIN_HPP
