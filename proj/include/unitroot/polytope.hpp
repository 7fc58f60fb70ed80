#pragma once

#include <cstdint>
#include <vector>

#include "unitroot/laurent.hpp"

namespace unitroot {

// Inward facet inequality: <x, normal> >= -offset for all x in the polytope.
// Normals are primitive integer vectors.
struct Facet {
  ExpVec normal;
  int64_t offset;
  bool operator==(const Facet&) const = default;
};

struct NewtonPolytope {
  int d = 0;    // ambient dimension
  int dim = 0;  // affine dimension of the hull
  std::vector<ExpVec> vertices;  // graded-lex sorted
  std::vector<Facet> facets;     // populated iff dim == d

  bool full_dimensional() const { return dim == d; }
};

// Convex hull of the support.  Exact for d <= 3; for d >= 4 only supports whose
// extreme points form a simplex of d+1 affinely independent points.
NewtonPolytope newton_polytope(const PolyZ& f);
NewtonPolytope newton_polytope(const std::vector<ExpVec>& support, int d);

// Strictly interior lattice points in graded-lex order.  Requires a
// full-dimensional polytope; throws HypothesisError when the interior is empty.
std::vector<ExpVec> interior_lattice_points(const NewtonPolytope& P);

// All lattice points of the (closed) polytope, graded-lex order.
std::vector<ExpVec> lattice_points(const NewtonPolytope& P);

struct HypothesisReport {
  int d = 0;
  int dim = 0;
  bool full_dimensional = false;
  bool interior_nonempty = false;
  int64_t interior_count = 0;
  bool ok() const { return full_dimensional && interior_nonempty; }
};

HypothesisReport check_hypotheses(const PolyZ& f);

// Interior points of the Newton polytope; throws HypothesisError unless both
// hypotheses hold.  This is the gate every downstream computation goes through.
std::vector<ExpVec> require_interior_points(const PolyZ& f);

}  // namespace unitroot
