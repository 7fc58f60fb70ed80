#include "unitroot/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace unitroot {

namespace {

using i128 = __int128;

i128 dot(const ExpVec& a, const ExpVec& b) {
  i128 s = 0;
  for (int i = 0; i < kMaxDim; ++i)
    s += static_cast<i128>(a[i]) * b[i];
  return s;
}

void check_coordinate_range(const std::vector<ExpVec>& pts) {
  for (const auto& p : pts)
    for (int i = 0; i < kMaxDim; ++i)
      if (p[i] < -(1 << 20) || p[i] > (1 << 20))
        throw UnsupportedError("support coordinates exceed the hull range");
}

ExpVec primitive(const ExpVec& v) {
  int64_t g = 0;
  for (int i = 0; i < kMaxDim; ++i)
    g = std::gcd(g, static_cast<int64_t>(v[i]) < 0
                        ? -static_cast<int64_t>(v[i])
                        : static_cast<int64_t>(v[i]));
  if (g <= 1) return v;
  ExpVec r;
  for (int i = 0; i < kMaxDim; ++i) r[i] = static_cast<int32_t>(v[i] / g);
  return r;
}

// rank of the affine span of pts (dimension of the hull)
int affine_rank(const std::vector<ExpVec>& pts, int d) {
  if (pts.size() <= 1) return 0;
  std::vector<std::vector<mpz_class>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<mpz_class> r(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) r[static_cast<std::size_t>(j)] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(r));
  }
  // fraction-free elimination
  int rank = 0;
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
      if (sgn(rows[r][static_cast<std::size_t>(col)]) != 0) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][static_cast<std::size_t>(col)]) == 0) continue;
      mpz_class a = prow[static_cast<std::size_t>(col)], b = rows[r][static_cast<std::size_t>(col)];
      for (int j = 0; j < d; ++j)
        rows[r][static_cast<std::size_t>(j)] =
            rows[r][static_cast<std::size_t>(j)] * a - prow[static_cast<std::size_t>(j)] * b;
    }
    ++rank;
  }
  return rank;
}

ExpVec to_expvec_checked(const std::vector<mpz_class>& v) {
  ExpVec r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p())
      throw UnsupportedError("facet normal exceeds the integer range");
    long x = v[i].get_si();
    if (x < INT32_MIN || x > INT32_MAX)
      throw UnsupportedError("facet normal exceeds the integer range");
    r[static_cast<int>(i)] = static_cast<int32_t>(x);
  }
  return r;
}

// determinant of a square mpz matrix (Bareiss)
mpz_class det_mpz(std::vector<std::vector<mpz_class>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(m[swap_row][k]) == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Facet enumeration for full-dimensional hulls in d <= 3: every d-subset of
// the support that spans a supporting hyperplane contributes a facet.
std::vector<Facet> facets_bruteforce(const std::vector<ExpVec>& pts, int d) {
  const std::size_t k = pts.size();
  if (k > 512) throw UnsupportedError("too many support points for the hull");
  std::set<std::pair<std::array<int32_t, kMaxDim>, int64_t>> seen;
  std::vector<Facet> out;

  auto consider = [&](const ExpVec& normal_raw) {
    if (normal_raw == ExpVec{}) return;
    ExpVec n = primitive(normal_raw);
    for (int orient = 0; orient < 2; ++orient) {
      ExpVec nn = orient ? negate(n) : n;
      i128 lo = dot(nn, pts[0]);
      for (const auto& p : pts) lo = std::min(lo, dot(nn, p));
      // count points on the supporting hyperplane; a facet needs d affinely
      // independent ones, checked by the caller supplying spanning subsets
      int64_t off = static_cast<int64_t>(-lo);
      auto key = std::make_pair(nn.e, off);
      if (seen.count(key)) continue;
      std::vector<ExpVec> on_face;
      for (const auto& p : pts)
        if (dot(nn, p) == lo) on_face.push_back(p);
      if (affine_rank(on_face, d) == d - 1) {
        seen.insert(key);
        out.push_back(Facet{nn, off});
      }
    }
  };

  if (d == 1) {
    ExpVec n;
    n[0] = 1;
    consider(n);
  } else if (d == 2) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        ExpVec dir = sub(pts[j], pts[i]);
        ExpVec n;
        n[0] = -dir[1];
        n[1] = dir[0];
        consider(n);
      }
  } else {  // d == 3
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        for (std::size_t l = j + 1; l < k; ++l) {
          ExpVec a = sub(pts[j], pts[i]), b = sub(pts[l], pts[i]);
          int64_t nx = static_cast<int64_t>(a[1]) * b[2] - static_cast<int64_t>(a[2]) * b[1];
          int64_t ny = static_cast<int64_t>(a[2]) * b[0] - static_cast<int64_t>(a[0]) * b[2];
          int64_t nz = static_cast<int64_t>(a[0]) * b[1] - static_cast<int64_t>(a[1]) * b[0];
          if (nx < INT32_MIN || nx > INT32_MAX || ny < INT32_MIN ||
              ny > INT32_MAX || nz < INT32_MIN || nz > INT32_MAX)
            throw UnsupportedError("facet normal exceeds the integer range");
          ExpVec n;
          n[0] = static_cast<int32_t>(nx);
          n[1] = static_cast<int32_t>(ny);
          n[2] = static_cast<int32_t>(nz);
          consider(n);
        }
  }
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
    if (a.normal.e != b.normal.e)
      return graded_lex_less(a.normal, b.normal);
    return a.offset < b.offset;
  });
  return out;
}

// Simplex fast path for d >= 4: look for d+1 affinely independent support
// points whose hull contains the rest.
std::vector<ExpVec> find_simplex_vertices(const std::vector<ExpVec>& pts, int d) {
  const std::size_t k = pts.size();
  if (k > 18)
    throw UnsupportedError("hull in dimension > 3 limited to small supports");
  std::vector<std::size_t> idx(static_cast<std::size_t>(d) + 1);

  // iterate over (d+1)-subsets
  std::vector<std::size_t> c(static_cast<std::size_t>(d) + 1);
  std::iota(c.begin(), c.end(), 0);
  auto next_comb = [&]() -> bool {
    int i = d;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == k - static_cast<std::size_t>(d + 1 - i))
      --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= d; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
  };

  if (k < static_cast<std::size_t>(d) + 1) throw UnsupportedError("not a full-dimensional simplex");
  do {
    std::vector<ExpVec> T;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i) T.push_back(pts[c[i]]);
    // edge matrix and its determinant
    std::vector<std::vector<mpz_class>> M(static_cast<std::size_t>(d),
                                          std::vector<mpz_class>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            T[static_cast<std::size_t>(i) + 1][j] - T[0][j];
    mpz_class D = det_mpz(M);
    if (sgn(D) == 0) continue;
    // barycentric containment of every other support point (Cramer)
    bool contains_all = true;
    for (const auto& q : pts) {
      std::vector<mpz_class> rhs(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) rhs[static_cast<std::size_t>(j)] = q[j] - T[0][j];
      mpz_class lam_sum = 0;
      for (int i = 0; i < d && contains_all; ++i) {
        auto Mi = M;
        Mi[static_cast<std::size_t>(i)] = rhs;
        mpz_class lam = det_mpz(Mi);
        if (sgn(lam) * sgn(D) < 0) contains_all = false;
        lam_sum += sgn(D) > 0 ? lam : -lam;
      }
      mpz_class absD = abs(D);
      if (contains_all && lam_sum > absD) contains_all = false;
      if (!contains_all) break;
    }
    if (contains_all) return T;
  } while (next_comb());
  throw UnsupportedError(
      "hull in dimension > 3 supports only simplex supports (d+1 extreme points)");
}

// primitive inward normal of the hyperplane through d affinely independent
// points, oriented toward `inside`
Facet simplex_facet(const std::vector<ExpVec>& face, const ExpVec& inside, int d) {
  // generalized cross product via cofactors of the (d-1) x d difference matrix
  std::vector<std::vector<mpz_class>> W(static_cast<std::size_t>(d - 1),
                                        std::vector<mpz_class>(static_cast<std::size_t>(d)));
  for (int i = 0; i + 1 < d; ++i)
    for (int j = 0; j < d; ++j)
      W[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          face[static_cast<std::size_t>(i) + 1][j] - face[0][j];
  std::vector<mpz_class> n(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    std::vector<std::vector<mpz_class>> minor;
    for (int i = 0; i + 1 < d; ++i) {
      std::vector<mpz_class> row;
      for (int l = 0; l < d; ++l)
        if (l != j) row.push_back(W[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]);
      minor.push_back(std::move(row));
    }
    mpz_class m = det_mpz(minor);
    n[static_cast<std::size_t>(j)] = (j % 2 == 0) ? m : -m;
  }
  mpz_class g = 0;
  for (const auto& x : n) g = gcd(g, x);
  if (sgn(g) != 0)
    for (auto& x : n) x /= g;
  ExpVec nv = to_expvec_checked(n);
  i128 level = dot(nv, face[0]);
  if (dot(nv, inside) < level) {
    nv = negate(nv);
    level = -level;
  }
  return Facet{nv, static_cast<int64_t>(-level)};
}

std::vector<ExpVec> sorted_unique(std::vector<ExpVec> v) {
  std::sort(v.begin(), v.end(), graded_lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

NewtonPolytope newton_polytope(const std::vector<ExpVec>& support_in, int d) {
  if (support_in.empty())
    throw HypothesisError("Newton polytope of the zero polynomial");
  if (d < 1 || d > kMaxDim) throw UnsupportedError("unsupported dimension");
  std::vector<ExpVec> pts = sorted_unique(support_in);
  check_coordinate_range(pts);

  NewtonPolytope P;
  P.d = d;
  P.dim = affine_rank(pts, d);

  if (P.dim == 0) {
    P.vertices = pts;
    return P;
  }

  if (P.dim == d && d <= 3) {
    P.facets = facets_bruteforce(pts, d);
    // vertices: points whose saturated facet normals span R^d
    for (const auto& p : pts) {
      std::vector<ExpVec> sat;
      for (const auto& f : P.facets)
        if (dot(f.normal, p) == -static_cast<i128>(f.offset))
          sat.push_back(f.normal);
      sat.push_back(ExpVec::zero());  // affine_rank works on differences; add origin
      if (affine_rank(sat, d) == d) P.vertices.push_back(p);
    }
    P.vertices = sorted_unique(P.vertices);
    return P;
  }

  if (P.dim == d) {  // d >= 4: simplex fast path
    std::vector<ExpVec> T = find_simplex_vertices(pts, d);
    P.vertices = sorted_unique(T);
    for (std::size_t skip = 0; skip < T.size(); ++skip) {
      std::vector<ExpVec> face;
      for (std::size_t i = 0; i < T.size(); ++i)
        if (i != skip) face.push_back(T[i]);
      P.facets.push_back(simplex_facet(face, T[skip], d));
    }
    std::sort(P.facets.begin(), P.facets.end(),
              [](const Facet& a, const Facet& b) {
                if (a.normal.e != b.normal.e)
                  return graded_lex_less(a.normal, b.normal);
                return a.offset < b.offset;
              });
    return P;
  }

  // Lower-dimensional hull: project onto pivot coordinates (a bijection on the
  // affine hull), take the hull there, pull vertices back.  Facet data is only
  // meaningful in the full-dimensional case and is left empty.
  {
    // choose pivot columns from elimination of the difference matrix
    std::vector<int> pivots;
    std::vector<std::vector<mpz_class>> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      std::vector<mpz_class> r(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) r[static_cast<std::size_t>(j)] = pts[i][j] - pts[0][j];
      rows.push_back(std::move(r));
    }
    int rank = 0;
    for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
      int pivot = -1;
      for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
        if (sgn(rows[r][static_cast<std::size_t>(col)]) != 0) {
          pivot = static_cast<int>(r);
          break;
        }
      if (pivot < 0) continue;
      std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
      const auto prow = rows[static_cast<std::size_t>(rank)];
      for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
        if (sgn(rows[r][static_cast<std::size_t>(col)]) == 0) continue;
        mpz_class a = prow[static_cast<std::size_t>(col)], b = rows[r][static_cast<std::size_t>(col)];
        for (int j = 0; j < d; ++j)
          rows[r][static_cast<std::size_t>(j)] =
              rows[r][static_cast<std::size_t>(j)] * a - prow[static_cast<std::size_t>(j)] * b;
      }
      pivots.push_back(col);
      ++rank;
    }
    if (P.dim > 3)
      throw UnsupportedError("hull of a lower-dimensional support beyond dim 3");
    std::vector<ExpVec> proj;
    proj.reserve(pts.size());
    for (const auto& p : pts) {
      ExpVec q;
      for (std::size_t i = 0; i < pivots.size(); ++i)
        q[static_cast<int>(i)] = p[pivots[i]];
      proj.push_back(q);
    }
    NewtonPolytope Q = newton_polytope(proj, P.dim);
    for (const auto& v : Q.vertices) {
      // pull back: the projection is injective on the support
      for (std::size_t i = 0; i < pts.size(); ++i) {
        ExpVec q;
        for (std::size_t j = 0; j < pivots.size(); ++j)
          q[static_cast<int>(j)] = pts[i][pivots[j]];
        if (q == v) {
          P.vertices.push_back(pts[i]);
          break;
        }
      }
    }
    P.vertices = sorted_unique(P.vertices);
    return P;
  }
}

NewtonPolytope newton_polytope(const PolyZ& f) {
  if (f.is_zero())
    throw HypothesisError("Newton polytope of the zero polynomial");
  return newton_polytope(f.support(), f.dimension());
}

namespace {

template <class Pred>
std::vector<ExpVec> scan_box(const NewtonPolytope& P, Pred&& keep) {
  if (!P.full_dimensional())
    throw HypothesisError("lattice point scan requires a full-dimensional polytope");
  int64_t lo[kMaxDim], hi[kMaxDim];
  for (int i = 0; i < P.d; ++i) {
    lo[i] = INT64_MAX;
    hi[i] = INT64_MIN;
    for (const auto& v : P.vertices) {
      lo[i] = std::min<int64_t>(lo[i], v[i]);
      hi[i] = std::max<int64_t>(hi[i], v[i]);
    }
  }
  unsigned __int128 cells = 1;
  for (int i = 0; i < P.d; ++i) {
    cells *= static_cast<unsigned __int128>(hi[i] - lo[i] + 1);
    if (cells > 20'000'000)
      throw UnsupportedError("bounding box too large for lattice enumeration");
  }
  std::vector<ExpVec> out;
  ExpVec cur;
  for (int i = 0; i < P.d; ++i) cur[i] = static_cast<int32_t>(lo[i]);
  while (true) {
    if (keep(cur)) out.push_back(cur);
    int i = 0;
    for (; i < P.d; ++i) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = static_cast<int32_t>(lo[i]);
    }
    if (i == P.d) break;
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

}  // namespace

std::vector<ExpVec> interior_lattice_points(const NewtonPolytope& P) {
  auto pts = scan_box(P, [&](const ExpVec& x) {
    for (const auto& f : P.facets)
      if (dot(f.normal, x) <= -static_cast<i128>(f.offset)) return false;
    return true;
  });
  if (pts.empty())
    throw HypothesisError("the Newton polytope has no interior lattice point");
  return pts;
}

std::vector<ExpVec> lattice_points(const NewtonPolytope& P) {
  return scan_box(P, [&](const ExpVec& x) {
    for (const auto& f : P.facets)
      if (dot(f.normal, x) < -static_cast<i128>(f.offset)) return false;
    return true;
  });
}

HypothesisReport check_hypotheses(const PolyZ& f) {
  HypothesisReport r;
  r.d = f.dimension();
  if (f.is_zero()) return r;
  NewtonPolytope P = newton_polytope(f);
  r.dim = P.dim;
  r.full_dimensional = P.full_dimensional();
  if (r.full_dimensional) {
    try {
      auto pts = interior_lattice_points(P);
      r.interior_nonempty = true;
      r.interior_count = static_cast<int64_t>(pts.size());
    } catch (const HypothesisError&) {
      r.interior_nonempty = false;
    }
  }
  return r;
}

std::vector<ExpVec> require_interior_points(const PolyZ& f) {
  NewtonPolytope P = newton_polytope(f);
  if (!P.full_dimensional())
    throw HypothesisError("Newton polytope is not full-dimensional");
  return interior_lattice_points(P);
}

}  // namespace unitroot
