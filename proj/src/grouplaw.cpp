#include "unitroot/grouplaw.hpp"

#include "unitroot/polytope.hpp"

namespace unitroot {

namespace {

GroupLaw assemble(const std::vector<TruncatedSeries>& L, int D,
                  std::vector<ExpVec> labels, int label_dim) {
  const int N = static_cast<int>(L.size());
  if (2 * N > kMaxSeriesVars)
    throw UnsupportedError("too many interior points for the group law ring");

  auto Linv = invert_composition(L);

  // L(x) + L(y) inside the 2N-variable ring
  std::vector<int> xmap(static_cast<std::size_t>(N)), ymap(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    xmap[static_cast<std::size_t>(i)] = i;
    ymap[static_cast<std::size_t>(i)] = N + i;
  }
  std::vector<TruncatedSeries> sum;
  sum.reserve(L.size());
  for (const auto& Lv : L)
    sum.push_back(Lv.embedded(xmap, 2 * N) + Lv.embedded(ymap, 2 * N));

  GroupLaw F;
  F.N = N;
  F.D = D;
  F.label_dim = label_dim;
  F.labels = std::move(labels);
  F.comp = compose(Linv, sum);
  return F;
}

}  // namespace

GroupLaw group_law(const PolyZ& f, int D) {
  if (D < 2) throw UnsupportedError("group law needs D >= 2");
  auto pts = require_interior_points(f);
  auto L = log_series(f, D);
  return assemble(L, D, pts, f.dimension());
}

GroupLaw group_law_from_log(const std::vector<TruncatedSeries>& L, int D) {
  if (D < 2) throw UnsupportedError("group law needs D >= 2");
  std::vector<ExpVec> labels;
  for (std::size_t i = 0; i < L.size(); ++i) {
    ExpVec e;
    e[0] = static_cast<int32_t>(i);
    labels.push_back(e);
  }
  return assemble(L, D, std::move(labels), 1);
}

IntegralityReport integrality_report(const GroupLaw& F) {
  IntegralityReport rep;
  for (std::size_t i = 0; i < F.comp.size(); ++i)
    for (const auto& [m, c] : F.comp[i].terms()) {
      mpz_class den = c.get_den();
      if (den != 1) {
        rep.integral = false;
        rep.offenders.push_back({static_cast<int>(i), m, den});
      }
    }
  return rep;
}

AxiomsReport axioms_check(const GroupLaw& F) {
  AxiomsReport rep;
  const int N = F.N;
  const int D = F.D;

  // identity: substitute y = 0
  {
    std::vector<TruncatedSeries> inner;
    for (int i = 0; i < N; ++i)
      inner.push_back(TruncatedSeries::variable(N, D, i));
    for (int i = 0; i < N; ++i)
      inner.push_back(TruncatedSeries::zero(N, D));
    bool ok = true;
    for (int i = 0; i < N && ok; ++i)
      ok = compose(F.comp[static_cast<std::size_t>(i)], inner) ==
           TruncatedSeries::variable(N, D, i);
    rep.identity_ok = ok;
  }

  // commutativity: swap x and y
  {
    std::vector<int> swap_map(static_cast<std::size_t>(2 * N));
    for (int i = 0; i < N; ++i) {
      swap_map[static_cast<std::size_t>(i)] = N + i;
      swap_map[static_cast<std::size_t>(N + i)] = i;
    }
    bool ok = true;
    for (int i = 0; i < N && ok; ++i)
      ok = F.comp[static_cast<std::size_t>(i)].embedded(swap_map, 2 * N) ==
           F.comp[static_cast<std::size_t>(i)];
    rep.commutativity_ok = ok;
  }

  // associativity in the 3N-variable ring
  {
    if (3 * N > kMaxSeriesVars)
      throw UnsupportedError("associativity check needs 3N <= 8 variables");
    std::vector<int> xy(static_cast<std::size_t>(2 * N)), yz(static_cast<std::size_t>(2 * N));
    for (int i = 0; i < 2 * N; ++i) xy[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < 2 * N; ++i) yz[static_cast<std::size_t>(i)] = N + i;

    std::vector<TruncatedSeries> inner_left, inner_right;
    for (int i = 0; i < N; ++i)
      inner_left.push_back(F.comp[static_cast<std::size_t>(i)].embedded(xy, 3 * N));
    for (int i = 0; i < N; ++i)
      inner_left.push_back(TruncatedSeries::variable(3 * N, D, 2 * N + i));
    for (int i = 0; i < N; ++i)
      inner_right.push_back(TruncatedSeries::variable(3 * N, D, i));
    for (int i = 0; i < N; ++i)
      inner_right.push_back(F.comp[static_cast<std::size_t>(i)].embedded(yz, 3 * N));

    bool ok = true;
    for (int i = 0; i < N && ok; ++i)
      ok = compose(F.comp[static_cast<std::size_t>(i)], inner_left) ==
           compose(F.comp[static_cast<std::size_t>(i)], inner_right);
    rep.associativity_ok = ok;
  }
  return rep;
}

}  // namespace unitroot
