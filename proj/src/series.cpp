#include "unitroot/series.hpp"

#include <algorithm>
#include <unordered_map>

namespace unitroot {

namespace {

bool term_less(const TruncatedSeries::Term& a, const TruncatedSeries::Term& b) {
  int ta = mono_total(a.first), tb = mono_total(b.first);
  if (ta != tb) return ta < tb;
  return a.first < b.first;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int nvars, int degree)
    : nvars_(nvars), degree_(degree) {
  if (nvars < 1 || nvars > kMaxSeriesVars)
    throw UnsupportedError("series supports 1..8 variables");
  if (degree < 0 || degree > kMaxSeriesDegree)
    throw UnsupportedError("series degree out of range");
}

TruncatedSeries TruncatedSeries::constant(int nvars, int degree,
                                          const mpq_class& c) {
  TruncatedSeries s(nvars, degree);
  if (sgn(c) != 0) s.terms_.emplace_back(0, c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(int nvars, int degree, int i) {
  TruncatedSeries s(nvars, degree);
  if (i < 0 || i >= nvars) throw UnsupportedError("variable index out of range");
  if (degree >= 1) s.terms_.emplace_back(mono_var(i), mpq_class(1));
  return s;
}

TruncatedSeries TruncatedSeries::from_terms(int nvars, int degree,
                                            std::vector<Term> terms) {
  TruncatedSeries s(nvars, degree);
  std::unordered_map<Mono, mpq_class> acc;
  for (auto& [m, c] : terms) {
    if (mono_total(m) > degree) continue;
    for (int i = nvars; i < kMaxSeriesVars; ++i)
      if (mono_get(m, i) != 0)
        throw UnsupportedError("monomial beyond the variable count");
    acc[m] += c;
  }
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) s.terms_.emplace_back(m, std::move(c));
  s.sort_and_prune();
  return s;
}

void TruncatedSeries::sort_and_prune() {
  std::sort(terms_.begin(), terms_.end(), term_less);
}

mpq_class TruncatedSeries::coefficient(Mono m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(),
                             Term{m, mpq_class(0)}, term_less);
  if (it != terms_.end() && it->first == m) return it->second;
  return mpq_class(0);
}

TruncatedSeries TruncatedSeries::truncated(int new_degree) const {
  TruncatedSeries s(nvars_, new_degree);
  for (const auto& t : terms_) {
    if (mono_total(t.first) > new_degree) break;
    s.terms_.push_back(t);
  }
  return s;
}

TruncatedSeries TruncatedSeries::embedded(const std::vector<int>& var_map,
                                          int new_nvars) const {
  if (static_cast<int>(var_map.size()) != nvars_)
    throw UnsupportedError("variable map has the wrong arity");
  TruncatedSeries s(new_nvars, degree_);
  s.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Mono nm = 0;
    for (int i = 0; i < nvars_; ++i) {
      int e = mono_get(m, i);
      if (!e) continue;
      int j = var_map[static_cast<std::size_t>(i)];
      if (j < 0 || j >= new_nvars)
        throw UnsupportedError("variable map target out of range");
      if (mono_get(nm, j) != 0)
        throw UnsupportedError("variable map must be injective");
      nm = mono_set(nm, j, e);
    }
    s.terms_.emplace_back(nm, c);
  }
  s.sort_and_prune();
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.nvars_ != b.nvars_)
    throw RingMismatchError("series variable counts differ");
  int deg = std::min(a.degree_, b.degree_);
  std::vector<TruncatedSeries::Term> ts;
  ts.reserve(a.terms_.size() + b.terms_.size());
  for (const auto& t : a.terms_) ts.push_back(t);
  for (const auto& t : b.terms_) ts.push_back(t);
  return TruncatedSeries::from_terms(a.nvars_, deg, std::move(ts));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a + (-b);
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s(nvars_, degree_);
  s.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) s.terms_.emplace_back(m, -c);
  return s;
}

TruncatedSeries TruncatedSeries::scaled(const mpq_class& c) const {
  TruncatedSeries s(nvars_, degree_);
  if (sgn(c) == 0) return s;
  s.terms_.reserve(terms_.size());
  for (const auto& [m, q] : terms_) s.terms_.emplace_back(m, q * c);
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.nvars_ != b.nvars_)
    throw RingMismatchError("series variable counts differ");
  int deg = std::min(a.degree_, b.degree_);
  std::unordered_map<Mono, mpq_class> acc;
  acc.reserve(a.terms_.size() + b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    int da = mono_total(ma);
    if (da > deg) break;
    for (const auto& [mb, cb] : b.terms_) {
      if (da + mono_total(mb) > deg) break;
      acc[mono_mul(ma, mb)] += ca * cb;
    }
  }
  std::vector<TruncatedSeries::Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) ts.emplace_back(m, std::move(c));
  return TruncatedSeries::from_terms(a.nvars_, deg, std::move(ts));
}

namespace {

// Shared power cache so repeated substitution reuses inner powers.
class Composer {
 public:
  Composer(const std::vector<TruncatedSeries>& inner, int out_degree)
      : inner_(inner), deg_(out_degree) {
    pows_.resize(inner.size());
  }

  const TruncatedSeries& inner_power(std::size_t i, int e) {
    auto& cache = pows_[i];
    if (cache.empty()) {
      cache.push_back(
          TruncatedSeries::constant(inner_[i].nvars(), deg_, mpq_class(1)));
      cache.push_back(inner_[i].truncated(deg_));
    }
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * cache[1]);
    return cache[static_cast<std::size_t>(e)];
  }

  // substitute into the terms of `outer` restricted to variables >= var
  TruncatedSeries eval(const std::vector<TruncatedSeries::Term>& terms,
                       int var, int outer_nvars) {
    const int inner_nvars = inner_[0].nvars();
    if (var == outer_nvars) {
      mpq_class c0(0);
      for (const auto& [m, c] : terms) c0 += c;  // all monomials are trivial here
      return TruncatedSeries::constant(inner_nvars, deg_, c0);
    }
    // group by the exponent of `var`
    TruncatedSeries result = TruncatedSeries::zero(inner_nvars, deg_);
    std::vector<std::pair<int, std::vector<TruncatedSeries::Term>>> groups;
    for (const auto& [m, c] : terms) {
      int e = mono_get(m, var);
      Mono stripped = mono_set(m, var, 0);
      auto it = std::find_if(groups.begin(), groups.end(),
                             [e](const auto& g) { return g.first == e; });
      if (it == groups.end()) {
        groups.push_back({e, {}});
        it = std::prev(groups.end());
      }
      it->second.emplace_back(stripped, c);
    }
    for (auto& [e, sub] : groups) {
      TruncatedSeries part = eval(sub, var + 1, outer_nvars);
      if (part.is_zero()) continue;
      if (e > 0) part = part * inner_power(static_cast<std::size_t>(var), e);
      result = result + part;
    }
    return result;
  }

 private:
  const std::vector<TruncatedSeries>& inner_;
  int deg_;
  std::vector<std::vector<TruncatedSeries>> pows_;
};

}  // namespace

TruncatedSeries compose(const TruncatedSeries& outer,
                        const std::vector<TruncatedSeries>& inner) {
  if (static_cast<int>(inner.size()) != outer.nvars())
    throw UnsupportedError("composition arity mismatch");
  int inner_vars = inner[0].nvars();
  int deg = outer.degree();
  for (const auto& g : inner) {
    if (g.nvars() != inner_vars)
      throw RingMismatchError("inner series variable counts differ");
    deg = std::min(deg, g.degree());
    if (sgn(g.constant_term()) != 0)
      throw UnsupportedError("inner series must have zero constant term");
  }
  Composer comp(inner, deg);
  std::vector<TruncatedSeries::Term> terms;
  for (const auto& t : outer.terms()) {
    if (mono_total(t.first) > deg) break;
    terms.push_back(t);
  }
  return comp.eval(terms, 0, outer.nvars());
}

std::vector<TruncatedSeries> compose(const std::vector<TruncatedSeries>& outer,
                                     const std::vector<TruncatedSeries>& inner) {
  std::vector<TruncatedSeries> out;
  out.reserve(outer.size());
  for (const auto& g : outer) out.push_back(compose(g, inner));
  return out;
}

std::vector<TruncatedSeries> identity_tuple(int nvars, int degree) {
  std::vector<TruncatedSeries> id;
  for (int i = 0; i < nvars; ++i)
    id.push_back(TruncatedSeries::variable(nvars, degree, i));
  return id;
}

std::vector<TruncatedSeries> invert_composition(
    const std::vector<TruncatedSeries>& L) {
  const int n = static_cast<int>(L.size());
  if (n == 0) return {};
  const int deg = L[0].degree();
  for (const auto& s : L)
    if (s.nvars() != n || s.degree() != deg)
      throw UnsupportedError("inversion needs n series in n variables");
  // linear part must be the identity
  for (int i = 0; i < n; ++i) {
    if (sgn(L[static_cast<std::size_t>(i)].constant_term()) != 0)
      throw UnsupportedError("inversion needs zero constant terms");
    for (int j = 0; j < n; ++j) {
      mpq_class want(i == j ? 1 : 0);
      if (L[static_cast<std::size_t>(i)].coefficient(mono_var(j)) != want)
        throw UnsupportedError("inversion needs an identity linear part");
    }
  }

  auto id = identity_tuple(n, deg);
  std::vector<TruncatedSeries> H;
  H.reserve(L.size());
  for (int i = 0; i < n; ++i)
    H.push_back(L[static_cast<std::size_t>(i)] - id[static_cast<std::size_t>(i)]);

  std::vector<TruncatedSeries> g = id;
  for (int pass = 0; pass < deg; ++pass) {
    std::vector<TruncatedSeries> hg = compose(H, g);
    std::vector<TruncatedSeries> next;
    next.reserve(g.size());
    for (int i = 0; i < n; ++i)
      next.push_back(id[static_cast<std::size_t>(i)] - hg[static_cast<std::size_t>(i)]);
    if (next == g) break;
    g = std::move(next);
  }
  return g;
}

}  // namespace unitroot
