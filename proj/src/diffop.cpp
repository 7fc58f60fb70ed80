#include "unitroot/diffop.hpp"

#include <algorithm>
#include <numeric>

namespace unitroot {

EulerOperator EulerOperator::term(int k, int j, const mpz_class& c) {
  if (k < 0 || j < 0) throw UnsupportedError("operator powers must be >= 0");
  EulerOperator op;
  if (sgn(c) != 0) op.terms_[{k, j}] = c;
  return op;
}

mpz_class EulerOperator::coefficient(int k, int j) const {
  auto it = terms_.find({k, j});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int EulerOperator::max_tau_power() const {
  int k = 0;
  for (const auto& [key, c] : terms_) k = std::max(k, key.first);
  return k;
}

int EulerOperator::delta_degree() const {
  int j = 0;
  for (const auto& [key, c] : terms_) j = std::max(j, key.second);
  return j;
}

void EulerOperator::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = sgn(it->second) == 0 ? terms_.erase(it) : std::next(it);
}

EulerOperator& EulerOperator::operator+=(const EulerOperator& o) {
  for (const auto& [key, c] : o.terms_) terms_[key] += c;
  prune();
  return *this;
}

EulerOperator operator-(const EulerOperator& a, const EulerOperator& b) {
  EulerOperator r = a;
  for (const auto& [key, c] : b.terms_) r.terms_[key] -= c;
  r.prune();
  return r;
}

EulerOperator operator*(const EulerOperator& a, const EulerOperator& b) {
  // (tau^a delta^i)(tau^b delta^j) = tau^{a+b} (delta+b)^i delta^j
  EulerOperator r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const int i = ka.second, bshift = kb.first;
      // expand (delta + b)^i: coefficient of delta^l is C(i,l) b^{i-l}
      for (int l = i; l >= 0; --l) {
        mpz_class coef;
        mpz_bin_uiui(coef.get_mpz_t(), static_cast<unsigned long>(i),
                     static_cast<unsigned long>(l));
        mpz_class bp = 1;
        for (int t = 0; t < i - l; ++t) bp *= bshift;
        r.terms_[{ka.first + kb.first, l + kb.second}] += ca * cb * coef * bp;
      }
    }
  }
  r.prune();
  return r;
}

PowerSeries1D apply(const EulerOperator& op, const PowerSeries1D& g) {
  const int shift = op.max_tau_power();
  const int out_deg = std::max(-1, g.degree - shift);
  PowerSeries1D r(out_deg);
  for (const auto& [key, c] : op.terms()) {
    const auto& [k, j] = key;
    mpq_class cq(c);
    for (int n = 0; n + k <= out_deg && n <= g.degree; ++n) {
      if (sgn(g.c[static_cast<std::size_t>(n)]) == 0) continue;
      // delta^j tau^n = n^j tau^n
      mpz_class nj = 1;
      for (int t = 0; t < j; ++t) nj *= n;
      r.c[static_cast<std::size_t>(n + k)] +=
          cq * mpq_class(nj) * g.c[static_cast<std::size_t>(n)];
    }
  }
  return r;
}

EulerOperator honda_operator(const std::vector<mpq_class>& S, int N) {
  if (N < 1) throw UnsupportedError("N must be >= 1");
  if (S.empty()) throw UnsupportedError("S must be nonempty");
  EulerOperator prod = EulerOperator::constant(1);
  for (const auto& theta : S) {
    mpq_class nt = theta * N;
    if (nt.get_den() != 1)
      throw UnsupportedError("N*theta must be an integer");
    mpz_class k = nt.get_num();
    if (k < 1 || k > N - 1)
      throw UnsupportedError("each theta must be k/N with 1 <= k <= N-1");
    prod = prod * (EulerOperator::delta() + EulerOperator::constant(k));
  }
  EulerOperator lead = EulerOperator::tau(N) * prod;
  EulerOperator deltas = EulerOperator::constant(1);
  for (std::size_t i = 0; i < S.size(); ++i) deltas = deltas * EulerOperator::delta();
  return lead - deltas;
}

EulerOperator pf_operator_cyclic(int d) {
  if (d < 2) throw UnsupportedError("d must be >= 2");
  mpz_class lead = 1;
  for (int i = 0; i < d; ++i) lead *= -d;
  EulerOperator prod = EulerOperator::constant(1);
  for (int i = 1; i <= d - 1; ++i)
    prod = prod * (EulerOperator::delta() + EulerOperator::constant(i));
  EulerOperator left = EulerOperator::term(d, 0, lead) * prod;
  EulerOperator deltas = EulerOperator::constant(1);
  for (int i = 0; i < d - 1; ++i) deltas = deltas * EulerOperator::delta();
  return left - deltas;
}

EulerOperator pf_operator_1124() {
  EulerOperator prod = (EulerOperator::delta() + EulerOperator::constant(1)) *
                       (EulerOperator::delta() + EulerOperator::constant(3));
  return EulerOperator::term(4, 0, mpz_class(256)) * prod -
         EulerOperator::delta() * EulerOperator::delta();
}

namespace {

mpq_class eval_poly_at(const std::vector<mpz_class>& coeffs, int x) {
  // coeffs[j] is the delta^j coefficient
  mpq_class acc(0);
  mpq_class xp(1);
  for (const auto& c : coeffs) {
    acc += mpq_class(c) * xp;
    xp *= x;
  }
  return acc;
}

}  // namespace

PowerSeries1D normalized_solution(const EulerOperator& op, int D) {
  if (D < 0) throw UnsupportedError("D must be >= 0");
  // split into the k = 0 part -Q(delta) and the k = N part tau^N P(delta)
  int N = 0;
  for (const auto& [key, c] : op.terms())
    if (key.first != 0) {
      if (N == 0)
        N = key.first;
      else if (N != key.first)
        throw UnsupportedError("operator is not of two-shift type");
    }
  if (N == 0) throw UnsupportedError("operator has no tau shift");
  std::vector<mpz_class> P(static_cast<std::size_t>(op.delta_degree()) + 1),
      Q(static_cast<std::size_t>(op.delta_degree()) + 1);
  for (const auto& [key, c] : op.terms()) {
    if (key.first == 0)
      Q[static_cast<std::size_t>(key.second)] = -c;
    else
      P[static_cast<std::size_t>(key.second)] = c;
  }
  if (eval_poly_at(Q, 0) != 0)
    throw UnsupportedError("no normalized solution: Q(0) != 0");

  PowerSeries1D g(D);
  g.c[0] = 1;
  for (int m = 1; m <= D; ++m) {
    mpq_class qm = eval_poly_at(Q, m);
    mpq_class rhs = m >= N ? eval_poly_at(P, m - N) * g.c[static_cast<std::size_t>(m - N)]
                           : mpq_class(0);
    if (sgn(qm) == 0) {
      if (sgn(rhs) != 0)
        throw UnsupportedError(
            "degenerate recurrence: leading factor vanishes at degree " +
            std::to_string(m));
      g.c[static_cast<std::size_t>(m)] = 0;
      continue;
    }
    g.c[static_cast<std::size_t>(m)] = rhs / qm;
  }
  return g;
}

PowerSeries1D honda_solution(const std::vector<mpq_class>& S, int N, int D) {
  return normalized_solution(honda_operator(S, N), D);
}

AnnihilationReport annihilation_check(const EulerOperator& op,
                                      const PowerSeries1D& g) {
  PowerSeries1D r = apply(op, g);
  AnnihilationReport rep;
  rep.checked_degree = r.degree;
  rep.annihilated = true;
  for (int i = 0; i <= r.degree; ++i)
    if (sgn(r.c[static_cast<std::size_t>(i)]) != 0) {
      rep.annihilated = false;
      rep.first_failure = i;
      break;
    }
  return rep;
}

PowerSeries1D scale_variable(const PowerSeries1D& g, const mpq_class& factor) {
  PowerSeries1D r(g.degree);
  mpq_class cp(1);
  for (int i = 0; i <= g.degree; ++i) {
    r.c[static_cast<std::size_t>(i)] = g.c[static_cast<std::size_t>(i)] * cp;
    cp *= factor;
  }
  return r;
}

EulerOperator conjugate(const EulerOperator& op, const mpz_class& c) {
  EulerOperator r;
  for (const auto& [key, coeff] : op.terms()) {
    mpz_class cp;
    mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(),
               static_cast<unsigned long>(key.first));
    r += EulerOperator::term(key.first, key.second, coeff * cp);
  }
  return r;
}

HondaGroupLawResult honda_group_law(const std::vector<mpq_class>& S, int N,
                                    int D) {
  // hypothesis: {N theta} covers all reduced residues mod N
  std::vector<bool> covered(static_cast<std::size_t>(N), false);
  for (const auto& theta : S) {
    mpq_class nt = theta * N;
    if (nt.get_den() == 1 && nt.get_num() >= 0 && nt.get_num() < N)
      covered[static_cast<std::size_t>(nt.get_num().get_ui())] = true;
  }
  for (int k = 1; k < N; ++k)
    if (std::gcd(k, N) == 1 && !covered[static_cast<std::size_t>(k)])
      throw HypothesisError(
          "N*S must contain every reduced residue mod N (missing " +
          std::to_string(k) + ")");

  PowerSeries1D g = honda_solution(S, N, D);
  // formal integral: sum A(n) x^{Nn+1} / (Nn+1), as a 1-variable series
  std::vector<TruncatedSeries::Term> terms;
  for (int m = 0; m <= g.degree; ++m) {
    if (sgn(g.c[static_cast<std::size_t>(m)]) == 0) continue;
    if (m + 1 > D) break;
    terms.emplace_back(mono_var(0, m + 1),
                       g.c[static_cast<std::size_t>(m)] / (m + 1));
  }
  std::vector<TruncatedSeries> L{
      TruncatedSeries::from_terms(1, D, std::move(terms))};

  HondaGroupLawResult res{group_law_from_log(L, D), {}};
  std::vector<mpz_class> primes;
  for (const auto& comp : res.law.comp)
    for (const auto& [m, c] : comp.terms()) {
      mpz_class den = c.get_den();
      // trial division; denominators here are products of small primes, and a
      // surviving cofactor is reported whole so anomalies stay visible
      for (mpz_class q = 2; den > 1 && q <= 10000; ++q) {
        if (den % q == 0) {
          primes.push_back(q);
          while (den % q == 0) den /= q;
        }
      }
      if (den > 1) primes.push_back(den);
    }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  res.denominator_primes = std::move(primes);
  return res;
}

}  // namespace unitroot
