#include "toricmult/multiplier.hpp"

#include <algorithm>
#include <exception>

namespace toricmult {

void require_same_variety(const ToricVariety& x, const MonomialIdeal& a) {
  if (x.rays() != a.variety().rays()) throw Error("ideal and pair live on different varieties");
}

namespace {

void require_positive(const Rational& c) {
  if (c <= 0) throw Error("c must be positive");
}

HalfspaceSystem sigma_dual_rows(const ToricVariety& x) {
  HalfspaceSystem h(x.rank());
  for (const auto& v : x.rays()) h.add(v, 0);
  return h;
}

}  // namespace

bool multiplier_ideal_membership(const Pair& p, const MonomialIdeal& a, const Rational& c,
                                 const LatticeVector& m) {
  require_positive(c);
  require_same_variety(p.variety, a);
  if (!p.variety.sigma_dual().contains(m)) throw Error("exponent " + to_string(m) + " is not in the dual cone");
  return interior_contains(a.newton(), c, to_rational(m) + p.weight);
}

IdealResult multiplier_ideal(const Pair& p, const MonomialIdeal& a, const Rational& c) {
  require_positive(c);
  require_same_variety(p.variety, a);
  const ToricVariety& x = p.variety;
  HalfspaceSystem h = sigma_dual_rows(x);
  for (const auto& f : a.newton().facets) h.add(f.normal, c * f.b - dot(f.normal, p.weight), true);

  IdealResult r{{}, strict_to_lattice_closed(h), c, p.weight};
  r.generators = minimal_lattice_generators(r.defining_system, x.sigma_dual(), x.dual_hilbert_basis());
  if (r.generators.empty()) throw Error("multiplier_ideal: empty generator list");
  for (const auto& g : r.generators)
    if (!interior_contains(a.newton(), c, to_rational(g) + p.weight))
      throw Error("multiplier_ideal: generator " + to_string(g) + " fails the interior re-check");
  return r;
}

IdealResult multiplier_module(const ToricVariety& x, const MonomialIdeal& a, const Rational& c) {
  require_positive(c);
  require_same_variety(x, a);
  HalfspaceSystem h = sigma_dual_rows(x);
  for (const auto& f : a.newton().facets) h.add(f.normal, c * f.b, true);

  IdealResult r{{}, strict_to_lattice_closed(h), c, RationalVector(x.rank())};
  r.generators = minimal_lattice_generators(r.defining_system, x.sigma_dual(), x.dual_hilbert_basis());
  for (const auto& g : r.generators)
    for (const auto& v : x.rays())
      if (dot(g, v) <= 0) throw Error("multiplier_module: generator " + to_string(g) + " is not in omega");
  return r;
}

Threshold lct(const Pair& p, const MonomialIdeal& a) {
  require_same_variety(p.variety, a);
  Threshold t{true, 0};
  for (const auto& f : a.newton().facets) {
    const Rational nw = dot(f.normal, p.weight);
    if (f.b == 0) {
      if (nw <= 0) return Threshold{false, 0};
      continue;
    }
    const Rational q = nw / Rational(f.b);
    if (t.infinite || q < t.value) t = Threshold{false, q};
  }
  // A negative bound means no c > 0 gives the unit ideal.
  if (!t.infinite && t.value < 0) t.value = 0;
  return t;
}

JumpReport jumping_numbers(const Pair& p, const MonomialIdeal& a, const Rational& c_max) {
  require_positive(c_max);
  require_same_variety(p.variety, a);
  JumpReport rep;
  rep.c_max = c_max;

  // (n_f, m) >= 0 on σ∨, so z ranges over nonnegative integers only.
  for (const auto& f : a.newton().facets) {
    if (f.b <= 0) continue;
    const Rational nw = dot(f.normal, p.weight);
    const Rational b(f.b);
    for (Integer z = 0;; ++z) {
      Rational xi = (Rational(z) + nw) / b;
      if (xi > c_max) break;
      if (xi > 0) rep.candidates.push_back(xi);
    }
  }
  std::sort(rep.candidates.begin(), rep.candidates.end());
  rep.candidates.erase(std::unique(rep.candidates.begin(), rep.candidates.end()), rep.candidates.end());

  // Evaluation points: before[k] sits strictly between candidates k-1 and k.
  const std::size_t k = rep.candidates.size();
  std::vector<Rational> at(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    const Rational prev = i == 0 ? Rational(0) : rep.candidates[i - 1];
    at[2 * i] = (prev + rep.candidates[i]) / 2;
    at[2 * i + 1] = rep.candidates[i];
  }
  std::vector<std::vector<LatticeVector>> gens(at.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(at.size()); ++i) {
    try {
      gens[i] = multiplier_ideal(p, a, at[i]).generators;
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  rep.initial = k == 0 ? multiplier_ideal(p, a, c_max / 2).generators : gens[0];
  for (std::size_t i = 0; i < k; ++i)
    if (gens[2 * i] != gens[2 * i + 1]) rep.jumps.push_back({rep.candidates[i], gens[2 * i + 1]});
  return rep;
}

}  // namespace toricmult
