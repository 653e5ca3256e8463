#include "fodlab/gen.hpp"

#include <algorithm>
#include <cmath>

#include "fodlab/errors.hpp"

namespace fodlab {

Generator::Generator(const GenParams& params, std::uint64_t trial, std::uint64_t salt)
    : params_(params) {
  std::seed_seq seq{static_cast<std::uint32_t>(params.seed), static_cast<std::uint32_t>(params.seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
  rng_.seed(seq);
}

std::size_t Generator::below(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

std::size_t Generator::dim(std::size_t lo) {
  const std::size_t hi = std::max(lo, params_.max_dim);
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Rational Generator::rational() {
  const long bound = std::max(1L, params_.coeff_bound);
  const long num = std::uniform_int_distribution<long>(-bound, bound)(rng_);
  const long den = std::uniform_int_distribution<long>(1, bound)(rng_);
  return make_rational(num, den);
}

Rational Generator::nonzero_rational() {
  Rational q = rational();
  while (q == 0) q = rational();
  return q;
}

Vector Generator::vector(std::size_t n) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational());
  return v;
}

double Generator::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Poly Generator::poly(std::size_t arity) {
  const std::size_t terms = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, params_.max_terms))(rng_);
  std::vector<Term> raw;
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(arity, 0);
    if (arity > 0) {
      const std::uint32_t d = std::uniform_int_distribution<std::uint32_t>(0, params_.max_degree)(rng_);
      for (std::uint32_t k = 0; k < d; ++k) ++e[below(arity)];
    }
    raw.push_back({std::move(e), nonzero_rational()});
  }
  return Poly::normalize(std::move(raw), arity);
}

PolyMap Generator::map(std::size_t dom, std::size_t cod) {
  const std::size_t shape = below(16);
  if (shape == 0) return map_zero(dom, cod);
  if (shape == 1 && dom > 0 && params_.max_degree >= 1) {
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < cod; ++i) comps.push_back(Poly::variable(dom, below(dom)));
    return PolyMap(dom, std::move(comps));
  }
  if (shape == 2) return constant_map(dom, vector(cod));
  std::vector<Poly> comps;
  comps.reserve(cod);
  for (std::size_t i = 0; i < cod; ++i) comps.push_back(poly(dom));
  return PolyMap(dom, std::move(comps));
}

PolyMap Generator::fiber_linear_map(std::size_t base_dim, std::size_t fiber_dim, std::size_t cod) {
  const std::size_t dom = base_dim + fiber_dim;
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < cod; ++i) {
    Poly acc = Poly::zero(dom);
    for (std::size_t j = 0; j < fiber_dim; ++j) {
      if (below(2) == 0) continue;
      const Poly coeff = poly(base_dim).substitute(projection({base_dim, fiber_dim}, 0).components(), dom);
      acc += coeff * Poly::variable(dom, base_dim + j);
    }
    comps.push_back(std::move(acc));
  }
  return PolyMap(dom, std::move(comps));
}

Matrix Generator::invertible_matrix(std::size_t n) {
  for (;;) {
    Matrix m(n, std::vector<Rational>(n));
    for (auto& row : m) {
      for (auto& x : row) x = make_rational(static_cast<long>(below(7)) - 3, static_cast<long>(below(3)) + 1);
    }
    if (invert_matrix(m)) return m;
  }
}

Trivialization Generator::trivialization(std::size_t n, bool additive) {
  const Matrix m = invertible_matrix(n);
  const Trivialization linear = Trivialization::from_matrix(m);
  if (additive) return linear;
  // Add a base-dependent offset c(b), nonzero in at least one coordinate.
  PolyMap offset = map(n, n);
  while (offset == map_zero(n, n)) offset = map(n, n);
  const PolyMap pb = projection({n, n}, 0);
  const PolyMap fiber = map_add(map_compose(projection({n, n}, 1), linear.fwd), map_compose(offset, pb));
  return Trivialization::from_forward(map_pair(pb, fiber));
}

PolyMap gen_polymap(const GenParams& params, std::uint64_t trial, std::size_t dom, std::size_t cod) {
  return Generator(params, trial).map(dom, cod);
}

double fd_error(const PolyMap& f, const std::vector<double>& point, const std::vector<double>& direction,
                double h) {
  if (point.size() != f.dom() || direction.size() != f.dom()) {
    throw DimensionError("point/direction length does not match domain");
  }
  std::vector<double> moved(point);
  for (std::size_t j = 0; j < moved.size(); ++j) moved[j] += h * direction[j];
  const std::vector<double> at = eval_point_double(f, point);
  const std::vector<double> ahead = eval_point_double(f, moved);
  std::vector<double> pv(point);
  pv.insert(pv.end(), direction.begin(), direction.end());
  const std::vector<double> exact = eval_point_double(jacobian_action(f), pv);
  double worst = 0;
  for (std::size_t i = 0; i < f.cod(); ++i) {
    worst = std::max(worst, std::abs((ahead[i] - at[i]) / h - exact[i]));
  }
  return worst;
}

bool fd_check(const PolyMap& f, const std::vector<double>& point, const std::vector<double>& direction,
              double h, double tol) {
  return fd_error(f, point, direction, h) <= tol;
}

}  // namespace fodlab
