#include "fodlab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "fodlab/errors.hpp"
#include "fodlab/lens.hpp"
#include "fodlab/linearity.hpp"
#include "fodlab/rdc2cdc.hpp"
#include "fodlab/tangent.hpp"

namespace fodlab {

namespace {

using Check = std::function<std::optional<Counterexample>(Generator&)>;

struct LawDef {
  std::string law;
  std::string anchor;
  std::size_t trials;
  Check check;
};

// Runs the trials of one law in index order and keeps the first counterexample.
LawRecord run_law(const std::string& suite, const GenParams& params, std::uint64_t salt,
                  const LawDef& def) {
  LawRecord rec{suite, def.law, def.anchor, 0, true, std::nullopt};
  for (std::size_t t = 0; t < def.trials; ++t) {
    Generator gen(params, t, salt);
    ++rec.trials;
    std::optional<Counterexample> c;
    try {
      c = def.check(gen);
    } catch (const std::logic_error& e) {
      c = Counterexample{{}, std::string("exception: ") + e.what(), "no exception"};
    }
    if (c) {
      rec.passed = false;
      rec.counterexample = std::move(c);
      break;
    }
  }
  return rec;
}

AxiomReport run_laws(const std::string& suite, const GenParams& params, const std::vector<LawDef>& laws) {
  const auto start = std::chrono::steady_clock::now();
  AxiomReport report{suite, {}, 0};
  for (std::size_t i = 0; i < laws.size(); ++i) report.laws.push_back(run_law(suite, params, i + 1, laws[i]));
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<Counterexample> compare(const std::vector<std::string>& inputs, const PolyMap& lhs,
                                      const PolyMap& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Counterexample{inputs, to_literal(lhs), to_literal(rhs)};
}

// Objects are recorded as their identity maps and points as constant maps, so
// every input is a map literal.
std::string object_literal(std::size_t n) { return to_literal(identity(n)); }

std::string point_literal(const Vector& p) { return to_literal(constant_map(0, p)); }

std::vector<std::string> literals(std::initializer_list<const PolyMap*> maps) {
  std::vector<std::string> out;
  for (const PolyMap* m : maps) out.push_back(to_literal(*m));
  return out;
}

// delta f o <a, h + k> against the sum, and delta f o <a, 0> against 0, for d : base + fiber -> n.
std::optional<Counterexample> additive_in_fiber(const std::vector<std::string>& inputs, const PolyMap& d,
                                                std::size_t base, std::size_t fiber) {
  const std::size_t dims[] = {base, fiber, fiber};
  const PolyMap a = projection(dims, 0);
  const PolyMap h = projection(dims, 1);
  const PolyMap k = projection(dims, 2);
  if (auto c = compare(inputs, map_compose(d, map_pair(a, map_add(h, k))),
                       map_add(map_compose(d, map_pair(a, h)), map_compose(d, map_pair(a, k))))) {
    return c;
  }
  return compare(inputs, map_compose(d, map_pair(identity(base), map_zero(base, fiber))),
                 map_zero(base, d.cod()));
}

// CDC.1-5 over an object model, so the same laws serve dimensions and trivialized objects.
//   Obj object(Generator&); std::size_t dim(const Obj&); Obj product(const Obj&, const Obj&);
//   PolyMap derive(const PolyMap&, const Obj& a, const Obj& b); std::string describe(const Obj&).
template <class Model>
std::vector<LawDef> cdc_laws(const Model& model, std::size_t trials, const std::string& tag) {
  std::vector<LawDef> laws;
  laws.push_back({"CDC.1" + tag, "CDC.1 preserves sums and zero", trials, [model](Generator& g) {
    const auto a = model.object(g);
    const auto b = model.object(g);
    const std::size_t m = model.dim(a), n = model.dim(b);
    const PolyMap f = g.map(m, n);
    const PolyMap h = g.map(m, n);
    std::vector<std::string> in = literals({&f, &h});
    in.push_back(model.describe(a));
    in.push_back(model.describe(b));
    if (auto c = compare(in, model.derive(map_add(f, h), a, b),
                         map_add(model.derive(f, a, b), model.derive(h, a, b)))) {
      return c;
    }
    return compare(in, model.derive(map_zero(m, n), a, b), map_zero(2 * m, n));
  }});
  laws.push_back({"CDC.2" + tag, "CDC.2 additive in second component", trials, [model](Generator& g) {
    const auto a = model.object(g);
    const auto b = model.object(g);
    const std::size_t m = model.dim(a);
    const PolyMap f = g.map(m, model.dim(b));
    std::vector<std::string> in = literals({&f});
    in.push_back(model.describe(a));
    in.push_back(model.describe(b));
    return additive_in_fiber(in, model.derive(f, a, b), m, m);
  }});
  laws.push_back({"CDC.3" + tag, "CDC.3 identities and projections", trials, [model](Generator& g) {
    const auto a = model.object(g);
    const auto b = model.object(g);
    const std::size_t m = model.dim(a), n = model.dim(b);
    const auto ab = model.product(a, b);
    const std::vector<std::string> in{model.describe(a), model.describe(b)};
    if (auto c = compare(in, model.derive(identity(m), a, a), projection({m, m}, 1))) return c;
    const PolyMap pa = projection({m, n}, 0);
    const PolyMap pb = projection({m, n}, 1);
    const PolyMap second = projection({m + n, m + n}, 1);
    if (auto c = compare(in, model.derive(pa, ab, a), map_compose(pa, second))) return c;
    return compare(in, model.derive(pb, ab, b), map_compose(pb, second));
  }});
  laws.push_back({"CDC.4" + tag, "CDC.4 pairings", trials, [model](Generator& g) {
    const auto a = model.object(g);
    const auto b = model.object(g);
    const auto c2 = model.object(g);
    const std::size_t m = model.dim(a);
    const PolyMap f = g.map(m, model.dim(b));
    const PolyMap h = g.map(m, model.dim(c2));
    std::vector<std::string> in = literals({&f, &h});
    in.push_back(model.describe(a));
    return compare(in, model.derive(map_pair(f, h), a, model.product(b, c2)),
                   map_pair(model.derive(f, a, b), model.derive(h, a, c2)));
  }});
  laws.push_back({"CDC.5" + tag, "CDC.5 chain rule", trials, [model](Generator& g) {
    const auto a = model.object(g);
    const auto b = model.object(g);
    const auto c2 = model.object(g);
    const std::size_t m = model.dim(a), n = model.dim(b);
    const PolyMap f = g.map(m, n);
    const PolyMap h = g.map(n, model.dim(c2));
    std::vector<std::string> in = literals({&f, &h});
    in.push_back(model.describe(a));
    in.push_back(model.describe(b));
    in.push_back(model.describe(c2));
    const PolyMap carried = map_pair(map_compose(f, projection({m, m}, 0)), model.derive(f, a, b));
    return compare(in, model.derive(map_compose(h, f), a, c2),
                   map_compose(model.derive(h, b, c2), carried));
  }});
  return laws;
}

struct DimensionModel {
  ForwardOp delta;
  std::size_t object(Generator& g) const { return g.dim(); }
  std::size_t dim(std::size_t a) const { return a; }
  std::size_t product(std::size_t a, std::size_t b) const { return a + b; }
  PolyMap derive(const PolyMap& f, std::size_t, std::size_t) const { return delta(f); }
  std::string describe(std::size_t a) const { return object_literal(a); }
};

struct TrivializedModel {
  Trivialization object(Generator& g) const { return g.trivialization(g.dim(), true); }
  std::size_t dim(const Trivialization& t) const { return t.object; }
  Trivialization product(const Trivialization& a, const Trivialization& b) const {
    return lin_product(a, b);
  }
  PolyMap derive(const PolyMap& f, const Trivialization& a, const Trivialization& b) const {
    return dT_derivative(f, a, b).fib();
  }
  std::string describe(const Trivialization& t) const { return to_literal(t.fwd); }
};

}  // namespace

GcdcInstance default_gcdc_instance() {
  return {[](std::size_t a) { return a; }, [](std::size_t a) { return standard_monoid(a); },
          [](const PolyMap& f) { return jacobian_action(f); }};
}

AxiomReport cdc_axiom_suite(const GenParams& params, std::size_t trials, const ForwardOp& delta) {
  return run_laws("cdc", params, cdc_laws(DimensionModel{delta}, trials, ""));
}

AxiomReport rdc_axiom_suite(const GenParams& params, std::size_t trials, const ReverseOp& rho) {
  std::vector<LawDef> laws;
  laws.push_back({"RDC.1", "RDC.1 preserves sums and zero", trials, [rho](Generator& g) {
    const std::size_t m = g.dim(), n = g.dim();
    const PolyMap f = g.map(m, n);
    const PolyMap h = g.map(m, n);
    const auto in = literals({&f, &h});
    if (auto c = compare(in, rho(map_add(f, h)), map_add(rho(f), rho(h)))) return c;
    return compare(in, rho(map_zero(m, n)), map_zero(m + n, m));
  }});
  laws.push_back({"RDC.2", "RDC.2 additive in second component", trials, [rho](Generator& g) {
    const std::size_t m = g.dim(), n = g.dim();
    const PolyMap f = g.map(m, n);
    return additive_in_fiber(literals({&f}), rho(f), m, n);
  }});
  laws.push_back({"RDC.3", "RDC.3 identities and projections", trials, [rho](Generator& g) {
    const std::size_t m = g.dim(), n = g.dim();
    const std::vector<std::string> in{object_literal(m), object_literal(n)};
    if (auto c = compare(in, rho(identity(m)), projection({m, m}, 1))) return c;
    // rho(pi_A) = <pi_2, 0> and rho(pi_B) = <0, pi_2> on (A x B) x A and (A x B) x B.
    const std::size_t dims_a[] = {m, n, m};
    const std::size_t dims_b[] = {m, n, n};
    if (auto c = compare(in, rho(projection({m, n}, 0)),
                         map_pair(projection(dims_a, 2), map_zero(m + n + m, n)))) {
      return c;
    }
    if (auto c = compare(in, rho(projection({m, n}, 1)),
                         map_pair(map_zero(m + n + n, m), projection(dims_b, 2)))) {
      return c;
    }
    return compare(in, rho(terminal(n)), map_zero(n, n));
  }});
  laws.push_back({"RDC.4", "RDC.4 pairings", trials, [rho](Generator& g) {
    const std::size_t m = g.dim(), n = g.dim(), k = g.dim();
    const PolyMap f = g.map(m, n);
    const PolyMap h = g.map(m, k);
    const std::size_t dims[] = {m, n, k};
    const PolyMap pa = projection(dims, 0);
    const PolyMap rhs = map_add(map_compose(rho(f), map_pair(pa, projection(dims, 1))),
                                map_compose(rho(h), map_pair(pa, projection(dims, 2))));
    return compare(literals({&f, &h}), rho(map_pair(f, h)), rhs);
  }});
  laws.push_back({"RDC.5", "RDC.5 reverse chain rule", trials, [rho](Generator& g) {
    const std::size_t m = g.dim(), n = g.dim(), k = g.dim();
    const PolyMap f = g.map(m, n);
    const PolyMap h = g.map(n, k);
    const PolyMap p0 = projection({m, k}, 0);
    const PolyMap p1 = projection({m, k}, 1);
    const PolyMap rhs = map_compose(rho(f), map_pair(p0, map_compose(rho(h), map_pair(map_compose(f, p0), p1))));
    return compare(literals({&f, &h}), rho(map_compose(h, f)), rhs);
  }});
  laws.push_back({"span composition", "dual fibration composes by pullback", trials, [](Generator& g) {
    const SimpleObj x{g.dim(), g.dim()}, y{g.dim(), g.dim()}, z{g.dim(), g.dim()};
    const LensMor f(x, y, g.map(x.base, y.base), g.map(x.base + y.fiber, x.fiber));
    const LensMor h(y, z, g.map(y.base, z.base), g.map(y.base + z.fiber, y.fiber));
    const LensMor via_spans = dual_of_simple(span_compose(span_of_lens(h), span_of_lens(f)));
    const LensMor direct = lens_compose(h, f);
    const auto in = literals({&f.base(), &f.fib(), &h.base(), &h.fib()});
    if (auto c = compare(in, via_spans.base(), direct.base())) return c;
    return compare(in, via_spans.fib(), direct.fib());
  }});
  return run_laws("rdc", params, laws);
}

AxiomReport gcdc_axiom_suite(const GenParams& params, std::size_t trials, const GcdcInstance& inst) {
  // The instance must choose lawful monoids and a product-preserving lambda on objects.
  for (std::size_t a = 0; a <= 2 * params.max_dim; ++a) {
    const CommutativeMonoid m = inst.monoid(a);
    if (m.dim != inst.tangent_dim(a)) throw InstanceError("monoid does not live on lambda A");
    validate_monoid(m);
    if (inst.tangent_dim(2 * a) != 2 * inst.tangent_dim(a)) {
      throw InstanceError("lambda does not preserve products on objects");
    }
  }
  auto lam = inst.lambda;
  auto T = inst.tangent_dim;
  auto M = inst.monoid;
  std::vector<LawDef> laws;
  laws.push_back({"gCDC.1", "gCDC.1 preserves the fibre monoids", trials, [lam, T, M](Generator& g) {
    const std::size_t a = g.dim();
    const std::size_t la = T(a);
    const CommutativeMonoid ma = M(a);
    const CommutativeMonoid mla = M(la);
    const std::vector<std::string> in{object_literal(a)};
    const PolyMap second = projection({2 * la, T(2 * la)}, 1);
    if (auto c = compare(in, lam(ma.plus), map_compose(mla.plus, second))) return c;
    return compare(in, lam(ma.zero), map_compose(mla.zero, terminal(T(0))));
  }});
  laws.push_back({"gCDC.2", "gCDC.2 monoid map in second component", trials, [lam, T, M](Generator& g) {
    const std::size_t a = g.dim(), b = g.dim();
    const PolyMap f = g.map(a, b);
    const SimpleMor m({a, T(a)}, {b, T(b)}, f, lam(f));
    auto fibre = [&](std::size_t x) {
      const CommutativeMonoid cm = M(x);
      const std::size_t dims[] = {x, T(x), T(x)};
      return MonoidInFibre{x, T(x), map_compose(cm.zero, terminal(x)),
                           map_compose(cm.plus, map_pair(projection(dims, 1), projection(dims, 2)))};
    };
    if (splus_check({m, fibre(a), fibre(b)})) return std::optional<Counterexample>{};
    return std::optional<Counterexample>(Counterexample{literals({&f}), to_literal(lam(f)), "monoid map"});
  }});
  laws.push_back({"gCDC.3", "gCDC.3 identities and projections", trials, [lam, T](Generator& g) {
    const std::size_t a = g.dim(), b = g.dim();
    const std::vector<std::string> in{object_literal(a), object_literal(b)};
    if (auto c = compare(in, lam(identity(a)), projection({a, T(a)}, 1))) return c;
    const PolyMap second = projection({a + b, T(a + b)}, 1);
    const PolyMap pa = projection({T(a), T(b)}, 0);
    const PolyMap pb = projection({T(a), T(b)}, 1);
    if (auto c = compare(in, lam(projection({a, b}, 0)), map_compose(pa, second))) return c;
    if (auto c = compare(in, lam(projection({a, b}, 1)), map_compose(pb, second))) return c;
    // A = 1 case: !_B is pi_A on 1 x B, so lambda(!_B) = pi_{lambda 1} o pi_1.
    const PolyMap bang = map_compose(projection({T(0), T(b)}, 0), projection({b, T(b)}, 1));
    return compare(in, lam(terminal(b)), bang);
  }});
  laws.push_back({"gCDC.4", "gCDC.4 pairings", trials, [lam](Generator& g) {
    const std::size_t a = g.dim();
    const PolyMap f = g.map(a, g.dim());
    const PolyMap h = g.map(a, g.dim());
    return compare(literals({&f, &h}), lam(map_pair(f, h)), map_pair(lam(f), lam(h)));
  }});
  laws.push_back({"gCDC.5", "gCDC.5 chain rule", trials, [lam, T](Generator& g) {
    const std::size_t a = g.dim(), b = g.dim();
    const PolyMap f = g.map(a, b);
    const PolyMap h = g.map(b, g.dim());
    const PolyMap carried = map_pair(map_compose(f, projection({a, T(a)}, 0)), lam(f));
    return compare(literals({&f, &h}), lam(map_compose(h, f)), map_compose(lam(h), carried));
  }});
  return run_laws("gcdc", params, laws);
}

AxiomReport tangent_axiom_suite(const GenParams& params, std::size_t trials) {
  std::vector<LawDef> laws;
  laws.push_back({"tau functoriality", "tau(g o f) = tau g o tau f, tau(id) = id", trials, [](Generator& g) {
    const std::size_t a = g.dim(), b = g.dim();
    const PolyMap f = g.map(a, b);
    const PolyMap h = g.map(b, g.dim());
    const auto in = literals({&f, &h});
    if (auto c = compare(in, tangent_on_map(identity(a)).total(), identity(2 * a))) return c;
    return compare(in, tangent_on_map(map_compose(h, f)).total(),
                   map_compose(tangent_on_map(h).total(), tangent_on_map(f).total()));
  }});
  laws.push_back({"p naturality", "p o tau f = f o p", trials, [](Generator& g) {
    const std::size_t a = g.dim(), b = g.dim();
    const PolyMap f = g.map(a, b);
    return compare(literals({&f}), map_compose(projection({b, b}, 0), tangent_on_map(f).total()),
                   map_compose(f, projection({a, a}, 0)));
  }});
  laws.push_back({"zero naturality", "tau f o 0 = 0 o f", trials, [](Generator& g) {
    const std::size_t a = g.dim(), b = g.dim();
    const PolyMap f = g.map(a, b);
    return compare(literals({&f}), map_compose(tangent_on_map(f).total(), tangent_section_T(a).zero),
                   map_compose(tangent_section_T(b).zero, f));
  }});
  laws.push_back({"plus naturality", "tau f o + = + o (tau f x_f tau f)", trials, [](Generator& g) {
    const std::size_t a = g.dim(), b = g.dim();
    const PolyMap f = g.map(a, b);
    const BundleMor tf = tangent_on_map(f);
    return compare(literals({&f}), map_compose(tf.total(), tangent_section_T(a).plus),
                   map_compose(tangent_section_T(b).plus, bundle_power_map(tf, 2).total()));
  }});
  laws.push_back({"fibrewise monoid", "T(A) is an additive bundle", trials, [](Generator& g) {
    const std::size_t a = g.dim(0);
    const AdditiveBundle t = tangent_section_T(a);
    const std::vector<std::string> in{object_literal(a)};
    try {
      validate_additive_bundle(t);
    } catch (const InstanceError& e) {
      return std::optional<Counterexample>(Counterexample{in, e.what(), "additive bundle"});
    }
    if (dom_plus(t) != 2 * a) {
      return std::optional<Counterexample>(Counterexample{in, std::to_string(dom_plus(t)), std::to_string(2 * a)});
    }
    return compare(in, map_compose(t.bundle.projection(), t.zero), identity(a));
  }});
  for (std::size_t n : {2u, 3u}) {
    laws.push_back({"pullback power " + std::to_string(n), "tau preserves pullback powers of p", trials,
                    [n](Generator& g) -> std::optional<Counterexample> {
      const std::size_t b = g.dim();
      const std::vector<std::string> in{object_literal(b)};
      const PolyMap cmp = pullback_power_comparison(b, n);
      const std::optional<std::vector<std::size_t>> perm = as_permutation(cmp);
      if (!perm) return Counterexample{in, to_literal(cmp), "a coordinate permutation"};
      const PolyMap inv = permutation_map(inverse_permutation(*perm));
      if (auto c = compare(in, map_compose(inv, cmp), identity(cmp.dom()))) return c;
      if (auto c = compare(in, map_compose(cmp, inv), identity(cmp.dom()))) return c;
      // The comparison is the map induced by the cone shuffle o tau(pi_i).
      const PullbackPower source = pullback_power({b, b}, n);
      const PullbackPower target = pullback_power({2 * b, 2 * b}, n);
      for (std::size_t i = 0; i < n; ++i) {
        const PolyMap cone = map_compose(tangent_shuffle(b, b), tangent_on_map(source.projections[i].total()).total());
        if (auto c = compare(in, map_compose(target.projections[i].total(), cmp), cone)) return c;
      }
      return std::nullopt;
    }});
  }
  laws.push_back({"pullback preservation", "tau preserves bundle pullbacks", trials, [](Generator& g) {
    const std::size_t c = g.dim(), b = g.dim(), fdim = g.dim();
    const PolyMap h = g.map(c, b);
    const BundlePullback pb = bundle_pullback(h, {b, fdim});
    const PolyMap unshuffle_c = permutation_map(inverse_permutation(*as_permutation(tangent_shuffle(c, fdim))));
    const PolyMap lhs = map_compose(tangent_shuffle(b, fdim),
                                    map_compose(tangent_on_map(pb.cartesian.total()).total(), unshuffle_c));
    const BundlePullback tpb = bundle_pullback(tangent_on_map(h).total(), {2 * b, 2 * fdim});
    return compare(literals({&h}), lhs, tpb.cartesian.total());
  }});
  laws.push_back({"tau via T", "tau = dom+ o T", trials, [](Generator& g) {
    const std::size_t a = g.dim(), b = g.dim();
    const PolyMap f = g.map(a, b);
    const SimpleMor d = forward_section_D(f);
    const PolyMap direct = map_pair(map_compose(d.base(), projection({a, a}, 0)), d.fib());
    return compare(literals({&f}), tangent_on_map(f).total(), direct);
  }});
  laws.push_back({"reverse tangent section", "reverse tangent section = R", trials,
                  [](Generator& g) -> std::optional<Counterexample> {
    const std::size_t a = g.dim(), b = g.dim();
    const PolyMap f = g.map(a, b);
    const BundleSpan span = reverse_tangent_span(f);
    const PolyMap fib = map_compose(projection({a, a}, 1), span.vertical.total());
    const LensMor r = reverse_section_R(f);
    const auto in = literals({&f});
    if (!is_additive_in_fiber(fib, a, b)) return Counterexample{in, to_literal(fib), "additive"};
    if (auto c = compare(in, span.cartesian.base(), r.base())) return c;
    return compare(in, fib, r.fib());
  }});
  return run_laws("tangent", params, laws);
}

AxiomReport dT_axiom_suite(const GenParams& params, std::size_t trials) {
  std::vector<LawDef> laws = cdc_laws(TrivializedModel{}, trials, " via D_T");
  laws.push_back({"round trip", "lin_from_diff and diff_from_lin are inverse", trials,
                  [](Generator& g) -> std::optional<Counterexample> {
    const std::size_t b = g.dim();
    const Trivialization t = g.trivialization(b, true);
    const CommutativeMonoid m = standard_monoid(b);
    const DifferentialObject d = diff_from_lin(t, m);
    const std::vector<std::string> in{to_literal(t.fwd)};
    const Trivialization back = lin_from_diff(d);
    if (auto c = compare(in, back.fwd, t.fwd)) return c;
    if (auto c = compare(in, back.inv, t.inv)) return c;
    if (!(diff_from_lin(back, m) == d)) return Counterexample{in, to_literal(diff_from_lin(back, m).phat), to_literal(d.phat)};
    const AxiomReport r = check_differential_object(d);
    for (const LawRecord& l : r.laws) {
      if (!l.passed) return l.counterexample;
    }
    return std::nullopt;
  }});
  laws.push_back({"linear map agreement", "T-linear iff differential-linear", trials,
                  [](Generator& g) -> std::optional<Counterexample> {
    const std::size_t a = g.dim(), b = g.dim();
    const Trivialization ta = g.trivialization(a, g.below(2) == 0);
    const Trivialization tb = g.trivialization(b, g.below(2) == 0);
    // Half the maps are homogeneous linear so both verdicts occur.
    const PolyMap f = g.below(2) == 0 ? g.map(a, b) : g.fiber_linear_map(0, a, b);
    const CommutativeMonoid ma = standard_monoid(a), mb = standard_monoid(b);
    const DifferentialObject da{a, map_compose(projection({a, a}, 1), ta.fwd), ma.zero, ma.plus};
    const DifferentialObject db{b, map_compose(projection({b, b}, 1), tb.fwd), mb.zero, mb.plus};
    const bool via_diff = is_diff_linear_map(f, da, db);
    const bool via_lin = is_linear_map(f, ta, tb);
    if (via_diff == via_lin) return std::nullopt;
    return Counterexample{{to_literal(f), to_literal(ta.fwd), to_literal(tb.fwd)},
                          via_diff ? "true" : "false", via_lin ? "true" : "false"};
  }});
  return run_laws("dT", params, laws);
}

namespace {

LensMor random_cla_lens(Generator& g, const SimpleObj& x, const SimpleObj& y) {
  return LensMor(x, y, g.map(x.base, y.base), g.fiber_linear_map(x.base, y.fiber, x.fiber));
}

}  // namespace

AxiomReport rdc2cdc_suite(const GenParams& params, std::size_t trials) {
  std::vector<LawDef> laws;
  laws.push_back({"pipeline agreement", "Phi o L(R) o R = closed form = D", trials,
                  [](Generator& g) -> std::optional<Counterexample> {
    const PolyMap f = g.map(g.dim(), g.dim());
    const auto in = literals({&f});
    const SimpleMor pipeline = rdc_to_cdc(f);
    const SimpleMor closed = rdc_to_cdc_closed(f);
    const SimpleMor direct = forward_section_D(f);
    if (auto c = compare(in, pipeline.fib(), closed.fib())) return c;
    if (auto c = compare(in, closed.fib(), direct.fib())) return c;
    return compare(in, pipeline.base(), direct.base());
  }});
  laws.push_back({"lift functoriality", "L(R) preserves composition", trials, [](Generator& g) {
    const SimpleObj x{g.dim(), g.dim()}, y{g.dim(), g.dim()}, z{g.dim(), g.dim()};
    const LensMor f = random_cla_lens(g, x, y);
    const LensMor h = random_cla_lens(g, y, z);
    const Lens2Mor lhs = lift_R(lens_compose(h, f));
    const Lens2Mor rhs = lens2_compose(lift_R(h), lift_R(f));
    const auto in = literals({&f.base(), &f.fib(), &h.base(), &h.fib()});
    if (auto c = compare(in, lhs.outer().fib(), rhs.outer().fib())) return c;
    if (auto c = compare(in, lhs.inner().base(), rhs.inner().base())) return c;
    return compare(in, lhs.inner().fib(), rhs.inner().fib());
  }});
  laws.push_back({"phi functoriality", "Phi preserves identities and composition", trials, [](Generator& g) {
    const SimpleObj x{g.dim(), g.dim()}, y{g.dim(), g.dim()}, z{g.dim(), g.dim()};
    const LensMor f = random_cla_lens(g, x, y);
    const LensMor h = random_cla_lens(g, y, z);
    const Lens2Mor lf = lift_R(f);
    const Lens2Mor lh = lift_R(h);
    const auto in = literals({&f.base(), &f.fib(), &h.base(), &h.fib()});
    const SimpleMor id = phi(lens2_identity(lf.src()));
    if (auto c = compare(in, id.fib(), simple_identity(phi(lf.src())).fib())) return c;
    return compare(in, phi(lens2_compose(lh, lf)).fib(), simple_compose(phi(lh), phi(lf)).fib());
  }});
  laws.push_back({"phi CLA", "Phi preserves products and sums", trials, [](Generator& g) {
    const Lens2Obj x{{g.dim(), g.dim()}, {g.dim(), g.dim()}};
    const Lens2Obj y{{g.dim(), g.dim()}, {g.dim(), g.dim()}};
    const Lens2Product p = lens2_product(x, y);
    const SimpleProduct sp = simple_product(phi(x), phi(y));
    const std::vector<std::string> in{object_literal(x.outer.base), object_literal(x.inner.fiber),
                                      object_literal(y.outer.base), object_literal(y.inner.fiber)};
    if (auto c = compare(in, phi(p.first).fib(), sp.first.fib())) return c;
    if (auto c = compare(in, phi(p.second).fib(), sp.second.fib())) return c;
    // Sums of lifted lenses between the same objects.
    const SimpleObj a{g.dim(), g.dim()}, b{g.dim(), g.dim()};
    const Lens2Mor m1 = lift_R(random_cla_lens(g, a, b));
    const Lens2Mor m2 = lift_R(random_cla_lens(g, a, b));
    const SimpleMor lhs = phi(lens2_add(m1, m2));
    const SimpleMor rhs = simple_add(phi(m1), phi(m2));
    if (auto c = compare(in, lhs.base(), rhs.base())) return c;
    return compare(in, lhs.fib(), rhs.fib());
  }});
  for (LawDef& law : cdc_laws(DimensionModel{[](const PolyMap& f) { return rdc_to_cdc(f).fib(); }}, trials,
                               " on RDC image")) {
    laws.push_back(std::move(law));
  }
  return run_laws("rdc2cdc", params, laws);
}

AxiomReport oracle_suite(const GenParams& params, std::size_t trials) {
  std::vector<LawDef> laws;
  laws.push_back({"dual numbers", "dual-number oracle equals delta f", trials, [](Generator& g) {
    const std::size_t m = g.dim();
    const PolyMap f = g.map(m, g.dim());
    const Vector p = g.vector(m);
    Vector pv = p;
    const Vector v = g.vector(m);
    pv.insert(pv.end(), v.begin(), v.end());
    const Vector oracle = eval_dual(f, p, v).second;
    const Vector exact = eval_point(jacobian_action(f), pv);
    if (oracle == exact) return std::optional<Counterexample>{};
    return std::optional<Counterexample>(
        Counterexample{{to_literal(f), point_literal(p), point_literal(v)}, point_literal(oracle), point_literal(exact)});
  }});
  laws.push_back({"transpose identity", "<delta f(a,v), w> = <v, rho f(a,w)>", trials, [](Generator& g) {
    const std::size_t m = g.dim(), n = g.dim();
    const PolyMap f = g.map(m, n);
    const Vector a = g.vector(m), v = g.vector(m), w = g.vector(n);
    Vector av = a, aw = a;
    av.insert(av.end(), v.begin(), v.end());
    aw.insert(aw.end(), w.begin(), w.end());
    const Vector dv = eval_point(jacobian_action(f), av);
    const Vector rw = eval_point(jacobian_transpose_action(f), aw);
    Rational lhs = 0, rhs = 0;
    for (std::size_t i = 0; i < n; ++i) lhs += dv[i] * w[i];
    for (std::size_t j = 0; j < m; ++j) rhs += v[j] * rw[j];
    if (lhs == rhs) return std::optional<Counterexample>{};
    return std::optional<Counterexample>(Counterexample{
        {to_literal(f), point_literal(a), point_literal(v), point_literal(w)}, to_string(lhs), to_string(rhs)});
  }});
  // Points in [-1, 1]^n and directions of infinity-norm at most 1/8 keep the
  // forward-difference truncation error of the sampled maps below 1e-3 at h = 1e-4.
  laws.push_back({"finite differences", "forward difference within 1e-3 at h = 1e-4", std::max<std::size_t>(1, trials / 2),
                  [](Generator& g) {
    const std::size_t m = g.dim();
    const PolyMap f = g.map(m, g.dim());
    std::vector<double> p(m), v(m);
    for (double& x : p) x = g.uniform(-1, 1);
    for (double& x : v) x = g.uniform(-0.125, 0.125);
    const double err = fd_error(f, p, v, 1e-4);
    if (err <= 1e-3) return std::optional<Counterexample>{};
    // Doubles convert to rationals exactly, so the probe is replayable.
    const Vector pq(p.begin(), p.end()), vq(v.begin(), v.end());
    return std::optional<Counterexample>(
        Counterexample{{to_literal(f), point_literal(pq), point_literal(vq)}, std::to_string(err), "<= 1e-3"});
  }});
  return run_laws("oracle", params, laws);
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"cdc", "rdc", "gcdc", "tangent", "dT", "rdc2cdc", "oracle"};
  return ids;
}

std::size_t default_trials(const std::string& suite) {
  if (suite == "tangent" || suite == "dT") return 100;
  return 200;
}

AxiomReport run_suite(const std::string& suite, const GenParams& params, std::optional<std::size_t> trials) {
  const std::size_t n = trials.value_or(default_trials(suite));
  if (suite == "cdc") return cdc_axiom_suite(params, n);
  if (suite == "rdc") return rdc_axiom_suite(params, n);
  if (suite == "gcdc") return gcdc_axiom_suite(params, n);
  if (suite == "tangent") return tangent_axiom_suite(params, n);
  if (suite == "dT") return dT_axiom_suite(params, n);
  if (suite == "rdc2cdc") return rdc2cdc_suite(params, n);
  if (suite == "oracle") return oracle_suite(params, n);
  throw UnknownSuiteError("unknown suite '" + suite + "'");
}

std::vector<AxiomReport> run(const std::string& suite, const GenParams& params, std::optional<std::size_t> trials) {
  std::vector<AxiomReport> out;
  if (suite == "all") {
    for (const std::string& id : suite_ids()) out.push_back(run_suite(id, params, trials));
  } else {
    out.push_back(run_suite(suite, params, trials));
  }
  return out;
}

}  // namespace fodlab
