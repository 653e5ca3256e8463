#include "fodlab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "fodlab/errors.hpp"

namespace fodlab {

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : e) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using Accumulator = std::unordered_map<Exponents, Rational, ExponentsHash>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (sgn(c) != 0) out.push_back(Term{e, std::move(c)});
  }
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return grlex_before(a.exponents, b.exponents); });
  return out;
}

}  // namespace

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool grlex_before(const Exponents& a, const Exponents& b) {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly Poly::normalize(std::vector<Term> raw, std::size_t arity) {
  Accumulator acc;
  for (Term& t : raw) {
    if (t.exponents.size() != arity) {
      throw ArityError("exponent vector of length " + std::to_string(t.exponents.size()) +
                       " in polynomial of arity " + std::to_string(arity));
    }
    auto [it, inserted] = acc.try_emplace(std::move(t.exponents), t.coefficient);
    if (!inserted) it->second += t.coefficient;
  }
  Poly p(arity);
  p.terms_ = drain(acc);
  return p;
}

Poly Poly::constant(std::size_t arity, const Rational& c) {
  Poly p(arity);
  if (sgn(c) != 0) p.terms_.push_back(Term{Exponents(arity, 0), c});
  return p;
}

Poly Poly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) {
    throw ArityError("variable x" + std::to_string(index) + " out of range for arity " +
                     std::to_string(arity));
  }
  Exponents e(arity, 0);
  e[index] = 1;
  Poly p(arity);
  p.terms_.push_back(Term{std::move(e), Rational(1)});
  return p;
}

Poly Poly::monomial(Exponents exponents, const Rational& c) {
  Poly p(exponents.size());
  if (sgn(c) != 0) p.terms_.push_back(Term{std::move(exponents), c});
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exponents) == 0);
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.front().exponents));
}

int Poly::degree_in(std::size_t first, std::size_t count) const {
  if (first + count > arity_) throw ArityError("variable block out of range");
  int best = -1;
  for (const Term& t : terms_) {
    int d = 0;
    for (std::size_t j = first; j < first + count; ++j) d += static_cast<int>(t.exponents[j]);
    best = std::max(best, d);
  }
  return best;
}

long Poly::as_variable() const {
  if (terms_.size() != 1 || terms_[0].coefficient != 1) return -1;
  const Exponents& e = terms_[0].exponents;
  long found = -1;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (e[j] != 1 || found >= 0) return -1;
    found = static_cast<long>(j);
  }
  return found;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (Term& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.arity_ != arity_) throw ArityError("adding polynomials of different arity");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && grlex_before(a->exponents, b->exponents))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || grlex_before(b->exponents, a->exponents)) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (sgn(c) != 0) merged.push_back(Term{std::move(a->exponents), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coefficient *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.arity_ != b.arity_) throw ArityError("multiplying polynomials of different arity");
  Poly out(a.arity_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplying by a monomial preserves the term order.
    const Poly& single = a.terms_.size() == 1 ? a : b;
    const Poly& other = a.terms_.size() == 1 ? b : a;
    const Term& s = single.terms_[0];
    out.terms_.reserve(other.terms_.size());
    for (const Term& t : other.terms_) {
      Exponents e = t.exponents;
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += s.exponents[j];
      out.terms_.push_back(Term{std::move(e), t.coefficient * s.coefficient});
    }
    return out;
  }
  Accumulator acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Exponents e(a.arity_);
  for (const Term& x : a.terms_) {
    for (const Term& y : b.terms_) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = x.exponents[j] + y.exponents[j];
      auto [it, inserted] = acc.try_emplace(e);
      it->second += x.coefficient * y.coefficient;
    }
  }
  out.terms_ = drain(acc);
  return out;
}

Poly Poly::pow(std::uint32_t k) const {
  Poly result = Poly::constant(arity_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly Poly::partial(std::size_t index) const {
  if (index >= arity_) {
    throw ArityError("partial derivative index " + std::to_string(index) +
                     " out of range for arity " + std::to_string(arity_));
  }
  Poly out(arity_);
  for (const Term& t : terms_) {
    if (t.exponents[index] == 0) continue;
    Term d = t;
    d.coefficient *= d.exponents[index];
    d.exponents[index] -= 1;
    out.terms_.push_back(std::move(d));
  }
  // Lowering the same exponent in every surviving term keeps them sorted.
  return out;
}

Poly Poly::substitute(std::span<const Poly> images, std::size_t result_arity) const {
  if (images.size() != arity_) {
    throw ArityError("substitution needs " + std::to_string(arity_) + " images, got " +
                     std::to_string(images.size()));
  }
  for (const Poly& q : images) {
    if (q.arity_ != result_arity) throw ArityError("substitution image of wrong arity");
  }

  // Renaming fast path: every image is a bare variable or zero.
  bool renaming = true;
  std::vector<long> target(arity_);
  for (std::size_t j = 0; j < arity_; ++j) {
    target[j] = images[j].is_zero() ? -2 : images[j].as_variable();
    if (target[j] == -1) {
      renaming = false;
      break;
    }
  }
  if (renaming) {
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const Term& t : terms_) {
      Exponents e(result_arity, 0);
      bool vanishes = false;
      for (std::size_t j = 0; j < arity_; ++j) {
        if (t.exponents[j] == 0) continue;
        if (target[j] < 0) {
          vanishes = true;
          break;
        }
        e[static_cast<std::size_t>(target[j])] += t.exponents[j];
      }
      if (!vanishes) raw.push_back(Term{std::move(e), t.coefficient});
    }
    return normalize(std::move(raw), result_arity);
  }

  std::vector<std::vector<Poly>> powers(arity_);
  auto power_of = [&](std::size_t j, std::uint32_t k) -> const Poly& {
    auto& cache = powers[j];
    if (cache.empty()) {
      cache.push_back(Poly::constant(result_arity, 1));
      cache.push_back(images[j]);
    }
    while (cache.size() <= k) cache.push_back(cache.back() * images[j]);
    return cache[k];
  };

  Accumulator acc;
  for (const Term& t : terms_) {
    Poly product = Poly::constant(result_arity, t.coefficient);
    for (std::size_t j = 0; j < arity_ && !product.is_zero(); ++j) {
      if (t.exponents[j] > 0) product = product * power_of(j, t.exponents[j]);
    }
    for (Term& pt : product.terms_) {
      auto [it, inserted] = acc.try_emplace(std::move(pt.exponents));
      it->second += pt.coefficient;
    }
  }
  Poly out(result_arity);
  out.terms_ = drain(acc);
  return out;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw ArityError("evaluation point has wrong length");
  return evaluate<Rational>(
      point, [](const Rational& c) { return c; }, Rational(0), Rational(1));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational c = t.coefficient;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    const bool is_unit = total_degree(t.exponents) == 0;
    bool wrote = false;
    if (c != 1 || is_unit) {
      out << c.get_str();
      wrote = true;
    }
    for (std::size_t j = 0; j < t.exponents.size(); ++j) {
      if (t.exponents[j] == 0) continue;
      if (wrote) out << "*";
      out << "x" << j;
      if (t.exponents[j] > 1) out << "^" << t.exponents[j];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace fodlab
