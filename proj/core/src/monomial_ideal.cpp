#include "hkforge/monomial_ideal.hpp"

#include <algorithm>

namespace hkforge {

namespace {

void check_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ring() != J.ring())
    throw PreconditionError("ideals live in different rings");
}

void check_dims(const Ring& ring, const std::vector<Exponent>& gens) {
  for (const auto& g : gens)
    if (g.size() != ring.nvars())
      throw PreconditionError("generator " + g.str() + " has wrong dimension for a ring in " +
                              std::to_string(ring.nvars()) + " variables");
}

std::vector<Exponent> normalize_gens(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> keep;
  keep.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
      if (j != i && gens[j].divides(gens[i])) dominated = true; // distinct after dedup
    if (!dominated) keep.push_back(gens[i]);
  }
  return keep;
}

} // namespace

bool MonomialIdeal::contains_monomial(const Exponent& e) const {
  if (e.size() != ring_.nvars())
    throw PreconditionError("exponent " + e.str() + " has wrong dimension");
  for (const auto& g : gens_)
    if (g.divides(e)) return true;
  return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
  check_same_ring(*this, other);
  for (const auto& g : other.gens_)
    if (!contains_monomial(g)) return false;
  return true;
}

std::string MonomialIdeal::str() const {
  if (is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    const Exponent& g = gens_[i];
    if (g.total_degree() == 0) {
      s += "1";
      continue;
    }
    bool first = true;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g[v] == 0) continue;
      if (!first) s += "*";
      first = false;
      s += ring_.var_names()[v];
      if (g[v] > 1) s += "^" + std::to_string(g[v]);
    }
  }
  return s + ")";
}

MonomialIdeal make_ideal(const Ring& ring, std::vector<Exponent> raw_gens) {
  check_dims(ring, raw_gens);
  return MonomialIdeal(ring, normalize_gens(std::move(raw_gens)));
}

MonomialIdeal make_ideal_presorted(const Ring& ring, std::vector<Exponent> gens) {
  check_dims(ring, gens);
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal zero_ideal(const Ring& ring) { return make_ideal(ring, {}); }

MonomialIdeal unit_ideal(const Ring& ring) {
  return make_ideal(ring, {Exponent(std::vector<std::int64_t>(ring.nvars(), 0))});
}

MonomialIdeal maximal_ideal(const Ring& ring) {
  std::vector<Exponent> gens;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    std::vector<std::int64_t> c(ring.nvars(), 0);
    c[i] = 1;
    gens.push_back(Exponent(std::move(c)));
  }
  return make_ideal(ring, std::move(gens));
}

namespace {

void enumerate_degree_k(std::size_t nvars, std::int64_t k, std::vector<std::int64_t>& cur,
                        std::size_t pos, std::vector<Exponent>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = k;
    out.push_back(Exponent(cur));
    return;
  }
  for (std::int64_t v = 0; v <= k; ++v) {
    cur[pos] = v;
    enumerate_degree_k(nvars, k - v, cur, pos + 1, out);
  }
}

} // namespace

MonomialIdeal m_power(const Ring& ring, std::int64_t k) {
  if (k < 0) throw PreconditionError("m_power: k must be non-negative");
  if (k == 0) return unit_ideal(ring);
  // C(k+n-1, n-1) generators
  const std::size_t n = ring.nvars();
  Int count = 1;
  for (std::size_t i = 1; i < n; ++i) count = count * (k + static_cast<std::int64_t>(i)) / static_cast<std::int64_t>(i);
  if (count > 2000000)
    throw PreconditionError("m_power: m^" + std::to_string(k) + " in " + std::to_string(n) +
                            " variables has " + count.str() + " generators; refusing to materialize");
  std::vector<Exponent> gens;
  gens.reserve(static_cast<std::size_t>(count));
  std::vector<std::int64_t> cur(n, 0);
  enumerate_degree_k(n, k, cur, 0, gens);
  std::sort(gens.begin(), gens.end());
  // degree-k monomials are already a minimal generating antichain
  return make_ideal_presorted(ring, std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  std::vector<Exponent> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return make_ideal(I.ring(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  if (I.is_zero() || J.is_zero()) return zero_ideal(I.ring());
  std::vector<Exponent> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& g : I.gens())
    for (const auto& h : J.gens())
      gens.push_back(g.lcm(h));
  return make_ideal(I.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  MonomialIdeal result = unit_ideal(I.ring()); // I : 0 = R
  bool first = true;
  for (const auto& w : J.gens()) {
    std::vector<Exponent> shifted;
    shifted.reserve(I.gens().size());
    for (const auto& g : I.gens()) shifted.push_back(g.minus_clamped(w));
    MonomialIdeal part = make_ideal(I.ring(), std::move(shifted));
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

MonomialIdeal bracket_power(const MonomialIdeal& I, std::int64_t q) {
  int e = 0;
  if (!I.ring().is_q_power(q, &e))
    throw PreconditionError("bracket power index " + std::to_string(q) + " is not a power of p = " +
                            std::to_string(I.ring().p()));
  std::vector<Exponent> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(g.scaled(q));
  // scaling preserves the antichain and the lex order
  return make_ideal_presorted(I.ring(), std::move(gens));
}

MonomialIdeal saturation(const MonomialIdeal& I) {
  MonomialIdeal m = maximal_ideal(I.ring());
  MonomialIdeal cur = I;
  for (;;) {
    MonomialIdeal next = colon(cur, m);
    if (next == cur) return cur;
    cur = next;
  }
}

} // namespace hkforge
