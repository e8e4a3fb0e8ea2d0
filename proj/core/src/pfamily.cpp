#include "hkforge/pfamily.hpp"

#include <algorithm>

namespace hkforge {

std::string family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::frobenius: return "frobenius";
    case FamilyKind::saturated_frobenius: return "saturated";
    case FamilyKind::colon: return "colon";
    case FamilyKind::scaled: return "scaled";
    case FamilyKind::custom: return "custom";
  }
  return "?";
}

PFamily::PFamily(Ring ring, FamilyKind kind, std::function<MonomialIdeal(int)> eval,
                 bool weakly_only, std::optional<Exponent> weak_witness)
    : ring_(std::move(ring)), kind_(kind), fn_(std::move(eval)), weakly_only_(weakly_only),
      weak_witness_(std::move(weak_witness)), cache_(std::make_shared<Cache>()) {}

MonomialIdeal PFamily::eval(int e) const {
  if (e < 0) throw PreconditionError("family index e must be non-negative");
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->terms.find(e);
    if (it != cache_->terms.end()) return it->second;
  }
  MonomialIdeal term = fn_(e); // may be computed twice concurrently; same value
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, ignore] = cache_->terms.emplace(e, std::move(term));
  return it->second;
}

PFamily frobenius_family(const MonomialIdeal& I) {
  Ring ring = I.ring();
  return PFamily(ring, FamilyKind::frobenius,
                 [I](int e) { return bracket_power(I, I.ring().q_pow(e)); });
}

PFamily saturated_family(const PFamily& F) {
  return PFamily(F.ring(), FamilyKind::saturated_frobenius,
                 [F](int e) { return saturation(F.eval(e)); },
                 F.weakly_only(), F.declared_witness());
}

PFamily colon_family(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ring() != J.ring()) throw PreconditionError("ideals live in different rings");
  if (J.is_zero()) throw PreconditionError("colon family needs a nonzero second ideal");
  // multiplier (p-1) * componentwise max of gens(J) witnesses the weak axiom
  std::vector<std::int64_t> maxg(J.ring().nvars(), 0);
  for (const auto& g : J.gens())
    for (std::size_t i = 0; i < maxg.size(); ++i) maxg[i] = std::max(maxg[i], g[i]);
  Exponent witness = Exponent(std::move(maxg)).scaled(J.ring().p() - 1);
  return PFamily(I.ring(), FamilyKind::colon,
                 [I, J](int e) { return colon(bracket_power(I, I.ring().q_pow(e)), J); },
                 /*weakly_only=*/true, witness);
}

PFamily scaled_family(const PFamily& F, const Exponent& shift) {
  if (shift.size() != F.ring().nvars()) throw PreconditionError("shift exponent dimension mismatch");
  return PFamily(F.ring(), FamilyKind::scaled,
                 [F, shift](int e) {
                   std::vector<Exponent> gens;
                   for (const auto& g : F.eval(e).gens()) gens.push_back(g.plus(shift));
                   return make_ideal(F.ring(), std::move(gens));
                 },
                 F.weakly_only(), F.declared_witness());
}

PFamily custom_family(const Ring& ring, const std::map<int, MonomialIdeal>& terms,
                      bool require_valid) {
  if (terms.empty()) throw PreconditionError("custom family needs at least one term");
  for (const auto& [e, ideal] : terms) {
    if (e < 0) throw PreconditionError("custom family index must be non-negative");
    if (ideal.ring() != ring) throw PreconditionError("custom family term lives in a different ring");
  }
  auto table = std::make_shared<std::map<int, MonomialIdeal>>(terms);
  PFamily F(ring, FamilyKind::custom, [table](int e) {
    auto it = table->find(e);
    if (it == table->end())
      throw PreconditionError("custom family has no term at e = " + std::to_string(e));
    return it->second;
  });
  if (require_valid) {
    for (auto it = terms.begin(); it != terms.end(); ++it) {
      auto next = std::next(it);
      if (next == terms.end() || next->first != it->first + 1) continue;
      MonomialIdeal scaled = bracket_power(it->second, ring.p());
      if (!next->second.contains_ideal(scaled)) {
        for (const auto& g : scaled.gens())
          if (!next->second.contains_monomial(g))
            throw PreconditionError("custom family violates the p-family axiom at e = " +
                                    std::to_string(it->first) + ": generator " + g.str() +
                                    " of I_q^{[p]} is not in I_{pq}");
      }
    }
  }
  return F;
}

namespace {

FamilyReport verify_impl(const PFamily& F, const std::optional<Exponent>& mult, int e_max) {
  if (e_max < 1) throw PreconditionError("e_max must be at least 1");
  FamilyReport report;
  report.e_checked = e_max;
  for (int e = 0; e < e_max; ++e) {
    MonomialIdeal scaled = bracket_power(F.eval(e), F.ring().p());
    MonomialIdeal next = F.eval(e + 1);
    for (const auto& g : scaled.gens()) {
      Exponent probe = mult ? g.plus(*mult) : g;
      if (!next.contains_monomial(probe)) {
        report.ok = false;
        report.fail_e = e;
        report.witness = probe;
        report.detail = "generator " + probe.str() + " escapes the term at e = " + std::to_string(e + 1);
        return report;
      }
    }
  }
  return report;
}

} // namespace

FamilyReport verify_p_family(const PFamily& F, int e_max) {
  return verify_impl(F, std::nullopt, e_max);
}

FamilyReport verify_weakly_p(const PFamily& F, const Exponent& c_exponent, int e_max) {
  if (c_exponent.size() != F.ring().nvars())
    throw PreconditionError("weak multiplier dimension mismatch");
  return verify_impl(F, c_exponent, e_max);
}

PcReport check_pc(const PFamily& F, std::int64_t c, int e_max) {
  if (c < 1) throw PreconditionError("c must be at least 1");
  if (e_max < 0) throw PreconditionError("e_max must be non-negative");
  PcReport report;
  report.c = c;
  report.e_max = e_max;
  report.holds = true;
  for (int e = 0; e <= e_max; ++e) {
    MonomialIdeal term = F.eval(e);
    MonomialIdeal sat = saturation(term);
    BoxRegion diff = difference_region(term, sat);
    if (!diff.bounded())
      throw PreconditionError("sat/I difference region is unbounded at e = " + std::to_string(e) +
                              "; not a monomial-staircase situation");
    auto maxdeg = diff.max_degree();
    if (!maxdeg) continue; // already saturated at this level
    const std::int64_t cq = checked_mul(c, F.ring().q_pow(e));
    if (*maxdeg >= cq) {
      // witness: top corner of a maximal-degree box; it lies in sat ∩ m^{cq}
      // but not in I_q
      for (const auto& b : diff.boxes) {
        if (b.max_degree() != *maxdeg) continue;
        std::vector<std::int64_t> top(b.dim());
        for (std::size_t i = 0; i < b.dim(); ++i) top[i] = *b.hi[i] - 1;
        report.holds = false;
        report.fail_e = e;
        report.witness = Exponent(std::move(top));
        return report;
      }
    }
  }
  return report;
}

std::optional<std::int64_t> find_min_pc(const PFamily& F, std::int64_t c_max, int e_max) {
  if (c_max < 1 || e_max < 0) throw PreconditionError("c_max >= 1 and e_max >= 0 required");
  // one pass over the family gives the exact threshold: c works iff
  // c * q > maxdeg(sat(I_q)/I_q) for every sampled level
  std::int64_t needed = 1;
  for (int e = 0; e <= e_max; ++e) {
    MonomialIdeal term = F.eval(e);
    BoxRegion diff = difference_region(term, saturation(term));
    auto maxdeg = diff.max_degree();
    if (!maxdeg) continue;
    const std::int64_t q = F.ring().q_pow(e);
    needed = std::max(needed, *maxdeg / q + 1);
  }
  if (needed > c_max) return std::nullopt;
  return needed;
}

DoubleFamily::DoubleFamily(Ring ring, std::function<MonomialIdeal(int, int)> eval)
    : ring_(std::move(ring)), fn_(std::move(eval)), cache_(std::make_shared<Cache>()) {}

MonomialIdeal DoubleFamily::eval(int e_outer, int e_inner) const {
  if (e_outer < 0 || e_inner < 0) throw PreconditionError("family indices must be non-negative");
  const auto key = std::make_pair(e_outer, e_inner);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->terms.find(key);
    if (it != cache_->terms.end()) return it->second;
  }
  MonomialIdeal term = fn_(e_outer, e_inner);
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, ignore] = cache_->terms.emplace(key, std::move(term));
  return it->second;
}

DoubleFamilyPair ghk_double_family(const MonomialIdeal& I, int check_e_max) {
  const Ring ring = I.ring();
  DoubleFamily Jdf(ring, [I](int ep, int e) {
    const Ring& r = I.ring();
    return bracket_power(saturation(bracket_power(I, r.q_pow(ep))), r.q_pow(e));
  });
  DoubleFamily Idf(ring, [I](int ep, int e) {
    const Ring& r = I.ring();
    return bracket_power(I, checked_mul(r.q_pow(ep), r.q_pow(e)));
  });

  auto fail = [](const std::string& what, int ep, int e, const Exponent& g) {
    throw PreconditionError("double-family hypothesis '" + what + "' fails at (e' = " +
                            std::to_string(ep) + ", e = " + std::to_string(e) +
                            "), witness " + g.str());
  };
  auto check_contains = [&](const MonomialIdeal& big, const MonomialIdeal& small,
                            const std::string& what, int ep, int e) {
    if (big.contains_ideal(small)) return;
    for (const auto& g : small.gens())
      if (!big.contains_monomial(g)) fail(what, ep, e, g);
  };

  for (int ep = 0; ep <= check_e_max; ++ep) {
    // column starts at the single-index values
    MonomialIdeal satq = saturation(bracket_power(I, ring.q_pow(ep)));
    if (Jdf.eval(ep, 0) != satq)
      throw PreconditionError("J_{q',1} != sat(I^{[q']}) at e' = " + std::to_string(ep));
    if (Idf.eval(ep, 0) != bracket_power(I, ring.q_pow(ep)))
      throw PreconditionError("I_{q',1} != I^{[q']} at e' = " + std::to_string(ep));
    for (int e = 0; e <= check_e_max; ++e) {
      check_contains(Jdf.eval(ep, e), Idf.eval(ep, e), "I_{q',q} subset J_{q',q}", ep, e);
      if (ep + e <= check_e_max) {
        MonomialIdeal Jsingle = saturation(bracket_power(I, ring.q_pow(ep + e)));
        check_contains(Jsingle, Jdf.eval(ep, e), "J_{q',q} subset J_{qq'}", ep, e);
        check_contains(bracket_power(I, ring.q_pow(ep + e)), Idf.eval(ep, e),
                       "I_{q',q} subset I_{qq'}", ep, e);
      }
      if (e < check_e_max) {
        check_contains(Jdf.eval(ep, e + 1), bracket_power(Jdf.eval(ep, e), ring.p()),
                       "column is a p-family", ep, e);
      }
    }
  }
  return DoubleFamilyPair{std::move(Jdf), std::move(Idf)};
}

} // namespace hkforge
