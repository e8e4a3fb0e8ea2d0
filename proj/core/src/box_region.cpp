#include "hkforge/box_region.hpp"

#include <algorithm>

namespace hkforge {

bool Box::bounded() const {
  for (const auto& h : hi)
    if (!h) return false;
  return true;
}

bool Box::contains(const Exponent& e) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (e[i] < lo[i]) return false;
    if (hi[i] && e[i] >= *hi[i]) return false;
  }
  return true;
}

Int Box::cardinality() const {
  Int c = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!hi[i]) throw PreconditionError("cardinality of an unbounded box");
    c *= Int(*hi[i] - lo[i]);
  }
  return c;
}

std::int64_t Box::max_degree() const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!hi[i]) throw PreconditionError("max_degree of an unbounded box");
    d = checked_add(d, *hi[i] - 1);
  }
  return d;
}

std::string Box::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) s += " x ";
    s += std::to_string(lo[i]) + "," + (hi[i] ? std::to_string(*hi[i]) : "inf");
  }
  return s + ")";
}

bool BoxRegion::contains(const Exponent& e) const {
  for (const auto& b : boxes)
    if (b.contains(e)) return true;
  return false;
}

bool BoxRegion::bounded() const {
  for (const auto& b : boxes)
    if (!b.bounded()) return false;
  return true;
}

Int BoxRegion::cardinality() const {
  Int c = 0;
  for (const auto& b : boxes) c += b.cardinality();
  return c;
}

std::optional<std::int64_t> BoxRegion::max_degree() const {
  std::optional<std::int64_t> best;
  for (const auto& b : boxes) {
    std::int64_t d = b.max_degree();
    if (!best || d > *best) best = d;
  }
  return best;
}

namespace {

// min of half-open upper bounds, nullopt = +inf
std::optional<std::int64_t> hi_min(const std::optional<std::int64_t>& a, const std::optional<std::int64_t>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

bool interval_overlaps(std::int64_t alo, const std::optional<std::int64_t>& ahi, std::int64_t blo,
                       const std::optional<std::int64_t>& bhi) {
  std::int64_t lo = std::max(alo, blo);
  auto hi = hi_min(ahi, bhi);
  return !hi || lo < *hi;
}

} // namespace

std::vector<Box> box_subtract(const Box& a, const Box& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!interval_overlaps(a.lo[i], a.hi[i], b.lo[i], b.hi[i])) return {a};

  std::vector<Box> out;
  Box cur = a;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::int64_t ilo = std::max(cur.lo[i], b.lo[i]);
    auto ihi = hi_min(cur.hi[i], b.hi[i]);
    if (cur.lo[i] < ilo) {
      Box below = cur;
      below.hi[i] = ilo;
      out.push_back(std::move(below));
      cur.lo[i] = ilo;
    }
    if (ihi && (!cur.hi[i] || *ihi < *cur.hi[i])) {
      Box above = cur;
      above.lo[i] = *ihi;
      out.push_back(std::move(above));
      cur.hi[i] = ihi;
    }
  }
  // cur is now a ∩ b, discarded
  return out;
}

BoxRegion region_subtract(const BoxRegion& a, const BoxRegion& b) {
  if (a.nvars != b.nvars) throw PreconditionError("region dimension mismatch");
  BoxRegion out;
  out.nvars = a.nvars;
  for (const auto& abox : a.boxes) {
    std::vector<Box> pieces{abox};
    for (const auto& bbox : b.boxes) {
      std::vector<Box> next;
      for (const auto& piece : pieces) {
        auto sub = box_subtract(piece, bbox);
        next.insert(next.end(), sub.begin(), sub.end());
      }
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    out.boxes.insert(out.boxes.end(), pieces.begin(), pieces.end());
  }
  return out;
}

namespace {

using RawGens = std::vector<std::vector<std::int64_t>>;

RawGens normalize_raw(RawGens gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  RawGens keep;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j) {
      if (j == i) continue;
      bool le = true;
      for (std::size_t v = 0; v < gens[i].size() && le; ++v)
        if (gens[j][v] > gens[i][v]) le = false;
      if (le) dominated = true;
    }
    if (!dominated) keep.push_back(gens[i]);
  }
  return keep;
}

bool has_zero_vector(const RawGens& gens) {
  for (const auto& g : gens) {
    bool all0 = true;
    for (auto c : g)
      if (c != 0) { all0 = false; break; }
    if (all0) return true;
  }
  return false;
}

// Complement in N^k of the ideal generated by gens (normalized antichain,
// dimension k >= 1). Empty gens = zero ideal = full orthant.
std::vector<Box> complement_rec(const RawGens& gens, std::size_t k) {
  std::vector<Box> out;
  if (gens.empty()) {
    Box full;
    full.lo.assign(k, 0);
    full.hi.assign(k, std::nullopt);
    out.push_back(std::move(full));
    return out;
  }
  if (has_zero_vector(gens)) return out; // unit ideal, empty complement
  if (k == 1) {
    std::int64_t v = gens[0][0];
    for (const auto& g : gens) v = std::min(v, g[0]);
    Box b;
    b.lo = {0};
    b.hi = {v};
    out.push_back(std::move(b));
    return out;
  }

  std::vector<std::int64_t> vals{0};
  for (const auto& g : gens) vals.push_back(g[k - 1]);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

  for (std::size_t s = 0; s < vals.size(); ++s) {
    const std::int64_t v = vals[s];
    const bool last = (s + 1 == vals.size());
    const std::optional<std::int64_t> next = last ? std::optional<std::int64_t>{} : std::optional<std::int64_t>{vals[s + 1]};

    RawGens proj;
    for (const auto& g : gens)
      if (g[k - 1] <= v) proj.push_back(RawGens::value_type(g.begin(), g.end() - 1));
    proj = normalize_raw(std::move(proj));

    for (Box sub : complement_rec(proj, k - 1)) {
      sub.lo.push_back(v);
      sub.hi.push_back(next);
      out.push_back(std::move(sub));
    }
  }
  return out;
}

} // namespace

BoxRegion complement_region(const MonomialIdeal& I) {
  BoxRegion region;
  region.nvars = I.ring().nvars();
  RawGens raw;
  for (const auto& g : I.gens()) raw.push_back(g.coords());
  region.boxes = complement_rec(raw, region.nvars);
  return region;
}

BoxRegion complement_boxes(const MonomialIdeal& I) {
  if (I.is_zero()) throw PreconditionError("complement of the zero ideal is the whole orthant; rejected");
  if (I.is_unit()) throw PreconditionError("complement of the unit ideal is empty; rejected");
  return complement_region(I);
}

namespace {

struct HalfspaceCounter {
  const Box& box;
  std::vector<Int> A;
  // suffix data for the all-inside shortcut
  std::vector<std::optional<Int>> suffix_load; // max of sum A_j x_j over box coords j >= i
  std::vector<Int> suffix_cells;               // product of side lengths (valid when load finite)

  HalfspaceCounter(const Box& b, const std::vector<Int>& dir) : box(b), A(dir) {
    const std::size_t n = box.dim();
    suffix_load.assign(n + 1, Int(0));
    suffix_cells.assign(n + 1, Int(1));
    for (std::size_t i = n; i-- > 0;) {
      if (!suffix_load[i + 1] || !box.hi[i]) {
        suffix_load[i] = std::nullopt;
      } else {
        suffix_load[i] = *suffix_load[i + 1] + A[i] * Int(*box.hi[i] - 1);
        suffix_cells[i] = suffix_cells[i + 1] * Int(*box.hi[i] - box.lo[i]);
      }
    }
  }

  // #{x : x_j in box for j >= i, sum_{j>=i} A_j x_j <= R}
  Int count(std::size_t i, const Int& R) const {
    if (R < 0) return 0;
    const std::size_t n = box.dim();
    if (i == n) return 1;
    if (suffix_load[i] && *suffix_load[i] <= R) return suffix_cells[i];
    const Int bound = R / A[i]; // x_i <= bound
    Int limit = bound;
    if (box.hi[i] && Int(*box.hi[i] - 1) < limit) limit = Int(*box.hi[i] - 1);
    if (Int(box.lo[i]) > limit) return 0;
    if (i + 1 == n) return limit - Int(box.lo[i]) + 1;
    if (limit - Int(box.lo[i]) > (Int(1) << 32))
      throw OverflowError("half-space count would iterate over more than 2^32 slices");
    const std::int64_t lim64 = limit.convert_to<std::int64_t>();
    Int total = 0;
    Int rem = R - A[i] * Int(box.lo[i]);
    for (std::int64_t x = box.lo[i]; x <= lim64; ++x, rem -= A[i])
      total += count(i + 1, rem);
    return total;
  }
};

} // namespace

Int count_in_halfspace(const BoxRegion& region, const HalfSpace& H, std::int64_t scale) {
  if (H.dim() != region.nvars) throw PreconditionError("half-space dimension mismatch");
  if (scale < 1) throw PreconditionError("scale must be positive");
  const Int T = Int(scale) * H.int_bound() - 1;
  Int total = 0;
  for (const auto& b : region.boxes) {
    HalfspaceCounter counter(b, H.int_direction());
    total += counter.count(0, T);
  }
  return total;
}

Int count_orthant_in_halfspace(std::size_t nvars, const HalfSpace& H, std::int64_t scale) {
  Box full;
  full.lo.assign(nvars, 0);
  full.hi.assign(nvars, std::nullopt);
  BoxRegion orthant;
  orthant.nvars = nvars;
  orthant.boxes.push_back(std::move(full));
  return count_in_halfspace(orthant, H, scale);
}

BoxRegion difference_region(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ring() != J.ring()) throw PreconditionError("ideals live in different rings");
  if (!J.contains_ideal(I)) {
    for (const auto& g : I.gens())
      if (!J.contains_monomial(g))
        throw PreconditionError("inclusion violated: generator " + g.str() + " of " + I.str() +
                                " does not lie in " + J.str());
  }
  return region_subtract(complement_region(I), complement_region(J));
}

Colength relative_colength(const MonomialIdeal& I, const MonomialIdeal& J) {
  BoxRegion diff = difference_region(I, J);
  if (!diff.bounded()) return Colength::infinite();
  return Colength::of(diff.cardinality());
}

bool is_m_primary(const MonomialIdeal& I) { return complement_region(I).bounded(); }

} // namespace hkforge
