#include "proxpt/proximal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <tuple>

#include "proxpt/errors.hpp"

namespace proxpt {

namespace {

double effective_tol(const FiniteInstance& inst, double tol) { return inst.exact_int() ? 0.0 : tol; }

}  // namespace

SetDistance set_distance(const FiniteInstance& inst, double tol) {
  tol = effective_tol(inst, tol);
  SetDistance out;
  out.dab = std::numeric_limits<double>::infinity();
  for (std::size_t a : inst.a())
    for (std::size_t b : inst.b()) out.dab = std::min(out.dab, inst.distance(a, b));

  for (std::size_t a : inst.a_sorted())
    for (std::size_t b : inst.b_sorted())
      if (inst.distance(a, b) - out.dab <= tol) out.attaining_pairs.emplace_back(inst.id(a), inst.id(b));
  return out;
}

ProximalProfile proximal_subsets(const FiniteInstance& inst, double tol) {
  SetDistance sd = set_distance(inst, tol);
  ProximalProfile profile;
  profile.dab = sd.dab;
  profile.tol = effective_tol(inst, tol);
  profile.attaining_pairs = std::move(sd.attaining_pairs);

  std::set<PointId> a0, b0;
  for (const auto& [a, b] : profile.attaining_pairs) {
    a0.insert(a);
    b0.insert(b);
  }
  profile.a0.assign(a0.begin(), a0.end());
  profile.b0.assign(b0.begin(), b0.end());
  return profile;
}

const char* to_string(PPropertyMode mode) noexcept {
  return mode == PPropertyMode::strict ? "strict" : "weak";
}

PPropertyMode p_property_mode_from_string(const std::string& name) {
  if (name == "strict") return PPropertyMode::strict;
  if (name == "weak") return PPropertyMode::weak;
  throw ParamError("unknown P-property mode '" + name + "' (expected strict|weak)");
}

PPropertyResult check_p_property(const FiniteInstance& inst, const ProximalProfile& profile,
                                 PPropertyMode mode) {
  const double tol = profile.tol;
  PPropertyResult result;
  result.mode = mode;

  struct IndexPair {
    std::size_t x, y;
  };
  std::vector<IndexPair> pairs;
  pairs.reserve(profile.attaining_pairs.size());
  for (const auto& [a, b] : profile.attaining_pairs)
    pairs.push_back({inst.index_of(a), inst.index_of(b)});

  auto key = [&](const IndexPair& p, const IndexPair& q) {
    return std::make_tuple(inst.rank(p.x), inst.rank(q.x), inst.rank(p.y), inst.rank(q.y));
  };
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> best;

  for (const IndexPair& p : pairs) {
    for (const IndexPair& q : pairs) {
      ++result.tuples_checked;
      const double dx = inst.distance(p.x, q.x);
      const double dy = inst.distance(p.y, q.y);
      const bool ok = mode == PPropertyMode::strict ? std::abs(dx - dy) <= tol : dx <= dy + tol;
      if (ok) continue;
      result.pass = false;
      auto k = key(p, q);
      if (!best || k < *best) {
        best = k;
        result.witness = PPropertyWitness{inst.id(p.x), inst.id(q.x), inst.id(p.y), inst.id(q.y), dx, dy};
      }
    }
  }
  return result;
}

PPropertyResult check_p_property(const FiniteInstance& inst, PPropertyMode mode, double tol) {
  return check_p_property(inst, proximal_subsets(inst, tol), mode);
}

const char* to_string(CompactnessDirection dir) noexcept {
  return dir == CompactnessDirection::b_wrt_a ? "B_wrt_A" : "A_wrt_B";
}

CompactnessResult check_approx_compact(const FiniteInstance& inst, CompactnessDirection direction) {
  const std::size_t n = direction == CompactnessDirection::b_wrt_a ? inst.b().size() : inst.a().size();
  CompactnessResult r;
  r.direction = direction;
  r.pass = true;
  r.note = "finite set of " + std::to_string(n) +
           " point(s): every sequence in it has a constant, hence convergent, subsequence";
  return r;
}

RangeConditionResult check_range_condition(const FiniteInstance& inst,
                                           const ProximalProfile& profile) {
  const std::set<PointId> b0(profile.b0.begin(), profile.b0.end());
  RangeConditionResult r;
  for (const PointId& a : profile.a0) {
    const PointId& img = inst.id(inst.image(inst.index_of(a)));
    if (!b0.contains(img)) {
      r.pass = false;
      r.witness = a;
      r.witness_image = img;
      break;
    }
  }
  return r;
}

RangeConditionResult check_range_condition(const FiniteInstance& inst, double tol) {
  return check_range_condition(inst, proximal_subsets(inst, tol));
}

}  // namespace proxpt
