#include "satake/grassmannian.hpp"

#include "satake/weyl.hpp"

namespace satake {

namespace {

Int halved(Int doubled, const char* what) {
  if (doubled % 2 != 0) throw InternalError(std::string("odd doubled value in ") + what);
  return doubled / 2;
}

}  // namespace

Int orbit_dim(const RootDatum& d, const Coweight& lambda) {
  if (!is_dominant(d, lambda)) throw DomainError("orbit label must be dominant");
  return doubled_height(d, lambda);
}

bool closure_contains(const RootDatum& d, const Coweight& lambda, const Coweight& mu) {
  if (!is_dominant(d, lambda) || !is_dominant(d, mu))
    throw DomainError("closure order is defined on dominant labels");
  return dominance_leq(d, mu, lambda);
}

std::optional<Int> s_intersection_dim(const RootDatum& d, const Coweight& nu,
                                      const Coweight& lambda, PartitionCache* cache,
                                      Int weyl_cap) {
  if (!is_dominant(d, lambda)) throw DomainError("orbit label must be dominant");
  if (weight_multiplicity(d, lambda, nu, cache, weyl_cap) == 0) return std::nullopt;
  const Int value = halved(doubled_height(d, nu) + doubled_height(d, lambda),
                           "attracting intersection dimension");
  if (value < 0) throw InternalError("negative attracting intersection dimension");
  return value;
}

std::optional<Int> t_intersection_dim(const RootDatum& d, const Coweight& nu,
                                      const Coweight& lambda, PartitionCache* cache,
                                      Int weyl_cap) {
  if (!is_dominant(d, lambda)) throw DomainError("orbit label must be dominant");
  if (weight_multiplicity(d, lambda, nu, cache, weyl_cap) == 0) return std::nullopt;
  const Coweight anti = longest_element_image(d, lambda);
  const Int value = halved(-(doubled_height(d, nu) + doubled_height(d, anti)),
                           "repelling intersection dimension");
  if (value < 0) throw InternalError("negative repelling intersection dimension");
  return value;
}

Int mv_cycle_count(const RootDatum& d, const Coweight& nu, const Coweight& lambda,
                   PartitionCache* cache, Int weyl_cap) {
  if (!is_dominant(d, lambda)) throw DomainError("orbit label must be dominant");
  return weight_multiplicity(d, lambda, nu, cache, weyl_cap);
}

Coweight s_to_t_index(const RootDatum& d, const Coweight& nu) {
  return longest_element_image(d, nu);
}

std::optional<Int> convolution_fiber_dim(const RootDatum& d, const Coweight& lambda,
                                         const Coweight& mu, const Coweight& nu) {
  if (!is_dominant(d, lambda) || !is_dominant(d, mu))
    throw DomainError("convolution factors must be dominant");
  const Int total =
      doubled_height(d, lambda) + doubled_height(d, mu) + doubled_height(d, nu);
  if (total % 2 != 0) return std::nullopt;
  const Coweight sum = lambda + mu;
  const auto [nu_dom, word] = dominant_representative(d, nu);
  if (!dominance_leq(d, nu_dom, sum)) return std::nullopt;
  return total / 2;
}

Int semismall_defect(const RootDatum& d, const Coweight& lambda, const Coweight& mu,
                     const Coweight& nu) {
  if (!is_dominant(d, lambda) || !is_dominant(d, mu) || !is_dominant(d, nu))
    throw DomainError("semismall defect needs dominant labels");
  const Coweight sum = lambda + mu;
  if (!closure_contains(d, sum, nu))
    throw DomainError("stratum label must lie in the closure of the target orbit");
  const Int half_drop = halved(orbit_dim(d, sum) - orbit_dim(d, nu), "orbit dimension drop");
  const Int expected_fiber =
      halved(doubled_height(d, sum) - doubled_height(d, nu), "expected fiber dimension");
  return half_drop - expected_fiber;
}

}  // namespace satake
