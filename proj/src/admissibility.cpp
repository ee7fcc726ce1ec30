#include "spherepair/classone.hpp"

#include <algorithm>

namespace spherepair {

namespace {

long long degree_over(Field f, RepType t, long long dim) {
  switch (f) {
    case Field::R: return t == RepType::Real ? dim : 2 * dim;
    case Field::C: return dim;
    case Field::H: return t == RepType::Quaternionic ? dim / 2 : dim;
  }
  return dim;
}

}  // namespace

long long DiagramCandidate::mu_degree() const { return degree_over(field, mu.type, mu.dim); }

long long DiagramCandidate::tau_degree() const {
  const RootSystemData K = k_root_system(mu.pair);
  long long r = 0;
  for (const auto& w : tau) r += degree_over(field, frobenius_schur_type(mu.pair, w), weyl_dim(K, w));
  return r;
}

Admissibility check_diagram_admissible(const DiagramCandidate& c) {
  Admissibility out;
  auto reject = [&](std::string why) {
    out.accepted = false;
    out.reason = std::move(why);
    return out;
  };
  const SphericalPair& p = c.mu.pair;
  const RootSystemData K = k_root_system(p);
  const int k = c.k();
  if (k < 2) return reject("sphere dimension k = " + std::to_string(k) + " < 2");
  if (c.alpha < 1) return reject("multiplicity alpha must be at least 1");
  if (c.mu.m0 < 1) return reject("mu is not a class one representation");

  const Weight mu = canonical(K, c.mu.highest_weight);
  const Weight mu_dual = canonical(K, dominant_conjugate(K, -mu));
  for (const auto& w : c.tau) {
    if (!is_dominant(K, w)) return reject("tau summand " + w.str() + " is not a dominant weight");
    const Weight cw = canonical(K, w);
    // over R, [mu]_R of a complex mu also contains mu*
    if (cw == mu || (c.field == Field::R && cw == mu_dual))
      return reject("mu is a subrepresentation of tau");
  }

  const long long l = c.mu_degree();
  const long long scale = c.field == Field::R ? 1 : (c.field == Field::C ? 2 : 4);
  if (scale * l == k + 1) {
    out.defining_rep = true;
    return reject("mu is the defining representation of K' on R^" + std::to_string(k + 1));
  }

  if (c.field == Field::R) {
    if (c.mu.type == RepType::Real || c.alpha == 1) {
      if (l < k + 2) return reject("deg mu >= k+2 fails: l = " + std::to_string(l));
    } else if (c.mu.type == RepType::Complex) {
      if (l < 2 * (k + 2)) return reject("deg mu >= 2(k+2) fails for complex type with mul >= 2: l = " + std::to_string(l));
    } else if (l < 4 * (k + 2)) {
      return reject("deg mu >= 4(k+2) fails for quaternionic type with mul >= 2: l = " + std::to_string(l));
    }
  } else {
    if (c.alpha != 1) return reject("mul(mu, rho) = 1 is required over " + field_name(c.field));
    if (c.field == Field::H && c.mu.type != RepType::Quaternionic)
      return reject("mu is not of quaternionic type");
    if (scale * l < k + 2)
      return reject(std::to_string(scale) + "l >= k+2 fails: l = " + std::to_string(l));
  }

  const long long m = c.m();
  const long long need = (c.field == Field::R && c.alpha >= 2) ? m + 3 : m + 2;
  if (c.n < need) return reject("n >= " + std::to_string(need) + " required (m = " + std::to_string(m) + ")");

  // rho = tau + alpha mu must be faithful: ker tau and ker mu meet trivially
  std::vector<Weight> summands = c.tau;
  summands.push_back(mu);
  const std::string why_mu = c.mu.noneffective.empty() ? std::string() : " (" + c.mu.noneffective + ")";
  const std::string factor = trivial_factor(p, summands);
  if (!factor.empty()) return reject("rho is not faithful: the " + factor + " acts trivially" + why_mu);
  const auto probe = central_probe(p, summands);
  if (!probe) return reject("rho is not faithful: a central circle acts trivially" + why_mu);
  long long central = 0;
  for (const auto& x : *probe)
    if (std::all_of(summands.begin(), summands.end(), [&](const Weight& w) { return acts_trivially(p, w, x); }))
      ++central;
  if (central > 1)
    return reject("rho is not faithful: central kernel of order " + std::to_string(central) +
                  (c.mu.kernel.text.empty() ? std::string() : " (ker mu: " + c.mu.kernel.text + ")"));

  out.accepted = true;
  out.reason = "admissible";
  return out;
}

}  // namespace spherepair
