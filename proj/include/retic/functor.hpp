#ifndef RETIC_FUNCTOR_HPP_
#define RETIC_FUNCTOR_HPP_

#include "retic/reticulation.hpp"

namespace retic {

// Everything computed for one algebra, built once and shared.
struct Analysis {
  AlgebraPtr algebra;
  std::shared_ptr<const CongruenceLattice> con;
  std::shared_ptr<const CommutatorStructure> cs;
  std::shared_ptr<const ReticulationResult> retic;  // null when refused
  std::string retic_refusal;                        // failed law when refused
  SpectrumReport spec;
};

Analysis analyze_algebra(const AlgebraPtr& alg, int threads = 0);

// Induced map L(A) -> L(B) of a surjection, with the congruence transport
// phi_f(a) = f(a v Ker f). Well-definedness is verified on every class
// member, surjectivity on the image.
struct ReticMorphism {
  std::vector<int> map;  // classes of L(A) -> classes of L(B)
};

ReticMorphism retic_morphism(const SurjectiveMorphism& f, const Analysis& a,
                             const Analysis& b);

// L(A/theta) is isomorphic to L(A)/theta*, and the ideal kernel of the
// induced map is theta*.
Report verify_quotient_preservation(const Analysis& a, int theta);
// All congruences theta of a.
Report verify_quotient_preservation_all(const Analysis& a);

// Skew congruence scan on a x b; when none exist, the spectrum of the
// product matches the factor formula and L(a x b) is isomorphic to
// L(a) x L(b). Includes the pair-generation spot check
// Cg(X x Y) = Cg(X) x Cg(Y).
Report verify_product_preservation(const AlgebraPtr& a, const AlgebraPtr& b, int threads = 0);

// a / rho(bottom) is semiprime, preserves the reticulation, and carries the
// same Boolean center as B(L(a)).
Report verify_semiprime_reduction(const Analysis& a);

// Six equivalent characterizations, evaluated independently and compared;
// conditional on the maximal-subset-of-spectrum surrogate gate. Includes the
// quotient stability and Boolean reticulation consequences.
Report verify_hyperarchimedean_equivalences(const Analysis& a);

// L(g o f) = L(g) o L(f) on a quotient chain theta <= zeta.
Report verify_functoriality(const Analysis& a, int theta, int zeta);

// Transports of center elements land in the center (checked for every
// quotient); top stays compact (every congruence is a join of principals).
Report verify_transport_invariants(const Analysis& a);

}  // namespace retic

#endif  // RETIC_FUNCTOR_HPP_
