#ifndef EWK_MAIN_THM_HPP
#define EWK_MAIN_THM_HPP

#include "ewk/six.hpp"

namespace ewk {

// An object of Comm_{b (x) b'}: a commutative monoid btilde with legs from
// b and b', equivalently a single monoid map out of the coproduct.
struct CommOverPair {
  CommMonoid b, bp;
  CommMonoid total;
  MonoidMor f;   // b  -> total
  MonoidMor fp;  // b' -> total
};

LawReport check_comm_over_pair(const CommOverPair& p);

// The left adjoint of the main equivalence: the cocontinuous lax tensor
// functor f'_* f^* together with its coherences.
LaxFunctor comm_to_functor(const CommOverPair& p);

// The right adjoint: evaluation at b_b with the extracted monoid structure
// on F(b) and the pair of monoid maps from b and b'.
struct ExtractedMonoid {
  CommMonoid monoid;  // on F(b)
  MonoidMor f;        // b  -> F(b)
  MonoidMor fp;       // b' -> F(b)
};
ExtractedMonoid functor_to_comm(const LaxFunctor& F);

// Extraction identities: f o u_b = u_{F(b)} and m_{F(b)} o (f (x) id) = rho.
LawReport check_extraction_identities(const LaxFunctor& F);

// lambda as a tensor natural transformation f'_* f^* => F: the unit triangle
// and the binary compatibility square, exact at each sampled pair.
LawReport lambda_tensor_check(const LaxFunctor& F,
                              const std::vector<std::pair<RightModule, RightModule>>& samples);

// Unit round trip: functor_to_comm(comm_to_functor(p)) is isomorphic to p
// over b (x) b' via the inverse unit iso, exactly.
LawReport roundtrip_main(const CommOverPair& p);

// Counit round trip for a cocontinuous F: lambda is an invertible tensor
// natural transformation on the samples.
LawReport roundtrip_functor(const LaxFunctor& F, const std::vector<RightModule>& obj_samples,
                            const std::vector<std::pair<RightModule, RightModule>>& pair_samples);

// Extraction recovers a monoid morphism btilde: b -> b' from its pullback
// functor, and the coherences are invertible (strong, not merely lax).
LawReport corollary_strong(const MonoidMor& ftilde,
                           const std::vector<std::pair<RightModule, RightModule>>& samples);

// Distinct morphisms stay distinguishable through the equivalence: the
// extracted pairs are complete invariants.
bool functors_distinguishable(const MonoidMor& f1, const MonoidMor& f2);

}  // namespace ewk

#endif  // EWK_MAIN_THM_HPP
