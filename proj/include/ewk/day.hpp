#ifndef EWK_DAY_HPP
#define EWK_DAY_HPP

#include "ewk/main_thm.hpp"

namespace ewk {

// Day convolution of the functors - (+)_b X and - (+)_b Y, computed directly
// as the bimodule tensor over the coproduct algebra b (x) b'.
struct ConvolutionResult {
  Bimodule x, y;             // the two (b,b')-bimodules
  Coproduct tensor_algebra;  // b (x) b'
  RightModule xm, ym;        // inputs as right b(x)b'-modules
  TensorOverResult ten;      // x (+)_{b(x)b'} y with its presentation
  Bimodule product;          // the quotient with both induced actions
};

ConvolutionResult convolve(const Bimodule& X, const Bimodule& Y);

// theta_{w,z} : (w (+)_b x) (+)_{b'} (z (+)_b y) -> (w (+)_b z) (+)_b (x (+)_{b(x)b'} y)
ModuleMor theta(const ConvolutionResult& R, const RightModule& w, const RightModule& z);

// The defining relation of theta at the quotient level, plus the epi at
// (b_b, b_b).
LawReport check_theta(const ConvolutionResult& R, const RightModule& w, const RightModule& z);
LawReport check_theta_natural(const ConvolutionResult& R, const ModuleMor& h,
                              const RightModule& z);

// z (+)_b (_b (b (x) b')_{b'})  ~  M_b(b_b, z) (x) b'
struct DayUnitIso {
  Bimodule unit_bimodule;
  TensorOverResult ten;
  RightModule free_side;  // M_b(b_b,z) (x) b' with the free b'-action
  ModuleMor iso;
};
DayUnitIso unit_object_iso(const CommMonoid& b, const CommMonoid& bp, const RightModule& z);
LawReport check_day_unit_natural(const CommMonoid& b, const CommMonoid& bp, const ModuleMor& h);

// Universal property, tested over constructively presented cones: the cone
// alpha = (- (+) psi0) o theta for a planted bimodule map psi0 : X*Y -> Z.
// psi is extracted through phi and the b(x)b' presentation and must recover
// psi0 exactly; xi = lambda o (- (+) psi) then satisfies alpha = xi o theta
// at the samples. Uniqueness rides on theta_{b,b} having full row rank.
struct FactorizationResult {
  Mor phi;        // x (+)_{b'} y -> F(b)
  Mor psi;        // x (+)_{b(x)b'} y -> F(b)
  Mor recovered;  // iota o psi : x (+)_{b(x)b'} y -> z, compare with psi0
  LawReport report;
};
FactorizationResult universal_factorization(
    const ConvolutionResult& R, const Bimodule& Z, const Mor& psi0,
    const std::vector<std::pair<RightModule, RightModule>>& samples);

// The braiding of M_{b(x)b'} restricts to an invertible bimodule map
// between the two convolutions.
LawReport check_convolution_symmetry(const Bimodule& X, const Bimodule& Y);

// Monoids under Day convolution are lax tensor functors: for a commutative
// monoid over b (x) b', the transported multiplication reproduces the binary
// coherence of comm_to_functor exactly.
LawReport check_day_monoid_correspondence(const CommOverPair& p, const RightModule& w,
                                          const RightModule& z);

}  // namespace ewk

#endif  // EWK_DAY_HPP
