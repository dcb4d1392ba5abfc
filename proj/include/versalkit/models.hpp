#pragma once

#include "versalkit/groups.hpp"

namespace vk::models {

// p = 3, P = C3 x C3 = <u, v>, H = C2 = <h>, h: u -> u^2, v -> v; chi1 trivial, chi2 sign
GroupModel model_a();
// as model_a with h: v -> v^2 as well (genericity fails)
GroupModel model_a_prime();
// p = 5, P = C5 x C5, H = C2, h: u -> u^4, v -> v; chi1 trivial, chi2 sign
GroupModel model_b();
// p = 7, P = C7 x C7, H = C3 = <h>, h: u -> u^2, v -> v^4; chi1 trivial, chi2(h) = 4
GroupModel model_c();
// p = 2, k = F4, P = C2^3 = <u, v, w>, H = C3 = <h>, h: u -> v -> u*v, w -> w;
// chi1 trivial, chi2(h) = primitive cube root of unity
GroupModel model_d();
// p = 5, P = C5 = <u>, H = C2, h: u -> u^4 (dihedral of order 10); chi1 trivial, chi2 sign
GroupModel model_e();
// p = 5, P = Heisenberg group of order 125, H = C2, h: a -> a, b -> b^4; chi1 trivial, chi2 sign
GroupModel model_f();
// every shipped generic model
std::vector<GroupModel> generic_models();

// semidirect product of P = abelian(orders) by a cyclic H = <h> of order n,
// with h acting by the given exponent images and chi_i(h) given
// P Heisenberg mod p with generators a, b, c = [a, b]; h acts by a -> a^alpha, b -> b^beta
GroupModel heisenberg_model(std::string name, int p, const Field& k, int n, int alpha, int beta, int chi1_h,
                            int chi2_h);

GroupModel cyclic_complement_model(std::string name, int p, const Field& k, const std::vector<int>& orders,
                                   const std::vector<std::string>& pgens, int n,
                                   const std::vector<std::vector<int>>& h_images, int chi1_h, int chi2_h);

}  // namespace vk::models
