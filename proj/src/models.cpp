#include "versalkit/models.hpp"

namespace vk::models {

GroupModel cyclic_complement_model(std::string name, int p, const Field& k, const std::vector<int>& orders,
                                   const std::vector<std::string>& pgens, int n,
                                   const std::vector<std::vector<int>>& h_images, int chi1_h, int chi2_h) {
  FiniteGroup P = FiniteGroup::abelian(orders, pgens);
  FiniteGroup H = FiniteGroup::cyclic(n, "h");
  auto act = action_from_generators(P, H, {1 % n}, {abelian_automorphism(orders, h_images)});
  Semidirect sd = build_semidirect(P, H, act);
  std::vector<int> c1(n), c2(n);
  for (int i = 0; i < n; ++i) {
    c1[i] = k.pow(chi1_h, i);
    c2[i] = k.pow(chi2_h, i);
  }
  return make_model(std::move(name), p, k, sd, c1, c2);
}

GroupModel heisenberg_model(std::string name, int p, const Field& k, int n, int alpha, int beta, int chi1_h,
                            int chi2_h) {
  FiniteGroup P = FiniteGroup::heisenberg(p, {"a", "b", "c"});
  FiniteGroup H = FiniteGroup::cyclic(n, "h");
  auto act = action_from_generators(P, H, {1 % n}, {heisenberg_automorphism(p, alpha, beta)});
  Semidirect sd = build_semidirect(P, H, act);
  std::vector<int> c1(n), c2(n);
  for (int i = 0; i < n; ++i) {
    c1[i] = k.pow(chi1_h, i);
    c2[i] = k.pow(chi2_h, i);
  }
  return make_model(std::move(name), p, k, sd, c1, c2);
}

GroupModel model_a() {
  return cyclic_complement_model("MODEL-A", 3, Field::prime(3), {3, 3}, {"u", "v"}, 2, {{2, 0}, {0, 1}}, 1, 2);
}

GroupModel model_a_prime() {
  return cyclic_complement_model("MODEL-A'", 3, Field::prime(3), {3, 3}, {"u", "v"}, 2, {{2, 0}, {0, 2}}, 1, 2);
}

GroupModel model_b() {
  return cyclic_complement_model("MODEL-B", 5, Field::prime(5), {5, 5}, {"u", "v"}, 2, {{4, 0}, {0, 1}}, 1, 4);
}

GroupModel model_c() {
  return cyclic_complement_model("MODEL-C", 7, Field::prime(7), {7, 7}, {"u", "v"}, 3, {{2, 0}, {0, 4}}, 1, 4);
}

GroupModel model_d() {
  Field k = Field::make(2, 2);
  return cyclic_complement_model("MODEL-D", 2, k, {2, 2, 2}, {"u", "v", "w"}, 3, {{0, 1, 0}, {1, 1, 0}, {0, 0, 1}},
                                 1, k.primitive());
}

GroupModel model_e() {
  return cyclic_complement_model("MODEL-E", 5, Field::prime(5), {5}, {"u"}, 2, {{4}}, 1, 4);
}

GroupModel model_f() { return heisenberg_model("MODEL-F", 5, Field::prime(5), 2, 1, 4, 1, 4); }

std::vector<GroupModel> generic_models() {
  return {model_a(), model_b(), model_c(), model_d(), model_e(), model_f()};
}

}  // namespace vk::models
