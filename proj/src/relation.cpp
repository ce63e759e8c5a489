#include <cstdlib>
#include <numeric>

#include "copnum/relation.hpp"

namespace copnum {

LinearRelation LinearRelation::normalized() const {
  int g = std::gcd(std::gcd(std::abs(n_coef), std::abs(k_coef)), std::abs(constant));
  if (g == 0) return *this;
  LinearRelation r{n_coef / g, k_coef / g, constant / g};
  int lead = r.n_coef != 0 ? r.n_coef : r.k_coef;
  if (lead < 0) r = {-r.n_coef, -r.k_coef, -r.constant};
  return r;
}

std::string LinearRelation::format() const {
  const LinearRelation r = normalized();
  if (r.n_coef == 0) {
    // k_coef*k + constant == 0
    if (r.k_coef == 1) return "k=" + std::to_string(-r.constant);
    return std::to_string(r.k_coef) + "k=" + std::to_string(-r.constant);
  }
  auto k_term = [](int coef) -> std::string {
    if (coef == 1) return "k";
    if (coef == -1) return "-k";
    return std::to_string(coef) + "k";
  };
  std::string lhs = (r.n_coef == 1 ? "" : std::to_string(r.n_coef)) + "n=";
  if (r.k_coef == 0) {
    if (r.n_coef == 1) return "n=" + std::to_string(r.constant);
    return lhs + std::to_string(r.constant);
  }
  if (r.constant == 0 && r.n_coef != 1) {
    return "n=" + k_term(r.k_coef) + "/" + std::to_string(r.n_coef);
  }
  std::string out = lhs + k_term(r.k_coef);
  if (r.constant > 0) out += "+" + std::to_string(r.constant);
  if (r.constant < 0) out += std::to_string(r.constant);
  return out;
}

}  // namespace copnum
