#include "eo/theta.hpp"

namespace eo {

GammaPoly cheb_p(int n) {
    if (n < 0) throw BadParameter("negative index");
    return cheb_p_values(GammaPoly::gamma(), n + 1).back();
}

GammaPoly cheb_q(int n) {
    if (n < 0) throw BadParameter("negative index");
    return cheb_q_values(GammaPoly::gamma(), n + 1).back();
}

}  // namespace eo
