#pragma once

#include "fibtree/interval.hpp"

namespace fibtree::detail {

// 6.75^n / n^(3/2)
Interval growth(unsigned long n, mpfr_prec_t prec);
Interval sqrt_pi(mpfr_prec_t prec);
Interval sqrt3(mpfr_prec_t prec);

}  // namespace fibtree::detail
