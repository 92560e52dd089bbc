#ifndef CAUSAL_TEST_UTIL_HPP
#define CAUSAL_TEST_UTIL_HPP

#include "causal/cmatrix.hpp"
#include "causal/philox.hpp"
#include "causal/two_state.hpp"

namespace causal::testutil {

inline cplx random_cplx(RandomStream& rs) {
  return {2.0 * rs.uniform() - 1.0, 2.0 * rs.uniform() - 1.0};
}

inline CMatrix random_matrix(RandomStream& rs, std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_cplx(rs);
  return m;
}

inline CMatrix random_hermitian(RandomStream& rs, std::size_t n) {
  const CMatrix m = random_matrix(rs, n);
  return 0.5 * (m + m.dagger());
}

inline QubitKet random_ket(RandomStream& rs) {
  return QubitKet::normalized(random_cplx(rs), random_cplx(rs));
}

/// Random pre/post pair, redrawn until the overlap is comfortably nonzero.
inline TwoState random_two_state(RandomStream& rs, double min_overlap = 0.05) {
  while (true) {
    const QubitKet pre = random_ket(rs), post = random_ket(rs);
    if (std::abs(inner(post, pre)) > min_overlap) return TwoState(pre, post);
  }
}

}  // namespace causal::testutil

#endif
