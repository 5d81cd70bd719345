#pragma once

#include <cstdint>
#include <vector>

#include "mkp/core.hpp"

using Rows = std::vector<std::vector<std::int64_t>>;

inline mkp::Instance make_instance(std::size_t T, std::size_t n, const Rows& p, const Rows& w, const Rows& b,
                                   std::vector<std::int64_t> caps) {
  return mkp::Instance(T, n, mkp::IntMatrix::from_rows(p, n), mkp::IntMatrix::from_rows(w, n),
                       mkp::IntMatrix::from_rows(b, n), std::move(caps));
}

inline mkp::Schedule make_schedule(std::size_t T, std::size_t n, const Rows& x) {
  mkp::Schedule s(T, n);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t i = 0; i < n; ++i) s.set(t, i, x[t][i] != 0);
  return s;
}
