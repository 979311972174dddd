#include "doctest.h"
#include "pdc/chains.hpp"

using pdc::ExactInt;

TEST_CASE("small chain weights") {
  CHECK(pdc::h_direct(0, 0) == 1);
  CHECK(pdc::h_direct(1, 0) == 0);
  CHECK(pdc::h_direct(2, 1) == -2);
  CHECK(pdc::h_direct(4, 1) == -2);
  CHECK(pdc::h_direct(4, 2) == 24);
  CHECK(pdc::h_direct(3, 1) == 0);
  CHECK_THROWS_AS(pdc::h_direct(3, 2), std::domain_error);
}

TEST_CASE("literal sum equals the central-factorial form for t <= 60") {
  constexpr unsigned T = 60;
  const pdc::TriangleTable s2(pdc::TriangleKind::stirling2, T);
  const pdc::TriangleTable central(pdc::TriangleKind::centralT, T / 2);
  for (unsigned t = 0; t <= T; ++t) {
    for (unsigned c = 0; 2 * c <= t; ++c) {
      INFO("t=" << t << " c=" << c);
      CHECK(pdc::h_direct(t, c, s2) == pdc::h_fast(t, c, central));
    }
  }
}

TEST_CASE("|h_{2n,c}| = 2^c * ordered even-block partitions") {
  for (unsigned n = 0; n <= 20; ++n) {
    for (unsigned c = 0; c <= n; ++c) {
      const ExactInt h = pdc::h_direct(2 * n, c);
      CHECK(abs(h) == pdc::pow_ui(2, c) * pdc::even_block_count(n, c));
      CHECK(sgn(h) == (c == 0 ? (n == 0 ? 1 : 0) : (c % 2 ? -1 : 1)));
    }
  }
}

TEST_CASE("weight table") {
  const pdc::ChainWeightTable h(30);
  const pdc::TriangleTable central(pdc::TriangleKind::centralT, 15);
  for (unsigned t = 0; t <= 30; ++t) {
    for (unsigned c = 0; 2 * c <= t; ++c) CHECK(h(t, c) == pdc::h_fast(t, c, central));
  }
  CHECK_THROWS_AS(h(5, 3), std::domain_error);
  CHECK_THROWS_AS(h(32, 1), std::domain_error);
}
