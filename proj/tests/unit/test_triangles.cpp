#include <vector>

#include "doctest.h"
#include "pdc/triangles.hpp"

using pdc::ExactInt;
using pdc::Row;
using pdc::TriangleKind;
using pdc::TriangleTable;

namespace {

Row ints(std::initializer_list<long> v) {
  Row r;
  for (long x : v) r.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("small rows") {
  CHECK(pdc::binomial_row(4) == ints({1, 4, 6, 4, 1}));
  CHECK(pdc::stirling1_row(4) == ints({0, 6, 11, 6, 1}));
  CHECK(pdc::stirling2_row(4) == ints({0, 1, 7, 6, 1}));
  CHECK(pdc::t_row(4) == ints({0, 1, 21, 14, 1}));
  CHECK(pdc::stirling1_row(0) == ints({1}));
  CHECK(pdc::t_row(0) == ints({1}));
}

TEST_CASE("extended binomial") {
  CHECK(pdc::binomial(-1, 0) == 1);
  CHECK(pdc::binomial(-1, 3) == 0);
  CHECK(pdc::binomial(3, 5) == 0);
  CHECK(pdc::binomial(60, 30) == ExactInt("118264581564861424"));
  CHECK_THROWS_AS(pdc::binomial(-2, 0), std::domain_error);
  CHECK_THROWS_AS(pdc::binomial(3, -1), std::domain_error);
}

TEST_CASE("table access past the diagonal is zero") {
  const TriangleTable s2(TriangleKind::stirling2, 10);
  CHECK(s2(5, 9) == 0);
  CHECK(s2(10, 3) == 9330);
  CHECK_THROWS(s2.row(11));
}

TEST_CASE("Lah numbers: sum_j s(n,j) S(j,k) = binomial(n-1,k-1) n!/k!") {
  constexpr unsigned N = 30;
  const TriangleTable s1(TriangleKind::stirling1, N);
  const TriangleTable s2(TriangleKind::stirling2, N);
  for (unsigned n = 1; n <= N; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      ExactInt sum = 0;
      for (unsigned j = k; j <= n; ++j) sum += s1(n, j) * s2(j, k);
      CHECK(sum == pdc::binomial(n - 1, k - 1) * pdc::factorial(n) / pdc::factorial(k));
    }
  }
}

TEST_CASE("x^n = sum_k S(n,k) x(x-1)...(x-k+1)") {
  const TriangleTable s2(TriangleKind::stirling2, 25);
  for (long x : {-3L, 0L, 2L, 7L, 31L}) {
    for (unsigned n = 0; n <= 25; ++n) {
      ExactInt sum = 0, falling = 1;
      for (unsigned k = 0; k <= n; ++k) {
        sum += s2(n, k) * falling;
        falling *= x - static_cast<long>(k);
      }
      CHECK(sum == pdc::pow_ui(ExactInt(x), n));
    }
  }
}

TEST_CASE("sum_k (-1)^(n-k) s(n,k) S(k,m) = [n == m]") {
  constexpr unsigned N = 25;
  const TriangleTable s1(TriangleKind::stirling1, N);
  const TriangleTable s2(TriangleKind::stirling2, N);
  for (unsigned n = 0; n <= N; ++n) {
    for (unsigned m = 0; m <= N; ++m) {
      ExactInt sum = 0;
      for (unsigned k = 0; k <= n; ++k) {
        const ExactInt term = s1(n, k) * s2(k, m);
        sum += (n - k) % 2 ? -term : term;
      }
      CHECK(sum == (n == m ? 1 : 0));
    }
  }
}

TEST_CASE("streamed rows equal dense rows with at most two resident") {
  constexpr unsigned N = 200;
  for (TriangleKind kind : {TriangleKind::binomial, TriangleKind::stirling1, TriangleKind::stirling2,
                            TriangleKind::centralT}) {
    const TriangleTable dense(kind, N);
    unsigned seen = 0;
    bool same = true;
    const std::size_t peak = pdc::stream_rows(kind, N, [&](unsigned n, const Row& row) {
      same = same && n == seen && row == dense.row(n);
      ++seen;
    });
    CHECK(same);
    CHECK(seen == N + 1);
    CHECK(peak <= 2);
  }
}
