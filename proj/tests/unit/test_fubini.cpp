#include "doctest.h"
#include "pdc/fubini.hpp"

using pdc::ExactInt;

TEST_CASE("ordinary Fubini numbers") {
  const pdc::FubiniTable f(10);
  const long expected[] = {1, 1, 3, 13, 75, 541, 4683, 47293, 545835, 7087261, 102247563};
  for (unsigned n = 0; n <= 10; ++n) CHECK(f.ordinary(n) == expected[n]);
}

TEST_CASE("f_{n,k} basic properties") {
  constexpr unsigned N = 60;
  const pdc::FubiniTable f(N);
  for (unsigned n = 0; n <= N; ++n) {
    CHECK(f(n, n) == pdc::factorial(n));
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(mpz_divisible_p(f(n, k).get_mpz_t(), pdc::factorial(k).get_mpz_t()));
      CHECK(f(n, k) <= f.ordinary(n));
    }
  }
}

TEST_CASE("row recurrence reproduces the definition") {
  constexpr unsigned N = 120;
  const pdc::FubiniTable f(N);
  pdc::Row row{ExactInt(1)};
  CHECK(row == f.row(0));
  for (unsigned n = 1; n <= N; ++n) {
    row = pdc::next_fubini_row(n, row);
    REQUIRE(row == f.row(n));
  }
}

TEST_CASE("g is symmetric in its summation order") {
  constexpr unsigned N = 80;
  const pdc::FubiniTable f(N);
  const pdc::GTable g(f);
  for (unsigned n = 0; n <= N; ++n) {
    CHECK(pdc::g_row(f.row(n)) == g.row(n));
    CHECK(pdc::g_row_reversed(f.row(n)) == g.row(n));
  }
  // g_{1,.}: f_{1,0} = f_{1,1} = 1
  CHECK(g.row(1).size() == 2);  // c <= n is all the sum ever needs
  CHECK(g(1, 0) == 1);
  CHECK(g(1, 1) == 2);
}

TEST_CASE("f_n mod small primes is eventually periodic") {
  // f_{n + (p-1)} == f_n (mod p) for n >= 1
  const pdc::FubiniTable f(150);
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL}) {
    for (unsigned n = 1; n + p - 1 <= 150; ++n) {
      const ExactInt d = f.ordinary(n + p - 1) - f.ordinary(n);
      CHECK(mpz_divisible_ui_p(d.get_mpz_t(), p));
    }
  }
}

TEST_CASE("convolution identity for n + k <= 14") {
  const auto checks = pdc::check_convolution(14, 14, 14);
  CHECK(checks.size() == 120);
  for (const auto& c : checks) {
    INFO("n=" << c.n << " k=" << c.k);
    CHECK(c.pass);
    CHECK(c.lhs == c.rhs);
  }
}
