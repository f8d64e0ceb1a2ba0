#include "dmlat/params.hpp"

#include <doctest.h>

using namespace dmlat;

namespace {

// Independent oracle: the census rows with their derived quantities, frozen
// as exact rationals (p, k, l, d, t, mu1, mu2-4, mu5).
struct RowOracle {
  const char* p;
  const char* k;
  const char* l;
  const char* d;
  const char* t;
  const char* mu1;
  const char* mu234;
  const char* mu5;
};

constexpr RowOracle kRows[39] = {
    {"3", "4", "-12", "-2", "1/3", "7/12", "1/6", "11/12"},
    {"3", "5", "-30", "-2", "7/30", "19/30", "1/6", "13/15"},
    {"3", "6", "inf", "-2", "1/6", "2/3", "1/6", "5/6"},
    {"4", "3", "-12", "-4", "5/12", "5/12", "1/4", "5/6"},
    {"4", "4", "inf", "-4", "1/4", "1/2", "1/4", "3/4"},
    {"5", "2", "-5", "-10", "7/10", "1/5", "3/10", "9/10"},
    {"5", "5/2", "-10", "-10", "1/2", "3/10", "3/10", "4/5"},
    {"5", "3", "-30", "-10", "11/30", "11/30", "3/10", "11/15"},
    {"6", "2", "-6", "inf", "2/3", "1/6", "1/3", "5/6"},
    {"6", "3", "inf", "inf", "1/3", "1/3", "1/3", "2/3"},
    {"3", "7", "42", "-2", "5/42", "29/42", "1/6", "17/21"},
    {"3", "8", "24", "-2", "1/12", "17/24", "1/6", "19/24"},
    {"3", "9", "18", "-2", "1/18", "13/18", "1/6", "7/9"},
    {"3", "10", "15", "-2", "1/30", "11/15", "1/6", "23/30"},
    {"3", "12", "12", "-2", "0", "3/4", "1/6", "3/4"},
    {"4", "5", "20", "-4", "3/20", "11/20", "1/4", "7/10"},
    {"4", "6", "12", "-4", "1/12", "7/12", "1/4", "2/3"},
    {"4", "8", "8", "-4", "0", "5/8", "1/4", "5/8"},
    {"5", "4", "20", "-10", "1/5", "9/20", "3/10", "13/20"},
    {"5", "5", "10", "-10", "1/10", "1/2", "3/10", "3/5"},
    {"6", "4", "12", "inf", "1/6", "5/12", "1/3", "7/12"},
    {"6", "6", "6", "inf", "0", "1/2", "1/3", "1/2"},
    {"7", "2", "-7", "14", "9/14", "1/7", "5/14", "11/14"},
    {"8", "2", "-8", "8", "5/8", "1/8", "3/8", "3/4"},
    {"9", "2", "-9", "6", "11/18", "1/9", "7/18", "13/18"},
    {"10", "2", "-10", "5", "3/5", "1/10", "2/5", "7/10"},
    {"12", "2", "-12", "4", "7/12", "1/12", "5/12", "2/3"},
    {"18", "2", "-18", "3", "5/9", "1/18", "4/9", "11/18"},
    {"7", "3", "42", "14", "13/42", "13/42", "5/14", "13/21"},
    {"8", "3", "24", "8", "7/24", "7/24", "3/8", "7/12"},
    {"9", "3", "18", "6", "5/18", "5/18", "7/18", "5/9"},
    {"10", "3", "15", "5", "4/15", "4/15", "2/5", "8/15"},
    {"12", "3", "12", "4", "1/4", "1/4", "5/12", "1/2"},
    {"18", "3", "9", "3", "2/9", "2/9", "4/9", "4/9"},
    {"7", "7/2", "14", "14", "3/14", "5/14", "5/14", "4/7"},
    {"8", "4", "8", "8", "1/8", "3/8", "3/8", "1/2"},
    {"9", "9/2", "6", "6", "1/18", "7/18", "7/18", "4/9"},
    {"10", "5", "5", "5", "0", "2/5", "2/5", "2/5"},
    {"12", "4", "6", "4", "1/12", "1/3", "5/12", "5/12"},
};

}  // namespace

TEST_CASE("lattice_table reproduces the census exactly") {
  const auto& table = lattice_table();
  REQUIRE(table.size() == 39);
  for (int i = 0; i < 39; ++i) {
    const auto& row = table[i];
    CAPTURE(i);
    CHECK(row.p == ExtRational::parse(kRows[i].p));
    CHECK(row.k == ExtRational::parse(kRows[i].k));
    CHECK(row.l == ExtRational::parse(kRows[i].l));
    CHECK(row.d == ExtRational::parse(kRows[i].d));
    CHECK(row.t == ExtRational::parse(kRows[i].t));
    CHECK(row.mu[0] == ExtRational::parse(kRows[i].mu1));
    CHECK(row.mu[1] == ExtRational::parse(kRows[i].mu234));
    CHECK(row.mu[2] == row.mu[1]);
    CHECK(row.mu[3] == row.mu[1]);
    CHECK(row.mu[4] == ExtRational::parse(kRows[i].mu5));
    CHECK(row.in_table);
  }
}

TEST_CASE("every census row is a ball quintuple") {
  for (const auto& row : lattice_table()) {
    const std::string rowtag_ = row.p.str() + "," + row.k.str(); CAPTURE(rowtag_);
    CHECK(ball_quintuple_check(row.mu));
  }
}

TEST_CASE("ball_quintuple_check rejects non-lattice parameters") {
  // (p,k) = (11,2): 1/l = 1/2 - 1/11 - 1/2 = -1/11, fine, but mu-pair
  // integrality fails, so the quintuple condition must reject it.
  const LatticeParams bad = derive_params(ExtRational(11), ExtRational(2));
  CHECK_FALSE(ball_quintuple_check(bad.mu));
  // A quintuple that does not sum to 2.
  std::array<ExtRational, 5> wrong_sum = {ExtRational(1, 2), ExtRational(1, 4),
                                          ExtRational(1, 4), ExtRational(1, 4),
                                          ExtRational(1, 4)};
  CHECK_FALSE(ball_quintuple_check(wrong_sum));
}

TEST_CASE("classify matches the four collapse regimes") {
  using C = CollapseCase;
  CHECK(classify(ExtRational(7), ExtRational(7, 2)) == C::FullD);
  CHECK(classify(ExtRational(10), ExtRational(5)) == C::FullD);
  CHECK(classify(ExtRational(3), ExtRational(7)) == C::CollapseZ345);
  CHECK(classify(ExtRational(4), ExtRational(5)) == C::CollapseZ345);
  CHECK(classify(ExtRational(7), ExtRational(2)) == C::CollapseThreeTriples);
  CHECK(classify(ExtRational(18), ExtRational(2)) == C::CollapseThreeTriples);
  CHECK(classify(ExtRational(18), ExtRational(3)) == C::FullD);
  CHECK(classify(ExtRational(3), ExtRational(4)) == C::CollapseAllFour);
  CHECK(classify(ExtRational(6), ExtRational(3)) == C::CollapseAllFour);
  // Equality k = 2p/(p-2) lands in the collapsed branch: (6,3), (4,4), (3,6).
  CHECK(classify(ExtRational(4), ExtRational(4)) == C::CollapseAllFour);
  CHECK(classify(ExtRational(3), ExtRational(6)) == C::CollapseAllFour);
}

TEST_CASE("symmetric rows are flagged, with the right frame") {
  int via_k = 0, via_l = 0;
  for (const auto& row : lattice_table()) {
    if (!row.symmetric) continue;
    if (row.symmetric_via_l) {
      ++via_l;
      CHECK(row.l * ExtRational(2) == row.p);
    } else {
      ++via_k;
      CHECK(row.k * ExtRational(2) == row.p);
    }
  }
  // k = p/2: (5,5/2), (6,3), (7,7/2), (8,4), (9,9/2), (10,5); l = p/2: (12,4), (18,3).
  CHECK(via_k == 6);
  CHECK(via_l == 2);
  CHECK(find_lattice(ExtRational(12), ExtRational(4))->symmetric_via_l);
  CHECK(find_lattice(ExtRational(18), ExtRational(3))->symmetric_via_l);
}

TEST_CASE("derive_params validates its inputs") {
  CHECK_THROWS_AS(derive_params(ExtRational(5, 2), ExtRational(3)), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(ExtRational(2), ExtRational(3)), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(ExtRational(7), ExtRational(7, 3)), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(ExtRational(7), ExtRational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(ExtRational::infinity(), ExtRational(3)), std::invalid_argument);
}

TEST_CASE("cone angles match the closed forms and sum to 6 pi") {
  for (const auto& row : lattice_table()) {
    const auto a = cone_angles(row);
    const double pi = 3.14159265358979323846;
    const double th = row.theta(), ph = row.phi();
    CHECK(a[0] == doctest::Approx(pi - th + 2 * ph));
    CHECK(a[1] == doctest::Approx(pi + th));
    CHECK(a[2] == doctest::Approx(pi + th));
    CHECK(a[3] == doctest::Approx(pi + th));
    CHECK(a[4] == doctest::Approx(2 * pi - 2 * th - 2 * ph));
    // Gauss-Bonnet for the flat octagon: total angle defect is fixed.
    CHECK(a[0] + a[1] + a[2] + a[3] + a[4] == doctest::Approx(6 * pi));
  }
}

TEST_CASE("find_lattice distinguishes table rows from valid non-rows") {
  CHECK(find_lattice(ExtRational(7), ExtRational(7, 2)).has_value());
  CHECK_FALSE(find_lattice(ExtRational(11), ExtRational(2)).has_value());
  const LatticeParams off = derive_params(ExtRational(11), ExtRational(2));
  CHECK_FALSE(off.in_table);
}

TEST_CASE("ExtRational arithmetic with infinities") {
  const ExtRational inf = ExtRational::infinity();
  CHECK(inf.reciprocal() == ExtRational(0));
  CHECK(ExtRational(0).reciprocal().is_infinite());
  CHECK((inf * ExtRational(3)).is_infinite());
  CHECK((inf + ExtRational(5)).is_infinite());
  CHECK(ExtRational(2, 4) == ExtRational(1, 2));
  CHECK(ExtRational(-6, 4) == ExtRational(-3, 2));
  CHECK(ExtRational::parse("7/2") == ExtRational(7, 2));
  CHECK(ExtRational::parse("-12") == ExtRational(-12));
  CHECK(ExtRational(1, 2) < ExtRational(2, 3));
}
