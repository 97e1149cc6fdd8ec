#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "salem/analysis.hpp"

using namespace salem;
using testutil::kind_of;
using testutil::uniform_system;

namespace {

ModifiedSalem swap12_uniform() {
  return make_modified_salem(uniform_system(3), make_permutation({0, 2, 1}));
}

ModifiedSalem unbalanced_reversal() {
  return make_modified_salem(validate_system(2, {0.3, 0.7}),
                             reversal_permutation(2));
}

}  // namespace

TEST_CASE("constant tail values") {
  CHECK(constant_tail_value(uniform_system(3), 1) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(constant_tail_value(uniform_system(3), 0) == 0.0);
  CHECK(constant_tail_value(validate_system(2, {0.3, 0.7}), 1) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(kind_of([] { constant_tail_value(uniform_system(3), 3); }) ==
        ErrorKind::DigitOutOfRange);
}

TEST_CASE("increment over cylinders, hand-computed") {
  const ModifiedSalem f = swap12_uniform();
  const IncrementResult r0 = increment_on_cylinder(f, Cylinder{{0}});
  CHECK(r0.mu == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(r0.length == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r0.ratio == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(increment_on_cylinder(f, Cylinder{{0, 1}}).mu ==
        doctest::Approx(1.0 / 18.0).epsilon(1e-13));
}

TEST_CASE("increment agrees with the boundary values of f") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 100; ++i) {
    const int q = 2 + testutil::uint_below(rng, 3);
    const SalemSystem sys = testutil::random_system(q, rng);
    const ModifiedSalem f =
        make_modified_salem(sys, testutil::random_permutation(q, rng));
    std::vector<int> base(1 + static_cast<std::size_t>(testutil::uint_below(rng, 5)));
    for (auto& d : base) d = testutil::uint_below(rng, q);

    // value at sup taken inside the cylinder (top tail) minus value at inf
    const double hi =
        eval_on_digits(f, make_digit_string(sys, base, {q - 1}));
    const double lo = eval_on_digits(f, make_digit_string(sys, base));
    const IncrementResult r = increment_on_cylinder(f, Cylinder{base});
    CHECK(r.mu == doctest::Approx(hi - lo).epsilon(1e-12));
    CHECK(r.ratio == doctest::Approx(r.mu / r.length).epsilon(1e-12));
  }
}

TEST_CASE("derivative ratio sequence") {
  const ModifiedSalem f = unbalanced_reversal();
  const SalemSystem& sys = f.system;

  const auto seq0 = derivative_ratio_sequence(f, make_digit_string(sys, {}, {0}), 5);
  const auto seq1 = derivative_ratio_sequence(f, make_digit_string(sys, {}, {1}), 5);
  for (int m = 0; m < 5; ++m) {
    CHECK(seq0[static_cast<std::size_t>(m)] ==
          doctest::Approx(std::pow(7.0 / 3.0, m + 1)).epsilon(1e-12));
    CHECK(seq1[static_cast<std::size_t>(m)] ==
          doctest::Approx(std::pow(3.0 / 7.0, m + 1)).epsilon(1e-12));
  }

  // uniform weights make every ratio 1
  const ModifiedSalem g = swap12_uniform();
  for (double v : derivative_ratio_sequence(
           g, sample_digits(g.system, 50, 99), 50))
    CHECK(v == doctest::Approx(1.0).epsilon(1e-13));

  CHECK(kind_of([&] {
          derivative_ratio_sequence(f, make_digit_string(sys, {0}), 0);
        }) == ErrorKind::ArgumentOutOfDomain);
}

TEST_CASE("ratio sequence is the increment ratio up to the tail span") {
  std::mt19937_64 rng(67);
  const SalemSystem sys = testutil::random_system(3, rng);
  const ModifiedSalem f =
      make_modified_salem(sys, testutil::random_permutation(3, rng));
  const double span = constant_tail_value(sys, f.theta(sys.q - 1)) -
                      constant_tail_value(sys, f.theta(0));

  const DigitString d = sample_digits(sys, 12, 4242);
  const auto seq = derivative_ratio_sequence(f, d, 12);
  for (int m = 1; m <= 12; ++m) {
    std::vector<int> base(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
      base[static_cast<std::size_t>(k)] = d.digit_at(static_cast<std::size_t>(k));
    const IncrementResult r = increment_on_cylinder(f, Cylinder{base});
    CHECK(r.ratio ==
          doctest::Approx(span * seq[static_cast<std::size_t>(m - 1)])
              .epsilon(1e-10));
  }
}

TEST_CASE("singularity rate closed form") {
  CHECK(singularity_rate(unbalanced_reversal()) ==
        doctest::Approx(std::pow(7.0 / 3.0, -0.4)).epsilon(1e-12));
  // identity leaves the weights fixed
  const ModifiedSalem id = make_modified_salem(
      validate_system(3, {0.2, 0.3, 0.5}), identity_permutation(3));
  CHECK(singularity_rate(id) == 1.0);
  // any permutation of uniform weights leaves them fixed as well
  CHECK(singularity_rate(swap12_uniform()) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("singularity rate is at most 1") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 200; ++i) {
    const int q = 2 + testutil::uint_below(rng, 5);
    const ModifiedSalem f = make_modified_salem(
        testutil::random_system(q, rng, 0.5, 1.5),
        testutil::random_permutation(q, rng));
    CHECK(singularity_rate(f) <= 1.0 + 1e-12);
  }
}

TEST_CASE("ratio sequence decays like the singularity rate") {
  const ModifiedSalem f = unbalanced_reversal();
  const double log_k = std::log(singularity_rate(f));
  double avg = 0.0;
  const int trials = 20, rank = 500;
  for (int s = 0; s < trials; ++s) {
    const DigitString d =
        sample_digits(f.system, rank, 1000 + static_cast<std::uint64_t>(s));
    const auto seq = derivative_ratio_sequence(f, d, rank);
    avg += std::log(seq.back()) / rank;
  }
  avg /= trials;
  CHECK(std::abs(avg - log_k) < 0.05);
}

TEST_CASE("digit frequencies") {
  const SalemSystem u3 = uniform_system(3);
  const FrequencyTable t =
      digit_frequencies(u3, make_digit_string(u3, {0, 1, 2, 0}), 4);
  CHECK(t.counts == std::vector<long long>{2, 1, 1});
  CHECK(t.freqs[0] == doctest::Approx(0.5).epsilon(1e-15));

  const FrequencyTable p =
      digit_frequencies(u3, make_digit_string(u3, {0}, {1}), 100);
  CHECK(p.counts == std::vector<long long>{1, 99, 0});

  // sampled digits approach the weights
  const SalemSystem sys = validate_system(2, {0.3, 0.7});
  const FrequencyTable s =
      digit_frequencies(sys, sample_digits(sys, 10000, 5), 10000);
  CHECK(s.freqs[0] == doctest::Approx(0.3).epsilon(0.05));
  CHECK(s.freqs[1] == doctest::Approx(0.7).epsilon(0.05));

  CHECK(kind_of([&] {
          digit_frequencies(u3, make_digit_string(u3, {0}), 0);
        }) == ErrorKind::ArgumentOutOfDomain);
}

TEST_CASE("integral closed form, worked examples") {
  const IntegralResult id2 = integral_closed_form(
      make_modified_salem(uniform_system(2), identity_permutation(2)));
  CHECK(id2.value == doctest::Approx(0.5).epsilon(1e-12));

  const IntegralResult sw = integral_closed_form(swap12_uniform());
  CHECK(sw.numerator == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(sw.denominator == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(sw.value == doctest::Approx(0.5).epsilon(1e-12));

  const IntegralResult rev = integral_closed_form(unbalanced_reversal());
  CHECK(rev.numerator == doctest::Approx(0.09).epsilon(1e-12));
  CHECK(rev.denominator == doctest::Approx(0.58).epsilon(1e-12));
  CHECK(rev.value == doctest::Approx(0.09 / 0.58).epsilon(1e-12));
}

TEST_CASE("Riemann sums obey the exact error law") {
  // left-endpoint sums satisfy S_r - I = L1^r (f(0) - I) with
  // L1 = sum_m p_m p_theta(m)
  for (const ModifiedSalem& f : {swap12_uniform(), unbalanced_reversal()}) {
    const double value = integral_closed_form(f).value;
    const double f0 = constant_tail_value(f.system, f.theta(0));
    double l1 = 0.0;
    for (int m = 0; m < f.system.q; ++m)
      l1 += f.system.p[static_cast<std::size_t>(m)] *
            f.system.p[static_cast<std::size_t>(f.theta(m))];
    double prev = 1.0;
    for (int rank = 1; rank <= 8; ++rank) {
      const double s = integral_riemann(f, rank);
      const double predicted = value + std::pow(l1, rank) * (f0 - value);
      CHECK(s == doctest::Approx(predicted).epsilon(1e-12));
      CHECK(std::abs(s - value) <= prev + 1e-15);
      prev = std::abs(s - value);
    }
  }
}

TEST_CASE("Riemann sum guards") {
  const ModifiedSalem f = swap12_uniform();
  CHECK(kind_of([&] { integral_riemann(f, 0); }) == ErrorKind::ArgumentOutOfDomain);
  CHECK(kind_of([&] { integral_riemann(f, 15); }) == ErrorKind::RankTooLarge);
}

TEST_CASE("Moran equation solutions") {
  const MoranResult full = moran_dimension(uniform_system(4), {0, 1, 2, 3});
  CHECK(full.alpha == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(full.residual <= 1e-12);

  const MoranResult pair = moran_dimension(uniform_system(4), {2, 3});
  CHECK(pair.alpha == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(pair.residual <= 1e-12);

  const MoranResult third = moran_dimension(uniform_system(3), {0, 2});
  CHECK(third.alpha ==
        doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-10));

  const MoranResult single = moran_dimension(uniform_system(4), {1});
  CHECK(single.alpha == 0.0);
  CHECK(single.residual == 0.0);

  // duplicates collapse
  CHECK(moran_dimension(uniform_system(4), {1, 1, 2}).alpha ==
        doctest::Approx(0.5).epsilon(1e-10));

  CHECK(kind_of([] { moran_dimension(uniform_system(4), {}); }) ==
        ErrorKind::EmptyDigitSet);
  CHECK(kind_of([] { moran_dimension(uniform_system(4), {4}); }) ==
        ErrorKind::DigitOutOfRange);
}

TEST_CASE("Moran root shrinks when digits are removed") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 20; ++i) {
    const int q = 3 + testutil::uint_below(rng, 5);
    const SalemSystem sys = testutil::random_system(q, rng, 0.5, 1.5);
    std::vector<int> set(static_cast<std::size_t>(q));
    std::iota(set.begin(), set.end(), 0);
    double prev = moran_dimension(sys, set).alpha;
    while (set.size() > 1) {
      set.erase(set.begin() + testutil::uint_below(rng, static_cast<int>(set.size())));
      const double cur = moran_dimension(sys, set).alpha;
      CHECK(cur <= prev + 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("fixed point set classification") {
  const FixedSetClass interval = fixed_point_set(
      make_modified_salem(uniform_system(3), identity_permutation(3)));
  CHECK(interval.kind == FixedSetKind::Interval);
  REQUIRE(interval.dimension.has_value());
  CHECK(interval.dimension->alpha == doctest::Approx(1.0).epsilon(1e-12));

  const FixedSetClass single = fixed_point_set(swap12_uniform());
  CHECK(single.kind == FixedSetKind::Singleton);
  CHECK(single.fixed_digits == std::vector<int>{0});
  REQUIRE(single.point.has_value());
  CHECK(*single.point == 0.0);

  // fixed digit 2 pins the point beta_2 / (1 - p_2) = 1
  const FixedSetClass top = fixed_point_set(make_modified_salem(
      validate_system(3, {0.2, 0.3, 0.5}), make_permutation({1, 0, 2})));
  CHECK(top.kind == FixedSetKind::Singleton);
  REQUIRE(top.point.has_value());
  CHECK(*top.point == doctest::Approx(1.0).epsilon(1e-14));

  const FixedSetClass empty = fixed_point_set(
      make_modified_salem(uniform_system(2), reversal_permutation(2)));
  CHECK(empty.kind == FixedSetKind::Empty);

  const FixedSetClass fractal = fixed_point_set(
      make_modified_salem(uniform_system(4), make_permutation({0, 1, 3, 2})));
  CHECK(fractal.kind == FixedSetKind::Fractal);
  CHECK(fractal.fixed_digits == std::vector<int>{0, 1});
  REQUIRE(fractal.dimension.has_value());
  CHECK(fractal.dimension->alpha == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("graph dimension bounds") {
  const DimensionBounds d = graph_dimension_bounds(unbalanced_reversal());
  CHECK(d.a == 0.3);
  CHECK(d.b == 0.7);
  CHECK(d.alpha1 ==
        doctest::Approx(std::log(2.0) / std::log(1.0 / 0.3)).epsilon(1e-12));
  CHECK(d.alpha2 ==
        doctest::Approx(std::log(2.0) / std::log(1.0 / 0.7)).epsilon(1e-12));
  CHECK(d.lo == d.alpha1);
  CHECK(d.hi == d.alpha2);

  const DimensionBounds e = graph_dimension_bounds(make_modified_salem(
      validate_system(3, {0.2, 0.3, 0.5}), identity_permutation(3)));
  CHECK(e.alpha1 ==
        doctest::Approx(std::log(3.0) / std::log(5.0)).epsilon(1e-12));
  CHECK(e.alpha2 ==
        doctest::Approx(std::log(3.0) / std::log(2.0)).epsilon(1e-12));

  // uniform weights give the degenerate bracket exactly
  for (int q = 2; q <= 10; ++q) {
    const DimensionBounds u = graph_dimension_bounds(
        make_modified_salem(uniform_system(q), reversal_permutation(q)));
    CHECK(u.alpha1 == 1.0);
    CHECK(u.alpha2 == 1.0);
  }
}

TEST_CASE("monotonicity witness") {
  const auto w = monotonicity_witness(swap12_uniform(), 6);
  REQUIRE(w.has_value());
  CHECK(w->rank == 1);
  CHECK(w->x1 == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(w->x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(w->f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(w->f2 == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(w->x1 < w->x2);
  CHECK(w->f1 > w->f2);

  CHECK_FALSE(monotonicity_witness(
                  make_modified_salem(uniform_system(3), identity_permutation(3)), 6)
                  .has_value());
  CHECK_FALSE(monotonicity_witness(
                  make_modified_salem(uniform_system(3), reversal_permutation(3)), 6)
                  .has_value());

  const ModifiedSalem f = swap12_uniform();
  CHECK(kind_of([&] { monotonicity_witness(f, 0); }) ==
        ErrorKind::ArgumentOutOfDomain);
  CHECK(kind_of([&] { monotonicity_witness(f, 20); }) == ErrorKind::RankTooLarge);
}

TEST_CASE("sample_digits is deterministic and respects the alphabet") {
  const SalemSystem sys = validate_system(2, {0.3, 0.7});
  const DigitString a = sample_digits(sys, 64, 12345);
  const DigitString b = sample_digits(sys, 64, 12345);
  CHECK(a.prefix == b.prefix);
  CHECK(a.prefix.size() == 64);
  CHECK_FALSE(a.has_period());
  for (int d : a.prefix) {
    CHECK(d >= 0);
    CHECK(d < 2);
  }
  CHECK(sample_digits(sys, 64, 54321).prefix != a.prefix);
}
