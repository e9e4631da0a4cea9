#include "doctest.h"

#include "oracles.hpp"
#include "support.hpp"

#include "spinmap/reduction.hpp"

#include <random>

using namespace spinmap;

namespace {

HalfInt hi(std::int64_t doubled) { return HalfInt::from_doubled(doubled); }

SpinCouplings random_couplings(std::mt19937_64& rng, int two_s, std::int64_t gamma) {
  SpinCouplings c(two_s, gamma);
  for (const Symbol& sym : coupling_symbols(two_s)) c.set(sym, oracle::random_rational(rng));
  return c;
}

// prod_a sigma_a^{e_a} for a mixed-radix exponent pattern.
BigRational monomial_value(int p, std::uint64_t pattern, const std::vector<HalfInt>& digits) {
  BigRational v(1);
  for (const HalfInt& d : digits) {
    v *= d.to_rational().pow(static_cast<unsigned>(pattern % static_cast<std::uint64_t>(p)));
    pattern /= static_cast<std::uint64_t>(p);
  }
  return v;
}

}  // namespace

TEST_SUITE("couplings") {
  TEST_CASE("symbol family for spin 7/2") {
    const auto syms = coupling_symbols(7);
    CHECK(syms.size() == 19);
    CHECK(syms.front().name() == "J11");
    CHECK(syms.back().name() == "h6");
    CHECK(Symbol::coupling(5, 3) == Symbol::coupling(3, 5));
    CHECK(Symbol::field(4).term_name() == "gamma*h4");
  }

  TEST_CASE("text round trip") {
    std::mt19937_64 rng(3);
    const SpinCouplings c = random_couplings(rng, 7, 4);
    CHECK(SpinCouplings::parse(c.to_text()) == c);
  }

  TEST_CASE("parser") {
    const SpinCouplings c = SpinCouplings::parse("# comment\ngamma = 2\nJ53 = 1/2\nh6 = -3\n");
    CHECK(c.gamma() == 2);
    CHECK(c.J(3, 5) == BigRational(1, 2));
    CHECK(c.h(6) == BigRational(-3));
    CHECK(c.J(1, 1) == BigRational(0));
    CHECK(throws_kind([] { (void)SpinCouplings::parse("gamma = 1\nJ35 = 1\nJ53 = 2\n"); }, ErrorKind::Parse));
    CHECK(throws_kind([] { (void)SpinCouplings::parse("J11 = 1\n"); }, ErrorKind::Parse));
    CHECK(throws_kind([] { (void)SpinCouplings::parse("gamma = 1\nJ12 = 1\n"); }, ErrorKind::Parse));
    CHECK(throws_kind([] { (void)SpinCouplings::parse("gamma = 1\nh3 = 1\n"); }, ErrorKind::Parse));
    CHECK(throws_kind([] { (void)SpinCouplings::parse("gamma = 0\n"); }, ErrorKind::Parse));
    CHECK(throws_kind([] { (void)SpinCouplings::parse("gamma = 1\nJ11 1\n"); }, ErrorKind::Parse));
  }

  TEST_CASE("unknown symbols and gamma") {
    SpinCouplings c(7, 1);
    CHECK(throws_kind([&] { c.set(Symbol::coupling(1, 2), BigRational(1)); }, ErrorKind::InvalidArgument));
    CHECK(throws_kind([&] { c.set_gamma(0); }, ErrorKind::InvalidArgument));
  }

  TEST_CASE("coupling form printing") {
    CouplingForm f;
    CHECK(f.str() == "0");
    f.add(Symbol::coupling(1, 1), BigRational(1));
    f.add(Symbol::coupling(1, 3), BigRational(61, 4));
    f.add(Symbol::field(2), BigRational(2));
    CHECK(f.str() == "J11 + 61/4*J13 + 2*gamma*h2");
  }

  TEST_CASE("layer constant names") {
    LayerCouplings k;
    k.at("K21") = BigRational(3);
    CHECK(k.K(2, 1) == BigRational(3));
    CHECK(LayerCouplings::names()[18] == "R");
    CHECK(throws_kind([] { (void)LayerCouplings::index_of("K44"); }, ErrorKind::InvalidArgument));
    CHECK(throws_kind([&] { (void)k.R(2, 1); }, ErrorKind::IndexOutOfRange));
  }
}

TEST_SUITE("bond energies") {
  TEST_CASE("spin examples") {
    SpinCouplings c(7, 1);
    c.set(Symbol::coupling(1, 1), BigRational(1));
    CHECK(bond_energy_spin(hi(7), hi(7), c) == BigRational(49, 4));

    SpinCouplings f(7, 4);
    f.set(Symbol::field(2), BigRational(1));
    CHECK(bond_energy_spin(hi(1), hi(-3), f) == BigRational(5));

    CHECK(bond_energy_spin(hi(3), hi(-5), SpinCouplings(7, 1)) == BigRational(0));
    CHECK(throws_kind([&] { (void)bond_energy_spin(hi(9), hi(1), c); }, ErrorKind::SpinOutOfRange));
    CHECK(throws_kind([&] { (void)bond_energy_spin(hi(2), hi(1), c); }, ErrorKind::SpinOutOfRange));
  }

  TEST_CASE("layer examples") {
    const std::vector<HalfInt> up{hi(1), hi(1), hi(1)};
    LayerCouplings k;
    k.at("K11") = BigRational(1);
    CHECK(bond_energy_layers(up, up, k) == BigRational(1, 4));

    LayerCouplings r;
    r.at("R") = BigRational(1);
    CHECK(bond_energy_layers(up, up, r) == BigRational(1, 64));

    // glue constant multiplies the plain monomial on each site
    LayerCouplings g;
    g.at("K21") = BigRational(1);
    CHECK(bond_energy_layers(std::vector<HalfInt>{hi(1), hi(1), hi(-1)}, std::vector<HalfInt>{hi(-1), hi(-1), hi(1)},
                             g) == BigRational(1, 2));

    CHECK(throws_kind([&] { (void)bond_energy_layers(std::vector<HalfInt>{hi(1)}, up, k); }, ErrorKind::ShapeMismatch));
    CHECK(throws_kind([&] { (void)bond_energy_layers(std::vector<HalfInt>{hi(1), hi(3), hi(1)}, up, k); },
                      ErrorKind::DigitOutOfRange));
  }

  TEST_CASE("spin energy matches the direct formula, is up-down and exchange symmetric") {
    std::mt19937_64 rng(17);
    for (int n = 0; n < 10; ++n) {
      const SpinCouplings c = random_couplings(rng, 7, 1 + n % 4);
      for (std::int64_t a = -7; a <= 7; a += 2) {
        for (std::int64_t b = -7; b <= 7; b += 2) {
          const BigRational e = bond_energy_spin(hi(a), hi(b), c);
          CHECK(e == oracle::spin_bond(c, hi(a), hi(b)));
          CHECK(e == bond_energy_spin(hi(-a), hi(-b), c));
          CHECK(e == bond_energy_spin(hi(b), hi(a), c));
        }
      }
    }
  }

  TEST_CASE("layer energy matches the spelled-out monomials and is exchange symmetric") {
    std::mt19937_64 rng(23);
    const auto states = oracle::cluster_states(2, 3);
    for (int n = 0; n < 10; ++n) {
      LayerCouplings k;
      for (std::size_t i = 0; i < LayerCouplings::kCount; ++i) k[i] = oracle::random_rational(rng);
      for (const auto& [si, di] : states) {
        for (const auto& [sj, dj] : states) {
          const BigRational e = bond_energy_layers(di, dj, k);
          CHECK(e == oracle::layer_bond(k, di, dj));
          CHECK(e == bond_energy_layers(dj, di, k));
        }
      }
    }
  }
}

TEST_SUITE("reduction") {
  TEST_CASE("tabulated examples") {
    SpinCouplings c(7, 1);
    c.set(Symbol::coupling(1, 3), BigRational(1));
    CHECK(reduce_couplings_7_2(c).at("K11") == BigRational(61, 4));

    SpinCouplings r(7, 1);
    r.set(Symbol::coupling(7, 7), BigRational(1));
    CHECK(reduce_couplings_7_2(r).R() == BigRational(134861769));

    SpinCouplings h(7, 2);
    h.set(Symbol::field(6), BigRational(1));
    CHECK(reduce_couplings_7_2(h).at("K21") == BigRational(6331, 4));

    CHECK(throws_kind([] { (void)reduce_couplings_7_2(SpinCouplings(5, 1)); }, ErrorKind::InvalidArgument));
  }

  TEST_CASE("derive (2,3) single coupling") {
    const DerivedReduction d = derive_reduction(ClusterSpec(2, 3));
    CHECK(d.coefficient({1, 1}).coefficient(Symbol::coupling(1, 3)) == BigRational(61, 4));
    CHECK(d.pattern_name({1, 6}) == "s1i*s2j*s3j");
    CHECK(d.pattern_name({0, 0}) == "1");
  }

  TEST_CASE("derive (2,2) with J11: (s1 + 2 s2)(s1' + 2 s2')") {
    const DerivedReduction d = derive_reduction(ClusterSpec(2, 2));
    const Symbol j11 = Symbol::coupling(1, 1);
    CHECK(d.coefficient({1, 1}).coefficient(j11) == BigRational(1));
    CHECK(d.coefficient({1, 2}).coefficient(j11) == BigRational(2));
    CHECK(d.coefficient({2, 1}).coefficient(j11) == BigRational(2));
    CHECK(d.coefficient({2, 2}).coefficient(j11) == BigRational(4));
    CHECK(d.coefficient({3, 3}).coefficient(j11) == BigRational(0));
    CHECK(d.coefficient({3, 0}).coefficient(j11) == BigRational(0));
  }

  TEST_CASE("derive (2,1) is the identity map") {
    const DerivedReduction d = derive_reduction(ClusterSpec(2, 1));
    CHECK(d.coefficient({1, 1}).coefficient(Symbol::coupling(1, 1)) == BigRational(1));
    CHECK(d.coefficient({1, 1}).terms().size() == 1);
  }

  TEST_CASE("derived monomial sum reproduces the spin energy") {
    std::mt19937_64 rng(29);
    for (auto [p, M] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 1}, std::pair{3, 2},
                        std::pair{4, 2}, std::pair{2, 4}}) {
      const ClusterSpec spec(p, M);
      const DerivedReduction d = derive_reduction(spec);
      const int two_s = static_cast<int>(spec.states()) - 1;
      const SpinCouplings c = random_couplings(rng, two_s, 3);
      std::map<BondPattern, BigRational> values;
      for (const auto& [pattern, form] : d.terms) values[pattern] = form.evaluate(c);
      const auto states = oracle::cluster_states(p, M);
      for (const auto& [si, di] : states) {
        for (const auto& [sj, dj] : states) {
          BigRational sum;
          for (const auto& [pattern, v] : values) {
            sum += v * monomial_value(p, pattern.site_i, di) * monomial_value(p, pattern.site_j, dj);
          }
          CAPTURE(p);
          CAPTURE(M);
          CHECK(sum == oracle::spin_bond(c, si, sj));
        }
      }
    }
  }

  TEST_CASE("derived (2,3) layer forms equal the tabulated ones") {
    const LayerFormulas f = layer_formulas(derive_reduction(ClusterSpec(2, 3)));
    for (std::size_t i = 0; i < LayerCouplings::kCount; ++i) {
      CAPTURE(LayerCouplings::names()[i]);
      CHECK(f.constants[i] == tabulated_formulas()[i]);
    }
    CHECK(throws_kind([] { (void)layer_formulas(derive_reduction(ClusterSpec(2, 2))); }, ErrorKind::InvalidArgument));
  }

  TEST_CASE("derive limit") {
    CHECK(throws_kind([] { (void)derive_reduction(ClusterSpec(2, 6)); }, ErrorKind::LimitExceeded));
    CHECK_NOTHROW((void)derive_reduction(ClusterSpec(2, 1), 2));
  }
}

TEST_SUITE("equivalence") {
  TEST_CASE("zero models") {
    const EquivalenceResult r = equivalence_check(SpinCouplings(7, 1), LayerCouplings{});
    CHECK(r.equivalent);
    CHECK(r.offset == BigRational(0));
    CHECK(r.configurations_checked == 64);
  }

  TEST_CASE("mismatched models report a violation") {
    SpinCouplings c(7, 1);
    c.set(Symbol::coupling(1, 1), BigRational(1));
    const EquivalenceResult r = equivalence_check(c, LayerCouplings{});
    CHECK_FALSE(r.equivalent);
    CHECK(r.violation.has_value());
  }

  TEST_CASE("random couplings with their reduction") {
    std::mt19937_64 rng(31);
    for (int n = 0; n < 20; ++n) {
      const SpinCouplings c = random_couplings(rng, 7, 2 * (1 + n % 3));
      const EquivalenceResult r = equivalence_check(c, reduce_couplings_7_2(c));
      CHECK(r.equivalent);
      // the offset is the spin energy minus the layer energy at any configuration
      const std::vector<HalfInt> down{hi(-1), hi(-1), hi(-1)};
      CHECK(r.offset == oracle::spin_bond(c, hi(-7), hi(-7)) - oracle::layer_bond(reduce_couplings_7_2(c), down, down));
    }
  }

  TEST_CASE("derived constant equals the equivalence offset") {
    std::mt19937_64 rng(37);
    const LayerFormulas f = layer_formulas(derive_reduction(ClusterSpec(2, 3)));
    for (int n = 0; n < 5; ++n) {
      const SpinCouplings c = random_couplings(rng, 7, 2);
      CHECK(f.offset.evaluate(c) == equivalence_check(c, reduce_couplings_7_2(c)).offset);
    }
  }
}
