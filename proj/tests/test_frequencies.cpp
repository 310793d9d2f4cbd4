#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "crofton/frequencies.hpp"
#include "crofton/geometry.hpp"
#include "support.hpp"

using namespace crofton;
using test_support::uniform;

namespace {

const double kSqrt2 = std::numbers::sqrt2;

SymbolSequence binary_seq(const std::string& symbols, double h = 1.0) {
  return {symbols, std::map<Symbol, double>{{'0', 0.0}, {'1', h}}};
}

std::string random_binary_string(std::mt19937_64& rng, std::size_t len) {
  std::string s = "0";
  while (s.size() < len) s.push_back(rng() % 2 ? '1' : '0');
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("frequencies");

TEST_CASE("count_blocks and empirical_frequencies") {
  const BlockCounts counts = count_blocks({"010101", std::nullopt});
  CHECK(counts.total == 5);
  CHECK(counts.counts.at({'0', '1'}) == 3);
  CHECK(counts.counts.at({'1', '0'}) == 2);
  CHECK(counts.counts.size() == 2);

  const BlockFrequencies freqs = empirical_frequencies({"010101", std::nullopt});
  CHECK(freqs.freqs.at({'0', '1'}) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(freqs.freqs.at({'1', '0'}) == doctest::Approx(0.4).epsilon(1e-15));

  const BlockFrequencies flat = empirical_frequencies({"0000", std::nullopt});
  CHECK(flat.freqs.at({'0', '0'}) == 1.0);

  CHECK_THROWS_AS(count_blocks({"0", std::nullopt}), std::invalid_argument);
}

TEST_CASE("Thue-Morse empirical block frequencies at 2^16") {
  const BlockFrequencies freqs = empirical_frequencies(thue_morse(1 << 16));
  CHECK(std::abs(freqs.freqs.at({'0', '0'}) - 1.0 / 6) < 1e-3);
  CHECK(std::abs(freqs.freqs.at({'1', '1'}) - 1.0 / 6) < 1e-3);
  CHECK(std::abs(freqs.freqs.at({'0', '1'}) - 1.0 / 3) < 1e-3);
  CHECK(std::abs(freqs.freqs.at({'1', '0'}) - 1.0 / 3) < 1e-3);
}

TEST_CASE("finite_binary_inconstancy base cases") {
  CHECK(finite_binary_inconstancy(binary_seq("01"), 1.0) == 1.0);
  CHECK(finite_binary_inconstancy(binary_seq("010"), 1.0) ==
        doctest::Approx(2 * kSqrt2 / (1 + kSqrt2)).epsilon(1e-14));
  CHECK(finite_binary_inconstancy(binary_seq("00000"), 1.0) == 1.0);

  const SymbolSequence mixed = binary_seq("00110");
  CHECK(std::abs(finite_binary_inconstancy(mixed, 1.0) -
                 inconstancy(polyline_from_sequence(mixed)).inconstancy) <
        1e-12);

  CHECK_THROWS_AS(finite_binary_inconstancy(binary_seq("10"), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(finite_binary_inconstancy({"0a", std::nullopt}, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(finite_binary_inconstancy(binary_seq("01"), 0.0),
                  std::invalid_argument);
}

TEST_CASE("finite binary formula equals the geometric route") {
  std::mt19937_64 rng(211);
  for (int i = 0; i < 300; ++i) {
    const std::size_t len = 3 + rng() % 63;  // indices 0..N, N in [2,65]
    const double h = (i % 2 == 0) ? 1.0 : 2.5;
    const SymbolSequence seq = binary_seq(random_binary_string(rng, len), h);
    const double formula = finite_binary_inconstancy(seq, h);
    const double geometric =
        inconstancy(polyline_from_sequence(seq)).inconstancy;
    CHECK(std::abs(formula - geometric) < 1e-9);
  }
}

TEST_CASE("asymptotic_inconstancy from block frequencies") {
  const std::map<Symbol, double> binary{{'0', 0.0}, {'1', 1.0}};

  BlockFrequencies diag;
  diag.freqs[{'0', '0'}] = 1.0;
  CHECK(asymptotic_inconstancy(diag, binary) == 1.0);

  BlockFrequencies alt;
  alt.freqs[{'0', '1'}] = 0.5;
  alt.freqs[{'1', '0'}] = 0.5;
  CHECK(asymptotic_inconstancy(alt, binary) ==
        doctest::Approx(kSqrt2).epsilon(1e-15));

  BlockFrequencies flat;
  for (const Symbol a : {'0', '1'})
    for (const Symbol b : {'0', '1'}) flat.freqs[{a, b}] = 0.25;
  CHECK(asymptotic_inconstancy(flat, binary) ==
        doctest::Approx((1 + kSqrt2) / 2).epsilon(1e-15));

  BlockFrequencies bad;
  bad.freqs[{'0', '1'}] = 0.7;
  CHECK_THROWS_AS(asymptotic_inconstancy(bad, binary), std::invalid_argument);
  CHECK_THROWS_AS(
      asymptotic_inconstancy(alt, {{'0', 1.0}, {'1', 1.0}}),
      std::invalid_argument);
}

TEST_CASE("binary asymptotic values stay inside [1, sqrt(2)]") {
  const std::map<Symbol, double> binary{{'0', 0.0}, {'1', 1.0}};
  std::mt19937_64 rng(223);
  for (int i = 0; i < 200; ++i) {
    double w[4] = {uniform(rng, 0, 1), uniform(rng, 0, 1), uniform(rng, 0, 1),
                   uniform(rng, 0, 1)};
    const double total = w[0] + w[1] + w[2] + w[3];
    BlockFrequencies freqs;
    freqs.freqs[{'0', '0'}] = w[0] / total;
    freqs.freqs[{'0', '1'}] = w[1] / total;
    freqs.freqs[{'1', '0'}] = w[2] / total;
    freqs.freqs[{'1', '1'}] = w[3] / total;
    const double inc = asymptotic_inconstancy(freqs, binary);
    CHECK(inc >= 1.0);
    CHECK(inc <= kSqrt2 + 1e-12);
  }

  // the bounds are attained exactly when the off-diagonal (resp. diagonal)
  // frequencies vanish
  BlockFrequencies level;
  level.freqs[{'0', '0'}] = 0.6;
  level.freqs[{'1', '1'}] = 0.4;
  CHECK(asymptotic_inconstancy(level, binary) == 1.0);
  BlockFrequencies zigzag;
  zigzag.freqs[{'0', '1'}] = 0.3;
  zigzag.freqs[{'1', '0'}] = 0.7;
  CHECK(asymptotic_inconstancy(zigzag, binary) ==
        doctest::Approx(kSqrt2).epsilon(1e-15));
}

TEST_CASE("incidence matrix orientation: rows are source letters") {
  const IncidenceMatrix tm = incidence_matrix(Morphism::parse("0:01,1:10"));
  CHECK(tm.matrix == std::vector<std::vector<std::int64_t>>{{1, 1}, {1, 1}});

  const IncidenceMatrix pd = incidence_matrix(Morphism::parse("1:10,0:11"));
  CHECK(pd.alphabet == std::vector<Symbol>{'1', '0'});
  CHECK(pd.matrix == std::vector<std::vector<std::int64_t>>{{1, 1}, {2, 0}});
}

TEST_CASE("primitivity detection") {
  CHECK(is_primitive(incidence_matrix(Morphism::parse("0:01,1:10"))));
  CHECK(is_primitive(incidence_matrix(Morphism::parse("1:10,0:11"))));
  CHECK_FALSE(is_primitive(incidence_matrix(Morphism::parse("a:aa,b:bb"))));
  CHECK_FALSE(is_primitive(incidence_matrix(Morphism::parse("a:bb,b:aa"))));
}

TEST_CASE("pair morphism of Thue-Morse is the classical 4-letter morphism") {
  const PairMorphism pm = pair_morphism(Morphism::parse("0:01,1:10"));
  CHECK(pm.morphism.uniform_length() == 2);
  REQUIRE(pm.morphism.alphabet() == std::vector<Symbol>{'a', 'b', 'c', 'd'});
  CHECK(pm.morphism.image('a') == "ab");
  CHECK(pm.morphism.image('b') == "ca");
  CHECK(pm.morphism.image('c') == "cd");
  CHECK(pm.morphism.image('d') == "ac");
  CHECK(pm.start == 'a');
  // the four length-2 blocks of the fixed point, in discovery order
  CHECK(pm.blocks.at('a') == BlockKey{'0', '1'});
  CHECK(pm.blocks.at('b') == BlockKey{'1', '1'});
  CHECK(pm.blocks.at('c') == BlockKey{'1', '0'});
  CHECK(pm.blocks.at('d') == BlockKey{'0', '0'});
}

TEST_CASE("pair morphism restricts to reachable blocks") {
  const PairMorphism pd = pair_morphism(Morphism::parse("1:10,0:11"));
  CHECK(pd.blocks.size() == 3);  // 00 never occurs
  std::set<BlockKey> blocks;
  for (const auto& [letter, block] : pd.blocks) blocks.insert(block);
  CHECK(blocks ==
        std::set<BlockKey>{{'1', '0'}, {'0', '1'}, {'1', '1'}});

  CHECK_THROWS_AS(pair_morphism(Morphism::parse("0:010,1:10,2:0102,3:33")),
                  std::invalid_argument);
}

TEST_CASE("pair morphism of a k-uniform morphism is k-uniform") {
  for (const char* spec : {"0:01,1:10", "1:10,0:11", "a:ab,b:cd,c:ad,d:cb",
                           "0:0010,1:1101"}) {
    const Morphism m = Morphism::parse(spec);
    const PairMorphism pm = pair_morphism(m);
    CHECK(pm.morphism.uniform_length() == m.uniform_length());
  }
}

TEST_CASE("perron_frequencies on the classical morphisms") {
  const auto pd = perron_frequencies(Morphism::parse("1:10,0:11"));
  CHECK(std::abs(pd.at('1') - 2.0 / 3) < 1e-10);
  CHECK(std::abs(pd.at('0') - 1.0 / 3) < 1e-10);

  const auto tm = perron_frequencies(Morphism::parse("0:01,1:10"));
  CHECK(std::abs(tm.at('0') - 0.5) < 1e-12);
  CHECK(std::abs(tm.at('1') - 0.5) < 1e-12);

  const BlockFrequencies blocks =
      exact_block_frequencies(Morphism::parse("0:01,1:10"));
  CHECK(std::abs(blocks.freqs.at({'0', '0'}) - 1.0 / 6) < 1e-10);
  CHECK(std::abs(blocks.freqs.at({'1', '1'}) - 1.0 / 6) < 1e-10);
  CHECK(std::abs(blocks.freqs.at({'0', '1'}) - 1.0 / 3) < 1e-10);
  CHECK(std::abs(blocks.freqs.at({'1', '0'}) - 1.0 / 3) < 1e-10);

  CHECK_THROWS_AS(perron_frequencies(Morphism::parse("a:bb,b:aa")),
                  NotPrimitiveError);
}

TEST_CASE("perron eigenvector residual") {
  for (const char* spec : {"0:01,1:10", "1:10,0:11", "a:ab,b:cd,c:ad,d:cb"}) {
    const Morphism m = pair_morphism(Morphism::parse(spec)).morphism;
    const IncidenceMatrix im = incidence_matrix(m);
    const auto freqs = perron_frequencies(m);
    const double k = static_cast<double>(*m.uniform_length());
    for (std::size_t j = 0; j < im.alphabet.size(); ++j) {
      double row = 0.0;
      for (std::size_t i = 0; i < im.alphabet.size(); ++i)
        row += freqs.at(im.alphabet[i]) *
               static_cast<double>(im.matrix[i][j]);
      CHECK(std::abs(row - k * freqs.at(im.alphabet[j])) < 1e-10);
    }
  }
}

TEST_CASE("perron frequencies agree with empirical counts") {
  for (const char* spec : {"0:01,1:10", "1:10,0:11"}) {
    const Morphism m = Morphism::parse(spec);
    const BlockFrequencies exact = exact_block_frequencies(m);
    const SymbolSequence prefix = fixed_point(m, m.alphabet().front(), 1 << 16);
    const BlockFrequencies empirical = empirical_frequencies(prefix);
    for (const auto& [block, f] : exact.freqs)
      CHECK(std::abs(f - empirical.freqs.at(block)) < 1e-3);
  }
}

TEST_CASE("periodic_inconstancy closed form") {
  CHECK(periodic_inconstancy(1) == doctest::Approx(kSqrt2).epsilon(1e-15));
  CHECK(periodic_inconstancy(2) ==
        doctest::Approx((1 + 2 * kSqrt2) / 3).epsilon(1e-15));
  CHECK(std::abs(periodic_inconstancy(1000000) - 1.0) < 1e-5);
  CHECK_THROWS_AS(periodic_inconstancy(0), std::invalid_argument);
}

TEST_CASE("sturmian_inconstancy closed form") {
  const double golden = (3.0 - std::sqrt(5.0)) / 2.0;
  CHECK(sturmian_inconstancy(golden) ==
        doctest::Approx(1 + 2 * (kSqrt2 - 1) * golden).epsilon(1e-15));
  CHECK(sturmian_inconstancy(1e-9) > 1.0);
  CHECK(std::abs(sturmian_inconstancy(1e-9) - 1.0) < 1e-8);
  for (const double a : {0.1, 0.25, 0.49}) {
    CHECK(sturmian_inconstancy(a) > 1.0);
    CHECK(sturmian_inconstancy(a) < kSqrt2);
  }
  CHECK_THROWS_AS(sturmian_inconstancy(0.6), std::invalid_argument);
  CHECK_THROWS_AS(sturmian_inconstancy(0.0), std::invalid_argument);

  // against empirical frequencies of a long prefix
  const BlockFrequencies freqs =
      empirical_frequencies(sturmian(golden, 0.0, 100000));
  const double empirical =
      asymptotic_inconstancy(freqs, {{'0', 0.0}, {'1', 1.0}});
  CHECK(std::abs(sturmian_inconstancy(golden) - empirical) < 1e-4);
}

TEST_CASE("named_constants") {
  const auto constants = named_constants();
  CHECK(constants.at("random") ==
        doctest::Approx((1 + kSqrt2) / 2).epsilon(1e-15));
  CHECK(constants.at("thue_morse") ==
        doctest::Approx((1 + 2 * kSqrt2) / 3).epsilon(1e-15));
  CHECK(constants.at("rudin_shapiro") == constants.at("random"));
  CHECK(constants.at("paperfolding") == constants.at("random"));
  CHECK(constants.at("alternating") == doctest::Approx(kSqrt2).epsilon(1e-15));
}

TEST_CASE("prefix inconstancy approaches the closed forms") {
  const auto prefix_inconstancy = [](const SymbolSequence& seq) {
    return inconstancy(polyline_from_sequence(seq)).inconstancy;
  };
  CHECK(std::abs(prefix_inconstancy(thue_morse(1 << 16)) -
                 (1 + 2 * kSqrt2) / 3) < 1e-2);
  CHECK(std::abs(prefix_inconstancy(rudin_shapiro(1 << 16)) -
                 (1 + kSqrt2) / 2) < 1e-2);
  CHECK(std::abs(prefix_inconstancy(paperfolding(1 << 16)) -
                 (1 + kSqrt2) / 2) < 1e-2);
  CHECK(std::abs(prefix_inconstancy(periodic("01", 1 << 16)) - kSqrt2) < 1e-2);
  CHECK(std::abs(prefix_inconstancy(periodic("0001", 1 << 16)) -
                 periodic_inconstancy(3)) < 1e-2);
}

TEST_SUITE_END();
