#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace ucycle;
using namespace ucycle::literals;
using testing_support::for_each_word;
using testing_support::naive_is_necklace;

TEST_CASE("parse and str round-trip") {
  CHECK("0102"_w.str() == "0102");
  CHECK("0102"_w.size() == 4);
  CHECK(Word::parse("1,12,3").size() == 3);
  CHECK(Word::parse("1,12,3")[1] == 12);
  CHECK(to_string(Word::parse("1,12,3")) == "1,12,3");
}

TEST_CASE("period and aperiodic prefix") {
  CHECK(period("010101"_w) == 2);
  CHECK(period("011011"_w) == 3);
  CHECK(period("0111"_w) == 4);
  CHECK(period("0000"_w) == 1);
  CHECK(aperiodic_prefix("010101"_w) == "01"_w);
  CHECK(aperiodic_prefix("001001"_w) == "001"_w);
  // A word of period p that does not divide n is aperiodic.
  CHECK(aperiodic_prefix("01010"_w) == "01010"_w);
  const std::vector<Word> ws = {"0"_w, "0001"_w, "0101"_w};
  CHECK(ap_concat(ws) == "0000101"_w);
}

TEST_CASE("rotations and reversals") {
  CHECK(rotate_left("0123"_w, 1) == "1230"_w);
  CHECK(rotate_left("0123"_w, 4) == "0123"_w);
  CHECK(reversed("0112"_w) == "2110"_w);
  CHECK(rotation_class("0101"_w).size() == 2);
  CHECK(rotation_class("0011"_w).size() == 4);
}

TEST_CASE("necklace tests agree with the quadratic reference") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for_each_word(n, Alphabet::binary(), [&](SymbolView w) {
      REQUIRE(is_necklace(w) == naive_is_necklace(w));
      const auto [neck, off] = necklace_of(w);
      REQUIRE(naive_is_necklace(neck));
      REQUIRE(neck == rotate_left(w, off));
    });
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_word(n, Alphabet::kary(3), [&](SymbolView w) { REQUIRE(is_necklace(w) == naive_is_necklace(w)); });
  }
}

TEST_CASE("FKM visits exactly the necklaces in lexicographic order") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (unsigned k : {2u, 3u}) {
      std::vector<Word> expected;
      for_each_word(n, Alphabet::kary(k), [&](SymbolView w) {
        if (naive_is_necklace(w)) expected.emplace_back(w);
      });
      std::vector<Word> got;
      for_each_necklace(n, Alphabet::kary(k), [&](SymbolView w) { got.emplace_back(w); });
      REQUIRE(got == expected);
    }
  }
  std::size_t count = 0;
  for_each_necklace(6, Alphabet::binary(), [&](SymbolView) { ++count; });
  CHECK(count == 14);
}

TEST_CASE("bracelets and asymmetry") {
  CHECK(bracelet_of("0011010"_w) == bracelet_of(reversed("0011010"_w)));
  CHECK(is_asymmetric_bracelet("00001011"_w));
  CHECK_FALSE(is_asymmetric_bracelet("00001101"_w));  // a necklace, but not the bracelet representative
  CHECK_FALSE(is_asymmetric_bracelet("00110011"_w));  // palindromic class
  CHECK_FALSE(is_asymmetric_bracelet("0101"_w));
  std::size_t count = 0;
  for_each_necklace(6, Alphabet::binary(), [&](SymbolView w) { count += is_asymmetric_bracelet(w); });
  CHECK(count == 1);
}

TEST_CASE("weak orders and shorthand permutations") {
  CHECK(is_weak_order("1114"_w));
  CHECK(is_weak_order("1324"_w));
  CHECK(is_weak_order("1133"_w));
  CHECK(is_weak_order("1224"_w));
  CHECK_FALSE(is_weak_order("1113"_w));
  CHECK_FALSE(is_weak_order("2121"_w));
  CHECK_FALSE(is_weak_order("2222"_w));
  // Ordered Bell numbers.
  const std::size_t fubini[] = {1, 3, 13, 75, 541};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    for_each_word(n, Alphabet::ranks(static_cast<unsigned>(n)), [&](SymbolView w) { count += is_weak_order(w); });
    CHECK(count == fubini[n - 1]);
  }
  CHECK(is_shorthand_perm("132"_w, 4));
  CHECK_FALSE(is_shorthand_perm("133"_w, 4));
  CHECK_FALSE(is_shorthand_perm("135"_w, 4));
}

TEST_CASE("weight and cyclic runs") {
  CHECK(weight("010110"_w) == 3);
  CHECK(longest_cyclic_run("100110"_w, 0) == 2);
  CHECK(longest_cyclic_run("011100"_w, 0) == 3);
  CHECK(longest_cyclic_run("1111"_w, 1) == 4);
  CHECK(longest_cyclic_run("1111"_w, 0) == 0);
}
