#include <gtest/gtest.h>

#include "lexigauge/unicode.hpp"

namespace u = lexigauge::unicode;

TEST(Unicode, DecodeEncodeRoundTrip) {
  const std::string s = "Caf\xc3\xa9 \xe2\x80\x94 \xce\xb1\xf0\x9f\x98\x80";
  const auto d = u::decode(s);
  EXPECT_EQ(d.size(), 9u);
  EXPECT_EQ(u::encode(d), s);
}

TEST(Unicode, InvalidBytesBecomeReplacement) {
  const auto d = u::decode("a\xff" "b\xc3");
  ASSERT_EQ(d.size(), 4u);
  EXPECT_EQ(d[1], u::kReplacement);
  EXPECT_EQ(d[3], u::kReplacement);
  // overlong encoding of '/'
  EXPECT_EQ(u::decode("\xc0\xaf")[0], u::kReplacement);
}

TEST(Unicode, LengthCountsScalarValues) {
  EXPECT_EQ(u::length("Se\xc3\xb1or"), 5u);
  EXPECT_EQ(u::length(""), 0u);
}

TEST(Unicode, Lowercase) {
  EXPECT_EQ(u::encode(u::to_lower(u::decode("\xc3\x89" "COLE \xce\x91\xce\x92 \xd0\x96"))),
            "\xc3\xa9" "cole \xce\xb1\xce\xb2 \xd0\xb6");
  EXPECT_TRUE(u::is_upper(U'A'));
  EXPECT_FALSE(u::is_upper(U'a'));
  EXPECT_FALSE(u::is_upper(U'7'));
}

TEST(Unicode, WordCharacters) {
  EXPECT_TRUE(u::is_word_char(U'a'));
  EXPECT_TRUE(u::is_word_char(U'9'));
  EXPECT_TRUE(u::is_word_char(0xF1));   // n with tilde
  EXPECT_TRUE(u::is_word_char(0x0301)); // combining acute
  EXPECT_FALSE(u::is_word_char(U'-'));
  EXPECT_FALSE(u::is_word_char(U'_'));
  EXPECT_FALSE(u::is_word_char(0x2014));
  EXPECT_FALSE(u::is_word_char(U' '));
}

TEST(Unicode, FoldDiacritics) {
  EXPECT_EQ(u::encode(u::fold_diacritics(u::decode("se\xc3\xb1or S\xc3\xa3o \xc3\x86on stra\xc3\x9f" "e"))),
            "senor Sao AEon strasse");
  EXPECT_EQ(u::encode(u::fold_diacritics(u::decode("e\xcc\x81"))), "e");
}
