#include <gtest/gtest.h>

#include <sstream>

#include "graycode/error.hpp"
#include "graycode/family.hpp"
#include "graycode/text_format.hpp"
#include "reference.hpp"

using namespace graycode;

TEST(TextFormat, RoundTripsBothLayouts) {
  const Code c = Code::from_strings(4, 3, false, {"000", "013", "312"});
  for (auto f : {text::Format::Digits, text::Format::Spaced}) {
    std::stringstream ss;
    text::write_code(ss, c, f);
    const auto parsed = text::read_code(ss, 4);
    EXPECT_EQ(ref::strings(parsed.code), ref::strings(c));
  }
}

TEST(TextFormat, WritesExactBytes) {
  const Code c = Code::from_strings(12, 2, false, {"0 11", "1 11"});
  std::ostringstream os;
  text::write_code(os, c, text::Format::Spaced);
  EXPECT_EQ(os.str(), "0 11\n1 11\n");
  EXPECT_THROW(text::write_code(os, c, text::Format::Digits), InvalidArgument);
}

TEST(TextFormat, SkipsCommentsAndRecordsLines) {
  std::istringstream in("# header\n\n01\n  \n11\r\n10\n");
  const auto parsed = text::read_code(in);
  EXPECT_EQ(parsed.code.size(), 3u);
  EXPECT_EQ(parsed.code.radix(), 2);
  EXPECT_EQ(parsed.lines, (std::vector<std::size_t>{3, 5, 6}));
}

TEST(TextFormat, InfersRadixFromLargestDigit) {
  std::istringstream in("1 2 3\n3 1 2\n");
  EXPECT_EQ(text::read_code(in).code.radix(), 4);
  std::istringstream zeros("00\n");
  EXPECT_EQ(text::read_code(zeros).code.radix(), 2);
}

TEST(TextFormat, MalformedLinesCarryTheirNumber) {
  auto line_of = [](const std::string& s, std::optional<int> radix = std::nullopt) -> std::size_t {
    std::istringstream in(s);
    try {
      text::read_code(in, radix);
    } catch (const text::ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("01\n0x\n"), 2u);
  EXPECT_EQ(line_of("01\n\n011\n"), 3u);
  EXPECT_EQ(line_of("01\n02\n", 2), 2u);
  EXPECT_EQ(line_of("1 2\n1 -2\n"), 2u);
  EXPECT_EQ(line_of("# nothing\n"), 1u);
}

TEST(Family, NamesRoundTrip) {
  EXPECT_EQ(all_families().size(), 13u);
  for (Family f : all_families()) EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_FALSE(parse_family("binary"));
}

TEST(Family, InfoSummaries) {
  FamilyParams p;
  p.n = 6;
  EXPECT_EQ(family_info(Family::PermReverse, p).summary(), "does not exist: n ≡ 2 (mod 4)");
  p.q = 4;
  p.n = 3;
  EXPECT_EQ(family_info(Family::QaryLee, p).summary(),
            "does not exist in Lee metric; see qary-lee-missing / qary-hamming");
  FamilyParams s;
  s.n = 3;
  EXPECT_EQ(family_info(Family::SubsetsComplementary, s).summary(),
            "20 words, cyclic, complement at separation 10");
  s.n = 5;
  EXPECT_EQ(family_info(Family::BinaryOddAll, s).summary(),
            "32 words, cyclic, complement at separations 15, 17");
}

TEST(Family, MissingOrBadParametersAreRejected) {
  FamilyParams p;
  EXPECT_THROW(family_info(Family::BinaryComplementary, p), InvalidArgument);
  p.n = 3;
  EXPECT_THROW(family_info(Family::QaryLee, p), InvalidArgument);
  p.q = 1;
  EXPECT_THROW(family_info(Family::QaryLee, p), InvalidArgument);
  FamilyParams a;
  a.q = 4;
  a.n = 3;
  a.anchor = "01";
  EXPECT_THROW(generate(Family::QaryLeeMissing, a), InvalidArgument);
}

TEST(Family, NonexistenceCitesTheCondition) {
  FamilyParams p;
  p.n = 5;
  try {
    generate(Family::BinaryComplementary, p);
    FAIL() << "expected NonexistenceError";
  } catch (const NonexistenceError& e) {
    EXPECT_STREQ(e.what(), "n odd: complementary binary code cannot exist");
  }
  p.n = 7;
  EXPECT_THROW(declared_spec(Family::PermReverse, p), NonexistenceError);
}

TEST(Family, EverySmallInstanceSatisfiesItsDeclaredSpec) {
  struct Case {
    Family f;
    FamilyParams p;
  };
  auto qn = [](int q, long long n) {
    FamilyParams p;
    p.q = q;
    p.n = n;
    return p;
  };
  auto just_n = [](long long n) {
    FamilyParams p;
    p.n = n;
    return p;
  };
  FamilyParams smc;
  smc.m = 7;
  smc.k = 3;
  FamilyParams adj;
  adj.m = 10;
  FamilyParams anchored = qn(4, 3);
  anchored.anchor = "213";
  const std::vector<Case> cases = {
      {Family::BinaryComplementary, just_n(6)}, {Family::BinaryOddMissingTwo, just_n(7)},
      {Family::BinaryOddAll, just_n(7)},        {Family::QaryLee, qn(5, 3)},
      {Family::QaryLee, qn(4, 2)},              {Family::QaryLeeMissing, qn(4, 3)},
      {Family::QaryLeeMissing, anchored},       {Family::QaryLeeBounded, qn(4, 3)},
      {Family::QaryHamming, qn(4, 3)},          {Family::QaryHamming, qn(2, 4)},
      {Family::SubsetsComplementary, just_n(4)}, {Family::SubsetsSmc, smc},
      {Family::SubsetsAdjacent, adj},           {Family::PermReverse, just_n(5)},
      {Family::PermSjt, just_n(5)},             {Family::MultisetCycle, just_n(7)},
  };
  for (const auto& c : cases) {
    const Code code = generate(c.f, c.p);
    const FamilyInfo info = family_info(c.f, c.p);
    EXPECT_EQ(code.size(), info.words) << to_string(c.f);
    const Report r = verify_code(code, declared_spec(c.f, c.p));
    EXPECT_TRUE(r.pass) << to_string(c.f) << "\n" << describe(r);
  }
}
