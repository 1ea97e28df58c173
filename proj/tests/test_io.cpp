#include "repstab/io.hpp"

#include <gtest/gtest.h>

using namespace repstab;

namespace {

std::vector<Decomposition> samples() {
  std::vector<Decomposition> out;
  Decomposition s(Family::SYM, 7);
  s.add(Partition{3, 1}, 1);
  s.add(Partition{}, 2);
  out.push_back(s);
  Decomposition h(Family::HYP, 4);
  h.add(DoublePartition{Partition{1}, Partition{1, 1}}, 3);
  h.add(DoublePartition{}, 1);
  out.push_back(h);
  Decomposition g(Family::GL, 3, true);
  g.add(PseudoPartition{1, 0, -1}, -2);
  g.add(PseudoPartition{2}, 1);
  out.push_back(g);
  Decomposition p(Family::SP, 3);
  p.add(Partition{1, 1}, 1);
  out.push_back(p);
  out.emplace_back(Family::SL, 4);
  return out;
}

} // namespace

TEST(IO, JsonRoundTrip) {
  for (const auto& d : samples()) {
    auto j = to_json(d);
    auto back = decomposition_from_json(json::parse(j.dump()));
    EXPECT_EQ(back, d);
    EXPECT_EQ(back.is_virtual(), d.is_virtual());
  }
}

TEST(IO, JsonShape) {
  auto j = to_json(samples()[1]);
  EXPECT_EQ(j["family"], "HYP");
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["terms"][0]["lambda"]["plus"], json::array({1}));
  EXPECT_EQ(j["terms"][0]["lambda"]["minus"], json::array({1, 1}));
  EXPECT_EQ(j["terms"][0]["mult"], 3);
  auto s = to_json(samples()[0]);
  EXPECT_EQ(s["terms"][0]["lambda"], json::array({3, 1}));
  EXPECT_EQ(s["terms"][1]["lambda"], json::array());
}

TEST(IO, OutputIsByteStable) {
  for (const auto& d : samples()) EXPECT_EQ(to_json(d).dump(), to_json(decomposition_from_json(to_json(d))).dump());
}

TEST(IO, TextFormats) {
  const Decomposition d = samples()[0];
  EXPECT_EQ(to_table_row(d), "V(3,1) + V(0)^2");
  EXPECT_EQ(to_tsv(d), "family\tn\tlambda\tmult\nSYM\t7\t3,1\t1\nSYM\t7\t0\t2\n");
  EXPECT_EQ(to_table_row(samples()[4]), "0");
}

TEST(IO, Sequences) {
  json arr = json::array();
  for (int n = 4; n <= 7; ++n) {
    Decomposition d(Family::SYM, n);
    d.add(Partition{1}, 1);
    arr.push_back(to_json(d));
  }
  auto seq = sequence_from_json(arr);
  EXPECT_EQ(seq.first(), 4);
  EXPECT_EQ(seq.last(), 7);
  json wrapped{{"provenance", "test"}, {"entries", arr}};
  EXPECT_EQ(sequence_from_json(wrapped).provenance, "test");
  auto report = to_json(detect(seq, 3));
  EXPECT_EQ(report["verdict"], "stable");
  EXPECT_EQ(report["uniform_onset"], 4);
  arr.erase(1);
  EXPECT_THROW(sequence_from_json(arr), Error);
}

TEST(IO, MalformedInputIsAUsageError) {
  for (const char* text : {R"({"family":"SYM"})", R"({"family":"XYZ","n":3,"terms":[]})",
                           R"({"family":"SYM","n":3,"terms":[{"lambda":"x","mult":1}]})"}) {
    try {
      decomposition_from_json(json::parse(text));
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Usage) << text;
    }
  }
}
