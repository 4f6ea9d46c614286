#include <gtest/gtest.h>

#include <filesystem>

#include "json.hpp"
#include "kprime/builders.hpp"
#include "kprime/errors.hpp"
#include "kprime/io.hpp"
#include "support.hpp"

using namespace kprime;
using testing_support::corpus;

namespace {

  struct Entry {
    std::string file, kind, monoid;
  };

  std::vector<Entry> manifest() {
    auto const j = nlohmann::json::parse(read_file(corpus("manifest.json")));
    std::vector<Entry> out;
    for (auto const& e : j.at("entries")) {
      out.push_back({e.at("file"), e.at("kind"), e.value("monoid", "")});
    }
    return out;
  }

  std::size_t parse_error_line(std::string const& text) {
    try {
      parse_monoid(text);
    } catch (ParseError const& e) {
      return e.line;
    }
    return 0;
  }

}  // namespace

TEST(IO, ManifestCoversEveryCorpusFile) {
  std::set<std::string> listed;
  for (auto const& e : manifest()) {
    listed.insert(e.file);
    EXPECT_TRUE(std::filesystem::exists(corpus(e.file))) << e.file;
  }
  for (auto const& f : std::filesystem::directory_iterator(KPRIME_CORPUS_DIR)) {
    auto const name = f.path().filename().string();
    if (name != "manifest.json") {
      EXPECT_TRUE(listed.count(name)) << name;
    }
  }
}

TEST(IO, CorpusRoundTripIsBitExact) {
  for (auto const& e : manifest()) {
    std::string const text = read_file(corpus(e.file));
    EXPECT_EQ(to_string(detect_kind(text)), e.kind) << e.file;
    std::string again;
    if (e.kind == "monoid") {
      again = write_monoid(parse_monoid(text));
    } else if (e.kind == "group") {
      again = write_group(parse_group(text));
    } else if (e.kind == "nset") {
      again = write_nset(parse_nset(text));
    } else if (e.kind == "aset") {
      auto const m = testing_support::monoid(e.monoid);
      again        = write_aset(parse_aset(text, m));
    }
    EXPECT_EQ(again, text) << e.file;
  }
}

TEST(IO, CorpusJsonRoundTrip) {
  for (auto const& e : manifest()) {
    std::string const text = read_file(corpus(e.file));
    if (e.kind == "monoid") {
      auto const m = parse_monoid(text);
      auto const b = monoid_from_json(monoid_to_json(m));
      EXPECT_TRUE(b.same_table(m));
      EXPECT_EQ(b.name(), m.name());
    } else if (e.kind == "group") {
      auto const g = parse_group(text);
      EXPECT_EQ(group_from_json(group_to_json(g)).table(), g.table());
    } else if (e.kind == "nset") {
      auto const x = parse_nset(text);
      EXPECT_EQ(nset_from_json(nset_to_json(x)).succ_map(), x.succ_map());
    } else if (e.kind == "aset") {
      auto const m = testing_support::monoid(e.monoid);
      auto const x = parse_aset(text, m);
      EXPECT_EQ(aset_from_json(aset_to_json(x), m).table(), x.table());
    }
  }
}

TEST(IO, TailSuccessorIsNullInJson) {
  auto const j = nlohmann::json::parse(nset_to_json(parse_nset(read_file(corpus("fork_tail.nset")))));
  EXPECT_TRUE(j.at("succ").at(1).is_null());
}

TEST(IO, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("monoid M 2\n0 0\n0 x\n"), 3u);
  // A missing row is reported at the last line read.
  EXPECT_EQ(parse_error_line("# comment\nmonoid M 2\n0 0\n"), 3u);
  // Semantic failures are reported at the header.
  EXPECT_EQ(parse_error_line("\nmonoid M 2\n0 0\n0 0\n"), 2u);
  EXPECT_EQ(parse_error_line("monoid M 4\n0 0 0 0\n0 1 2 3\n0 2 3 0\n0 3 2 0\n"), 1u);
}

TEST(IO, CommentsAndBlankLinesAreIgnored) {
  auto const m = parse_monoid("# N/t^2\n\nmonoid A 3  # trailing\n0 0 0\n0 1 2\n\n0 2 0\n");
  EXPECT_TRUE(m.same_table(make_truncated_polynomial(2)));
}

TEST(IO, NSetTailsMustMatch) {
  EXPECT_THROW(parse_nset("nset x 2\nsucc: 0 -\n"), ParseError);
  EXPECT_THROW(parse_nset("nset x 3\nsucc: 0 - 1\ntails: 2\n"), ParseError);
  EXPECT_NO_THROW(parse_nset("nset x 3\nsucc: 0 - 1\ntails: 1\n"));
}

TEST(IO, ASetChecksItsMonoid) {
  auto const m = testing_support::monoid("ntr3.monoid");
  // Three rows for a four-element monoid.
  EXPECT_THROW(parse_aset("aset X over N/t^3 2\n0 0\n0 1\n0 0\n", m), ParseError);
}

TEST(IO, UnknownKindIsRejected) {
  EXPECT_THROW(detect_kind("ring R 2\n"), ParseError);
  EXPECT_THROW(read_file("/nonexistent/file"), Error);
}

TEST(IO, WriterOutputParses) {
  auto const g = symmetric_group(3);
  EXPECT_EQ(parse_group(write_group(g)).table(), g.table());
  auto const m = make_group_monoid(g);
  EXPECT_TRUE(parse_monoid(write_monoid(m)).same_table(m));
}
