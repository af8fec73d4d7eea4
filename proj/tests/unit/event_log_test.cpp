// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <fstream>
#include <unistd.h>

#include "parascope/event_log.hpp"
#include "support/fixture.hpp"

namespace parascope {
namespace {

EventRecord sample(std::string ts = "2026-01-01T00:00:00.000Z") {
  return {std::move(ts), "abc", EventKind::click_reference, {{"paper_id", "a"}}};
}

TEST(EventLine, FieldOrderAndRoundTrip) {
  const auto line = event_to_line(sample());
  EXPECT_EQ(line,
            R"({"ts":"2026-01-01T00:00:00.000Z","session_id":"abc","kind":"click_reference",)"
            R"("payload":{"paper_id":"a"}})");
  EXPECT_EQ(event_from_line(line), sample());
  EXPECT_THROW(event_from_line("{"), StorageError);
  EXPECT_THROW(event_from_line(R"({"ts":"x","session_id":"a","kind":"bogus","payload":{}})"),
               StorageError);
}

TEST(Timestamp, Format) {
  const auto ts = utc_timestamp_now();
  ASSERT_EQ(ts.size(), 24u);
  EXPECT_EQ(ts[10], 'T');
  EXPECT_EQ(ts.back(), 'Z');
}

TEST(EventStore, AppendAndRead) {
  testing::TempDir dir;
  EventStore store(dir.path());
  store.create("abc");
  EXPECT_THROW(store.create("abc"), StorageError);
  {
    FileEventSink sink(store.path_for("abc"));
    sink.append(sample("2026-01-01T00:00:00.000Z"));
    sink.append(sample("2026-01-01T00:00:01.000Z"));
  }
  const auto events = store.read("abc");
  ASSERT_EQ(events.size(), 2u);
  EXPECT_EQ(events[1].timestamp, "2026-01-01T00:00:01.000Z");
  EXPECT_EQ(store.sessions(), std::vector<SessionId>{"abc"});
}

TEST(EventStore, TornTrailingLineIgnored) {
  testing::TempDir dir;
  EventStore store(dir.path());
  store.create("abc");
  {
    std::ofstream out(store.path_for("abc"), std::ios::app);
    out << event_to_line(sample()) << "\n" << event_to_line(sample()).substr(0, 20);
  }
  EXPECT_EQ(store.read("abc").size(), 1u);
}

TEST(EventStore, CorruptMiddleLineIsAnError) {
  testing::TempDir dir;
  EventStore store(dir.path());
  store.create("abc");
  {
    std::ofstream out(store.path_for("abc"), std::ios::app);
    out << "garbage\n" << event_to_line(sample()) << "\n";
  }
  EXPECT_THROW(store.read("abc"), StorageError);
}

TEST(EventStore, ReadOnlyDirectoryFails) {
  if (::geteuid() == 0) GTEST_SKIP() << "root ignores directory permissions";
  testing::TempDir dir;
  std::filesystem::permissions(dir.path(), std::filesystem::perms::owner_read |
                                               std::filesystem::perms::owner_exec);
  EXPECT_THROW(EventStore(dir.path()).create("abc"), StorageError);
}

}  // namespace
}  // namespace parascope
