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

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "parascope/session.hpp"

namespace parascope {

class StorageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp_now();

// One event per line with keys in the order ts, session_id, kind, payload.
std::string event_to_line(const EventRecord& event);
EventRecord event_from_line(const std::string& line);

/// Append-only log file; every append is flushed to stable storage before
/// returning.
class FileEventSink : public EventSink {
 public:
  explicit FileEventSink(const std::filesystem::path& path);
  ~FileEventSink() override;
  FileEventSink(const FileEventSink&) = delete;
  FileEventSink& operator=(const FileEventSink&) = delete;

  void append(const EventRecord& event) override;

 private:
  std::filesystem::path path_;
  int fd_ = -1;
};

/// Directory of per-session logs, `<dir>/<session_id>.jsonl`.
class EventStore {
 public:
  explicit EventStore(std::filesystem::path dir);

  // Creates an empty log; throws StorageError if it exists or cannot be made.
  void create(const SessionId& id) const;
  std::vector<SessionId> sessions() const;

  // A trailing line without a newline (torn write) is ignored.
  std::vector<EventRecord> read(const SessionId& id) const;
  std::filesystem::path path_for(const SessionId& id) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace parascope
