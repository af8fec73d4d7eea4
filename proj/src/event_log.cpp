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

#include "parascope/event_log.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

namespace parascope {

using nlohmann::json;
using nlohmann::ordered_json;

std::string utc_timestamp_now() {
  using namespace std::chrono;
  const auto now = system_clock::now();
  const auto ms = duration_cast<milliseconds>(now.time_since_epoch()).count() % 1000;
  const std::time_t t = system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%S", &tm);
  char out[40];
  std::snprintf(out, sizeof(out), "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

std::string event_to_line(const EventRecord& event) {
  ordered_json j;
  j["ts"] = event.timestamp;
  j["session_id"] = event.session_id;
  j["kind"] = to_string(event.kind);
  j["payload"] = ordered_json::parse(event.payload.dump());
  return j.dump();
}

EventRecord event_from_line(const std::string& line) {
  try {
    const auto j = json::parse(line);
    EventRecord e;
    e.timestamp = j.at("ts").get<std::string>();
    e.session_id = j.at("session_id").get<std::string>();
    const auto kind = event_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw StorageError("unknown event kind");
    e.kind = *kind;
    e.payload = j.at("payload");
    return e;
  } catch (const json::exception& ex) {
    throw StorageError(std::string("malformed event: ") + ex.what());
  }
}

FileEventSink::FileEventSink(const std::filesystem::path& path) : path_(path) {
  fd_ = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CLOEXEC);
  if (fd_ < 0) {
    throw StorageError("cannot open event log " + path.string() + ": " + std::strerror(errno));
  }
}

FileEventSink::~FileEventSink() {
  if (fd_ >= 0) ::close(fd_);
}

void FileEventSink::append(const EventRecord& event) {
  const auto line = event_to_line(event) + "\n";
  std::size_t written = 0;
  while (written < line.size()) {
    const auto n = ::write(fd_, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw StorageError("write to " + path_.string() + " failed: " + std::strerror(errno));
    }
    written += static_cast<std::size_t>(n);
  }
  if (::fsync(fd_) != 0) {
    throw StorageError("fsync of " + path_.string() + " failed: " + std::strerror(errno));
  }
}

EventStore::EventStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path EventStore::path_for(const SessionId& id) const {
  return dir_ / (id + ".jsonl");
}

void EventStore::create(const SessionId& id) const {
  const auto path = path_for(id);
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_CLOEXEC, 0644);
  if (fd < 0) {
    throw StorageError("cannot create " + path.string() + ": " + std::strerror(errno));
  }
  const bool synced = ::fsync(fd) == 0;
  ::close(fd);
  if (!synced) throw StorageError("fsync of " + path.string() + " failed");
}

std::vector<SessionId> EventStore::sessions() const {
  std::vector<SessionId> out;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
    if (entry.path().extension() == ".jsonl") out.push_back(entry.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EventRecord> EventStore::read(const SessionId& id) const {
  std::ifstream in(path_for(id), std::ios::binary);
  if (!in) throw StorageError("cannot read log for session " + id);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto data = buf.str();
  std::vector<EventRecord> out;
  std::size_t pos = 0;
  while (pos < data.size()) {
    const auto nl = data.find('\n', pos);
    if (nl == std::string::npos) break;
    const auto line = data.substr(pos, nl - pos);
    if (!line.empty()) out.push_back(event_from_line(line));
    pos = nl + 1;
  }
  return out;
}

}  // namespace parascope
