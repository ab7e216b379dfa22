// Copyright 2026 The streetnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef STREETNAV_EVENT_LOG_H_
#define STREETNAV_EVENT_LOG_H_

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "streetnav/session_types.h"

namespace streetnav {

// Version written in the "v" field of every exported record.
inline constexpr int kEventLogVersion = 1;

// One NDJSON line, without the trailing newline:
//   {"v":1,"ts":<ms>,"kind":"Pan","payload":{...}}
std::string EncodeEvent(const SessionEvent& event);
absl::StatusOr<SessionEvent> DecodeEvent(const std::string& line);

// Parses a whole export; blank lines are skipped. Errors name the line.
absl::StatusOr<std::vector<SessionEvent>> ParseEventLog(const std::string& text);

// Folds one event into the state. This is the only place session state
// changes, both live and during replay.
void ApplyEvent(SessionState& state, const SessionEvent& event,
                int undo_capacity);

// Rebuilds the state produced by `events`. Fails when the first
// state-changing event is not a session start.
absl::StatusOr<SessionState> ReplayEvents(
    const std::vector<SessionEvent>& events, int undo_capacity);

class EventSink {
 public:
  virtual ~EventSink() = default;
  virtual void Append(const SessionEvent& event) = 0;
};

// Durable destination for flushed batches.
class LogStorage {
 public:
  virtual ~LogStorage() = default;
  virtual absl::Status WriteBatch(const std::vector<std::string>& lines) = 0;
};

class MemoryLogStorage final : public LogStorage {
 public:
  absl::Status WriteBatch(const std::vector<std::string>& lines) override;

  // Makes the next `n` writes fail.
  void FailNextWrites(int n);
  std::vector<std::string> lines() const;
  int batches_written() const;

 private:
  mutable std::mutex mu_;
  std::vector<std::string> lines_;
  int batches_ = 0;
  int failures_left_ = 0;
};

// Appends to a file, creating it if needed.
class FileLogStorage final : public LogStorage {
 public:
  explicit FileLogStorage(std::string path) : path_(std::move(path)) {}
  absl::Status WriteBatch(const std::vector<std::string>& lines) override;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Append-only log that writes to storage in batches of `batch_size`. A
// failed write keeps the batch pending and records a warning; navigation is
// never blocked. Close() flushes whatever is pending.
class EventLog final : public EventSink {
 public:
  EventLog(std::shared_ptr<LogStorage> storage, int batch_size);
  ~EventLog() override;

  void Append(const SessionEvent& event) override;
  absl::Status Flush();
  void Close();

  // Every record appended so far, flushed or not, newline terminated.
  std::string Export() const;
  std::vector<SessionEvent> events() const;

  size_t pending() const;
  size_t flushed() const;
  std::vector<std::string> warnings() const;

 private:
  absl::Status FlushLocked();

  const std::shared_ptr<LogStorage> storage_;
  const size_t batch_size_;
  mutable std::mutex mu_;
  std::vector<SessionEvent> events_;
  std::vector<std::string> lines_;
  size_t flushed_ = 0;
  std::vector<std::string> warnings_;
  bool closed_ = false;
};

}  // namespace streetnav

#endif  // STREETNAV_EVENT_LOG_H_
