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


#ifndef STREETNAV_GATEWAY_SPEECH_H_
#define STREETNAV_GATEWAY_SPEECH_H_

#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "streetnav/announcer.h"

namespace streetnav::gateway {

// Voices messages when the gateway is self-voicing. Status and chat use
// different voices. Implementations must be thread-safe.
class SpeechProvider {
 public:
  virtual ~SpeechProvider() = default;
  virtual void Speak(const std::string& text, VoiceChannel channel) = 0;
  virtual void Stop() = 0;
  virtual void set_rate(double rate) = 0;
  virtual double rate() const = 0;
};

struct Utterance {
  std::string text;
  VoiceChannel channel = VoiceChannel::kStatus;
  double rate = 1.0;
  friend bool operator==(const Utterance&, const Utterance&) = default;
};

// Records what would have been spoken.
class CaptureSpeechProvider final : public SpeechProvider {
 public:
  void Speak(const std::string& text, VoiceChannel channel) override;
  void Stop() override;
  void set_rate(double rate) override;
  double rate() const override;

  std::vector<Utterance> utterances() const;
  int stops() const;

 private:
  mutable std::mutex mu_;
  std::vector<Utterance> utterances_;
  int stops_ = 0;
  double rate_ = 1.0;
};

// Writes one "(voice <channel> x<rate>) text" line per utterance, for
// piping into an external synthesizer.
class StreamSpeechProvider final : public SpeechProvider {
 public:
  explicit StreamSpeechProvider(std::ostream& out) : out_(out) {}
  void Speak(const std::string& text, VoiceChannel channel) override;
  void Stop() override;
  void set_rate(double rate) override;
  double rate() const override;

 private:
  mutable std::mutex mu_;
  std::ostream& out_;
  double rate_ = 1.0;
};

}  // namespace streetnav::gateway

#endif  // STREETNAV_GATEWAY_SPEECH_H_
