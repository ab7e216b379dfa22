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


#include "streetnav/gateway/speech.h"

#include "absl/strings/str_format.h"

namespace streetnav::gateway {

void CaptureSpeechProvider::Speak(const std::string& text,
                                  VoiceChannel channel) {
  std::lock_guard<std::mutex> lock(mu_);
  utterances_.push_back({text, channel, rate_});
}

void CaptureSpeechProvider::Stop() {
  std::lock_guard<std::mutex> lock(mu_);
  ++stops_;
}

void CaptureSpeechProvider::set_rate(double rate) {
  std::lock_guard<std::mutex> lock(mu_);
  rate_ = rate;
}

double CaptureSpeechProvider::rate() const {
  std::lock_guard<std::mutex> lock(mu_);
  return rate_;
}

std::vector<Utterance> CaptureSpeechProvider::utterances() const {
  std::lock_guard<std::mutex> lock(mu_);
  return utterances_;
}

int CaptureSpeechProvider::stops() const {
  std::lock_guard<std::mutex> lock(mu_);
  return stops_;
}

void StreamSpeechProvider::Speak(const std::string& text,
                                 VoiceChannel channel) {
  std::lock_guard<std::mutex> lock(mu_);
  out_ << absl::StrFormat("(voice %s x%.2f) %s\n", VoiceChannelName(channel),
                          rate_, text)
       << std::flush;
}

void StreamSpeechProvider::Stop() {
  std::lock_guard<std::mutex> lock(mu_);
  out_ << "(voice stop)\n" << std::flush;
}

void StreamSpeechProvider::set_rate(double rate) {
  std::lock_guard<std::mutex> lock(mu_);
  rate_ = rate;
}

double StreamSpeechProvider::rate() const {
  std::lock_guard<std::mutex> lock(mu_);
  return rate_;
}

}  // namespace streetnav::gateway
