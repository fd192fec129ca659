// Copyright 2026 The Convoref Authors.
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

#ifndef CONVOREF_HUB_WS_CLIENT_H_
#define CONVOREF_HUB_WS_CLIENT_H_

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace convoref::hub {

struct WsUrl {
  std::string host;
  std::string port;
  std::string target;  // path and query, e.g. "/ws"
};

// Parses ws://host:port/path. Throws Error(kConfigInvalid).
WsUrl ParseWsUrl(const std::string &url);

// Minimal WebSocket client running its own I/O thread.
class WsClient {
 public:
  // Runs on the client's I/O thread for every text frame.
  using FrameHandler = std::function<void(const std::string &frame)>;
  // Runs once when the connection ends: the peer's close code (or 1006
  // when the connection dropped without one) and reason.
  using CloseHandler = std::function<void(int code, const std::string &reason)>;

  WsClient();
  ~WsClient();

  WsClient(const WsClient &) = delete;
  WsClient &operator=(const WsClient &) = delete;

  void OnFrame(FrameHandler handler) { on_frame_ = std::move(handler); }
  void OnClose(CloseHandler handler) { on_close_ = std::move(handler); }

  // Connects and completes the WebSocket handshake. Throws Error(kIoError)
  // on failure or timeout.
  void Connect(const std::string &url,
               std::chrono::milliseconds timeout = std::chrono::seconds(5));

  // Queues a text frame. Thread-safe; frames go out in call order.
  void Send(std::string text);

  // Starts a close handshake and waits for it (bounded).
  void Close(int code = 1000);

  // Stops reading; frames then back up on the server side. For tests of
  // slow consumers.
  void PauseReading();

  bool connected() const;
  std::optional<int> close_code() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  FrameHandler on_frame_;
  CloseHandler on_close_;
};

}  // namespace convoref::hub

#endif  // CONVOREF_HUB_WS_CLIENT_H_
